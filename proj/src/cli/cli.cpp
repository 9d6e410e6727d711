#include "lowerset/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lowerset/discretization.hpp"
#include "lowerset/io.hpp"
#include "lowerset/sandwich.hpp"

namespace lowerset::cli {

namespace {

using nlohmann::json;

std::size_t parse_size(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

json optional_number(const std::optional<long double>& v) {
  return v ? json(static_cast<double>(*v)) : json(nullptr);
}

json lower_set_json(const LowerSet& q) { return json::parse(to_json_line(q)); }

json count_value(const BigCount& c) { return to_string(c); }

void emit_rows(const std::vector<json>& rows, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << json(rows).dump(2) << '\n';
  } else {
    for (const auto& r : rows) out << r.dump() << '\n';
  }
}

std::size_t grid_side(std::size_t d, std::size_t m) {
  const auto side = static_cast<std::size_t>(
      std::llround(std::pow(static_cast<double>(m), 1.0 / static_cast<double>(d))));
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= side;
  if (side == 0 || total != m)
    throw std::invalid_argument("--grid needs --m to be a perfect d-th power");
  return side;
}

json report_json(const disc::DiscretizationReport& r) {
  json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["m"] = r.m;
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["subspaces"] = r.subspaces;
  j["witness_sets"] = {{"c1", lower_set_json(r.c1_witness)}, {"c2", lower_set_json(r.c2_witness)}};
  j["bounds"] = {{"thm6", r.bounds.thm6},
                 {"thm6_b", r.bounds.thm6_b},
                 {"hyperbolic_size", to_string(r.bounds.hyperbolic_size)},
                 {"hyperbolic_bound", r.bounds.hyperbolic_bound}};
  j["regime"] = r.regime;
  return j;
}

void require_valid(const RunConfig& cfg) {
  if (cfg.d.lo == 0) throw std::invalid_argument("--d must be at least 1");
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_size(text);
  } else {
    r.lo = parse_size(text.substr(0, dots));
    r.hi = parse_size(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

int run_count(const RunConfig& cfg, std::ostream& out) {
  require_valid(cfg);
  std::vector<json> rows;
  if (cfg.format == Format::csv) out << "d,n,p_d_n\n";
  for (std::size_t d = cfg.d.lo; d <= cfg.d.hi; ++d) {
    for (std::size_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
      const BigCount p = count_lower_sets(d, n, cfg.method, cfg.node_budget);
      if (cfg.format == Format::csv)
        out << d << ',' << n << ',' << to_string(p) << '\n';
      else
        rows.push_back({{"d", d}, {"n", n}, {"p_d_n", count_value(p)}});
    }
  }
  if (cfg.format != Format::csv) emit_rows(rows, cfg.format, out);
  return kOk;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  require_valid(cfg);
  for (std::size_t d = cfg.d.lo; d <= cfg.d.hi; ++d)
    for (std::size_t n = cfg.n.lo; n <= cfg.n.hi; ++n)
      for_each_lower_set(d, n, [&](const LowerSet& q) { out << to_json_line(q) << '\n'; },
                         cfg.node_budget);
  return kOk;
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
  require_valid(cfg);
  if (cfg.n.lo == 0) throw std::invalid_argument("bounds needs --n of at least 1");
  bool all_pass = true;
  std::vector<json> rows;
  if (cfg.format == Format::csv) out << bounds::bounds_csv_header() << '\n';
  for (std::size_t d = cfg.d.lo; d <= cfg.d.hi; ++d) {
    for (std::size_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
      const auto r = bounds::verify_sandwich(d, n, count_lower_sets(d, n, cfg.method, cfg.node_budget));
      all_pass = all_pass && r.all_pass();
      if (cfg.format == Format::csv) {
        out << bounds::to_csv_row(r) << '\n';
        continue;
      }
      rows.push_back({{"d", d},
                      {"n", n},
                      {"p_d_n", count_value(r.exact)},
                      {"ln_p", static_cast<double>(r.ln_p)},
                      {"thm1_lo", optional_number(r.thm1_lo)},
                      {"thm1_hi", optional_number(r.thm1_hi)},
                      {"cohen", static_cast<double>(r.cohen)},
                      {"hr", optional_number(r.hr)},
                      {"c_prime_ratio", optional_number(r.c_prime)},
                      {"c_upper", optional_number(r.c_upper)},
                      {"eq_a", optional_number(r.eq_a)},
                      {"flags", r.flags}});
    }
  }
  if (cfg.format != Format::csv) emit_rows(rows, cfg.format, out);
  return all_pass ? kOk : kTargetsUnmet;
}

int run_discretize(const RunConfig& cfg, std::ostream& out) {
  require_valid(cfg);
  if (cfg.d.lo != cfg.d.hi || cfg.n.lo != cfg.n.hi)
    throw std::invalid_argument("discretize takes a single --d and --n");
  if (cfg.search == cfg.m.has_value())
    throw std::invalid_argument("discretize needs exactly one of --m or --search");
  const std::size_t d = cfg.d.lo;
  const std::size_t n = cfg.n.lo;
  if (n == 0) throw std::invalid_argument("discretize needs --n of at least 1");

  json j;
  std::optional<disc::PointSetTorus> points;
  bool met = false;
  if (cfg.search) {
    if (!cfg.seed) throw std::invalid_argument("--search requires --seed");
    if (cfg.grid) throw std::invalid_argument("--grid applies to --m only");
    disc::SearchOptions opts;
    opts.c1_target = cfg.c1;
    opts.c2_target = cfg.c2;
    opts.trials = cfg.trials;
    opts.seed = *cfg.seed;
    opts.node_budget = cfg.node_budget;
    opts.m_max = cfg.m_max ? *cfg.m_max
                           : disc::default_m_max(n, count_lower_sets(d, n, CountMethod::automatic,
                                                                     cfg.node_budget));
    auto result = disc::search_minimal_m(d, n, opts);
    j = report_json(result.report);
    j["mode"] = "search";
    j["found"] = result.found;
    j["m_max"] = opts.m_max;
    j["trials"] = opts.trials;
    j["seed"] = opts.seed;
    json probes = json::array();
    for (const auto& p : result.probes) probes.push_back({{"m", p.m}, {"qualified", p.qualified}});
    j["probes"] = probes;
    met = result.found;
    points = std::move(result.witness);
  } else {
    const std::size_t m = *cfg.m;
    if (m == 0) throw std::invalid_argument("--m must be positive");
    std::string source;
    if (cfg.grid) {
      if (cfg.seed) throw std::invalid_argument("--grid and --seed are exclusive");
      const std::vector<std::size_t> sides(d, grid_side(d, m));
      points = disc::tensor_grid(d, sides);
      source = "grid";
    } else if (cfg.seed) {
      points = disc::sample_points(d, m, *cfg.seed);
      source = "random";
    } else {
      points = disc::kronecker_points(d, m);
      source = "kronecker";
    }
    const auto r = disc::universal_constants(d, n, *points, cfg.node_budget);
    j = report_json(r);
    j["mode"] = "certify";
    j["points"] = source;
    if (cfg.seed) j["seed"] = *cfg.seed;
    met = r.c1 >= cfg.c1 && r.c2 <= cfg.c2;
  }
  j["targets"] = {{"c1", cfg.c1}, {"c2", cfg.c2}};
  out << (cfg.format == Format::jsonl ? j.dump() : j.dump(2)) << '\n';

  if (!cfg.points_out.empty()) {
    std::ofstream f(cfg.points_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.points_out);
    disc::write_points_csv(f, *points);
  }
  return met ? kOk : kTargetsUnmet;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower-set counting, bound verification and universal discretization"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string d_text = "2", n_text = "1", method = "auto", format;

  auto add_grid_flags = [&](CLI::App* sub) {
    sub->add_option("--d", d_text, "dimension or range a..b")->required();
    sub->add_option("--n", n_text, "size or range a..b")->required();
  };
  auto* count = app.add_subcommand("count", "exact p_d(n) table");
  add_grid_flags(count);
  count->add_option("--method", method, "dfs | auto")->check(CLI::IsMember({"dfs", "auto"}));
  auto* enumerate = app.add_subcommand("enumerate", "lower sets of size n, one JSON array per line");
  add_grid_flags(enumerate);
  auto* bounds = app.add_subcommand("bounds", "check every bound against exact counts");
  add_grid_flags(bounds);
  bounds->add_option("--method", method, "dfs | auto")->check(CLI::IsMember({"dfs", "auto"}));
  auto* discretize = app.add_subcommand("discretize", "universal discretization constants");
  add_grid_flags(discretize);
  discretize->add_option("--m", cfg.m, "certify this many points");
  discretize->add_flag("--search", cfg.search, "search for the smallest qualifying m");
  discretize->add_flag("--grid", cfg.grid, "tensor grid instead of random points");
  discretize->add_option("--seed", cfg.seed, "root seed for random point sets");
  discretize->add_option("--trials", cfg.trials, "point sets drawn per m");
  discretize->add_option("--c1", cfg.c1, "lower target");
  discretize->add_option("--c2", cfg.c2, "upper target");
  discretize->add_option("--m-max", cfg.m_max, "search ceiling");
  discretize->add_option("--points", cfg.points_out, "write the point set as CSV");
  for (auto* sub : {count, enumerate, bounds, discretize}) {
    sub->add_option("--format", format, "csv | json | jsonl")
        ->check(CLI::IsMember({"csv", "json", "jsonl"}));
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  try {
    cfg.d = parse_range(d_text);
    cfg.n = parse_range(n_text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kUsage;
  }
  cfg.method = method == "dfs" ? CountMethod::dfs : CountMethod::automatic;
  if (format.empty()) format = cfg.subcommand == "discretize" ? "json" : "csv";
  cfg.format = format == "json" ? Format::json : format == "jsonl" ? Format::jsonl : Format::csv;
  if (cfg.subcommand == "discretize" && cfg.format == Format::csv) {
    err << "error: discretize writes json or jsonl\n";
    return kUsage;
  }
  if (const char* env = std::getenv("LOWERSET_BUDGET")) {
    try {
      cfg.node_budget = parse_size(env);
    } catch (const std::invalid_argument&) {
      err << "error: LOWERSET_BUDGET must be a non-negative integer\n";
      return kUsage;
    }
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (cfg.subcommand == "count") code = run_count(cfg, buffer);
    else if (cfg.subcommand == "enumerate") code = run_enumerate(cfg, buffer);
    else if (cfg.subcommand == "bounds") code = run_bounds(cfg, buffer);
    else code = run_discretize(cfg, buffer);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (node budget " << e.budget()
        << "; raise LOWERSET_BUDGET or shrink n, d)\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << chosen->help();
    return kUsage;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << cfg.out << '\n';
      return kUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace lowerset::cli
