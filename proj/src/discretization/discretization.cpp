#include "lowerset/discretization.hpp"

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lowerset/hyperbolic_cross.hpp"

namespace lowerset::disc {

namespace {

// Kahan-compensated complex accumulator.
struct CompensatedSum {
  double re = 0.0, im = 0.0, c_re = 0.0, c_im = 0.0;

  void add(std::complex<double> v) {
    const double yr = v.real() - c_re;
    const double tr = re + yr;
    c_re = (tr - re) - yr;
    re = tr;
    const double yi = v.imag() - c_im;
    const double ti = im + yi;
    c_im = (ti - im) - yi;
    im = ti;
  }
};

void check_dims(const LowerSet& q, const PointSetTorus& xs) {
  if (q.dim() != xs.dim()) throw std::invalid_argument("dimension mismatch between lower set and points");
}

}  // namespace

std::complex<double> basis_value(const Point& k, std::span<const double> x) {
  if (k.dim() != x.size()) throw std::invalid_argument("dimension mismatch between frequency and point");
  // Reduce each product mod 1 before summing so large frequencies keep precision.
  double phase = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(k[i]) * x[i];
    phase += t - std::floor(t);
  }
  phase -= std::floor(phase);
  const double angle = 2.0 * std::numbers::pi * phase;
  return {std::cos(angle), std::sin(angle)};
}

double condition_e_bound(const LowerSet& q) {
  // Every term attains its modulus 1 at the origin.
  const std::vector<double> origin(q.dim(), 0.0);
  double s = 0.0;
  for (const auto& k : q) s += std::norm(basis_value(k, origin));
  return s;
}

std::vector<std::complex<double>> gram_matrix(const LowerSet& q, const PointSetTorus& xs) {
  check_dims(q, xs);
  const std::size_t n = q.size();
  const std::size_t m = xs.size();
  std::vector<std::complex<double>> v(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) v[i * n + k] = basis_value(q.points()[k], xs[i]);

  std::vector<std::complex<double>> g(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      CompensatedSum acc;
      for (std::size_t i = 0; i < m; ++i) acc.add(std::conj(v[i * n + k]) * v[i * n + l]);
      const std::complex<double> e(acc.re / static_cast<double>(m), acc.im / static_cast<double>(m));
      g[k * n + l] = e;
      g[l * n + k] = std::conj(e);
    }
  }
  return g;
}

GramSpectrum gram_spectrum(const LowerSet& q, const PointSetTorus& xs) {
  const std::size_t n = q.size();
  if (n == 0) throw std::invalid_argument("gram_spectrum needs a non-empty lower set");
  const auto g = gram_matrix(q, xs);
  Eigen::MatrixXcd mat(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      mat(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = g[k * n + l];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver did not converge on a " << n << "x" << n
        << " Gram matrix (Frobenius norm " << mat.norm() << ", trace " << mat.trace().real() << ")";
    throw std::runtime_error(msg.str());
  }
  const auto& ev = solver.eigenvalues();
  // G is positive semidefinite; clip rounding below zero.
  return GramSpectrum{std::max(0.0, ev.minCoeff()), ev.maxCoeff(), q};
}

ReferenceBounds reference_bounds(std::size_t d, std::size_t n) {
  const double nd = static_cast<double>(n);
  const double ld = std::log(static_cast<double>(d));
  return ReferenceBounds{nd * nd * ld,
                         std::pow(nd, 2.0 - 1.0 / static_cast<double>(d)) * std::exp(ld * ld),
                         hyperbolic_cross_size(d, n), hyperbolic_cross_bound(d, n)};
}

DiscretizationReport summarize(std::size_t d, std::size_t n, std::size_t m,
                               std::span<const GramSpectrum> spectra) {
  if (spectra.empty()) throw std::invalid_argument("no subspaces to summarize");
  DiscretizationReport r;
  r.d = d;
  r.n = n;
  r.m = m;
  r.subspaces = spectra.size();
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < spectra.size(); ++i) {
    if (spectra[i].lambda_min < spectra[lo].lambda_min) lo = i;
    if (spectra[i].lambda_max > spectra[hi].lambda_max) hi = i;
  }
  r.c1 = spectra[lo].lambda_min;
  r.c2 = spectra[hi].lambda_max;
  r.c1_witness = spectra[lo].subspace;
  r.c2_witness = spectra[hi].subspace;
  r.bounds = reference_bounds(d, n);
  r.regime = (d >= 2 && n >= 2) ? regime_table(d, n).label : "n/a";
  return r;
}

DiscretizationReport universal_constants(std::size_t d, std::size_t n,
                                         std::span<const LowerSet> family,
                                         const PointSetTorus& xs, bool parallel) {
  if (xs.dim() != d) throw std::invalid_argument("dimension mismatch between lower set and points");
  std::vector<GramSpectrum> spectra(family.size());
  const auto count = static_cast<std::int64_t>(family.size());
  if (parallel) {
    // Exceptions may not cross the region boundary; keep the first one.
    std::string error;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        spectra[static_cast<std::size_t>(i)] = gram_spectrum(family[static_cast<std::size_t>(i)], xs);
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
    if (!error.empty()) throw std::runtime_error(error);
  } else {
    for (std::size_t i = 0; i < family.size(); ++i) spectra[i] = gram_spectrum(family[i], xs);
  }
  return summarize(d, n, xs.size(), spectra);
}

DiscretizationReport universal_constants_serial(std::size_t d, std::size_t n,
                                                const PointSetTorus& xs,
                                                std::uint64_t node_budget) {
  const auto family = enumerate_lower_sets(d, n, node_budget);
  return universal_constants(d, n, family, xs, false);
}

DiscretizationReport universal_constants(std::size_t d, std::size_t n, const PointSetTorus& xs,
                                         std::uint64_t node_budget) {
  const auto family = enumerate_lower_sets_parallel(d, n, node_budget);
  return universal_constants(d, n, family, xs, true);
}

namespace {

struct Trial {
  bool qualified;
  double score;
  PointSetTorus points;
  DiscretizationReport report;
};

// How close a trial comes to the targets; >= 1 means qualified.
double score_of(const DiscretizationReport& r, const SearchOptions& o) {
  return std::min(r.c1 / o.c1_target, o.c2_target / r.c2);
}

// The earliest qualifying trial at size m, or the best-scoring one if none does.
Trial probe(std::size_t d, std::size_t n, std::size_t m, std::span<const LowerSet> family,
            const SearchOptions& opts) {
  std::vector<std::optional<Trial>> trials(opts.trials);
  const auto count = static_cast<std::int64_t>(opts.trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < count; ++t) {
    auto xs = sample_points(d, m, opts.seed + static_cast<std::uint64_t>(t));
    auto r = universal_constants(d, n, family, xs, false);
    const bool ok = r.c1 >= opts.c1_target && r.c2 <= opts.c2_target;
    const double s = score_of(r, opts);
    trials[static_cast<std::size_t>(t)] = Trial{ok, s, std::move(xs), std::move(r)};
  }
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    if (trials[t]->qualified) return std::move(*trials[t]);
    if (trials[t]->score > trials[best]->score) best = t;
  }
  return std::move(*trials[best]);
}

}  // namespace

SearchResult search_minimal_m(std::size_t d, std::size_t n, const SearchOptions& opts) {
  if (!(0.0 < opts.c1_target && opts.c1_target < 1.0 && 1.0 < opts.c2_target))
    throw std::invalid_argument("targets must satisfy 0 < c1 < 1 < c2");
  if (opts.trials == 0) throw std::invalid_argument("trials must be positive");
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (opts.m_max == 0) throw std::invalid_argument("m_max must be positive");
  const auto family = enumerate_lower_sets_parallel(d, n, opts.node_budget);

  std::vector<SearchProbe> probes;
  std::optional<Trial> best;   // best non-qualifying trial, for the failure report
  std::optional<Trial> found;  // smallest qualifying size so far
  // Fewer than n points leave G rank-deficient, so n - 1 is known to fail.
  std::size_t lo = std::min(n, opts.m_max) - 1;

  auto run = [&](std::size_t m) {
    Trial t = probe(d, n, m, family, opts);
    probes.push_back({m, t.qualified});
    if (t.qualified) {
      found = std::move(t);
      return true;
    }
    lo = std::max(lo, m);
    if (!best || t.score > best->score) best = std::move(t);
    return false;
  };

  for (std::size_t m = std::min(n, opts.m_max);; m *= 2) {
    if (m >= opts.m_max) {
      run(opts.m_max);
      break;
    }
    if (run(m)) break;
  }
  if (!found)
    return SearchResult{false, best->points.size(), std::move(best->points), std::move(best->report),
                        std::move(probes)};

  std::size_t hi = found->points.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (run(mid)) hi = mid;
  }
  return SearchResult{true, hi, std::move(found->points), std::move(found->report), std::move(probes)};
}

std::size_t default_m_max(std::size_t n, const BigCount& p) {
  const long double v = 32.0L * static_cast<long double>(n) *
                        (std::log(static_cast<long double>(n)) + ln_of(p));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(v)));
}

}  // namespace lowerset::disc
