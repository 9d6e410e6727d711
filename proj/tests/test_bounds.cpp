#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "lowerset/enumerate.hpp"
#include "lowerset/sandwich.hpp"
#include "lowerset/staircase.hpp"
#include "support/brute_force.hpp"

using namespace lowerset;
using namespace lowerset::bounds;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double ln(double x) { return std::log(x); }

}  // namespace

TEST_CASE("thm1_bounds") {
  const auto b = thm1_bounds(2, 5);
  CHECK(static_cast<double>(b.lower.ln) == Approx(ln(16.0 / 24.0)).epsilon(1e-14));
  CHECK(static_cast<double>(b.upper.ln) == Approx(ln(16.0)).epsilon(1e-14));
  CHECK(b.lower.ln < std::log(7.0L));
  CHECK(std::log(7.0L) < b.upper.ln);

  const auto edge = thm1_bounds(3, 1);
  CHECK(edge.lower.ln == 0.0L);
  CHECK(edge.upper.ln == 0.0L);
  CHECK(static_cast<double>(thm1_bounds(4, 2).lower.ln) == Approx(ln(4.0)));
}

TEST_CASE("cohen_bound") {
  // d^{n-1} (n-1)! = 4 * 2 = 8 beats 2^{6}.
  CHECK(static_cast<double>(cohen_bound(2, 3).ln) == Approx(3 * ln(2.0)));
  CHECK(static_cast<double>(cohen_bound(10, 2).ln) == Approx(ln(10.0)));
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t n = 1; n <= 9; ++n)
      CHECK(ln_of(count_lower_sets(d, n)) <= cohen_bound(d, n).ln + kLogTolerance);
}

TEST_CASE("hardy_ramanujan_upper") {
  CHECK(static_cast<double>(hardy_ramanujan_upper(1).ln) == Approx(2.565099).epsilon(5e-7));
  CHECK(static_cast<double>(alpha2()) == Approx(kPi * std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(hardy_ramanujan_upper(4).ln == doctest::Approx(static_cast<double>(2 * alpha2())));
  for (std::size_t n = 1; n <= 40; ++n)
    CHECK(ln_of(count_lower_sets(2, n)) <= hardy_ramanujan_upper(n).ln + kLogTolerance);
}

TEST_CASE("theorem2_constants") {
  CHECK(static_cast<double>(theorem2_constants(2, 2).lambda_d) == Approx(std::sqrt(2.0)).epsilon(1e-14));
  // lambda_d ln 2 climbs towards e ln 2 = 1.8841 but only passes 1.8 at d = 66.
  const double l12 = static_cast<double>(theorem2_constants(12, 2).lambda_d) * ln(2.0);
  CHECK(l12 == Approx(1.572697851252864).epsilon(1e-12));
  for (std::size_t d = 3; d <= 200; ++d) {
    const double l = static_cast<double>(theorem2_constants(d, 2).lambda_d) * ln(2.0);
    CHECK(l > static_cast<double>(theorem2_constants(d - 1, 2).lambda_d) * ln(2.0));
    CHECK(l < std::numbers::e * ln(2.0));
    CHECK((l > 1.8) == (d >= 66));
  }
  // e / sqrt(4) > 2/3, so the min picks 2/3.
  const auto c = theorem2_constants(2, 4);
  CHECK(static_cast<double>(c.c_prime) == Approx((1.0 / 9.0) * std::sqrt(2.0) * ln(2.0)).epsilon(1e-13));
  CHECK(static_cast<double>(c.c_upper) ==
        Approx(kPi * std::sqrt(2.0 / 3.0) * std::exp(ln(2.0) * ln(2.0))).epsilon(1e-13));
  CHECK_THROWS_AS(theorem2_constants(2, 1), std::invalid_argument);
}

TEST_CASE("zeta and rho") {
  CHECK(std::abs(static_cast<double>(zeta(2)) - kPi * kPi / 6) < 1e-12);
  CHECK(std::abs(static_cast<double>(zeta(3)) - 1.2020569031595942854) < 1e-12);
  CHECK(std::abs(static_cast<double>(zeta(4)) - std::pow(kPi, 4) / 90) < 1e-12);
  CHECK(std::abs(static_cast<double>(zeta(6)) - std::pow(kPi, 6) / 945) < 1e-12);

  CHECK(static_cast<double>(rho(2)) == Approx(static_cast<double>(alpha2())).epsilon(1e-12));
  CHECK(std::abs(static_cast<double>(rho(3)) - 2.00945) < 5e-5);
  CHECK(std::abs(static_cast<double>(rho(4)) - 1.78982) < 5e-5);
  for (std::size_t d = 3; d <= 20; ++d) CHECK(rho(d) < rho(d - 1));
  CHECK(rho(20) < rho(8));
  CHECK(rho(8) < rho(4));
  for (std::size_t d = 8; d <= 50; ++d)
    CHECK(theorem2_constants(d, 2).lambda_d * std::numbers::ln2_v<long double> > rho(d));
  // The crossing happens exactly at 8.
  CHECK(theorem2_constants(7, 2).lambda_d * std::numbers::ln2_v<long double> < rho(7));
}

TEST_CASE("staircase_numbers") {
  std::size_t a = 0, b = 0;
  for (const auto& p : testing::box_points(2, 4)) {
    a += p.degree() == 3;
    b += p.degree() <= 3;
  }
  const auto s = staircase_numbers(2, 3);
  CHECK(s.a_m == a);
  CHECK(s.b_m == b);
  CHECK(s.a_m == 4);
  CHECK(s.b_m == 10);
  CHECK(staircase_numbers(1, 7).a_m == 1);
  CHECK(staircase_numbers(1, 7).b_m == 8);
  CHECK(staircase_numbers(3, 0).a_m == 1);
  CHECK(staircase_numbers(3, 0).b_m == 1);

  // Pascal's triangle, rows up to 60.
  std::vector<std::vector<BigCount>> pascal(61);
  for (std::size_t r = 0; r <= 60; ++r) {
    pascal[r].assign(r + 1, 1);
    for (std::size_t k = 1; k < r; ++k) pascal[r][k] = pascal[r - 1][k - 1] + pascal[r - 1][k];
  }
  for (std::size_t d = 1; d <= 10; ++d)
    for (std::size_t m = 0; m <= 50; ++m) {
      const auto st = staircase_numbers(d, m);
      CHECK(st.a_m == pascal[m + d - 1][d - 1]);
      CHECK(st.b_m == pascal[m + d][d]);
      CHECK(st.b_m * d == st.a_m * (m + d));
      if (st.a_m <= 20000) CHECK(corner_layer(d, m).size() == st.a_m.get_ui());
    }
}

TEST_CASE("choose_m and eq_a_lower_bound") {
  CHECK(choose_m(2, 8) == 2);
  CHECK(choose_m(2, 2) == 0);
  CHECK(choose_m(3, 2) == 0);
  CHECK(choose_m(3, 5) == 1);
  CHECK(static_cast<double>(eq_a_lower_bound(2, 8).ln) == Approx(3 * ln(2.0)));
  CHECK(ln(8.0) <= ln(22.0));
  CHECK(static_cast<double>(eq_a_lower_bound(2, 2).ln) == Approx(ln(2.0)));
  CHECK(static_cast<double>(eq_a_lower_bound(3, 5).ln) == Approx(ln(12.0)));
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = 2; n <= 9; ++n)
      CHECK(eq_a_lower_bound(d, n).ln <= ln_of(count_lower_sets(d, n)) + kLogTolerance);
}

TEST_CASE("build_staircase_family") {
  const auto corners2 = corner_layer(2, 2);
  const auto full = build_staircase_family(2, 8, corners2, 0);
  std::vector<Point> expected;
  for (const auto& p : testing::box_points(2, 3))
    if (p.degree() <= 2) expected.push_back(p);
  expected.push_back({3, 0});
  expected.push_back({4, 0});
  CHECK(full == LowerSet::from_points(2, expected));

  const std::vector<Point> origin{{0, 0}};
  CHECK(build_staircase_family(2, 2, origin, 1) == LowerSet::from_points(2, {{0, 0}, {0, 1}}));

  const std::vector<Point> missing{{1, 1}, {0, 2}};
  CHECK_THROWS_AS(build_staircase_family(2, 8, missing, 0), std::invalid_argument);
  const std::vector<Point> foreign{{2, 0}, {1, 0}};
  CHECK_THROWS_AS(build_staircase_family(2, 8, foreign, 0), std::invalid_argument);

  // Every selector on one axis gives a distinct lower set of size n.
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::size_t n = 2; n <= 12; ++n)
      for (std::size_t axis = 0; axis < d; ++axis) {
        const std::size_t m = choose_m(d, n);
        const auto layer = corner_layer(d, m);
        const Point anchor = Point::on_axis(d, axis, static_cast<Coord>(m));
        std::vector<Point> others;
        for (const auto& c : layer)
          if (c != anchor) others.push_back(c);
        std::set<LowerSet> seen;
        for (std::uint64_t mask = 0; mask < (1ULL << others.size()); ++mask) {
          std::vector<Point> keep{anchor};
          for (std::size_t i = 0; i < others.size(); ++i)
            if ((mask >> i) & 1) keep.push_back(others[i]);
          const auto q = build_staircase_family(d, n, keep, axis);
          CHECK(q.size() == n);
          CHECK(is_lower_set(d, q.points()));
          seen.insert(q);
        }
        CHECK(seen.size() == (1ULL << (layer.size() - 1)));
      }
}

TEST_CASE("induction constants") {
  CHECK(r_of_d(3) < 2.057L);
  CHECK(std::exp(std::log(3.0L) * std::log(3.0L) - std::log(2.0L) * std::log(2.0L)) > 2.06L);
  CHECK(std::abs(static_cast<double>(beta2()) - 13.0019) < 5e-4);
  CHECK(static_cast<double>(gamma_ln(2).ln) ==
        Approx(static_cast<double>(alpha2()) * std::pow(2.0, ln(2.0))));
  for (std::size_t d = 3; d <= 50; ++d) {
    CHECK(sigma_check(d));
    CHECK(induction_step_holds(d));
  }
  for (std::size_t d = 4; d <= 50; ++d)
    CHECK(r_of_d(d) < 1.0L / (d * d) + std::pow(static_cast<long double>(d), 1.0L / (d - 1)));
}

TEST_CASE("alpha_product_bound") {
  CHECK(static_cast<double>(alpha_product_bound(2)) == Approx(2.565099).epsilon(5e-7));
  CHECK(static_cast<double>(alpha_product_bound(3)) ==
        Approx(static_cast<double>(alpha2()) * std::sqrt(3.0)));
  for (std::size_t d = 2; d <= 30; ++d) CHECK(alpha_product_bound(d) <= gamma_ln(d).ln);
}

TEST_CASE("verify_sandwich") {
  const auto r = verify_sandwich(2, 10, 42);
  CHECK(r.all_pass());
  CHECK(r.has_flag("thm1_lo:pass"));
  CHECK(r.has_flag("hr:pass"));
  CHECK(r.has_flag("eq_a:pass"));

  const auto r3 = verify_sandwich(3, 8, count_dfs_serial(3, 8));
  CHECK(r3.exact == 160);
  CHECK(r3.all_pass());
  CHECK_FALSE(r3.hr.has_value());

  const auto edge = verify_sandwich(5, 2, 5);
  CHECK(edge.has_flag("thm1_lo:boundary"));
  CHECK(edge.all_pass());

  const auto skipped = verify_sandwich(2, 1, 1);
  CHECK(skipped.has_flag("thm2:skipped"));
  CHECK(skipped.all_pass());

  // A count above d^{n-1} must be caught.
  const auto wrong = verify_sandwich(2, 5, 17);
  CHECK(wrong.has_flag("thm1_hi:fail"));
  CHECK_FALSE(wrong.all_pass());

  CHECK(bounds_csv_header() == "d,n,ln_p,thm1_lo,thm1_hi,cohen,hr,c_prime_ratio,c_upper,eq_a,flags");
  const auto row = to_csv_row(skipped);
  CHECK(row.rfind("2,1,0,", 0) == 0);
  CHECK(row.find("thm2:skipped") != std::string::npos);
}

TEST_CASE("sandwich over the enumerable grid") {
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t n = 1; n <= 9; ++n) {
      const auto r = verify_sandwich(d, n, count_lower_sets(d, n));
      CHECK(r.all_pass());
      if (n >= 3) CHECK(r.has_flag("thm1_lo:pass"));
      else CHECK(r.has_flag("thm1_lo:boundary"));
    }
}
