#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lowerset/big_count.hpp"
#include "lowerset/enumerate.hpp"
#include "lowerset/lower_set.hpp"
#include "lowerset/torus.hpp"

namespace lowerset::disc {

/// exp(2 pi i <k, x>), the tensor-product exponential basis on the torus.
std::complex<double> basis_value(const Point& k, std::span<const double> x);

/// sup_x sum_{k in q} |u_k(x)|^2. The exponentials are unimodular, so this is
/// |q| and the uniform constant is B = 1.
double condition_e_bound(const LowerSet& q);

/// Extreme eigenvalues of G = (1/m) V^* V with V_{ik} = u_k(xi_i). For every
/// f in span{u_k : k in q},
///   lambda_min ||f||^2 <= (1/m) sum_i |f(xi_i)|^2 <= lambda_max ||f||^2,
/// and both constants are attained.
struct GramSpectrum {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  LowerSet subspace;
};

/// Assembles G with compensated summation over the points.
std::vector<std::complex<double>> gram_matrix(const LowerSet& q, const PointSetTorus& xs);

/// Throws std::runtime_error when the eigensolver does not converge.
GramSpectrum gram_spectrum(const LowerSet& q, const PointSetTorus& xs);

struct ReferenceBounds {
  double thm6;             // n^2 ln d
  double thm6_b;           // n^{2-1/d} d^{ln d}
  BigCount hyperbolic_size;
  double hyperbolic_bound; // n (1 + ln n)^{d-1}
};

ReferenceBounds reference_bounds(std::size_t d, std::size_t n);

/// Universal constants of a point set over every lower set of size n.
struct DiscretizationReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t subspaces = 0;
  double c1 = 0.0;  // min over subspaces of lambda_min
  double c2 = 0.0;  // max over subspaces of lambda_max
  LowerSet c1_witness;
  LowerSet c2_witness;
  ReferenceBounds bounds;
  std::string regime;  // "n < d^d", "n >= d^d", or "n/a" below d, n = 2
};

/// Aggregates precomputed spectra. Ties go to the earliest subspace.
DiscretizationReport summarize(std::size_t d, std::size_t n, std::size_t m,
                               std::span<const GramSpectrum> spectra);

/// Serial reference: one spectrum after another in enumeration order.
DiscretizationReport universal_constants_serial(std::size_t d, std::size_t n,
                                                const PointSetTorus& xs,
                                                std::uint64_t node_budget = kDefaultNodeBudget);

/// Spectra computed in parallel over the subspaces; result equals the serial one.
DiscretizationReport universal_constants(std::size_t d, std::size_t n, const PointSetTorus& xs,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Same, over an already enumerated family.
DiscretizationReport universal_constants(std::size_t d, std::size_t n,
                                         std::span<const LowerSet> family,
                                         const PointSetTorus& xs, bool parallel);

struct SearchOptions {
  double c1_target = 0.5;
  double c2_target = 1.5;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t m_max = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SearchProbe {
  std::size_t m;
  bool qualified;
};

/// Outcome of the doubling-then-bisection search. When nothing up to m_max
/// qualifies, `found` is false and `report`/`witness` hold the best trial seen.
struct SearchResult {
  bool found = false;
  std::size_t m = 0;
  PointSetTorus witness;
  DiscretizationReport report;
  std::vector<SearchProbe> probes;
};

/// Trial t at size m draws sample_points(d, m, seed + t); m qualifies when
/// some trial reaches c1 >= c1_target and c2 <= c2_target.
SearchResult search_minimal_m(std::size_t d, std::size_t n, const SearchOptions& opts);

/// ceil(32 n ln(n p_d(n))), the default search ceiling.
std::size_t default_m_max(std::size_t n, const BigCount& p);

}  // namespace lowerset::disc
