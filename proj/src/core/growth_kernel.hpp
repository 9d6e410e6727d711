#pragma once

// Growth-tree DFS shared by the serial and parallel enumerators.
// Points live in flat coordinate buffers with stride d.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "lowerset/enumerate.hpp"

namespace lowerset::detail {

inline int lex_compare(const Coord* a, const Coord* b, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

/// Counts visited nodes against a budget shared by all workers.
class NodeMeter {
 public:
  static constexpr std::uint64_t kBatch = 1024;

  NodeMeter(std::atomic<std::uint64_t>& total, std::uint64_t budget)
      : total_(total), budget_(budget) {}

  void tick() {
    if (++pending_ >= kBatch) flush();
  }

  /// Publishes pending ticks; throws once the shared total passes the budget.
  void flush() {
    const std::uint64_t t = total_.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (t > budget_) throw BudgetExceeded(budget_);
  }

 private:
  std::atomic<std::uint64_t>& total_;
  std::uint64_t budget_;
  std::uint64_t pending_ = 0;
};

/// A node of the growth tree: the points so far, and the addable points
/// lex-greater than the last one.
struct GrowthState {
  std::vector<Coord> set;
  std::vector<Coord> candidates;

  std::size_t depth(std::size_t d) const { return set.size() / d; }
};

inline GrowthState root_state(std::size_t d) {
  return GrowthState{{}, std::vector<Coord>(d, 0)};
}

class GrowthKernel {
 public:
  GrowthKernel(std::size_t d, std::size_t n, NodeMeter& meter)
      : d_(d), n_(n), meter_(meter), set_(n * d), cand_(n + 1), fresh_(d * d) {}

  /// Visits every size-n completion of `s`; `leaf` receives the flat set.
  template <class Leaf>
  void run(const GrowthState& s, Leaf&& leaf) {
    const std::size_t k = s.depth(d_);
    if (k == n_) {
      leaf(std::span<const Coord>(s.set));
      return;
    }
    std::copy(s.set.begin(), s.set.end(), set_.begin());
    cand_[k] = s.candidates;
    descend(k, leaf);
  }

  /// Children of `s` in DFS order, each counted as a visited node.
  std::vector<GrowthState> children(const GrowthState& s) {
    const std::size_t k = s.depth(d_);
    std::vector<GrowthState> out;
    std::copy(s.set.begin(), s.set.end(), set_.begin());
    const std::size_t count = s.candidates.size() / d_;
    for (std::size_t j = 0; j < count; ++j) {
      const Coord* c = s.candidates.data() + j * d_;
      std::copy(c, c + d_, set_.begin() + k * d_);
      meter_.tick();
      GrowthState child;
      child.set.assign(set_.begin(), set_.begin() + (k + 1) * d_);
      if (k + 1 < n_) extend(s.candidates, j, k + 1, child.candidates);
      out.push_back(std::move(child));
    }
    return out;
  }

 private:
  template <class Leaf>
  void descend(std::size_t k, Leaf& leaf) {
    const std::vector<Coord>& cand = cand_[k];
    const std::size_t count = cand.size() / d_;
    for (std::size_t j = 0; j < count; ++j) {
      const Coord* c = cand.data() + j * d_;
      std::copy(c, c + d_, set_.begin() + k * d_);
      meter_.tick();
      if (k + 1 == n_) {
        leaf(std::span<const Coord>(set_.data(), n_ * d_));
        continue;
      }
      extend(cand, j, k + 1, cand_[k + 1]);
      descend(k + 1, leaf);
    }
  }

  bool in_set(const Coord* p, std::size_t k) const {
    std::size_t lo = 0, hi = k;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const int c = lex_compare(set_.data() + mid * d_, p, d_);
      if (c == 0) return true;
      if (c < 0) lo = mid + 1;
      else hi = mid;
    }
    return false;
  }

  // Candidates for the child whose last point is cand[j] and which holds k
  // points: the old candidates after j, merged with the newly addable c + e_i.
  void extend(const std::vector<Coord>& cand, std::size_t j, std::size_t k,
              std::vector<Coord>& out) {
    const Coord* c = set_.data() + (k - 1) * d_;
    std::size_t fresh_count = 0;
    // c + e_i for i = d-1 .. 0 comes out lex-increasing.
    for (std::size_t ii = d_; ii-- > 0;) {
      Coord* q = fresh_.data() + fresh_count * d_;
      std::copy(c, c + d_, q);
      ++q[ii];
      bool ok = true;
      for (std::size_t jj = 0; jj < d_ && ok; ++jj) {
        if (jj == ii || q[jj] == 0) continue;
        --q[jj];
        ok = in_set(q, k);
        ++q[jj];
      }
      if (ok) ++fresh_count;
    }
    out.clear();
    const Coord* a = cand.data() + (j + 1) * d_;
    const Coord* a_end = cand.data() + cand.size();
    const Coord* b = fresh_.data();
    const Coord* b_end = b + fresh_count * d_;
    while (a != a_end || b != b_end) {
      const Coord* take;
      if (a == a_end) take = b, b += d_;
      else if (b == b_end) take = a, a += d_;
      else if (lex_compare(a, b, d_) < 0) take = a, a += d_;
      else take = b, b += d_;
      out.insert(out.end(), take, take + d_);
    }
  }

  std::size_t d_;
  std::size_t n_;
  NodeMeter& meter_;
  std::vector<Coord> set_;
  std::vector<std::vector<Coord>> cand_;
  std::vector<Coord> fresh_;
};

}  // namespace lowerset::detail
