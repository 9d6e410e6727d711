#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lowerset/big_count.hpp"
#include "lowerset/lower_set.hpp"

namespace lowerset {

/// Default cap on visited DFS nodes.
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("budget exceeded"), budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

// Lower sets are grown one point at a time, each step appending an addable
// point lex-greater than the previous one. The lex-sorted listing of a lower
// set is the only such sequence that reaches it, so every set appears once.

/// Calls `visit` once per lower set of size n in Z_+^d, in DFS order.
void for_each_lower_set(std::size_t d, std::size_t n,
                        const std::function<void(const LowerSet&)>& visit,
                        std::uint64_t node_budget = kDefaultNodeBudget);

/// All of L_d(n) in DFS order, single-threaded.
std::vector<LowerSet> enumerate_lower_sets(std::size_t d, std::size_t n,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

/// Same sequence as enumerate_lower_sets, subtrees materialized in parallel.
std::vector<LowerSet> enumerate_lower_sets_parallel(std::size_t d, std::size_t n,
                                                    std::uint64_t node_budget = kDefaultNodeBudget);

/// Serial reference count: walks the growth tree without materializing sets.
std::uint64_t count_dfs_serial(std::size_t d, std::size_t n,
                               std::uint64_t node_budget = kDefaultNodeBudget);

/// Subtree-parallel count (OpenMP). Equal to count_dfs_serial whenever it returns.
std::uint64_t count_dfs_parallel(std::size_t d, std::size_t n,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

enum class CountMethod { dfs, automatic };

/// p_d(n) exactly. `automatic` answers d <= 3 from the closed form or the
/// generating-function oracles and falls back to the parallel DFS otherwise.
BigCount count_lower_sets(std::size_t d, std::size_t n, CountMethod method = CountMethod::automatic,
                          std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace lowerset
