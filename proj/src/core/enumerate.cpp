#include "lowerset/enumerate.hpp"

#include <omp.h>

#include <atomic>

#include "growth_kernel.hpp"
#include "lowerset/partition_oracles.hpp"

namespace lowerset {

namespace {

using detail::GrowthKernel;
using detail::GrowthState;
using detail::NodeMeter;

void require_dim(std::size_t d) {
  if (d == 0) throw std::invalid_argument("dimension must be positive");
}

LowerSet to_lower_set(std::size_t d, std::span<const Coord> flat) {
  std::vector<Point> pts;
  pts.reserve(flat.size() / d);
  for (std::size_t i = 0; i < flat.size(); i += d)
    pts.emplace_back(std::vector<Coord>(flat.begin() + i, flat.begin() + i + d));
  return LowerSet::from_sorted_unchecked(d, std::move(pts));
}

// Splits the growth tree into subtrees, breadth-first, until there are at
// least `target` open nodes. Finished leaves stay in place so concatenating
// the subtree results reproduces the serial DFS order.
std::vector<GrowthState> build_frontier(std::size_t d, std::size_t n, NodeMeter& meter,
                                        std::size_t target) {
  GrowthKernel kernel(d, n, meter);
  std::vector<GrowthState> frontier{detail::root_state(d)};
  for (;;) {
    std::size_t open = 0;
    for (const auto& s : frontier) open += s.depth(d) < n;
    if (open == 0 || open >= target) break;
    std::vector<GrowthState> next;
    for (auto& s : frontier) {
      if (s.depth(d) == n) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& c : kernel.children(s)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }
  return frontier;
}

std::size_t frontier_target() { return 64 * static_cast<std::size_t>(omp_get_max_threads()); }

// Builds the frontier, calls `prepare(task_count)`, then runs
// `per_task(kernel, state, i)` over it with one kernel per thread.
template <class Prepare, class PerTask>
void run_frontier(std::size_t d, std::size_t n, std::uint64_t budget, Prepare&& prepare,
                  PerTask&& per_task) {
  std::atomic<std::uint64_t> total{0};
  std::vector<GrowthState> frontier;
  {
    NodeMeter meter(total, budget);
    frontier = build_frontier(d, n, meter, frontier_target());
    meter.flush();
  }
  prepare(frontier.size());
  std::atomic<bool> exceeded{false};
  const auto tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
  {
    NodeMeter meter(total, budget);
    GrowthKernel kernel(d, n, meter);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < tasks; ++i) {
      if (exceeded.load(std::memory_order_relaxed)) continue;
      try {
        per_task(kernel, frontier[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
      } catch (const BudgetExceeded&) {
        exceeded = true;
      }
    }
    try {
      meter.flush();
    } catch (const BudgetExceeded&) {
      exceeded = true;
    }
  }
  if (exceeded) throw BudgetExceeded(budget);
}

}  // namespace

void for_each_lower_set(std::size_t d, std::size_t n,
                        const std::function<void(const LowerSet&)>& visit,
                        std::uint64_t node_budget) {
  require_dim(d);
  if (n == 0) {
    visit(LowerSet(d));
    return;
  }
  std::atomic<std::uint64_t> total{0};
  NodeMeter meter(total, node_budget);
  GrowthKernel kernel(d, n, meter);
  kernel.run(detail::root_state(d),
             [&](std::span<const Coord> flat) { visit(to_lower_set(d, flat)); });
  meter.flush();
}

std::vector<LowerSet> enumerate_lower_sets(std::size_t d, std::size_t n,
                                           std::uint64_t node_budget) {
  std::vector<LowerSet> out;
  for_each_lower_set(d, n, [&](const LowerSet& q) { out.push_back(q); }, node_budget);
  return out;
}

std::vector<LowerSet> enumerate_lower_sets_parallel(std::size_t d, std::size_t n,
                                                    std::uint64_t node_budget) {
  require_dim(d);
  if (n == 0) return {LowerSet(d)};
  std::vector<std::vector<LowerSet>> parts;
  run_frontier(
      d, n, node_budget, [&](std::size_t tasks) { parts.resize(tasks); },
      [&](GrowthKernel& kernel, const GrowthState& s, std::size_t i) {
        kernel.run(s, [&](std::span<const Coord> flat) { parts[i].push_back(to_lower_set(d, flat)); });
      });
  std::vector<LowerSet> out;
  for (auto& part : parts)
    for (auto& q : part) out.push_back(std::move(q));
  return out;
}

std::uint64_t count_dfs_serial(std::size_t d, std::size_t n, std::uint64_t node_budget) {
  require_dim(d);
  if (n == 0) return 1;
  std::atomic<std::uint64_t> total{0};
  NodeMeter meter(total, node_budget);
  GrowthKernel kernel(d, n, meter);
  std::uint64_t count = 0;
  kernel.run(detail::root_state(d), [&](std::span<const Coord>) { ++count; });
  meter.flush();
  return count;
}

std::uint64_t count_dfs_parallel(std::size_t d, std::size_t n, std::uint64_t node_budget) {
  require_dim(d);
  if (n == 0) return 1;
  std::vector<std::uint64_t> counts;
  run_frontier(
      d, n, node_budget, [&](std::size_t tasks) { counts.assign(tasks, 0); },
      [&](GrowthKernel& kernel, const GrowthState& s, std::size_t i) {
        std::uint64_t c = 0;
        kernel.run(s, [&](std::span<const Coord>) { ++c; });
        counts[i] = c;
      });
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

BigCount count_lower_sets(std::size_t d, std::size_t n, CountMethod method,
                          std::uint64_t node_budget) {
  require_dim(d);
  if (method == CountMethod::automatic) {
    if (d == 1 || n <= 1) return 1;
    if (d == 2) return partition_oracle_2d(n)[n];
    if (d == 3) return plane_partition_oracle_3d(n)[n];
  }
  return big_count(count_dfs_parallel(d, n, node_budget));
}

}  // namespace lowerset
