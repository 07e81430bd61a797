#include "ncploc/correspondence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ncploc/detail/union_find.hpp"
#include "ncploc/errors.hpp"
#include "ncploc/json_io.hpp"

namespace ncploc {

NoncrossingPartition psi(const PLocalTuple& t) {
  if (!is_valid_plocal(t)) {
    throw std::invalid_argument("psi needs a valid tuple");
  }
  int n = t.space().points();
  int k = n + 1;
  detail::UnionFind uf(static_cast<std::size_t>(k) + 1);
  for (Interval y : enumerate_intervals(t.space())) {
    if (!t.test(y)) uf.unite(y.a, y.b + 1);
  }
  // The vanishing relation must already be transitive: whenever x and y end
  // up in one class, the tuple must vanish on [x, y-1] directly.
  for (int x = 1; x <= k; ++x) {
    for (int y = x + 1; y <= k; ++y) {
      if (uf.same(x, y) && t.test(Interval(x, y - 1))) {
        throw std::logic_error("vanishing relation of a valid tuple failed "
                               "to be transitive");
      }
    }
  }
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(k) + 1);
  for (int x = 1; x <= k; ++x) classes[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& c : classes) {
    if (!c.empty()) blocks.push_back(std::move(c));
  }
  if (!is_noncrossing(k, blocks)) {
    throw std::logic_error("vanishing relation of a valid tuple crossed");
  }
  return NoncrossingPartition::from_blocks(k, std::move(blocks));
}

PLocalTuple psi_inverse(const NoncrossingPartition& sigma) {
  if (sigma.k() < 2) {
    throw std::invalid_argument("psi_inverse needs a partition of at least "
                                "2 points");
  }
  Space space(sigma.k() - 1);
  std::uint64_t bits = 0;
  auto intervals = enumerate_intervals(space);
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (!sigma.same_block(intervals[i].a, intervals[i].b + 1)) {
      bits |= std::uint64_t{1} << i;
    }
  }
  PLocalTuple t(space, bits);
  if (!is_valid_plocal(t)) {
    throw std::logic_error("psi_inverse produced an invalid tuple");
  }
  return t;
}

NoncrossingPartition TwoBlockDecomposition::as_partition() const {
  std::vector<std::vector<int>> blocks{inner, outer};
  return NoncrossingPartition::from_blocks(k, std::move(blocks));
}

TwoBlockDecomposition interval_to_two_block(const Space& space, Interval y) {
  if (y.b > space.points()) {
    throw std::invalid_argument("interval [" + std::to_string(y.a) + "," +
                                std::to_string(y.b) +
                                "] does not fit in a space with " +
                                std::to_string(space.points()) + " points");
  }
  TwoBlockDecomposition d;
  d.k = space.points() + 1;
  for (int x = y.a + 1; x <= y.b + 1; ++x) d.inner.push_back(x);
  for (int x = 1; x <= d.k; ++x) {
    if (x < y.a + 1 || x > y.b + 1) d.outer.push_back(x);
  }
  return d;
}

Interval separating_decomposition(const NoncrossingPartition& sigma, int a,
                                  int b) {
  int k = sigma.k();
  int n = k - 1;
  if (a < 1 || b < a || b > n) {
    throw std::invalid_argument("bad interval [" + std::to_string(a) + "," +
                                std::to_string(b) + "] for k=" +
                                std::to_string(k));
  }
  if (sigma.same_block(a, b + 1)) {
    throw std::invalid_argument(std::to_string(a) + " and " +
                                std::to_string(b + 1) +
                                " share a block; nothing separates them");
  }
  std::size_t target = sigma.block_index_of(b + 1);
  auto succ = [k](int v) { return v % k + 1; };
  auto pred = [k](int v) { return (v + k - 2) % k + 1; };
  std::vector<char> absorbed(static_cast<std::size_t>(k) + 1, 0);
  absorbed[a] = 1;
  int cw = a, ccw = a;
  bool cw_done = false, ccw_done = false;
  while (!cw_done || !ccw_done) {
    if (!cw_done) {
      int nx = succ(cw);
      if (sigma.block_index_of(nx) == target) {
        cw_done = true;
      } else {
        absorbed[nx] = 1;
        cw = nx;
      }
    }
    if (!ccw_done) {
      int nx = pred(ccw);
      if (sigma.block_index_of(nx) == target) {
        ccw_done = true;
      } else {
        absorbed[nx] = 1;
        ccw = nx;
      }
    }
  }
  // Both the absorbed arc and its complement are cyclic arcs; the one
  // avoiding vertex 1 cannot wrap, so it is a plain interval c+1..d+1.
  std::vector<int> side;
  bool use_complement = absorbed[1];
  for (int x = 1; x <= k; ++x) {
    if (static_cast<bool>(absorbed[x]) != use_complement) side.push_back(x);
  }
  if (side.empty()) {
    throw std::logic_error("separating walk swallowed the whole cycle");
  }
  int lo = side.front(), hi = side.back();
  if (hi - lo + 1 != static_cast<int>(side.size()) || lo < 2) {
    throw std::logic_error("separating side is not an interval");
  }
  return Interval(lo - 1, hi - 1);
}

FiniteLattice plocal_lattice(const Space& space, int max_points) {
  auto tuples = enumerate_valid_plocal(space, max_points);
  std::vector<std::string> keys;
  keys.reserve(tuples.size());
  for (const PLocalTuple& t : tuples) keys.push_back(to_json(t).dump());
  return FiniteLattice::from_order(
      std::move(keys), [&tuples](std::size_t i, std::size_t j) {
        return (tuples[i].bits() & ~tuples[j].bits()) == 0;
      });
}

FiniteLattice ncp_lattice(int k, int max_points) {
  auto parts = enumerate_ncp(k, max_points);
  std::vector<std::string> keys;
  keys.reserve(parts.size());
  for (const NoncrossingPartition& p : parts) keys.push_back(to_json(p).dump());
  return FiniteLattice::from_order(
      std::move(keys), [&parts](std::size_t i, std::size_t j) {
        return refinement_leq(parts[i], parts[j]);
      });
}

std::vector<SupportTuple> enumerate_valid_support_tuples(
    const Space& space, const std::vector<PrimeLabel>& universe,
    int max_points, std::size_t element_budget) {
  if (universe.empty()) {
    throw std::invalid_argument("universe must be nonempty");
  }
  auto tuples = enumerate_valid_plocal(space, max_points);
  boost::multiprecision::cpp_int total = 1;
  for (std::size_t i = 0; i < universe.size(); ++i) total *= tuples.size();
  if (total > element_budget) {
    throw BudgetError("product of " + std::to_string(tuples.size()) +
                      " valid tuples over " + std::to_string(universe.size()) +
                      " primes exceeds the budget of " +
                      std::to_string(element_budget) + " elements");
  }
  std::vector<PrimeLabel> sorted = universe;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("universe has repeated labels");
  }
  std::vector<SupportTuple> out;
  out.reserve(static_cast<std::size_t>(total));
  // Odometer over one valid tuple per prime, first prime slowest.
  std::vector<std::size_t> pick(sorted.size(), 0);
  for (;;) {
    std::vector<std::uint64_t> slices;
    slices.reserve(sorted.size());
    for (std::size_t p = 0; p < sorted.size(); ++p) {
      slices.push_back(tuples[pick[p]].bits());
    }
    out.emplace_back(space, sorted, std::move(slices));
    std::size_t p = sorted.size();
    bool rolled_over = true;
    while (p > 0) {
      --p;
      if (++pick[p] < tuples.size()) {
        rolled_over = false;
        break;
      }
      pick[p] = 0;
    }
    if (rolled_over) return out;
  }
}

FiniteLattice product_lattice(const Space& space,
                              const std::vector<PrimeLabel>& universe,
                              int max_points, std::size_t element_budget) {
  auto tuples =
      enumerate_valid_support_tuples(space, universe, max_points,
                                     element_budget);
  std::vector<std::string> keys;
  keys.reserve(tuples.size());
  for (const SupportTuple& t : tuples) keys.push_back(to_json(t).dump());
  std::size_t primes = tuples.empty() ? 0 : tuples[0].universe().size();
  return FiniteLattice::from_order(
      std::move(keys), [&tuples, primes](std::size_t i, std::size_t j) {
        for (std::size_t p = 0; p < primes; ++p) {
          if (tuples[i].slice(p).bits() & ~tuples[j].slice(p).bits()) {
            return false;
          }
        }
        return true;
      });
}

}  // namespace ncploc
