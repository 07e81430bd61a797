#pragma once

// Generic finite lattice over opaque string keys.  Built from an explicit
// order relation; construction verifies the partial-order axioms and the
// existence of all pairwise meets and joins, so the query operations never
// fail afterwards.
//
// Everything is dense bitset arithmetic over an internal linear extension
// (elements re-sorted by down-set size).  In that ordering the meet of x and
// y, when it exists, is simply the highest-indexed common lower bound, which
// keeps construction at O(n^2 * n/64) rather than cubic.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncploc {

// A witness pair with no greatest lower / least upper bound.
struct NotALatticeError : std::invalid_argument {
  NotALatticeError(std::string msg, std::size_t x_, std::size_t y_,
                   bool missing_join_)
      : std::invalid_argument(std::move(msg)),
        x(x_),
        y(y_),
        missing_join(missing_join_) {}
  std::size_t x;
  std::size_t y;
  bool missing_join;
};

class FiniteLattice {
 public:
  using LeqFn = std::function<bool(std::size_t, std::size_t)>;

  // keys must be distinct; leq(i, j) answers "element i <= element j".
  // Throws std::invalid_argument on order-axiom violations and
  // NotALatticeError on a pair without a meet or join.
  static FiniteLattice from_order(std::vector<std::string> keys,
                                  const LeqFn& leq);

  std::size_t size() const noexcept { return keys_.size(); }
  const std::string& key(std::size_t i) const { return keys_.at(i); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  // Index of a key, if present.
  std::optional<std::size_t> index_of(const std::string& key) const;

  bool leq(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t bottom() const;
  std::size_t top() const;

  // Covering pairs (lower, upper), sorted ascending.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  // Length of the longest chain from bottom up to each element.
  std::vector<std::size_t> heights() const;

  struct DistributivityWitness {
    std::size_t x, y, z;  // x /\ (y \/ z) != (x /\ y) \/ (x /\ z)
  };
  // First witness in lexicographic (x, y, z) element order, or nullopt.
  std::optional<DistributivityWitness> distributivity_witness() const;
  bool is_distributive() const { return !distributivity_witness().has_value(); }

  // Same keys, reversed order.
  FiniteLattice dual() const;

 private:
  FiniteLattice() = default;

  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* down_row(std::size_t xi) const {
    return down_.data() + xi * words_;
  }
  const std::uint64_t* up_row(std::size_t xi) const {
    return up_.data() + xi * words_;
  }
  std::optional<std::size_t> compute_meet_int(std::size_t xi,
                                              std::size_t yi) const;
  std::optional<std::size_t> compute_join_int(std::size_t xi,
                                              std::size_t yi) const;

  std::vector<std::string> keys_;      // caller order ("external" indices)
  std::size_t words_ = 0;              // bitset words per row
  std::vector<std::size_t> rank_;      // external -> internal
  std::vector<std::size_t> elem_;      // internal -> external
  std::vector<std::uint64_t> down_;    // internal bitsets, flattened rows
  std::vector<std::uint64_t> up_;
  std::vector<std::uint32_t> downpop_;  // |down| by internal index
  std::vector<std::uint32_t> uppop_;
  bool tables_ = false;
  std::vector<std::uint32_t> meet_tab_;  // internal x internal -> internal
  std::vector<std::uint32_t> join_tab_;
};

// Lattices at or below this size get full meet/join tables; larger ones
// answer queries by bitset scan.
inline constexpr std::size_t kLatticeTableLimit = 1500;

inline constexpr std::size_t kDefaultIsoBudget = 4096;

// An order isomorphism l1 -> l2 as a vector of l2-indices, or nullopt.
// Deterministic: invariant refinement first, then the lexicographically
// first extension found by backtracking over l1's element order.  Throws
// BudgetError if either lattice is larger than `budget`.
std::optional<std::vector<std::size_t>> are_isomorphic(
    const FiniteLattice& l1, const FiniteLattice& l2,
    std::size_t budget = kDefaultIsoBudget);

bool is_self_dual(const FiniteLattice& l,
                  std::size_t budget = kDefaultIsoBudget);

// Componentwise-ordered product; keys are two-element JSON arrays of the
// factor keys, in row-major (i1 * size2 + i2) order.
FiniteLattice direct_product(const FiniteLattice& l1, const FiniteLattice& l2);

// Graphviz rendering of the Hasse diagram, bottom rank at the bottom.
std::string to_dot(const FiniteLattice& l);

}  // namespace ncploc
