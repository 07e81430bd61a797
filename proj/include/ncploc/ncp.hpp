#pragma once

// Noncrossing partitions of {1..k} arranged on a cycle, with the coarsening
// order used throughout: tau <= sigma iff every block of sigma is contained
// in a block of tau.  Bottom is the one-block partition, top is all
// singletons.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncploc {

class NoncrossingPartition {
 public:
  // Validates that blocks partition {1..k} and are noncrossing, then stores
  // the canonical form: blocks sorted by minimum, elements ascending.
  static NoncrossingPartition from_blocks(int k,
                                          std::vector<std::vector<int>> blocks);

  int k() const noexcept { return k_; }
  const std::vector<std::vector<int>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  // Index into blocks() of the block containing x (1 <= x <= k).
  std::size_t block_index_of(int x) const;
  bool same_block(int x, int y) const {
    return block_index_of(x) == block_index_of(y);
  }

  // Relabel x -> ((x - 1 + shift) mod k) + 1; shift may be negative.
  NoncrossingPartition rotated(int shift) const;

  friend bool operator==(const NoncrossingPartition&,
                         const NoncrossingPartition&) = default;
  // Canonical list order: by k, then lexicographic on the canonical blocks.
  friend auto operator<=>(const NoncrossingPartition&,
                          const NoncrossingPartition&) = default;

 private:
  NoncrossingPartition() = default;
  int k_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::size_t> block_of_;  // size k_+1, entry 0 unused
};

// Partition check plus the crossing scan.  Throws std::invalid_argument if
// blocks is not a partition of {1..k}.
bool is_noncrossing(int k, const std::vector<std::vector<int>>& blocks);

// tau <= sigma in the coarsening order.  Throws on mismatched k.
bool refinement_leq(const NoncrossingPartition& tau,
                    const NoncrossingPartition& sigma);

inline constexpr int kDefaultMaxPartitionPoints = 10;

// All noncrossing partitions of {1..k} in canonical list order, generated
// from restricted growth strings and filtered.
std::vector<NoncrossingPartition> enumerate_ncp(
    int k, int max_points = kDefaultMaxPartitionPoints);

// Catalan number C_k = binom(2k,k)/(k+1), exact.
boost::multiprecision::cpp_int catalan(int k);

// Kreweras complement: interleave 1,1',2,2',...,k,k' on a cycle; the
// complement is the coarsest partition of the primed points whose union with
// the input stays noncrossing.  Order-reversing; applying it twice rotates
// labels by -1.
NoncrossingPartition kreweras_complement(const NoncrossingPartition& sigma);

}  // namespace ncploc
