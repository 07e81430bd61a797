#pragma once

// The dictionary between valid tuples over n points and noncrossing
// partitions of n+1 cycle points: collapse a+1..b+1 wherever the tuple
// vanishes on [a,b].  Plus the lattice instances this classifies.

#include <cstddef>
#include <vector>

#include "ncploc/lattice.hpp"
#include "ncploc/ncp.hpp"
#include "ncploc/supports.hpp"

namespace ncploc {

// Partition of {1..n+1} with a ~ b+1 iff t([a,b]) is false.  Requires a
// valid tuple (std::invalid_argument otherwise); the vanishing relation of a
// valid tuple is automatically transitive and noncrossing, and psi checks
// both rather than repairing (std::logic_error on violation).
NoncrossingPartition psi(const PLocalTuple& t);

// Inverse map: t([a,b]) false iff a ~ b+1 in sigma.  sigma.k() must be at
// least 2; the result is checked valid before returning.
PLocalTuple psi_inverse(const NoncrossingPartition& sigma);

// The two-block partition attached to one interval: inner block a+1..b+1,
// outer block the rest of {1..n+1}.
struct TwoBlockDecomposition {
  int k = 2;
  std::vector<int> inner;
  std::vector<int> outer;

  NoncrossingPartition as_partition() const;
};

TwoBlockDecomposition interval_to_two_block(const Space& space, Interval y);

// Walks the cycle from a, alternately clockwise and counterclockwise
// (clockwise first), absorbing vertices until each direction reaches the
// block of b+1; the absorbed arc determines a two-block coarsening of sigma
// separating a from b+1.  Returns the interval [c,d] whose inner block is
// the side not containing vertex 1.  Precondition: a and b+1 lie in
// different blocks (std::invalid_argument).
Interval separating_decomposition(const NoncrossingPartition& sigma, int a,
                                  int b);

// Lattice of all valid tuples under pointwise containment; element keys are
// the PLocalTuple JSON documents.
FiniteLattice plocal_lattice(const Space& space,
                             int max_points = kDefaultMaxPoints);

// Lattice of noncrossing partitions of {1..k} under the coarsening order;
// keys are partition JSON documents.
FiniteLattice ncp_lattice(int k, int max_points = kDefaultMaxPartitionPoints);

inline constexpr std::size_t kDefaultProductBudget = 4096;

// All valid support tuples over the universe, odometer order (first prime
// slowest).  Count is catalan(n+1)^|universe|; refuses beyond the budget.
std::vector<SupportTuple> enumerate_valid_support_tuples(
    const Space& space, const std::vector<PrimeLabel>& universe,
    int max_points = kDefaultMaxPoints,
    std::size_t element_budget = kDefaultProductBudget);

// Those tuples under pointwise containment; keys are SupportTuple JSON
// documents.  Isomorphic to the |universe|-fold power of plocal_lattice.
FiniteLattice product_lattice(const Space& space,
                              const std::vector<PrimeLabel>& universe,
                              int max_points = kDefaultMaxPoints,
                              std::size_t element_budget = kDefaultProductBudget);

}  // namespace ncploc
