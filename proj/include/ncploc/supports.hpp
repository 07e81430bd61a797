#pragma once

// Support tuples: one subset of a prime universe per interval of the space.
// A tuple is realizable ("valid") exactly when, prime by prime, the boolean
// tuple it induces is a union of maximal boxes.  Working one prime at a
// time, the whole theory reduces to PLocalTuple, a bitmask over the
// intervals in canonical order.

#include <cstdint>
#include <vector>

#include "ncploc/intervals.hpp"

namespace ncploc {

// A prime number, or 0 standing for the "rational" point of the spectrum.
class PrimeLabel {
 public:
  explicit PrimeLabel(int value);

  int value() const noexcept { return value_; }
  static bool acceptable(int value) noexcept;  // true iff 0 or prime

  friend auto operator<=>(const PrimeLabel&, const PrimeLabel&) = default;

 private:
  int value_;
};

// Boolean tuple over the intervals of a space: bit i is the value at
// interval_at(space, i).  Fits in 64 bits, so space.points() <= 10.
class PLocalTuple {
 public:
  PLocalTuple(const Space& space, std::uint64_t bits);
  static PLocalTuple from_support(const Space& space,
                                  const std::vector<Interval>& support);

  const Space& space() const noexcept { return space_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool test(std::size_t index) const { return (bits_ >> index) & 1; }
  bool test(Interval y) const { return test(interval_index(space_, y)); }
  // Intervals where the tuple is true, canonical order.
  std::vector<Interval> support() const;

  // Ascending bits_ (same space) is the canonical enumeration order.
  friend auto operator<=>(const PLocalTuple&, const PLocalTuple&) = default;

 private:
  Space space_;
  std::uint64_t bits_;
};

// One finite set of primes per interval, all drawn from a fixed universe.
class SupportTuple {
 public:
  // universe must be strictly increasing; slices[i] is the PLocalTuple bits
  // for universe[i].
  SupportTuple(const Space& space, std::vector<PrimeLabel> universe,
               std::vector<std::uint64_t> slices);

  const Space& space() const noexcept { return space_; }
  const std::vector<PrimeLabel>& universe() const noexcept { return universe_; }
  PLocalTuple slice(std::size_t prime_index) const;
  // Primes assigned to interval y, ascending.
  std::vector<PrimeLabel> set_of(Interval y) const;

  friend auto operator<=>(const SupportTuple&, const SupportTuple&) = default;

 private:
  Space space_;
  std::vector<PrimeLabel> universe_;
  std::vector<std::uint64_t> slices_;
};

// A subset of the prime spectrum: either everything, or a finite set of
// labels (primes and possibly 0).
class SpectrumSet {
 public:
  enum class Kind { all, finite };

  static SpectrumSet all_primes();
  static SpectrumSet finite(std::vector<PrimeLabel> labels);  // sorts, dedups

  Kind kind() const noexcept { return kind_; }
  // Only meaningful for finite sets.
  const std::vector<PrimeLabel>& labels() const noexcept { return labels_; }
  bool contains(PrimeLabel p) const;

  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;

 private:
  SpectrumSet() = default;
  Kind kind_ = Kind::finite;
  std::vector<PrimeLabel> labels_;
};

struct PrimePower {
  int prime;     // a prime number
  int exponent;  // >= 1

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// Finitely generated Z-module up to the data that matters here:
// Z^free_rank + (sum of Z/p^k) + Q^rational_rank.  (Q factors show up when
// modelling objects of the ambient category rather than f.g. groups.)
class FgGroup {
 public:
  FgGroup(int free_rank, std::vector<PrimePower> torsion, int rational_rank);

  int free_rank() const noexcept { return free_rank_; }
  const std::vector<PrimePower>& torsion() const noexcept { return torsion_; }
  int rational_rank() const noexcept { return rational_rank_; }

 private:
  int free_rank_;
  std::vector<PrimePower> torsion_;  // sorted, repeats allowed
  int rational_rank_;
};

// Support of a group: all primes if there is free rank (Z resolves through Q
// and Q/Z), otherwise the primes of the torsion part plus 0 for any rational
// summand.
SpectrumSet supp_of_group(const FgGroup& g);

// --- validity -------------------------------------------------------------

// True iff the tuple equals the union of the box masks it contains, i.e. is
// a union of maximal boxes.
bool is_valid_plocal(const PLocalTuple& t);

// Same predicate, phrased pointwise: wherever the tuple is true there is a
// box through that interval whose other members are all true.  Kept as an
// independent formulation; agrees with is_valid_plocal everywhere.
bool is_valid_plocal_factored(const PLocalTuple& t);

// A support tuple is valid iff every prime slice is.
bool is_valid(const SupportTuple& t);

// Union of the boxes of the given intervals; always valid.
PLocalTuple tuple_from_generators(const Space& space,
                                  const std::vector<Interval>& generators);

// Intervals whose whole box lies inside the tuple.  For valid tuples this
// is the canonical generating set.
std::vector<Interval> generator_set(const PLocalTuple& t);

// Inverse direction of generator_set; same map as tuple_from_generators,
// named for the round trip support_from_generators(generator_set(t)) == t.
inline PLocalTuple support_from_generators(const Space& space,
                                           const std::vector<Interval>& gens) {
  return tuple_from_generators(space, gens);
}

// Largest valid tuple contained in `bits` (union of all boxes below it).
PLocalTuple valid_closure(const Space& space, std::uint64_t bits);

// Lattice operations on valid tuples: join is pointwise union (automatically
// valid), meet is the valid closure of the pointwise intersection.
PLocalTuple tuple_join(const PLocalTuple& s, const PLocalTuple& t);
PLocalTuple tuple_meet(const PLocalTuple& s, const PLocalTuple& t);

inline constexpr int kDefaultMaxPoints = 8;
inline constexpr int kDefaultBruteForceBits = 22;

// All valid tuples, ascending by bitmask.  Structural enumeration: folds the
// box masks into a closed family, no sweep over all 2^m subsets.
std::vector<PLocalTuple> enumerate_valid_plocal(const Space& space,
                                                int max_points = kDefaultMaxPoints);

// Oracle route: filters every one of the 2^m bitmasks through is_valid_plocal.
// Refuses to run if m exceeds budget_bits.
std::vector<PLocalTuple> brute_force_valid_plocal(
    const Space& space, int budget_bits = kDefaultBruteForceBits);

}  // namespace ncploc
