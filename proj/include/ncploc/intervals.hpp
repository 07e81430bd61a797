#pragma once

// Locally closed intervals [a,b] of a finite totally ordered space
// {1 < 2 < ... < n}, and the "maximal box" attached to each interval.
//
// The box of y = [a,b] collects every interval z = [c,d] that hits y in the
// one of two admissible ways, each carrying a degree (parity):
//
//   even:  c <= a <= d <= b          (z covers the left end of y)
//   odd:   a < c,  b < d,  c-1 <= b  (z overhangs the right end of y)
//
// The two cases are mutually exclusive; any other relative position means
// z is not a member of the box at all.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ncploc {

class Space {
 public:
  explicit Space(int points);

  int points() const noexcept { return n_; }
  // Number of nonempty intervals [a,b], 1 <= a <= b <= n.
  std::size_t interval_count() const noexcept {
    return static_cast<std::size_t>(n_) * (n_ + 1) / 2;
  }

  friend auto operator<=>(const Space&, const Space&) = default;

 private:
  int n_;
};

struct Interval {
  int a = 1;
  int b = 1;

  Interval() = default;
  Interval(int a_, int b_);

  int length() const noexcept { return b - a + 1; }

  // Lexicographic by (a, b); this is the canonical interval order throughout.
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

enum class Parity : int { even = 0, odd = 1 };

struct Box {
  Interval base;
  // Members in canonical interval order.
  std::vector<std::pair<Interval, Parity>> members;
};

// All intervals of the space in canonical order.
std::vector<Interval> enumerate_intervals(const Space& space);

// Rank of y in the canonical order, and its inverse.
std::size_t interval_index(const Space& space, Interval y);
Interval interval_at(const Space& space, std::size_t index);

// Membership (with parity) of z in the box of y; std::nullopt if z is not
// a member.  Throws std::invalid_argument if y or z does not fit in space.
std::optional<Parity> box_parity(const Space& space, Interval y, Interval z);

Box maximal_box(const Space& space, Interval y);

// Largest number of points for which a tuple of intervals fits in a 64-bit
// mask (n = 10 gives 55 intervals, n = 11 would give 66).
inline constexpr int kMaxMaskPoints = 10;

// box_masks(space)[interval_index(y)] = bitmask over interval indices of the
// members of y's box.  Requires space.points() <= kMaxMaskPoints.
std::vector<std::uint64_t> box_masks(const Space& space);

}  // namespace ncploc
