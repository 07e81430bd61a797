#include "ncploc/intervals.hpp"

#include <stdexcept>
#include <string>

#include "ncploc/errors.hpp"

namespace ncploc {

namespace {

void require_in(const Space& space, Interval y, const char* what) {
  if (y.b > space.points()) {
    throw std::invalid_argument(std::string(what) + " [" + std::to_string(y.a) +
                                "," + std::to_string(y.b) +
                                "] does not fit in a space with " +
                                std::to_string(space.points()) + " points");
  }
}

}  // namespace

Space::Space(int points) : n_(points) {
  if (points < 1) {
    throw std::invalid_argument("space needs at least one point, got " +
                                std::to_string(points));
  }
}

Interval::Interval(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || b < a) {
    throw std::invalid_argument("bad interval [" + std::to_string(a) + "," +
                                std::to_string(b) + "]: need 1 <= a <= b");
  }
}

std::vector<Interval> enumerate_intervals(const Space& space) {
  std::vector<Interval> out;
  out.reserve(space.interval_count());
  for (int a = 1; a <= space.points(); ++a) {
    for (int b = a; b <= space.points(); ++b) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t interval_index(const Space& space, Interval y) {
  require_in(space, y, "interval");
  // Intervals with left endpoint < a come first: those contribute
  // (n) + (n-1) + ... + (n-a+2) = (a-1)*n - (a-1)(a-2)/2 entries.
  std::size_t before = static_cast<std::size_t>(y.a - 1) * space.points() -
                       static_cast<std::size_t>(y.a - 1) * (y.a - 2) / 2;
  return before + static_cast<std::size_t>(y.b - y.a);
}

Interval interval_at(const Space& space, std::size_t index) {
  if (index >= space.interval_count()) {
    throw std::invalid_argument("interval index " + std::to_string(index) +
                                " out of range (space has " +
                                std::to_string(space.interval_count()) +
                                " intervals)");
  }
  std::size_t i = index;
  for (int a = 1;; ++a) {
    std::size_t row = static_cast<std::size_t>(space.points() - a + 1);
    if (i < row) return Interval(a, a + static_cast<int>(i));
    i -= row;
  }
}

std::optional<Parity> box_parity(const Space& space, Interval y, Interval z) {
  require_in(space, y, "base interval");
  require_in(space, z, "member interval");
  if (z.a <= y.a && y.a <= z.b && z.b <= y.b) return Parity::even;
  if (y.a < z.a && y.b < z.b && z.a - 1 <= y.b) return Parity::odd;
  return std::nullopt;
}

Box maximal_box(const Space& space, Interval y) {
  require_in(space, y, "base interval");
  Box box;
  box.base = y;
  for (Interval z : enumerate_intervals(space)) {
    if (auto p = box_parity(space, y, z)) {
      box.members.emplace_back(z, *p);
    }
  }
  return box;
}

std::vector<std::uint64_t> box_masks(const Space& space) {
  if (space.points() > kMaxMaskPoints) {
    throw BudgetError("space with " + std::to_string(space.points()) +
                      " points has " + std::to_string(space.interval_count()) +
                      " intervals, more than fit in a 64-bit tuple mask");
  }
  auto intervals = enumerate_intervals(space);
  std::vector<std::uint64_t> masks(intervals.size(), 0);
  for (std::size_t yi = 0; yi < intervals.size(); ++yi) {
    for (std::size_t zi = 0; zi < intervals.size(); ++zi) {
      if (box_parity(space, intervals[yi], intervals[zi])) {
        masks[yi] |= std::uint64_t{1} << zi;
      }
    }
  }
  return masks;
}

}  // namespace ncploc
