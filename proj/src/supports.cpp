#include "ncploc/supports.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ncploc/errors.hpp"

namespace ncploc {

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t full_mask(const Space& space) {
  std::size_t m = space.interval_count();
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

void require_same_space(const Space& s, const Space& t) {
  if (!(s == t)) {
    throw std::invalid_argument("tuples live over different spaces (" +
                                std::to_string(s.points()) + " vs " +
                                std::to_string(t.points()) + " points)");
  }
}

// Union of all box masks contained in bits.
std::uint64_t closure_of(const std::vector<std::uint64_t>& masks,
                         std::uint64_t bits) {
  std::uint64_t acc = 0;
  for (std::uint64_t m : masks) {
    if ((m & ~bits) == 0) acc |= m;
  }
  return acc;
}

}  // namespace

PrimeLabel::PrimeLabel(int value) : value_(value) {
  if (!acceptable(value)) {
    throw std::invalid_argument("prime label must be 0 or a prime, got " +
                                std::to_string(value));
  }
}

bool PrimeLabel::acceptable(int value) noexcept {
  return value == 0 || is_prime(value);
}

PLocalTuple::PLocalTuple(const Space& space, std::uint64_t bits)
    : space_(space), bits_(bits) {
  if (space.points() > kMaxMaskPoints) {
    throw BudgetError("tuples are stored as 64-bit masks; at most " +
                      std::to_string(kMaxMaskPoints) + " points supported");
  }
  if (bits & ~full_mask(space)) {
    throw std::invalid_argument("tuple mask has bits beyond the " +
                                std::to_string(space.interval_count()) +
                                " intervals of the space");
  }
}

PLocalTuple PLocalTuple::from_support(const Space& space,
                                      const std::vector<Interval>& support) {
  std::uint64_t bits = 0;
  for (Interval y : support) {
    bits |= std::uint64_t{1} << interval_index(space, y);
  }
  return PLocalTuple(space, bits);
}

std::vector<Interval> PLocalTuple::support() const {
  std::vector<Interval> out;
  auto intervals = enumerate_intervals(space_);
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (test(i)) out.push_back(intervals[i]);
  }
  return out;
}

SupportTuple::SupportTuple(const Space& space, std::vector<PrimeLabel> universe,
                           std::vector<std::uint64_t> slices)
    : space_(space), universe_(std::move(universe)), slices_(std::move(slices)) {
  if (universe_.empty()) {
    throw std::invalid_argument("support tuple needs a nonempty universe");
  }
  for (std::size_t i = 1; i < universe_.size(); ++i) {
    if (!(universe_[i - 1] < universe_[i])) {
      throw std::invalid_argument("universe must be strictly increasing");
    }
  }
  if (slices_.size() != universe_.size()) {
    throw std::invalid_argument("expected one slice per universe label, got " +
                                std::to_string(slices_.size()) + " for " +
                                std::to_string(universe_.size()) + " labels");
  }
  std::uint64_t full = full_mask(space_);
  for (std::uint64_t s : slices_) {
    if (s & ~full) {
      throw std::invalid_argument("slice mask has bits beyond the intervals "
                                  "of the space");
    }
  }
}

PLocalTuple SupportTuple::slice(std::size_t prime_index) const {
  if (prime_index >= universe_.size()) {
    throw std::invalid_argument("prime index " + std::to_string(prime_index) +
                                " out of range");
  }
  return PLocalTuple(space_, slices_[prime_index]);
}

std::vector<PrimeLabel> SupportTuple::set_of(Interval y) const {
  std::size_t idx = interval_index(space_, y);
  std::vector<PrimeLabel> out;
  for (std::size_t p = 0; p < universe_.size(); ++p) {
    if ((slices_[p] >> idx) & 1) out.push_back(universe_[p]);
  }
  return out;
}

SpectrumSet SpectrumSet::all_primes() {
  SpectrumSet s;
  s.kind_ = Kind::all;
  return s;
}

SpectrumSet SpectrumSet::finite(std::vector<PrimeLabel> labels) {
  SpectrumSet s;
  s.kind_ = Kind::finite;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  s.labels_ = std::move(labels);
  return s;
}

bool SpectrumSet::contains(PrimeLabel p) const {
  if (kind_ == Kind::all) return p.value() != 0;
  return std::binary_search(labels_.begin(), labels_.end(), p);
}

FgGroup::FgGroup(int free_rank, std::vector<PrimePower> torsion,
                 int rational_rank)
    : free_rank_(free_rank),
      torsion_(std::move(torsion)),
      rational_rank_(rational_rank) {
  if (free_rank < 0 || rational_rank < 0) {
    throw std::invalid_argument("ranks must be nonnegative");
  }
  for (const PrimePower& pp : torsion_) {
    if (!is_prime(pp.prime) || pp.exponent < 1) {
      throw std::invalid_argument("torsion must be prime powers p^k, k >= 1");
    }
  }
  std::sort(torsion_.begin(), torsion_.end());
}

SpectrumSet supp_of_group(const FgGroup& g) {
  if (g.free_rank() > 0) return SpectrumSet::all_primes();
  std::vector<PrimeLabel> labels;
  for (const PrimePower& pp : g.torsion()) {
    labels.emplace_back(pp.prime);
  }
  if (g.rational_rank() > 0) labels.emplace_back(0);
  return SpectrumSet::finite(std::move(labels));
}

bool is_valid_plocal(const PLocalTuple& t) {
  auto masks = box_masks(t.space());
  return closure_of(masks, t.bits()) == t.bits();
}

bool is_valid_plocal_factored(const PLocalTuple& t) {
  auto masks = box_masks(t.space());
  std::size_t m = t.space().interval_count();
  std::uint64_t bits = t.bits();
  for (std::size_t y = 0; y < m; ++y) {
    if (!((bits >> y) & 1)) continue;
    bool witnessed = false;
    for (std::size_t z = 0; z < m && !witnessed; ++z) {
      // Some box through y whose remaining members are all present.
      if (((masks[z] >> y) & 1) &&
          ((masks[z] & ~(std::uint64_t{1} << y)) & ~bits) == 0) {
        witnessed = true;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool is_valid(const SupportTuple& t) {
  for (std::size_t p = 0; p < t.universe().size(); ++p) {
    if (!is_valid_plocal(t.slice(p))) return false;
  }
  return true;
}

PLocalTuple tuple_from_generators(const Space& space,
                                  const std::vector<Interval>& generators) {
  auto masks = box_masks(space);
  std::uint64_t bits = 0;
  for (Interval y : generators) {
    bits |= masks[interval_index(space, y)];
  }
  return PLocalTuple(space, bits);
}

std::vector<Interval> generator_set(const PLocalTuple& t) {
  auto masks = box_masks(t.space());
  auto intervals = enumerate_intervals(t.space());
  std::vector<Interval> out;
  for (std::size_t y = 0; y < intervals.size(); ++y) {
    if ((masks[y] & ~t.bits()) == 0) out.push_back(intervals[y]);
  }
  return out;
}

PLocalTuple valid_closure(const Space& space, std::uint64_t bits) {
  auto masks = box_masks(space);
  return PLocalTuple(space, closure_of(masks, bits));
}

PLocalTuple tuple_join(const PLocalTuple& s, const PLocalTuple& t) {
  require_same_space(s.space(), t.space());
  return PLocalTuple(s.space(), s.bits() | t.bits());
}

PLocalTuple tuple_meet(const PLocalTuple& s, const PLocalTuple& t) {
  require_same_space(s.space(), t.space());
  return valid_closure(s.space(), s.bits() & t.bits());
}

std::vector<PLocalTuple> enumerate_valid_plocal(const Space& space,
                                                int max_points) {
  if (space.points() > max_points) {
    throw BudgetError("enumeration limited to " + std::to_string(max_points) +
                      " points, got " + std::to_string(space.points()));
  }
  auto masks = box_masks(space);
  // The valid tuples are exactly the unions of box masks; fold each mask
  // over the family collected so far.
  std::set<std::uint64_t> family{0};
  for (std::uint64_t m : masks) {
    std::vector<std::uint64_t> snapshot(family.begin(), family.end());
    for (std::uint64_t s : snapshot) family.insert(s | m);
  }
  std::vector<PLocalTuple> out;
  out.reserve(family.size());
  for (std::uint64_t bits : family) out.emplace_back(space, bits);
  return out;
}

std::vector<PLocalTuple> brute_force_valid_plocal(const Space& space,
                                                  int budget_bits) {
  std::size_t m = space.interval_count();
  if (budget_bits < 0 || m > static_cast<std::size_t>(budget_bits)) {
    throw BudgetError("brute force over 2^" + std::to_string(m) +
                      " tuples exceeds budget of 2^" +
                      std::to_string(budget_bits < 0 ? 0 : budget_bits));
  }
  auto masks = box_masks(space);
  std::vector<PLocalTuple> out;
  std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    if (closure_of(masks, bits) == bits) out.emplace_back(space, bits);
  }
  return out;
}

}  // namespace ncploc
