#include "ncploc/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ncploc/errors.hpp"

namespace ncploc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

bool get_bit(const std::uint64_t* row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1;
}

void set_bit(std::uint64_t* row, std::size_t i) {
  row[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

// row1 & row2, returning popcount and the extreme set bits.
struct AndScan {
  std::size_t pop = 0;
  std::size_t lowest = SIZE_MAX;
  std::size_t highest = SIZE_MAX;
};

AndScan and_scan(const std::uint64_t* r1, const std::uint64_t* r2,
                 std::size_t words) {
  AndScan s;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t v = r1[w] & r2[w];
    if (!v) continue;
    s.pop += static_cast<std::size_t>(std::popcount(v));
    if (s.lowest == SIZE_MAX) {
      s.lowest = w * kWordBits + static_cast<std::size_t>(std::countr_zero(v));
    }
    s.highest = w * kWordBits + (kWordBits - 1 -
                                 static_cast<std::size_t>(std::countl_zero(v)));
  }
  return s;
}

bool subset_of(const std::uint64_t* small, const std::uint64_t* big,
               std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (small[w] & ~big[w]) return false;
  }
  return true;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 4);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::string> keys,
                                        const LeqFn& leq) {
  std::size_t n = keys.size();
  if (n == 0) {
    throw std::invalid_argument("a lattice needs at least one element");
  }
  {
    std::set<std::string> uniq(keys.begin(), keys.end());
    if (uniq.size() != n) {
      throw std::invalid_argument("element keys are not distinct");
    }
  }

  std::size_t words = words_for(n);
  // Down-sets in caller order first; axioms are order-independent.
  std::vector<std::uint64_t> down_ext(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(i, i)) {
      throw std::invalid_argument("order is not reflexive at element " +
                                  std::to_string(i) + " (" + keys[i] + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (leq(j, i)) set_bit(down_ext.data() + i * words, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (get_bit(down_ext.data() + i * words, j) &&
          get_bit(down_ext.data() + j * words, i)) {
        throw std::invalid_argument("order is not antisymmetric on elements " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* row_i = down_ext.data() + i * words;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = row_i[w];
      while (v) {
        std::size_t j =
            w * kWordBits + static_cast<std::size_t>(std::countr_zero(v));
        v &= v - 1;
        if (!subset_of(down_ext.data() + j * words, row_i, words)) {
          throw std::invalid_argument(
              "order is not transitive below element " + std::to_string(i));
        }
      }
    }
  }

  FiniteLattice l;
  l.keys_ = std::move(keys);
  l.words_ = words;

  // Linear extension: sort by down-set size (strictly monotone along the
  // order), ties by caller index.
  std::vector<std::uint32_t> pop_ext(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = 0;
    for (std::size_t w = 0; w < words; ++w) {
      p += static_cast<std::size_t>(std::popcount(down_ext[i * words + w]));
    }
    pop_ext[i] = static_cast<std::uint32_t>(p);
  }
  l.elem_.resize(n);
  std::iota(l.elem_.begin(), l.elem_.end(), std::size_t{0});
  std::sort(l.elem_.begin(), l.elem_.end(), [&](std::size_t x, std::size_t y) {
    return pop_ext[x] != pop_ext[y] ? pop_ext[x] < pop_ext[y] : x < y;
  });
  l.rank_.resize(n);
  for (std::size_t xi = 0; xi < n; ++xi) l.rank_[l.elem_[xi]] = xi;

  l.down_.assign(n * words, 0);
  l.up_.assign(n * words, 0);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const std::uint64_t* ext_row = down_ext.data() + l.elem_[xi] * words;
    for (std::size_t yi = 0; yi < n; ++yi) {
      if (get_bit(ext_row, l.elem_[yi])) {
        set_bit(l.down_.data() + xi * words, yi);
        set_bit(l.up_.data() + yi * words, xi);
      }
    }
  }
  l.downpop_.resize(n);
  l.uppop_.resize(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    l.downpop_[xi] = pop_ext[l.elem_[xi]];
    std::size_t p = 0;
    for (std::size_t w = 0; w < words; ++w) {
      p += static_cast<std::size_t>(std::popcount(l.up_[xi * words + w]));
    }
    l.uppop_[xi] = static_cast<std::uint32_t>(p);
  }

  // Every pair needs a meet and a join; remember them when the lattice is
  // small enough to afford the tables.
  l.tables_ = n <= kLatticeTableLimit;
  if (l.tables_) {
    l.meet_tab_.assign(n * n, 0);
    l.join_tab_.assign(n * n, 0);
  }
  for (std::size_t xi = 0; xi < n; ++xi) {
    for (std::size_t yi = xi; yi < n; ++yi) {
      auto m = l.compute_meet_int(xi, yi);
      if (!m) {
        throw NotALatticeError(
            "no meet for elements " + l.keys_[l.elem_[xi]] + " and " +
                l.keys_[l.elem_[yi]],
            l.elem_[xi], l.elem_[yi], false);
      }
      auto j = l.compute_join_int(xi, yi);
      if (!j) {
        throw NotALatticeError(
            "no join for elements " + l.keys_[l.elem_[xi]] + " and " +
                l.keys_[l.elem_[yi]],
            l.elem_[xi], l.elem_[yi], true);
      }
      if (l.tables_) {
        l.meet_tab_[xi * n + yi] = l.meet_tab_[yi * n + xi] =
            static_cast<std::uint32_t>(*m);
        l.join_tab_[xi * n + yi] = l.join_tab_[yi * n + xi] =
            static_cast<std::uint32_t>(*j);
      }
    }
  }
  return l;
}

std::optional<std::size_t> FiniteLattice::index_of(
    const std::string& key) const {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == key) return i;
  }
  return std::nullopt;
}

bool FiniteLattice::leq(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) {
    throw std::invalid_argument("element index out of range");
  }
  return get_bit(down_row(rank_[j]), rank_[i]);
}

std::optional<std::size_t> FiniteLattice::compute_meet_int(
    std::size_t xi, std::size_t yi) const {
  // Common lower bounds form a down-closed set; its greatest element, if
  // any, is the one with the largest down-set, i.e. the highest internal
  // index.  It qualifies iff its down-set exhausts the whole set.
  AndScan s = and_scan(down_row(xi), down_row(yi), words_);
  if (s.pop == 0) return std::nullopt;
  if (downpop_[s.highest] != s.pop) return std::nullopt;
  return s.highest;
}

std::optional<std::size_t> FiniteLattice::compute_join_int(
    std::size_t xi, std::size_t yi) const {
  AndScan s = and_scan(up_row(xi), up_row(yi), words_);
  if (s.pop == 0) return std::nullopt;
  if (uppop_[s.lowest] != s.pop) return std::nullopt;
  return s.lowest;
}

std::size_t FiniteLattice::meet(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) {
    throw std::invalid_argument("element index out of range");
  }
  std::size_t xi = rank_[i], yi = rank_[j];
  if (tables_) return elem_[meet_tab_[xi * size() + yi]];
  auto m = compute_meet_int(xi, yi);
  if (!m) throw std::logic_error("validated lattice lost a meet");
  return elem_[*m];
}

std::size_t FiniteLattice::join(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) {
    throw std::invalid_argument("element index out of range");
  }
  std::size_t xi = rank_[i], yi = rank_[j];
  if (tables_) return elem_[join_tab_[xi * size() + yi]];
  auto v = compute_join_int(xi, yi);
  if (!v) throw std::logic_error("validated lattice lost a join");
  return elem_[*v];
}

std::size_t FiniteLattice::bottom() const { return elem_[0]; }

std::size_t FiniteLattice::top() const { return elem_[size() - 1]; }

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::hasse_edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t n = size();
  for (std::size_t yi = 0; yi < n; ++yi) {
    const std::uint64_t* dy = down_row(yi);
    for (std::size_t xi = 0; xi < yi; ++xi) {
      if (!get_bit(dy, xi)) continue;
      // x covered by y iff the closed interval [x, y] has just the two ends.
      AndScan s = and_scan(dy, up_row(xi), words_);
      if (s.pop == 2) out.emplace_back(elem_[xi], elem_[yi]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> FiniteLattice::heights() const {
  std::size_t n = size();
  std::vector<std::size_t> h_int(n, 0);
  for (std::size_t yi = 0; yi < n; ++yi) {
    const std::uint64_t* dy = down_row(yi);
    std::size_t best = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t v = dy[w];
      while (v) {
        std::size_t xi =
            w * kWordBits + static_cast<std::size_t>(std::countr_zero(v));
        v &= v - 1;
        if (xi != yi && h_int[xi] + 1 > best) best = h_int[xi] + 1;
      }
    }
    h_int[yi] = best;
  }
  std::vector<std::size_t> out(n);
  for (std::size_t yi = 0; yi < n; ++yi) out[elem_[yi]] = h_int[yi];
  return out;
}

std::optional<FiniteLattice::DistributivityWitness>
FiniteLattice::distributivity_witness() const {
  std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t lhs = meet(x, join(y, z));
        std::size_t rhs = join(meet(x, y), meet(x, z));
        if (lhs != rhs) return DistributivityWitness{x, y, z};
      }
    }
  }
  return std::nullopt;
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<std::string> keys = keys_;
  const FiniteLattice& self = *this;
  return from_order(std::move(keys), [&self](std::size_t i, std::size_t j) {
    return self.leq(j, i);
  });
}

namespace {

struct CoverLists {
  std::vector<std::vector<std::size_t>> up, down;
};

CoverLists cover_lists(const FiniteLattice& l) {
  CoverLists c;
  c.up.resize(l.size());
  c.down.resize(l.size());
  for (auto [lo, hi] : l.hasse_edges()) {
    c.up[lo].push_back(hi);
    c.down[hi].push_back(lo);
  }
  return c;
}

// Degree-and-neighbourhood colour refinement, run jointly over both
// lattices so the colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const FiniteLattice& l1, const CoverLists& c1, const FiniteLattice& l2,
    const CoverLists& c2) {
  std::size_t n = l1.size();
  auto heights1 = l1.heights();
  auto heights2 = l2.heights();
  std::vector<int> col1(n), col2(n);
  {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, int> ids;
    auto seed = [&](const FiniteLattice& l, const CoverLists& c,
                    const std::vector<std::size_t>& h, std::vector<int>& col) {
      for (std::size_t i = 0; i < n; ++i) {
        auto key = std::make_tuple(h[i], c.up[i].size(), c.down[i].size());
        auto [it, _] = ids.try_emplace(key, static_cast<int>(ids.size()));
        col[i] = it->second;
      }
    };
    seed(l1, c1, heights1, col1);
    seed(l2, c2, heights2, col2);
  }
  for (std::size_t round = 0; round < n; ++round) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::map<Sig, int> ids;
    auto pass = [&](const CoverLists& c, const std::vector<int>& col,
                    std::vector<int>& next) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> ups, downs;
        for (std::size_t j : c.up[i]) ups.push_back(col[j]);
        for (std::size_t j : c.down[i]) downs.push_back(col[j]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        Sig key{col[i], std::move(ups), std::move(downs)};
        auto [it, _] = ids.try_emplace(std::move(key),
                                       static_cast<int>(ids.size()));
        next[i] = it->second;
      }
    };
    std::vector<int> next1(n), next2(n);
    pass(c1, col1, next1);
    pass(c2, col2, next2);
    std::set<int> before(col1.begin(), col1.end());
    std::set<int> after(next1.begin(), next1.end());
    bool stable = after.size() == before.size();
    col1 = std::move(next1);
    col2 = std::move(next2);
    if (stable) break;
  }
  return {col1, col2};
}

}  // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const FiniteLattice& l1,
                                                       const FiniteLattice& l2,
                                                       std::size_t budget) {
  if (l1.size() > budget || l2.size() > budget) {
    throw BudgetError("isomorphism search limited to lattices of size " +
                      std::to_string(budget));
  }
  if (l1.size() != l2.size()) return std::nullopt;
  std::size_t n = l1.size();

  CoverLists c1 = cover_lists(l1), c2 = cover_lists(l2);
  auto [col1, col2] = refine_colors(l1, c1, l2, c2);
  {
    std::vector<int> s1 = col1, s2 = col2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> by_color2;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t c = static_cast<std::size_t>(col2[j]);
    if (by_color2.size() <= c) by_color2.resize(c + 1);
    by_color2[c].push_back(j);
  }

  std::vector<std::size_t> image(n, SIZE_MAX);
  std::vector<char> used(n, 0);
  constexpr std::size_t kNodeBudget = 50'000'000;
  std::size_t nodes = 0;

  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    std::size_t c = static_cast<std::size_t>(col1[i]);
    if (c >= by_color2.size()) return false;
    for (std::size_t cand : by_color2[c]) {
      if (used[cand]) continue;
      if (++nodes > kNodeBudget) {
        throw BudgetError("isomorphism search exceeded its node budget");
      }
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = l1.leq(j, i) == l2.leq(image[j], cand) &&
             l1.leq(i, j) == l2.leq(cand, image[j]);
      }
      if (!ok) continue;
      image[i] = cand;
      used[cand] = 1;
      if (self(self, i + 1)) return true;
      used[cand] = 0;
      image[i] = SIZE_MAX;
    }
    return false;
  };
  if (extend(extend, 0)) return image;
  return std::nullopt;
}

bool is_self_dual(const FiniteLattice& l, std::size_t budget) {
  return are_isomorphic(l, l.dual(), budget).has_value();
}

FiniteLattice direct_product(const FiniteLattice& l1, const FiniteLattice& l2) {
  std::vector<std::string> keys;
  keys.reserve(l1.size() * l2.size());
  for (std::size_t i = 0; i < l1.size(); ++i) {
    for (std::size_t j = 0; j < l2.size(); ++j) {
      // Two-element JSON array of the factor keys.  Factor keys here are
      // JSON documents themselves, so splice them in verbatim.
      keys.push_back("[" + l1.key(i) + "," + l2.key(j) + "]");
    }
  }
  std::size_t n2 = l2.size();
  return FiniteLattice::from_order(
      std::move(keys), [&l1, &l2, n2](std::size_t x, std::size_t y) {
        return l1.leq(x / n2, y / n2) && l2.leq(x % n2, y % n2);
      });
}

std::string to_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  os << "  edge [arrowhead=none];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(l.key(i)) << "\"];\n";
  }
  for (auto [lo, hi] : l.hasse_edges()) {
    os << "  n" << lo << " -> n" << hi << ";\n";
  }
  // Pin elements of equal height to one row; rank 0 is the bottom.
  auto h = l.heights();
  std::size_t maxh = *std::max_element(h.begin(), h.end());
  for (std::size_t level = 0; level <= maxh; ++level) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (h[i] == level) os << " n" << i << ";";
    }
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncploc
