#include "ncploc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "ncploc/correspondence.hpp"
#include "ncploc/errors.hpp"
#include "ncploc/json_io.hpp"
#include "ncploc/lattice.hpp"
#include "ncploc/ncp.hpp"
#include "ncploc/supports.hpp"

namespace ncploc {

namespace {

using Clock = std::chrono::steady_clock;

std::string counted(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

bool bits_leq(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// Deterministic masks straight from the engine stream; no distribution
// involved, so the sample is identical on every platform.
std::vector<std::uint64_t> random_masks(std::size_t count, std::uint64_t full,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = rng() & full;
  return out;
}

// Birkhoff-style oracle: a finite lattice is non-distributive iff some
// 5-element subset closed under meet and join is a pentagon or a diamond.
bool has_n5_or_m3(const FiniteLattice& l) {
  std::size_t n = l.size();
  std::vector<std::size_t> pick;
  auto closed = [&](const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!std::count(s.begin(), s.end(), l.meet(s[i], s[j]))) return false;
        if (!std::count(s.begin(), s.end(), l.join(s[i], s[j]))) return false;
      }
    }
    return true;
  };
  auto shaped = [&](const std::vector<std::size_t>& s) {
    std::size_t bot = s[0], top = s[0];
    for (std::size_t x : s) {
      bot = l.meet(bot, x);
      top = l.join(top, x);
    }
    std::vector<std::size_t> mids;
    for (std::size_t x : s) {
      if (x != bot && x != top) mids.push_back(x);
    }
    if (mids.size() != 3) return false;
    int comparable = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (l.leq(mids[i], mids[j]) || l.leq(mids[j], mids[i])) ++comparable;
      }
    }
    return comparable <= 1;  // 0 = diamond, 1 = pentagon
  };
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (pick.size() == 5) return closed(pick) && shaped(pick);
    for (std::size_t x = next; x < n; ++x) {
      pick.push_back(x);
      if (self(self, x + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::vector<PropertyResult> run_verification(const Space& space,
                                             const VerifyOptions& opt) {
  std::vector<PropertyResult> results;
  auto check = [&results](const std::string& name, auto&& body) {
    PropertyResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
      auto [ok, detail] = body();
      r.pass = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  };
  using Outcome = std::pair<bool, std::string>;

  const int n = space.points();
  const std::size_t m = space.interval_count();
  const auto intervals = enumerate_intervals(space);

  check("interval-enumeration", [&]() -> Outcome {
    if (intervals.size() != m) return {false, "count mismatch"};
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (i > 0 && !(intervals[i - 1] < intervals[i])) {
        return {false, "not strictly increasing at index " + std::to_string(i)};
      }
      if (interval_index(space, intervals[i]) != i ||
          !(interval_at(space, i) == intervals[i])) {
        return {false, "index round trip failed at " + std::to_string(i)};
      }
    }
    return {true, counted(m, "intervals")};
  });

  check("box-self-membership", [&]() -> Outcome {
    for (Interval y : intervals) {
      auto p = box_parity(space, y, y);
      if (!p || *p != Parity::even) return {false, "base not even in own box"};
      auto box = maximal_box(space, y);
      bool found = false;
      for (auto [z, q] : box.members) {
        if (z == y && q == Parity::even) found = true;
      }
      if (!found) return {false, "base missing from own box"};
    }
    return {true, counted(m, "boxes")};
  });

  check("box-case-exclusivity", [&]() -> Outcome {
    for (Interval y : intervals) {
      for (Interval z : intervals) {
        bool covers_left = z.a <= y.a && y.a <= z.b && z.b <= y.b;
        bool overhangs_right = y.a < z.a && y.b < z.b && z.a - 1 <= y.b;
        if (covers_left && overhangs_right) {
          return {false, "both cases hold for a pair"};
        }
        bool member = box_parity(space, y, z).has_value();
        if (member != (covers_left || overhangs_right)) {
          return {false, "membership disagrees with the case split"};
        }
      }
    }
    return {true, counted(m * m, "pairs")};
  });

  check("box-double-counting", [&]() -> Outcome {
    std::size_t by_base = 0, by_member = 0;
    for (Interval y : intervals) {
      by_base += maximal_box(space, y).members.size();
    }
    for (Interval z : intervals) {
      for (Interval y : intervals) {
        if (box_parity(space, y, z)) ++by_member;
      }
    }
    if (by_base != by_member) return {false, "totals disagree"};
    return {true, counted(by_base, "memberships")};
  });

  const bool tuples_ok = n <= opt.max_points && n <= kMaxMaskPoints;
  if (!tuples_ok) return results;

  const auto masks = box_masks(space);
  const std::uint64_t full = m >= 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << m) - 1;
  const auto valid = enumerate_valid_plocal(space, opt.max_points);

  check("catalan-count", [&]() -> Outcome {
    auto expected = catalan(n + 1);
    if (expected != valid.size()) {
      return {false, "got " + std::to_string(valid.size()) + " valid tuples"};
    }
    return {true, counted(valid.size(), "valid tuples")};
  });

  if (m <= static_cast<std::size_t>(opt.brute_force_bits)) {
    check("brute-force-agreement", [&]() -> Outcome {
      auto oracle = brute_force_valid_plocal(space, opt.brute_force_bits);
      if (oracle.size() != valid.size()) {
        return {false, "sizes differ: " + std::to_string(oracle.size()) +
                           " vs " + std::to_string(valid.size())};
      }
      for (std::size_t i = 0; i < oracle.size(); ++i) {
        if (!(oracle[i] == valid[i])) {
          return {false, "lists differ at index " + std::to_string(i)};
        }
      }
      return {true, counted(oracle.size(), "tuples, identical lists")};
    });
  }

  // Exhaustive when the subset space is small; fixed-seed sample otherwise.
  std::vector<std::uint64_t> probe_masks;
  if (m <= 12) {
    probe_masks.resize(std::size_t{1} << m);
    for (std::size_t v = 0; v < probe_masks.size(); ++v) probe_masks[v] = v;
  } else {
    probe_masks = random_masks(opt.random_samples, full, opt.seed);
  }

  check("closure-fixpoint", [&]() -> Outcome {
    for (std::uint64_t gens : probe_masks) {
      std::vector<Interval> g;
      for (std::size_t i = 0; i < m; ++i) {
        if ((gens >> i) & 1) g.push_back(intervals[i]);
      }
      if (!is_valid_plocal(tuple_from_generators(space, g))) {
        return {false, "generated tuple not valid"};
      }
    }
    return {true, counted(probe_masks.size(), "generator sets")};
  });

  check("factored-form-agreement", [&]() -> Outcome {
    std::size_t probed = 0;
    auto agree = [&](std::uint64_t bits) {
      PLocalTuple t(space, bits);
      ++probed;
      return is_valid_plocal(t) == is_valid_plocal_factored(t);
    };
    if (m <= 16) {
      for (std::uint64_t bits = 0; bits <= full; ++bits) {
        if (!agree(bits)) return {false, "forms disagree"};
      }
    } else {
      for (const PLocalTuple& t : valid) {
        if (!agree(t.bits())) return {false, "forms disagree on a valid tuple"};
      }
      for (std::uint64_t bits : random_masks(opt.random_samples, full,
                                             opt.seed + 1)) {
        if (!agree(bits)) return {false, "forms disagree"};
      }
    }
    return {true, counted(probed, "tuples")};
  });

  check("duality-round-trip", [&]() -> Outcome {
    for (const PLocalTuple& t : valid) {
      if (!(support_from_generators(space, generator_set(t)) == t)) {
        return {false, "round trip moved a valid tuple"};
      }
    }
    for (std::uint64_t gens : probe_masks) {
      std::vector<Interval> g;
      for (std::size_t i = 0; i < m; ++i) {
        if ((gens >> i) & 1) g.push_back(intervals[i]);
      }
      auto recovered = generator_set(tuple_from_generators(space, g));
      for (Interval y : g) {
        if (!std::count(recovered.begin(), recovered.end(), y)) {
          return {false, "generator dropped by the round trip"};
        }
      }
    }
    return {true, counted(valid.size(), "tuples and ") +
                      counted(probe_masks.size(), "generator sets")};
  });

  check("generator-interval-closure", [&]() -> Outcome {
    for (const PLocalTuple& t : valid) {
      auto gens = generator_set(t);
      std::set<Interval> v(gens.begin(), gens.end());
      for (Interval x : gens) {
        for (Interval y : gens) {
          int lo = std::max(x.a, y.a), hi = std::min(x.b, y.b);
          if (lo <= hi && !v.count(Interval(lo, hi))) {
            return {false, "intersection escaped the generator set"};
          }
          if (lo <= hi + 1 &&
              !v.count(Interval(std::min(x.a, y.a), std::max(x.b, y.b)))) {
            return {false, "union escaped the generator set"};
          }
          // x minus y, when it stays an interval
          if (y.a <= x.a && y.b >= x.a && y.b < x.b &&
              !v.count(Interval(y.b + 1, x.b))) {
            return {false, "difference escaped the generator set"};
          }
          if (y.b >= x.b && y.a > x.a && y.a <= x.b &&
              !v.count(Interval(x.a, y.a - 1))) {
            return {false, "difference escaped the generator set"};
          }
        }
      }
    }
    return {true, counted(valid.size(), "generator sets")};
  });

  check("triangle-inclusions", [&]() -> Outcome {
    std::size_t triples = 0;
    for (const PLocalTuple& t : valid) {
      for (int x1 = 1; x1 <= n + 1; ++x1) {
        for (int x2 = x1 + 1; x2 <= n + 1; ++x2) {
          for (int x3 = x2 + 1; x3 <= n + 1; ++x3) {
            bool left = t.test(Interval(x1, x2 - 1));
            bool right = t.test(Interval(x2, x3 - 1));
            bool whole = t.test(Interval(x1, x3 - 1));
            ++triples;
            if ((left && !(right || whole)) || (right && !(left || whole)) ||
                (whole && !(left || right))) {
              return {false, "a side escaped the union of the other two"};
            }
          }
        }
      }
    }
    return {true, counted(triples, "triangle checks")};
  });

  if (n == 2) {
    check("one-prime-triples", [&]() -> Outcome {
      std::vector<PrimeLabel> universe{PrimeLabel(2)};
      std::size_t valid_count = 0;
      for (std::uint64_t bits = 0; bits < 8; ++bits) {
        SupportTuple t(space, universe, {bits});
        bool whole = (bits >> interval_index(space, Interval(1, 2))) & 1;
        bool left = (bits >> interval_index(space, Interval(1, 1))) & 1;
        bool right = (bits >> interval_index(space, Interval(2, 2))) & 1;
        bool each_in_union = (!left || right || whole) &&
                             (!right || left || whole) &&
                             (!whole || left || right);
        if (is_valid(t) != each_in_union) {
          return {false, "validity differs from the union condition"};
        }
        if (is_valid(t)) ++valid_count;
      }
      if (valid_count != 5) {
        return {false, "expected 5 valid triples, got " +
                           std::to_string(valid_count)};
      }
      return {true, "8 triples, 5 valid"};
    });
  }

  const int k = n + 1;
  const auto parts = enumerate_ncp(k);
  const bool pairs_ok = valid.size() <= 500;

  check("partition-count", [&]() -> Outcome {
    if (catalan(k) != parts.size() || parts.size() != valid.size()) {
      return {false, "partition count off"};
    }
    return {true, counted(parts.size(), "noncrossing partitions")};
  });

  if (pairs_ok) {
    check("refinement-order-axioms", [&]() -> Outcome {
      std::size_t c = parts.size();
      std::vector<std::vector<char>> leq(c, std::vector<char>(c, 0));
      for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
          leq[i][j] = refinement_leq(parts[i], parts[j]);
        }
      }
      for (std::size_t i = 0; i < c; ++i) {
        if (!leq[i][i]) return {false, "not reflexive"};
        for (std::size_t j = 0; j < c; ++j) {
          if (i != j && leq[i][j] && leq[j][i]) {
            return {false, "not antisymmetric"};
          }
          if (!leq[i][j]) continue;
          for (std::size_t l = 0; l < c; ++l) {
            if (leq[j][l] && !leq[i][l]) return {false, "not transitive"};
          }
        }
      }
      return {true, counted(c * c, "pairs")};
    });
  }

  check("refinement-bounds", [&]() -> Outcome {
    std::vector<int> everything(k);
    for (int x = 1; x <= k; ++x) everything[x - 1] = x;
    auto bottom = NoncrossingPartition::from_blocks(k, {everything});
    std::vector<std::vector<int>> single;
    for (int x = 1; x <= k; ++x) single.push_back({x});
    auto top = NoncrossingPartition::from_blocks(k, std::move(single));
    for (const auto& p : parts) {
      if (!refinement_leq(bottom, p) || !refinement_leq(p, top)) {
        return {false, "bounds violated"};
      }
    }
    return {true, counted(parts.size(), "partitions between the bounds")};
  });

  check("kreweras-double-rotation", [&]() -> Outcome {
    for (const auto& p : parts) {
      if (!(kreweras_complement(kreweras_complement(p)) == p.rotated(-1))) {
        return {false, "double complement is not the -1 rotation"};
      }
    }
    return {true, counted(parts.size(), "partitions")};
  });

  if (pairs_ok) {
    check("kreweras-order-reversing", [&]() -> Outcome {
      std::vector<NoncrossingPartition> kc;
      kc.reserve(parts.size());
      for (const auto& p : parts) kc.push_back(kreweras_complement(p));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (refinement_leq(parts[i], parts[j]) !=
              refinement_leq(kc[j], kc[i])) {
            return {false, "order not reversed"};
          }
        }
      }
      return {true, counted(parts.size() * parts.size(), "pairs")};
    });
  }

  if (valid.size() <= 150) {
    check("kreweras-coarsest", [&]() -> Outcome {
      auto union_noncrossing = [&](const NoncrossingPartition& black,
                                   const NoncrossingPartition& primed) {
        std::vector<std::vector<int>> combined;
        for (const auto& block : black.blocks()) {
          std::vector<int> b;
          for (int x : block) b.push_back(2 * x - 1);
          combined.push_back(std::move(b));
        }
        for (const auto& block : primed.blocks()) {
          std::vector<int> b;
          for (int x : block) b.push_back(2 * x);
          combined.push_back(std::move(b));
        }
        return is_noncrossing(2 * k, combined);
      };
      for (const auto& p : parts) {
        auto complement = kreweras_complement(p);
        if (!union_noncrossing(p, complement)) {
          return {false, "complement crosses its input"};
        }
        for (const auto& candidate : parts) {
          if (union_noncrossing(p, candidate) &&
              !refinement_leq(complement, candidate)) {
            return {false, "a compatible partition escaped the complement"};
          }
        }
      }
      return {true, counted(parts.size() * parts.size(), "candidate checks")};
    });
  }

  check("psi-bijection", [&]() -> Outcome {
    std::vector<NoncrossingPartition> images;
    images.reserve(valid.size());
    for (const PLocalTuple& t : valid) {
      auto p = psi(t);
      if (!(psi_inverse(p) == t)) return {false, "psi round trip moved a tuple"};
      images.push_back(std::move(p));
    }
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (!(sorted == parts)) {
      return {false, "image is not exactly the noncrossing partitions"};
    }
    for (const auto& p : parts) {
      if (!(psi(psi_inverse(p)) == p)) {
        return {false, "psi round trip moved a partition"};
      }
    }
    return {true, counted(valid.size(), "tuples matched to partitions")};
  });

  if (pairs_ok) {
    check("psi-order-isomorphism", [&]() -> Outcome {
      std::vector<NoncrossingPartition> images;
      images.reserve(valid.size());
      for (const PLocalTuple& t : valid) images.push_back(psi(t));
      for (std::size_t i = 0; i < valid.size(); ++i) {
        for (std::size_t j = 0; j < valid.size(); ++j) {
          if (bits_leq(valid[i].bits(), valid[j].bits()) !=
              refinement_leq(images[i], images[j])) {
            return {false, "psi is not order preserving"};
          }
        }
      }
      return {true, counted(valid.size() * valid.size(), "pairs")};
    });
  }

  check("two-block-dictionary", [&]() -> Outcome {
    for (Interval y : intervals) {
      auto d = interval_to_two_block(space, y);
      if (!(psi(tuple_from_generators(space, {y})) == d.as_partition())) {
        return {false, "box tuple and two-block partition disagree"};
      }
    }
    return {true, counted(m, "intervals")};
  });

  if (valid.size() <= 150) {
    check("separating-decompositions", [&]() -> Outcome {
      std::size_t checked = 0;
      for (const auto& p : parts) {
        for (Interval y : intervals) {
          if (p.same_block(y.a, y.b + 1)) continue;
          Interval cd = separating_decomposition(p, y.a, y.b);
          ++checked;
          if (!box_parity(space, cd, y)) {
            return {false, "separating interval's box misses the input"};
          }
          auto two = interval_to_two_block(space, cd).as_partition();
          if (!refinement_leq(two, p)) {
            return {false, "separating decomposition does not coarsen"};
          }
          for (const auto& member : maximal_box(space, cd).members) {
            Interval z = member.first;
            if (p.same_block(z.a, z.b + 1)) {
              return {false, "a box member collapses in the partition"};
            }
          }
        }
      }
      return {true, counted(checked, "walks")};
    });
  }

  if (pairs_ok) {
    const auto lattice = plocal_lattice(space, opt.max_points);

    check("lattice-well-formed", [&]() -> Outcome {
      if (lattice.size() != valid.size()) return {false, "size mismatch"};
      if (lattice.key(lattice.bottom()) != to_json(valid.front()).dump() ||
          lattice.key(lattice.top()) != to_json(valid.back()).dump()) {
        return {false, "bounds are not the empty and full tuples"};
      }
      // Reachability through covers must reproduce the order.
      std::size_t c = lattice.size();
      std::vector<std::vector<char>> reach(c, std::vector<char>(c, 0));
      for (std::size_t i = 0; i < c; ++i) reach[i][i] = 1;
      auto edges = lattice.hasse_edges();
      for (std::size_t round = 0; round < c; ++round) {
        bool changed = false;
        for (auto [lo, hi] : edges) {
          for (std::size_t j = 0; j < c; ++j) {
            if (reach[hi][j] && !reach[lo][j]) {
              reach[lo][j] = 1;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
          if (static_cast<bool>(reach[i][j]) != lattice.leq(i, j)) {
            return {false, "cover closure disagrees with the order"};
          }
        }
      }
      return {true, counted(edges.size(), "cover edges")};
    });

    check("meet-join-formulas", [&]() -> Outcome {
      for (std::size_t i = 0; i < valid.size(); ++i) {
        for (std::size_t j = 0; j < valid.size(); ++j) {
          auto meet_key = lattice.key(lattice.meet(i, j));
          if (meet_key != to_json(tuple_meet(valid[i], valid[j])).dump()) {
            return {false, "engine meet differs from the closure formula"};
          }
          auto join_key = lattice.key(lattice.join(i, j));
          if (join_key != to_json(tuple_join(valid[i], valid[j])).dump()) {
            return {false, "engine join differs from the union formula"};
          }
        }
      }
      return {true, counted(valid.size() * valid.size(), "pairs")};
    });

    check("lattice-laws", [&]() -> Outcome {
      auto samples = random_masks(1000, ~std::uint64_t{0}, opt.seed + 2);
      std::size_t c = lattice.size();
      for (std::uint64_t s : samples) {
        std::size_t x = static_cast<std::size_t>(s % c);
        std::size_t y = static_cast<std::size_t>((s >> 16) % c);
        if (lattice.meet(x, y) != lattice.meet(y, x) ||
            lattice.join(x, y) != lattice.join(y, x)) {
          return {false, "not commutative"};
        }
        if (lattice.meet(x, lattice.join(x, y)) != x ||
            lattice.join(x, lattice.meet(x, y)) != x) {
          return {false, "absorption failed"};
        }
      }
      return {true, "1000 sampled pairs"};
    });

    if (valid.size() <= 150) {
      const auto nc = ncp_lattice(k);

      check("nc-lattice-isomorphism", [&]() -> Outcome {
        auto iso = are_isomorphic(lattice, nc);
        if (!iso) return {false, "no isomorphism found"};
        return {true, counted(lattice.size(), "elements matched")};
      });

      check("self-duality", [&]() -> Outcome {
        if (!is_self_dual(nc)) return {false, "no dual automorphism found"};
        return {true, counted(nc.size(), "elements")};
      });

      check("distributivity", [&]() -> Outcome {
        auto witness = lattice.distributivity_witness();
        bool sublattice = has_n5_or_m3(lattice);
        if (witness.has_value() != sublattice) {
          return {false, "witness search and sublattice search disagree"};
        }
        if (n == 1 && witness) return {false, "two-chain came out skew"};
        if (n >= 2 && !witness) {
          return {false, "expected a distributivity failure"};
        }
        if (witness) {
          auto [x, y, z] = *witness;
          if (lattice.meet(x, lattice.join(y, z)) ==
              lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
            return {false, "witness does not actually violate the law"};
          }
        }
        return {true, witness ? "non-distributive, witnessed twice"
                              : "distributive, confirmed twice"};
      });
    }
  }

  if (n <= 3) {
    const std::vector<PrimeLabel> universe{PrimeLabel(2), PrimeLabel(3)};

    check("product-enumeration", [&]() -> Outcome {
      auto tuples = enumerate_valid_support_tuples(space, universe);
      if (tuples.size() != valid.size() * valid.size()) {
        return {false, "expected the square of the tuple count"};
      }
      for (const SupportTuple& t : tuples) {
        if (!is_valid(t)) return {false, "an enumerated tuple is invalid"};
      }
      return {true, counted(tuples.size(), "support tuples")};
    });

    check("product-power-isomorphism", [&]() -> Outcome {
      auto product = product_lattice(space, universe);
      auto single = plocal_lattice(space, opt.max_points);
      auto square = direct_product(single, single);
      if (!are_isomorphic(product, square)) {
        return {false, "product lattice is not the square"};
      }
      return {true, counted(product.size(), "elements matched")};
    });
  }

  return results;
}

}  // namespace ncploc
