#include "ncploc/ncp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ncploc/detail/union_find.hpp"
#include "ncploc/errors.hpp"

namespace ncploc {

namespace {

// Labels elements by block, throwing unless blocks partition {1..k}.
std::vector<std::size_t> label_blocks(int k,
                                      const std::vector<std::vector<int>>& blocks) {
  if (k < 1) {
    throw std::invalid_argument("partition needs at least one point, got k=" +
                                std::to_string(k));
  }
  std::vector<std::size_t> label(static_cast<std::size_t>(k) + 1, SIZE_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw std::invalid_argument("partition has an empty block");
    }
    for (int x : blocks[b]) {
      if (x < 1 || x > k) {
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " outside {1.." + std::to_string(k) + "}");
      }
      if (label[x] != SIZE_MAX) {
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " appears in two blocks");
      }
      label[x] = b;
    }
  }
  for (int x = 1; x <= k; ++x) {
    if (label[x] == SIZE_MAX) {
      throw std::invalid_argument("element " + std::to_string(x) +
                                  " missing from the partition");
    }
  }
  return label;
}

// Stack scan: walking 1..k, blocks must nest.  A revisited block that is not
// on top of the stack has been interleaved with the one above it.
bool labels_noncrossing(int k, const std::vector<std::size_t>& label) {
  std::vector<char> seen(label.size() > 0 ? label.size() : 1, 0);
  std::vector<int> last(label.size(), 0);  // largest element per block
  for (int x = 1; x <= k; ++x) {
    last[label[x]] = x;
  }
  std::vector<std::size_t> stack;
  for (int x = 1; x <= k; ++x) {
    std::size_t b = label[x];
    if (!seen[b]) {
      seen[b] = 1;
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      return false;
    }
    if (last[b] == x) stack.pop_back();
  }
  return true;
}

}  // namespace

bool is_noncrossing(int k, const std::vector<std::vector<int>>& blocks) {
  return labels_noncrossing(k, label_blocks(k, blocks));
}

NoncrossingPartition NoncrossingPartition::from_blocks(
    int k, std::vector<std::vector<int>> blocks) {
  auto label = label_blocks(k, blocks);
  if (!labels_noncrossing(k, label)) {
    throw std::invalid_argument("blocks cross");
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  NoncrossingPartition p;
  p.k_ = k;
  p.blocks_ = std::move(blocks);
  p.block_of_.assign(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t b = 0; b < p.blocks_.size(); ++b) {
    for (int x : p.blocks_[b]) p.block_of_[x] = b;
  }
  return p;
}

std::size_t NoncrossingPartition::block_index_of(int x) const {
  if (x < 1 || x > k_) {
    throw std::invalid_argument("element " + std::to_string(x) +
                                " outside {1.." + std::to_string(k_) + "}");
  }
  return block_of_[x];
}

NoncrossingPartition NoncrossingPartition::rotated(int shift) const {
  std::vector<std::vector<int>> blocks = blocks_;
  for (auto& b : blocks) {
    for (int& x : b) {
      int r = (x - 1 + shift) % k_;
      if (r < 0) r += k_;
      x = r + 1;
    }
  }
  return from_blocks(k_, std::move(blocks));
}

bool refinement_leq(const NoncrossingPartition& tau,
                    const NoncrossingPartition& sigma) {
  if (tau.k() != sigma.k()) {
    throw std::invalid_argument("partitions of different sets: k=" +
                                std::to_string(tau.k()) + " vs k=" +
                                std::to_string(sigma.k()));
  }
  // tau <= sigma iff each block of sigma sits inside one block of tau.
  for (const auto& block : sigma.blocks()) {
    std::size_t home = tau.block_index_of(block.front());
    for (int x : block) {
      if (tau.block_index_of(x) != home) return false;
    }
  }
  return true;
}

std::vector<NoncrossingPartition> enumerate_ncp(int k, int max_points) {
  if (k < 1) {
    throw std::invalid_argument("partition needs at least one point, got k=" +
                                std::to_string(k));
  }
  if (k > max_points) {
    throw BudgetError("partition enumeration limited to " +
                      std::to_string(max_points) + " points, got " +
                      std::to_string(k));
  }
  std::vector<NoncrossingPartition> out;
  // Restricted growth strings: r[0]=0, r[i] <= 1+max(r[0..i-1]).  Blocks in
  // label order are already sorted by minimum.
  std::vector<std::size_t> label(static_cast<std::size_t>(k) + 1, 0);
  auto emit = [&]() {
    std::size_t nblocks =
        *std::max_element(label.begin() + 1, label.end()) + 1;
    if (!labels_noncrossing(k, label)) return;
    std::vector<std::vector<int>> blocks(nblocks);
    for (int x = 1; x <= k; ++x) blocks[label[x]].push_back(x);
    out.push_back(NoncrossingPartition::from_blocks(k, std::move(blocks)));
  };
  auto rec = [&](auto&& self, int x, std::size_t used) -> void {
    if (x > k) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= used; ++v) {
      label[x] = v;
      self(self, x + 1, v == used ? used + 1 : used);
    }
  };
  label[1] = 0;
  rec(rec, 2, 1);
  std::sort(out.begin(), out.end());
  return out;
}

boost::multiprecision::cpp_int catalan(int k) {
  if (k < 1) {
    throw std::invalid_argument("catalan defined here for k >= 1, got " +
                                std::to_string(k));
  }
  boost::multiprecision::cpp_int c = 1;  // C_1
  for (int i = 2; i <= k; ++i) {
    c = c * 2 * (2 * i - 1) / (i + 1);
  }
  return c;
}

NoncrossingPartition kreweras_complement(const NoncrossingPartition& sigma) {
  int k = sigma.k();
  // Points interleaved on a 2k-cycle: x at 2x-1, x' at 2x.  The chord
  // (i', j') stays clear of a block B iff B never has an element inside
  // (i, j] and another outside.
  detail::UnionFind uf(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      bool crossed = false;
      for (const auto& block : sigma.blocks()) {
        bool inside = false, outside = false;
        for (int x : block) {
          if (i < x && x <= j) {
            inside = true;
          } else {
            outside = true;
          }
        }
        if (inside && outside) {
          crossed = true;
          break;
        }
      }
      if (!crossed) uf.unite(i, j);
    }
  }
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    classes[uf.find(i)].push_back(i);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& c : classes) {
    if (!c.empty()) blocks.push_back(std::move(c));
  }
  if (!is_noncrossing(k, blocks)) {
    throw std::logic_error("kreweras complement came out crossing");
  }
  auto result = NoncrossingPartition::from_blocks(k, std::move(blocks));
  // The union on the 2k-cycle must itself be noncrossing.
  std::vector<std::vector<int>> combined;
  for (const auto& block : sigma.blocks()) {
    std::vector<int> b;
    for (int x : block) b.push_back(2 * x - 1);
    combined.push_back(std::move(b));
  }
  for (const auto& block : result.blocks()) {
    std::vector<int> b;
    for (int x : block) b.push_back(2 * x);
    combined.push_back(std::move(b));
  }
  if (!is_noncrossing(2 * k, combined)) {
    throw std::logic_error("kreweras complement crosses its input");
  }
  return result;
}

}  // namespace ncploc
