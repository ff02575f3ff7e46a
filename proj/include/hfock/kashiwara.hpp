#pragma once

// Kashiwara crystals: the Û(sl_e) good-box rule and the dual Û(sl_ℓ) action
// transported through level-rank duality.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "abacus.hpp"
#include "core.hpp"

namespace hfock {

enum class Algebra { Ue, Ul };

/// Content reduced into {0, …, modulus − 1}.
inline int residue(const Box& box, const ChargedMultipartition& cmp, int modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  return pos_mod(content(box, cmp), modulus);
}

enum class BoxKind { Addable, Removable };

struct SignatureEntry {
  Box box;
  BoxKind kind;

  bool operator==(const SignatureEntry&) const = default;
};

/// The i-boxes of a multipartition read in strictly decreasing box order.
struct SignatureWord {
  int residue = 0;
  std::vector<SignatureEntry> entries;

  bool operator==(const SignatureWord&) const = default;
};

inline SignatureWord signature(const ChargedMultipartition& cmp, int i) {
  if (i < 0 || i >= cmp.e) throw std::invalid_argument("residue out of range");
  SignatureWord word{i, {}};
  for (int j = 1; j <= cmp.level(); ++j) {
    const Partition& p = cmp.component(j);
    for (auto [a, b] : addable_cells(p)) {
      const Box box{a, b, j};
      if (residue(box, cmp, cmp.e) == i) word.entries.push_back({box, BoxKind::Addable});
    }
    for (auto [a, b] : removable_cells(p)) {
      const Box box{a, b, j};
      if (residue(box, cmp, cmp.e) == i) word.entries.push_back({box, BoxKind::Removable});
    }
  }
  std::sort(word.entries.begin(), word.entries.end(), [&](const auto& x, const auto& y) {
    return compare_boxes(x.box, y.box, cmp) == std::strong_ordering::greater;
  });
  for (std::size_t k = 1; k < word.entries.size(); ++k) {
    if (compare_boxes(word.entries[k - 1].box, word.entries[k].box, cmp) == std::strong_ordering::equal) {
      throw std::logic_error("two i-boxes share content and component");
    }
  }
  return word;
}

/// Cancels adjacent (Addable, Removable) pairs until none remain.
inline SignatureWord reduce(const SignatureWord& word) {
  SignatureWord out{word.residue, {}};
  for (const auto& entry : word.entries) {
    if (entry.kind == BoxKind::Removable && !out.entries.empty() &&
        out.entries.back().kind == BoxKind::Addable) {
      out.entries.pop_back();
    } else {
      out.entries.push_back(entry);
    }
  }
  return out;
}

inline ChargedMultipartition with_box_added(const ChargedMultipartition& cmp, const Box& box) {
  ChargedMultipartition out = cmp;
  auto& p = out.components[static_cast<std::size_t>(box.component - 1)];
  p = add_cell(p, box.row);
  return out;
}

inline ChargedMultipartition with_box_removed(const ChargedMultipartition& cmp, const Box& box) {
  ChargedMultipartition out = cmp;
  auto& p = out.components[static_cast<std::size_t>(box.component - 1)];
  p = remove_cell(p, box.row);
  return out;
}

/// Adds the greatest surviving addable i-box.
inline std::optional<ChargedMultipartition> f_tilde(const ChargedMultipartition& cmp, int i) {
  const SignatureWord w = reduce(signature(cmp, i));
  for (const auto& entry : w.entries) {
    if (entry.kind == BoxKind::Addable) return with_box_added(cmp, entry.box);
  }
  return std::nullopt;
}

/// Removes the least surviving removable i-box.
inline std::optional<ChargedMultipartition> e_tilde(const ChargedMultipartition& cmp, int i) {
  const SignatureWord w = reduce(signature(cmp, i));
  for (auto it = w.entries.rbegin(); it != w.entries.rend(); ++it) {
    if (it->kind == BoxKind::Removable) return with_box_removed(cmp, it->box);
  }
  return std::nullopt;
}

/// f̃_j of Û(sl_ℓ), 0 ≤ j < ℓ. The multicharge of the result may differ from
/// the input; only the total charge is preserved.
inline std::optional<ChargedMultipartition> dual_f_tilde(const ChargedMultipartition& cmp, int j) {
  if (j < 0 || j >= cmp.level()) throw std::invalid_argument("dual residue out of range");
  auto r = f_tilde(level_rank_dual(cmp), j);
  if (!r) return std::nullopt;
  return level_rank_dual_inverse(*r);
}

inline std::optional<ChargedMultipartition> dual_e_tilde(const ChargedMultipartition& cmp, int j) {
  if (j < 0 || j >= cmp.level()) throw std::invalid_argument("dual residue out of range");
  auto r = e_tilde(level_rank_dual(cmp), j);
  if (!r) return std::nullopt;
  return level_rank_dual_inverse(*r);
}

inline int residue_count(const ChargedMultipartition& cmp, Algebra algebra) {
  return algebra == Algebra::Ue ? cmp.e : cmp.level();
}

inline std::optional<ChargedMultipartition> lowering(const ChargedMultipartition& cmp, Algebra algebra, int i) {
  return algebra == Algebra::Ue ? f_tilde(cmp, i) : dual_f_tilde(cmp, i);
}

inline std::optional<ChargedMultipartition> raising(const ChargedMultipartition& cmp, Algebra algebra, int i) {
  return algebra == Algebra::Ue ? e_tilde(cmp, i) : dual_e_tilde(cmp, i);
}

inline bool is_hw(const ChargedMultipartition& cmp, Algebra algebra) {
  for (int i = 0; i < residue_count(cmp, algebra); ++i) {
    if (raising(cmp, algebra, i)) return false;
  }
  return true;
}

/// The highest weight vertex above `cmp` and the raising residues applied.
struct HwPath {
  ChargedMultipartition vertex;
  std::vector<int> residues;
};

/// Greedy raising, smallest residue first. Applying the lowering operators
/// for `residues` in reverse order from `vertex` gives back the input.
inline HwPath hw_path(const ChargedMultipartition& cmp, Algebra algebra) {
  HwPath out{cmp, {}};
  const int n = residue_count(cmp, algebra);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (auto r = raising(out.vertex, algebra, i)) {
        out.vertex = std::move(*r);
        out.residues.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return out;
}

/// Lowers `vertex` along `residues` read backwards.
inline std::optional<ChargedMultipartition> replay_lowering(ChargedMultipartition vertex,
                                                            const std::vector<int>& residues,
                                                            Algebra algebra) {
  for (auto it = residues.rbegin(); it != residues.rend(); ++it) {
    auto r = lowering(vertex, algebra, *it);
    if (!r) return std::nullopt;
    vertex = std::move(*r);
  }
  return vertex;
}

struct CrystalEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  int label = 0;
  Algebra algebra = Algebra::Ue;

  bool operator==(const CrystalEdge&) const = default;
};

/// Nodes in breadth-first discovery order (children by increasing label),
/// with `depth[k]` the distance of node k from the seed.
struct CrystalGraph {
  std::vector<ChargedMultipartition> nodes;
  std::vector<int> depth;
  std::vector<CrystalEdge> edges;

  std::optional<std::size_t> find(const ChargedMultipartition& x) const {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] == x) return k;
    }
    return std::nullopt;
  }
};

inline CrystalGraph crystal_graph(const ChargedMultipartition& seed, Algebra algebra, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  CrystalGraph g;
  std::map<ChargedMultipartition, std::size_t> index;
  std::deque<std::size_t> queue;
  g.nodes.push_back(seed);
  g.depth.push_back(0);
  index.emplace(seed, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (g.depth[u] >= depth) continue;
    const ChargedMultipartition x = g.nodes[u];
    for (int i = 0; i < residue_count(x, algebra); ++i) {
      auto y = lowering(x, algebra, i);
      if (!y) continue;
      auto [it, inserted] = index.emplace(*y, g.nodes.size());
      if (inserted) {
        g.nodes.push_back(*y);
        g.depth.push_back(g.depth[u] + 1);
        queue.push_back(it->second);
      }
      g.edges.push_back({u, it->second, i, algebra});
    }
  }
  return g;
}

}  // namespace hfock
