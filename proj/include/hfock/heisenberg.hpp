#pragma once

// Vertical e-strips, good strips and the Heisenberg crystal operators.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abacus.hpp"
#include "core.hpp"
#include "kashiwara.hpp"

namespace hfock {

/// e frontier boxes with consecutive decreasing contents and weakly
/// decreasing component indices.
struct VerticalStrip {
  std::vector<Box> boxes;

  auto operator<=>(const VerticalStrip&) const = default;
  bool operator==(const VerticalStrip&) const = default;
};

inline std::vector<int> strip_contents(const VerticalStrip& x, const ChargedMultipartition& cmp) {
  std::vector<int> out;
  for (const Box& b : x.boxes) out.push_back(content(b, cmp));
  return out;
}

/// Lexicographic extension of the box order.
inline std::strong_ordering compare_strips(const VerticalStrip& x, const VerticalStrip& y,
                                           const ChargedMultipartition& cmp) {
  const std::size_t n = std::min(x.boxes.size(), y.boxes.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = compare_boxes(x.boxes[k], y.boxes[k], cmp);
    if (c != std::strong_ordering::equal) return c;
  }
  return x.boxes.size() <=> y.boxes.size();
}

inline bool is_admissible(const VerticalStrip& x, const ChargedMultipartition& cmp) {
  if (static_cast<int>(x.boxes.size()) != cmp.e) return false;
  for (std::size_t k = 0; k < x.boxes.size(); ++k) {
    const Box& b = x.boxes[k];
    if (b.component < 1 || b.component > cmp.level() || b.row < 1) return false;
    if (b.column != cmp.component(b.component).part(static_cast<std::size_t>(b.row)) + 1) return false;
    if (k > 0) {
      const Box& prev = x.boxes[k - 1];
      if (content(b, cmp) != content(prev, cmp) - 1 || b.component > prev.component) return false;
    }
  }
  return true;
}

/// The boxes (a, λ^j_a + 1, j) for every component j and row a ≤ R.
inline std::vector<Box> frontier(const ChargedMultipartition& cmp, int row_bound) {
  if (row_bound < 1) throw std::invalid_argument("row bound must be positive");
  std::vector<Box> out;
  for (int j = 1; j <= cmp.level(); ++j) {
    for (int a = 1; a <= row_bound; ++a) {
      out.push_back({a, cmp.component(j).part(static_cast<std::size_t>(a)) + 1, j});
    }
  }
  return out;
}

namespace detail {

/// Frontier boxes of content ≥ cmin. Contents strictly decrease down each
/// component, so the scan stops at the first row below cmin.
inline std::vector<Box> frontier_above(const ChargedMultipartition& cmp, int cmin) {
  std::vector<Box> out;
  for (int j = 1; j <= cmp.level(); ++j) {
    for (int a = 1;; ++a) {
      const Box b{a, cmp.component(j).part(static_cast<std::size_t>(a)) + 1, j};
      if (content(b, cmp) < cmin) break;
      out.push_back(b);
    }
  }
  return out;
}

/// All admissible strips built from `boxes` whose first box has content ≥
/// cmin, sorted strictly decreasing.
inline std::vector<VerticalStrip> strips_from(const ChargedMultipartition& cmp, const std::vector<Box>& boxes,
                                              int cmin) {
  std::map<int, std::vector<Box>> by_content;
  for (const Box& b : boxes) by_content[content(b, cmp)].push_back(b);
  std::vector<VerticalStrip> out;
  std::vector<Box> current;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) == cmp.e) {
      out.push_back({current});
      return;
    }
    const Box last = current.back();
    auto it = by_content.find(content(last, cmp) - 1);
    if (it == by_content.end()) return;
    for (const Box& b : it->second) {
      if (b.component <= last.component) {
        current.push_back(b);
        extend();
        current.pop_back();
      }
    }
  };
  for (const Box& b : boxes) {
    if (content(b, cmp) < cmin) continue;
    current = {b};
    extend();
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return compare_strips(x, y, cmp) == std::strong_ordering::greater;
  });
  return out;
}

inline int top_frontier_content(const ChargedMultipartition& cmp) {
  int top = content({1, cmp.component(1).part(1) + 1, 1}, cmp);
  for (int j = 2; j <= cmp.level(); ++j) top = std::max(top, content({1, cmp.component(j).part(1) + 1, j}, cmp));
  return top;
}

}  // namespace detail

/// Admissible strips with all boxes in rows ≤ R, strictly decreasing.
inline std::vector<VerticalStrip> admissible_strips(const ChargedMultipartition& cmp, int row_bound) {
  const std::vector<Box> boxes = frontier(cmp, row_bound);
  int lowest = detail::top_frontier_content(cmp);
  for (const Box& b : boxes) lowest = std::min(lowest, content(b, cmp));
  return detail::strips_from(cmp, boxes, lowest);
}

/// The first k good strips.
///
/// Strips are ordered by their first box, so those whose first content is at
/// least some bound form an initial segment of the full decreasing list. The
/// greedy selection is run on growing segments until it yields k strips.
inline std::vector<VerticalStrip> good_strips(const ChargedMultipartition& cmp, int k) {
  if (k < 0) throw std::invalid_argument("strip count must be nonnegative");
  if (k == 0) return {};
  const int top = detail::top_frontier_content(cmp);
  for (int window = cmp.e;; window *= 2) {
    const int cmin = top - window;
    const auto strips = detail::strips_from(cmp, detail::frontier_above(cmp, cmin - cmp.e + 1), cmin);
    std::vector<VerticalStrip> selected;
    std::set<std::pair<int, int>> used;
    for (const auto& x : strips) {
      const bool disjoint = std::none_of(x.boxes.begin(), x.boxes.end(), [&](const Box& b) {
        return used.contains({b.row, b.component});
      });
      if (!disjoint) continue;
      for (const Box& b : x.boxes) used.insert({b.row, b.component});
      selected.push_back(x);
      if (static_cast<int>(selected.size()) == k) return selected;
    }
  }
}

/// The multipartition with the boxes of `x` added, if it is one.
inline std::optional<ChargedMultipartition> try_add_strip(const ChargedMultipartition& cmp,
                                                          const VerticalStrip& x) {
  if (!is_admissible(x, cmp)) return std::nullopt;
  std::vector<std::vector<int>> parts;
  for (const auto& p : cmp.components) parts.push_back(p.parts());
  for (const Box& b : x.boxes) {
    auto& row = parts[static_cast<std::size_t>(b.component - 1)];
    if (static_cast<int>(row.size()) < b.row) row.resize(static_cast<std::size_t>(b.row), 0);
    ++row[static_cast<std::size_t>(b.row - 1)];
  }
  for (const auto& row : parts) {
    if (!std::is_sorted(row.begin(), row.end(), std::greater<>())) return std::nullopt;
  }
  ChargedMultipartition out = cmp;
  for (std::size_t j = 0; j < parts.size(); ++j) out.components[j] = Partition(parts[j]);
  return out;
}

inline ChargedMultipartition add_strip(const ChargedMultipartition& cmp, const VerticalStrip& x) {
  auto r = try_add_strip(cmp, x);
  if (!r) throw std::logic_error("good vertical strip is not addable");
  return *r;
}

/// Adds σ_k times the k-th good strip, k ascending, recomputing the good
/// strips after every single addition.
inline ChargedMultipartition tc(const ChargedMultipartition& cmp, const Partition& sigma) {
  ChargedMultipartition x = cmp;
  for (std::size_t k = 1; k <= sigma.length(); ++k) {
    for (int t = 0; t < sigma.part(k); ++t) {
      const auto strips = good_strips(x, static_cast<int>(k));
      x = add_strip(x, strips.back());
    }
  }
  return x;
}

struct KappaResult {
  Partition kappa;
  ChargedMultipartition doubly_hw;
  /// Raising residues applied to reach the Ue, then the Ul highest weight.
  std::vector<int> ue_path;
  std::vector<int> ul_path;
};

/// Raises to Ue-highest weight, then to Ul-highest weight.
inline KappaResult doubly_hw(const ChargedMultipartition& cmp) {
  HwPath ue = hw_path(cmp, Algebra::Ue);
  HwPath ul = hw_path(ue.vertex, Algebra::Ul);
  if (!is_hw(ul.vertex, Algebra::Ue)) throw std::logic_error("Ul raising left the Ue highest weight set");
  return {Partition{}, std::move(ul.vertex), std::move(ue.residues), std::move(ul.residues)};
}

/// κ at a doubly highest weight vertex: the part encoded by each good strip,
/// up to the first zero.
inline Partition kappa_at_doubly_hw(const ChargedMultipartition& hw) {
  // Disjoint strips encoding positive parts use distinct nonempty rows.
  const int bound = hw.size() / hw.e + 1;
  const auto strips = good_strips(hw, bound);
  std::vector<int> parts;
  for (const auto& x : strips) {
    const int part = x.boxes.front().column - 1;
    for (const Box& b : x.boxes) {
      if (b.column - 1 != part) throw std::logic_error("period encodes a non-constant part");
    }
    if (part == 0) return Partition(std::move(parts));
    parts.push_back(part);
  }
  throw std::logic_error("period sequence does not terminate");
}

inline KappaResult kappa(const ChargedMultipartition& cmp) {
  KappaResult r = doubly_hw(cmp);
  r.kappa = kappa_at_doubly_hw(r.doubly_hw);
  return r;
}

/// Lowers the doubly highest weight vertex `hw` back along the paths of `k`.
inline ChargedMultipartition replay(const ChargedMultipartition& hw, const KappaResult& k) {
  auto x = replay_lowering(hw, k.ul_path, Algebra::Ul);
  if (x) x = replay_lowering(*x, k.ue_path, Algebra::Ue);
  if (!x) throw std::logic_error("lowering path is not defined on the shifted vertex");
  return *x;
}

/// Shifts the beads of period k (the k-th good strip at `hw`) by
/// amounts[k-1] steps, one step at a time, processing the periods in
/// `order`. Empty if a step would land on a bead outside the period.
inline std::optional<ChargedMultipartition> shift_periods(const ChargedMultipartition& hw,
                                                          const std::vector<int>& amounts,
                                                          const std::vector<std::size_t>& order) {
  const auto periods = good_strips(hw, static_cast<int>(amounts.size()));
  const Abacus a = to_abacus(hw);
  int low = a.tail();
  int travel = 0;
  for (const auto& x : periods) {
    for (const Box& b : x.boxes) low = std::min(low, content(b, hw));
  }
  for (int m : amounts) travel += std::abs(m);
  low -= travel + 2;

  std::vector<std::set<int>> runners;
  for (int j = 1; j <= a.runners(); ++j) {
    const auto beads = detail::beads_from(a, j, low);
    runners.emplace_back(beads.begin(), beads.end());
  }
  for (std::size_t k : order) {
    const int amount = amounts[k];
    const int step = amount > 0 ? 1 : -1;
    std::set<std::pair<int, int>> cur;
    for (const Box& b : periods[k].boxes) cur.insert({b.component, content(b, hw)});
    for (int t = 0; t < std::abs(amount); ++t) {
      std::set<std::pair<int, int>> next;
      for (auto [j, d] : cur) next.insert({j, d + step});
      for (auto [j, d] : next) {
        if (!cur.contains({j, d}) && runners[static_cast<std::size_t>(j - 1)].contains(d)) return std::nullopt;
      }
      for (auto [j, d] : cur) runners[static_cast<std::size_t>(j - 1)].erase(d);
      for (auto [j, d] : next) runners[static_cast<std::size_t>(j - 1)].insert(d);
      cur = std::move(next);
    }
  }
  std::vector<std::vector<int>> beads;
  for (const auto& r : runners) beads.emplace_back(r.begin(), r.end());
  return from_abacus(Abacus(std::move(beads), low), hw.e);
}

/// The period route for t̃b_σ: raise to doubly highest weight, shift period
/// k right by σ_k (k ascending), lower back.
inline ChargedMultipartition b_sigma_by_periods(const ChargedMultipartition& cmp, const Partition& sigma) {
  const KappaResult k = doubly_hw(cmp);
  std::vector<std::size_t> order(sigma.length());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto shifted = shift_periods(k.doubly_hw, sigma.parts(), order);
  if (!shifted) throw std::logic_error("right period shift blocked");
  return replay(*shifted, k);
}

/// t̃b_{−σ}; empty when it annihilates.
inline std::optional<ChargedMultipartition> b_minus(const ChargedMultipartition& cmp, const Partition& sigma) {
  if (sigma.empty()) return cmp;
  const KappaResult k = kappa(cmp);
  if (sigma.length() > k.kappa.length()) return std::nullopt;
  std::vector<int> amounts;
  for (std::size_t i = 1; i <= sigma.length(); ++i) {
    if (sigma.part(i) > k.kappa.part(i)) return std::nullopt;
    amounts.push_back(-sigma.part(i));
  }
  std::vector<std::size_t> order(amounts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  auto shifted = shift_periods(k.doubly_hw, amounts, order);
  if (!shifted) return std::nullopt;
  // The shift must land on a doubly highest weight vertex whose periods
  // still encode a partition, namely κ − σ.
  std::vector<int> rest;
  for (std::size_t i = 1; i <= k.kappa.length(); ++i) rest.push_back(k.kappa.part(i) - sigma.part(i));
  if (!std::is_sorted(rest.rbegin(), rest.rend())) return std::nullopt;
  if (!is_hw(*shifted, Algebra::Ue) || !is_hw(*shifted, Algebra::Ul)) return std::nullopt;
  if (kappa_at_doubly_hw(*shifted) != Partition(rest)) return std::nullopt;
  return replay(*shifted, k);
}

/// t̃b_{1,c}: if κ has an addable box of content c in row r, adds the r-th
/// good strip.
inline std::optional<ChargedMultipartition> b_one(const ChargedMultipartition& cmp, int c) {
  const Partition kap = kappa(cmp).kappa;
  for (auto [row, column] : addable_cells(kap)) {
    if (column - row == c) return add_strip(cmp, good_strips(cmp, row).back());
  }
  return std::nullopt;
}

/// t̃b_{−1,d}: if κ has a removable box of content d in row r, shifts the
/// r-th period one step left at the doubly highest weight vertex.
inline std::optional<ChargedMultipartition> b_minus_one(const ChargedMultipartition& cmp, int d) {
  const KappaResult k = kappa(cmp);
  for (auto [row, column] : removable_cells(k.kappa)) {
    if (column - row != d) continue;
    std::vector<int> amounts(static_cast<std::size_t>(row), 0);
    amounts.back() = -1;
    auto shifted = shift_periods(k.doubly_hw, amounts, {static_cast<std::size_t>(row - 1)});
    if (!shifted) throw std::logic_error("left shift of a removable period blocked");
    return replay(*shifted, k);
  }
  return std::nullopt;
}

inline bool is_h_hw(const ChargedMultipartition& cmp) { return kappa(cmp).kappa.empty(); }

struct HCrystalEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  int label = 0;

  bool operator==(const HCrystalEdge&) const = default;
};

/// A truncated Heisenberg crystal component. `index[k]` is the partition
/// labelling node k: σ for the component built from tc, κ for the one built
/// by breadth-first search.
struct HCrystalGraph {
  std::vector<ChargedMultipartition> nodes;
  std::vector<Partition> index;
  std::vector<int> depth;
  std::vector<HCrystalEdge> edges;

  std::optional<std::size_t> find(const ChargedMultipartition& x) const {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] == x) return k;
    }
    return std::nullopt;
  }
};

/// Nodes tc(seed, σ) for |σ| ≤ depth, by rank and then lexicographically
/// decreasing σ; edges σ → σ + box labelled by the content of the box.
inline HCrystalGraph h_crystal_component(const ChargedMultipartition& seed, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (!is_h_hw(seed)) throw std::invalid_argument("seed is not Heisenberg highest weight");
  HCrystalGraph g;
  std::map<Partition, std::size_t> at;
  for (int m = 0; m <= depth; ++m) {
    for (const Partition& sigma : partitions_of(m)) {
      at.emplace(sigma, g.nodes.size());
      g.nodes.push_back(tc(seed, sigma));
      g.index.push_back(sigma);
      g.depth.push_back(m);
    }
  }
  for (std::size_t u = 0; u < g.index.size(); ++u) {
    if (g.depth[u] == depth) continue;
    const Partition& sigma = g.index[u];
    auto cells = addable_cells(sigma);
    std::sort(cells.begin(), cells.end(), [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
    for (auto [row, column] : cells) {
      g.edges.push_back({u, at.at(add_cell(sigma, row)), column - row});
    }
  }
  return g;
}

/// Breadth-first closure of b̃_{1,c} from `seed`; children by increasing c.
inline HCrystalGraph h_crystal_graph(const ChargedMultipartition& seed, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  HCrystalGraph g;
  std::map<ChargedMultipartition, std::size_t> at;
  std::deque<std::size_t> queue;
  g.nodes.push_back(seed);
  g.index.push_back(kappa(seed).kappa);
  g.depth.push_back(0);
  at.emplace(seed, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (g.depth[u] >= depth) continue;
    const ChargedMultipartition x = g.nodes[u];
    auto cells = addable_cells(g.index[u]);
    std::sort(cells.begin(), cells.end(), [](auto p, auto q) { return p.second - p.first < q.second - q.first; });
    for (auto [row, column] : cells) {
      const int c = column - row;
      auto y = b_one(x, c);
      if (!y) throw std::logic_error("b_one undefined on an addable content of kappa");
      auto [it, inserted] = at.emplace(*y, g.nodes.size());
      if (inserted) {
        g.nodes.push_back(*y);
        g.index.push_back(kappa(*y).kappa);
        g.depth.push_back(g.depth[u] + 1);
        queue.push_back(it->second);
      }
      g.edges.push_back({u, it->second, c});
    }
  }
  return g;
}

}  // namespace hfock
