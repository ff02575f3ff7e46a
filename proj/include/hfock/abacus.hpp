#pragma once

// Abaci of charged multipartitions, the relabelings τ and τ̇, and the twisted
// level-rank duality τ̇ ∘ (·)′ ∘ τ⁻¹.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"

namespace hfock {

/// Floor division and nonnegative remainder for a positive divisor.
constexpr int floor_div(int a, int b) noexcept { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
constexpr int pos_mod(int a, int b) noexcept { return ((a % b) + b) % b; }

/// A charged partition of level one, |λ, s⟩.
struct ChargedPartition {
  Partition partition;
  int charge = 0;

  auto operator<=>(const ChargedPartition&) const = default;
  bool operator==(const ChargedPartition&) const = default;
};

/// Bead configuration on a number of runners.
///
/// Normal form: `tail()` is the lowest empty position over all runners, every
/// position strictly below it is occupied on every runner, and `beads(j)`
/// lists the occupied positions ≥ tail on runner j in decreasing order.
class Abacus {
 public:
  Abacus() = default;

  /// `beads[j-1]` holds positions ≥ `tail` on runner j; everything below
  /// `tail` is taken as occupied. The result is renormalized.
  Abacus(std::vector<std::vector<int>> beads, int tail) {
    if (beads.empty()) throw std::invalid_argument("abacus needs at least one runner");
    for (auto& runner : beads) {
      std::sort(runner.begin(), runner.end(), std::greater<>());
      if (std::adjacent_find(runner.begin(), runner.end()) != runner.end()) {
        throw std::invalid_argument("abacus runner holds a repeated bead");
      }
      if (!runner.empty() && runner.back() < tail) {
        throw std::invalid_argument("bead below the tail bound");
      }
    }
    normalize(std::move(beads), tail);
  }

  int runners() const noexcept { return static_cast<int>(beads_.size()); }
  int tail() const noexcept { return tail_; }
  const std::vector<int>& beads(int j) const { return beads_.at(static_cast<std::size_t>(j - 1)); }

  bool contains(int j, int d) const {
    if (d < tail_) return true;
    const auto& r = beads(j);
    return std::find(r.begin(), r.end(), d) != r.end();
  }

  /// s_j = #(beads ≥ t on runner j) + t − 1, for any t ≤ tail.
  int runner_charge(int j, int t) const {
    if (t > tail_) throw std::invalid_argument("threshold above the tail bound");
    const auto& r = beads(j);
    return static_cast<int>(r.size()) + (tail_ - t) + t - 1;
  }
  int runner_charge(int j) const { return runner_charge(j, tail_); }

  int total_charge() const {
    int s = 0;
    for (int j = 1; j <= runners(); ++j) s += runner_charge(j);
    return s;
  }

  /// Largest occupied position on any runner (tail − 1 if none above it).
  int max_position() const {
    int m = tail_ - 1;
    for (const auto& r : beads_) {
      if (!r.empty()) m = std::max(m, r.front());
    }
    return m;
  }

  bool operator==(const Abacus&) const = default;

 private:
  void normalize(std::vector<std::vector<int>> beads, int tail) {
    int lowest_empty = tail;
    bool first = true;
    for (const auto& r : beads) {
      int gap = tail;
      for (auto it = r.rbegin(); it != r.rend() && *it == gap; ++it) ++gap;
      lowest_empty = first ? gap : std::min(lowest_empty, gap);
      first = false;
    }
    for (auto& r : beads) std::erase_if(r, [&](int d) { return d < lowest_empty; });
    beads_ = std::move(beads);
    tail_ = lowest_empty;
  }

  std::vector<std::vector<int>> beads_;
  int tail_ = 1;
};

namespace detail {

inline std::vector<int> runner_beads(const Partition& p, int s, int low) {
  std::vector<int> out;
  for (std::size_t k = 1;; ++k) {
    const int d = p.part(k) + s - static_cast<int>(k) + 1;
    if (d < low) break;
    out.push_back(d);
  }
  return out;
}

inline Partition runner_partition(const std::vector<int>& beads, int s) {
  std::vector<int> parts;
  parts.reserve(beads.size());
  for (std::size_t k = 1; k <= beads.size(); ++k) {
    parts.push_back(beads[k - 1] - s + static_cast<int>(k) - 1);
  }
  return Partition(std::move(parts));
}

/// Occupied positions ≥ low on runner j (low ≤ tail).
inline std::vector<int> beads_from(const Abacus& a, int j, int low) {
  std::vector<int> out = a.beads(j);
  for (int d = a.tail() - 1; d >= low; --d) out.push_back(d);
  return out;
}

}  // namespace detail

/// A(λ, s) = {(j, λ^j_k + s_j − k + 1)}.
inline Abacus to_abacus(const ChargedMultipartition& cmp) {
  int low = 0;
  for (int j = 1; j <= cmp.level(); ++j) {
    const int lj = cmp.charge_of(j) - static_cast<int>(cmp.component(j).length()) + 1;
    low = (j == 1) ? lj : std::min(low, lj);
  }
  std::vector<std::vector<int>> beads;
  for (int j = 1; j <= cmp.level(); ++j) {
    beads.push_back(detail::runner_beads(cmp.component(j), cmp.charge_of(j), low));
  }
  return Abacus(std::move(beads), low);
}

inline Abacus to_abacus(const ChargedPartition& cp) {
  const int low = cp.charge - static_cast<int>(cp.partition.length()) + 1;
  return Abacus({detail::runner_beads(cp.partition, cp.charge, low)}, low);
}

/// Reads a multipartition of level `a.runners()` off the abacus.
inline ChargedMultipartition from_abacus(const Abacus& a, int e) {
  std::vector<Partition> comps;
  std::vector<int> s;
  for (int j = 1; j <= a.runners(); ++j) {
    const int sj = a.runner_charge(j);
    comps.push_back(detail::runner_partition(a.beads(j), sj));
    s.push_back(sj);
  }
  return {std::move(comps), std::move(s), e};
}

inline ChargedPartition from_abacus_level_one(const Abacus& a) {
  if (a.runners() != 1) throw std::invalid_argument("expected a one-runner abacus");
  const int s = a.runner_charge(1);
  return {detail::runner_partition(a.beads(1), s), s};
}

/// τ(1, c): writing −c = −z·eℓ + (y−1)e + (x−1) with 1 ≤ y ≤ ℓ, 1 ≤ x ≤ e,
/// the bead goes to runner y at position −(x−1) + e·z.
inline std::pair<int, int> tau_position(int c, int e, int l) {
  const int n = -c;
  const int z = -floor_div(n, e * l);
  const int r = n + z * e * l;
  const int y = r / e + 1;
  const int x = r % e + 1;
  return {y, -(x - 1) + e * z};
}

/// Inverse of tau_position.
inline int tau_inverse_position(int j, int d, int e, int l) {
  const int x_minus_one = pos_mod(-d, e);
  const int z = (d + x_minus_one) / e;
  return z * e * l - (j - 1) * e - x_minus_one;
}

/// τ̇(1, c) = ((−c mod e) + 1, −⌊−c/e⌋). Independent of ℓ.
inline std::pair<int, int> taudot_position(int c, int e, [[maybe_unused]] int l = 0) {
  return {pos_mod(-c, e) + 1, -floor_div(-c, e)};
}

/// τ̇⁻¹(j, d) = (1, −(j−1) + e·d).
inline int taudot_inverse_position(int j, int d, int e) { return -(j - 1) + e * d; }

/// One-runner abacus → ℓ-runner abacus, beadwise τ.
inline Abacus tau_map(const Abacus& a1, int e, int l) {
  if (a1.runners() != 1) throw std::invalid_argument("tau_map expects a one-runner abacus");
  // Rectangles of eℓ consecutive positions map onto rectangles of e positions
  // on every runner, so a full block below z0·eℓ maps to full runners below z0·e.
  const int z0 = floor_div(a1.tail() - 1, e * l);
  std::vector<std::vector<int>> beads(static_cast<std::size_t>(l));
  for (int c : detail::beads_from(a1, 1, z0 * e * l + 1)) {
    const auto [j, d] = tau_position(c, e, l);
    beads[static_cast<std::size_t>(j - 1)].push_back(d);
  }
  return Abacus(std::move(beads), z0 * e + 1);
}

inline Abacus tau_inverse_map(const Abacus& a, int e) {
  const int l = a.runners();
  const int z0 = floor_div(a.tail() - 1, e);
  std::vector<int> beads;
  for (int j = 1; j <= l; ++j) {
    for (int d : detail::beads_from(a, j, z0 * e + 1)) beads.push_back(tau_inverse_position(j, d, e, l));
  }
  return Abacus({std::move(beads)}, z0 * e * l + 1);
}

/// One-runner abacus → e-runner abacus, beadwise τ̇ (the e-quotient folding).
inline Abacus taudot_map(const Abacus& a1, int e) {
  if (a1.runners() != 1) throw std::invalid_argument("taudot_map expects a one-runner abacus");
  const int z0 = floor_div(a1.tail() - 1, e);
  std::vector<std::vector<int>> beads(static_cast<std::size_t>(e));
  for (int c : detail::beads_from(a1, 1, z0 * e + 1)) {
    const auto [j, d] = taudot_position(c, e);
    beads[static_cast<std::size_t>(j - 1)].push_back(d);
  }
  return Abacus(std::move(beads), z0 + 1);
}

inline Abacus taudot_inverse_map(const Abacus& a) {
  const int e = a.runners();
  std::vector<int> beads;
  for (int j = 1; j <= e; ++j) {
    for (int d : a.beads(j)) beads.push_back(taudot_inverse_position(j, d, e));
  }
  return Abacus({std::move(beads)}, e * (a.tail() - 1) + 1);
}

/// |λ, s⟩ ↦ |λ, s⟩ through τ⁻¹.
inline ChargedPartition to_level_one(const ChargedMultipartition& cmp) {
  return from_abacus_level_one(tau_inverse_map(to_abacus(cmp), cmp.e));
}

inline ChargedMultipartition from_level_one(const ChargedPartition& cp, int e, int l) {
  return from_abacus(tau_map(to_abacus(cp), e, l), e);
}

inline ChargedPartition conjugate_level_one(const ChargedPartition& cp) {
  return {conjugate_partition(cp.partition), -cp.charge};
}

/// Twisted level-rank duality τ̇ ∘ (·)′ ∘ τ⁻¹.
///
/// The result has e components and carries ℓ as its modulus, so the
/// Kashiwara rule applied to it is the Û(sl_ℓ) rule. Total charge is negated.
inline ChargedMultipartition level_rank_dual(const ChargedMultipartition& cmp) {
  const ChargedPartition conj = conjugate_level_one(to_level_one(cmp));
  return from_abacus(taudot_map(to_abacus(conj), cmp.e), cmp.level());
}

/// Inverse of level_rank_dual: τ ∘ (·)′ ∘ τ̇⁻¹.
inline ChargedMultipartition level_rank_dual_inverse(const ChargedMultipartition& dual) {
  const int e = dual.level();
  const int l = dual.e;
  const ChargedPartition one = from_abacus_level_one(taudot_inverse_map(to_abacus(dual)));
  return from_level_one(conjugate_level_one(one), e, l);
}

/// Conjugation on the abacus: (j, d) is occupied in the result iff
/// (ℓ+1−j, 1−d) is empty in `a`.
inline Abacus rotate_conjugate(const Abacus& a) {
  const int l = a.runners();
  const int top = a.max_position();
  const int new_tail = 1 - top;
  std::vector<std::vector<int>> beads(static_cast<std::size_t>(l));
  for (int j = 1; j <= l; ++j) {
    for (int d = new_tail; d <= 1 - a.tail(); ++d) {
      if (!a.contains(l + 1 - j, 1 - d)) beads[static_cast<std::size_t>(j - 1)].push_back(d);
    }
  }
  return Abacus(std::move(beads), new_tail);
}

}  // namespace hfock
