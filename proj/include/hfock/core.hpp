#pragma once

// Partitions, charged multipartitions, boxes and contents.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfock {

/// A partition stored as its weakly decreasing list of positive parts.
///
/// Construction normalizes: zero parts are dropped and the parts are sorted
/// decreasingly, so `Partition{1, 0, 2}` is the partition (2,1). Negative
/// parts are rejected.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// k-th part, 1-based; 0 beyond the length.
  int part(std::size_t k) const noexcept {
    return (k >= 1 && k <= parts_.size()) ? parts_[k - 1] : 0;
  }

  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  void normalize() {
    for (int p : parts_) {
      if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    }
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  std::vector<int> parts_;
};

/// Transpose of the Young diagram.
inline Partition conjugate_partition(const Partition& lambda) {
  std::vector<int> out;
  const int width = lambda.part(1);
  out.reserve(static_cast<std::size_t>(width));
  for (int column = 1; column <= width; ++column) {
    int height = 0;
    for (int p : lambda.parts()) {
      if (p >= column) ++height;
    }
    out.push_back(height);
  }
  return Partition(std::move(out));
}

/// Multiset union of parts: the reordering of (λ1, μ1, λ2, μ2, …).
inline Partition add_partitions(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts = lambda.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Partition(std::move(parts));
}

/// Every part repeated k times.
inline Partition scale_partition(int k, const Partition& lambda) {
  if (k < 0) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<int> parts;
  for (int p : lambda.parts()) parts.insert(parts.end(), static_cast<std::size_t>(k), p);
  return Partition(std::move(parts));
}

/// Usual partwise sum (λ1+μ1, λ2+μ2, …); conjugate to add_partitions.
inline Partition partwise_sum(const Partition& lambda, const Partition& mu) {
  const std::size_t n = std::max(lambda.length(), mu.length());
  std::vector<int> parts(n);
  for (std::size_t k = 1; k <= n; ++k) parts[k - 1] = lambda.part(k) + mu.part(k);
  return Partition(std::move(parts));
}

/// Splits λ = λ̃ + e·π with λ̃ e-regular (no part repeated e or more times).
///
/// A part of multiplicity m contributes m mod e copies to λ̃ and m div e
/// copies to π, so the split is unique.
inline std::pair<Partition, Partition> e_regular_decompose(const Partition& lambda, int e) {
  if (e < 2) throw std::invalid_argument("e must be at least 2");
  std::vector<int> regular;
  std::vector<int> quotient;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<int>(j - i);
    regular.insert(regular.end(), static_cast<std::size_t>(mult % e), parts[i]);
    quotient.insert(quotient.end(), static_cast<std::size_t>(mult / e), parts[i]);
    i = j;
  }
  return {Partition(std::move(regular)), Partition(std::move(quotient))};
}

inline bool is_e_regular(const Partition& lambda, int e) {
  return e_regular_decompose(lambda, e).second.empty();
}

/// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// A box (row a, column b, component j); all indices 1-based.
struct Box {
  int row = 1;
  int column = 1;
  int component = 1;

  auto operator<=>(const Box&) const = default;
  bool operator==(const Box&) const = default;
};

/// An ℓ-tuple of partitions with an ℓ-tuple of charges, plus the modulus e.
///
/// The level ℓ is the number of components. Level-rank duals are stored as
/// values of the same type: their level is the original e and their modulus
/// is the original ℓ.
struct ChargedMultipartition {
  std::vector<Partition> components;
  std::vector<int> charge;
  int e = 2;

  ChargedMultipartition() = default;
  ChargedMultipartition(std::vector<Partition> comps, std::vector<int> s, int modulus)
      : components(std::move(comps)), charge(std::move(s)), e(modulus) {
    validate();
  }

  /// The empty multipartition with the given charge.
  static ChargedMultipartition empty(std::vector<int> s, int modulus) {
    std::vector<Partition> comps(s.size());
    return {std::move(comps), std::move(s), modulus};
  }

  int level() const noexcept { return static_cast<int>(components.size()); }
  int total_charge() const noexcept { return std::accumulate(charge.begin(), charge.end(), 0); }

  int size() const noexcept {
    int n = 0;
    for (const auto& p : components) n += p.size();
    return n;
  }

  const Partition& component(int j) const {
    check_component(j);
    return components[static_cast<std::size_t>(j - 1)];
  }

  int charge_of(int j) const {
    check_component(j);
    return charge[static_cast<std::size_t>(j - 1)];
  }

  bool contains(const Box& box) const {
    if (box.component < 1 || box.component > level() || box.row < 1 || box.column < 1) return false;
    return component(box.component).part(static_cast<std::size_t>(box.row)) >= box.column;
  }

  void validate() const {
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (components.size() < 2) throw std::invalid_argument("level must be at least 2");
    if (components.size() != charge.size()) {
      throw std::invalid_argument("number of components and charge entries differ");
    }
  }

  auto operator<=>(const ChargedMultipartition&) const = default;
  bool operator==(const ChargedMultipartition&) const = default;

 private:
  void check_component(int j) const {
    if (j < 1 || j > level()) throw std::out_of_range("component index out of range");
  }
};

/// fc(γ) = b − a + s_j.
inline int content(const Box& box, const ChargedMultipartition& cmp) {
  return box.column - box.row + cmp.charge_of(box.component);
}

/// Transposes and reverses the components; negates and reverses the charge.
inline ChargedMultipartition conjugate_charged(const ChargedMultipartition& cmp) {
  const auto l = static_cast<std::size_t>(cmp.level());
  std::vector<Partition> comps(l);
  std::vector<int> s(l);
  for (std::size_t j = 0; j < l; ++j) {
    comps[j] = conjugate_partition(cmp.components[l - 1 - j]);
    s[j] = -cmp.charge[l - 1 - j];
  }
  return {std::move(comps), std::move(s), cmp.e};
}

/// γ > γ′ iff fc(γ) > fc(γ′), or the contents agree and γ has the smaller
/// component index. Boxes with equal (content, component) compare equal.
inline std::strong_ordering compare_boxes(const Box& lhs, const Box& rhs,
                                          const ChargedMultipartition& cmp) {
  const int cl = content(lhs, cmp);
  const int cr = content(rhs, cmp);
  if (cl != cr) return cl <=> cr;
  return rhs.component <=> lhs.component;
}

/// Smallest j0 with |s_j − s_j0| ≥ |λ| for all j ≠ j0, if any.
inline std::optional<int> is_asymptotic(const ChargedMultipartition& cmp) {
  const int n = cmp.size();
  for (int j0 = 1; j0 <= cmp.level(); ++j0) {
    bool ok = true;
    for (int j = 1; j <= cmp.level() && ok; ++j) {
      if (j != j0 && std::abs(cmp.charge_of(j) - cmp.charge_of(j0)) < n) ok = false;
    }
    if (ok) return j0;
  }
  return std::nullopt;
}

/// Addable boxes of a single partition, top row first.
inline std::vector<std::pair<int, int>> addable_cells(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  const auto n = static_cast<int>(p.length());
  for (int r = 1; r <= n + 1; ++r) {
    const int pr = p.part(static_cast<std::size_t>(r));
    if (r == 1 || p.part(static_cast<std::size_t>(r - 1)) > pr) out.emplace_back(r, pr + 1);
  }
  return out;
}

/// Removable boxes of a single partition, top row first.
inline std::vector<std::pair<int, int>> removable_cells(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  const auto n = static_cast<int>(p.length());
  for (int r = 1; r <= n; ++r) {
    const int pr = p.part(static_cast<std::size_t>(r));
    if (p.part(static_cast<std::size_t>(r + 1)) < pr) out.emplace_back(r, pr);
  }
  return out;
}

/// Adds one box at the end of row `row`; the result must still be a partition.
inline Partition add_cell(const Partition& p, int row) {
  std::vector<int> parts = p.parts();
  const auto r = static_cast<std::size_t>(row);
  if (r > parts.size() + 1 || r < 1) throw std::invalid_argument("row is not addable");
  if (r == parts.size() + 1) {
    parts.push_back(1);
  } else {
    if (r > 1 && parts[r - 2] == parts[r - 1]) throw std::invalid_argument("row is not addable");
    ++parts[r - 1];
  }
  return Partition(std::move(parts));
}

/// Removes the last box of row `row`; the result must still be a partition.
inline Partition remove_cell(const Partition& p, int row) {
  std::vector<int> parts = p.parts();
  const auto r = static_cast<std::size_t>(row);
  if (r < 1 || r > parts.size() || p.part(r + 1) == parts[r - 1]) {
    throw std::invalid_argument("row is not removable");
  }
  --parts[r - 1];
  return Partition(std::move(parts));
}

inline std::string to_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

inline std::string to_string(const ChargedMultipartition& cmp) {
  std::string out = "|(";
  for (int j = 1; j <= cmp.level(); ++j) {
    if (j > 1) out += ",";
    out += to_string(cmp.component(j));
  }
  out += "),(";
  for (int j = 1; j <= cmp.level(); ++j) {
    if (j > 1) out += ",";
    out += std::to_string(cmp.charge_of(j));
  }
  return out + ")>";
}

}  // namespace hfock
