#pragma once

// Symmetric-function data (z_π, Kostka numbers), the fermionic wedge space at
// q = 1 with its boson action, and explicit symmetric polynomials.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "core.hpp"

namespace hfock {

using Rational = boost::rational<std::int64_t>;

/// Π_k k^{α_k} α_k!, with α_k the multiplicity of k in π.
inline std::int64_t z_value(const Partition& pi) {
  std::int64_t z = 1;
  std::map<int, int> mult;
  for (int p : pi.parts()) ++mult[p];
  for (auto [k, a] : mult) {
    for (int t = 1; t <= a; ++t) z *= static_cast<std::int64_t>(k) * t;
  }
  return z;
}

namespace detail {

/// Partitions μ ⊆ σ with σ/μ a horizontal strip of n boxes.
inline std::vector<Partition> remove_horizontal_strips(const Partition& sigma, int n) {
  std::vector<Partition> out;
  const std::size_t len = sigma.length();
  std::vector<int> mu(len);
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
    if (r == len) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    const int hi = sigma.part(r + 1);
    const int lo = sigma.part(r + 2);
    for (int take = 0; take <= std::min(left, hi - lo); ++take) {
      mu[r] = hi - take;
      rec(r + 1, left - take);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace detail

/// Semistandard tableaux of shape σ and content π, counted by peeling off
/// the horizontal strip of the largest entry.
inline std::int64_t kostka(const Partition& sigma, const Partition& pi) {
  if (sigma.size() != pi.size()) return 0;
  static thread_local std::map<std::pair<Partition, Partition>, std::int64_t> memo;
  if (pi.empty()) return 1;
  auto key = std::make_pair(sigma, pi);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<int> rest = pi.parts();
  const int last = rest.back();
  rest.pop_back();
  const Partition tail(rest);
  std::int64_t total = 0;
  for (const Partition& mu : detail::remove_horizontal_strips(sigma, last)) {
    if (mu.length() <= rest.size()) total += kostka(mu, tail);
  }
  memo.emplace(std::move(key), total);
  return total;
}

/// Kostka matrix of one degree and its integer inverse. Rows and columns
/// follow `basis`, which is lexicographically decreasing, so both matrices
/// are upper unitriangular.
struct KostkaTable {
  int degree = 0;
  std::vector<Partition> basis;
  std::vector<std::vector<std::int64_t>> k;
  std::vector<std::vector<std::int64_t>> k_inverse;

  std::size_t position(const Partition& p) const {
    auto it = std::find(basis.begin(), basis.end(), p);
    if (it == basis.end()) throw std::invalid_argument("partition of the wrong degree");
    return static_cast<std::size_t>(it - basis.begin());
  }
};

inline KostkaTable kostka_table(int n) {
  KostkaTable t;
  t.degree = n;
  t.basis = partitions_of(n);
  const std::size_t m = t.basis.size();
  t.k.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t.k[i][j] = kostka(t.basis[i], t.basis[j]);
  }
  t.k_inverse.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t r = col + 1; r-- > 0;) {
      std::int64_t acc = (r == col) ? 1 : 0;
      for (std::size_t q = r + 1; q <= col; ++q) acc -= t.k[r][q] * t.k_inverse[q][col];
      if (t.k[r][r] != 1) throw std::logic_error("Kostka matrix is not unitriangular");
      t.k_inverse[r][col] = acc;
    }
  }
  return t;
}

inline std::int64_t inverse_kostka(const Partition& sigma, const Partition& pi) {
  if (sigma.size() != pi.size()) return 0;
  const KostkaTable t = kostka_table(sigma.size());
  return t.k_inverse[t.position(sigma)][t.position(pi)];
}

/// Sign and sorted key of a finite prefix followed by the tail s−n, s−n−1, ….
struct NormalizedWedge {
  int sign = 0;
  Partition key;
};

/// Sorts a wedge u_{β1} ∧ … ∧ u_{βn} ∧ u_{s−n} ∧ … into decreasing order.
/// The sign is 0 when an index repeats or falls into the tail.
inline NormalizedWedge normalize_wedge(std::vector<int> prefix, int s) {
  const int n = static_cast<int>(prefix.size());
  for (int b : prefix) {
    if (b <= s - n) return {0, {}};
  }
  int sign = 1;
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    for (std::size_t j = i; j > 0 && prefix[j - 1] <= prefix[j]; --j) {
      if (prefix[j - 1] == prefix[j]) return {0, {}};
      std::swap(prefix[j - 1], prefix[j]);
      sign = -sign;
    }
  }
  std::vector<int> parts;
  for (int k = 1; k <= n; ++k) parts.push_back(prefix[static_cast<std::size_t>(k - 1)] - s + k - 1);
  return {sign, Partition(std::move(parts))};
}

/// Indices β_k = λ_k + s − k + 1 for k ≤ n.
inline std::vector<int> wedge_indices(const Partition& lambda, int s, std::size_t n) {
  std::vector<int> beta;
  for (std::size_t k = 1; k <= n; ++k) beta.push_back(lambda.part(k) + s - static_cast<int>(k) + 1);
  return beta;
}

/// Finite combination of ordered wedges of a fixed charge, keyed by the
/// partition read off the indices.
template <class Coeff>
struct WedgeVector {
  int charge = 0;
  std::map<Partition, Coeff> terms;

  static WedgeVector basis(const Partition& lambda, int s) {
    WedgeVector v{s, {}};
    v.terms.emplace(lambda, Coeff(1));
    return v;
  }

  void add(const Partition& key, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms.erase(it);
    }
  }

  WedgeVector& operator+=(const WedgeVector& o) {
    if (o.charge != charge) throw std::invalid_argument("adding wedges of different charge");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }

  WedgeVector& operator-=(const WedgeVector& o) {
    if (o.charge != charge) throw std::invalid_argument("adding wedges of different charge");
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
  }

  WedgeVector& operator*=(const Coeff& c) {
    if (c == Coeff(0)) {
      terms.clear();
    } else {
      for (auto& [k, v] : terms) v *= c;
    }
    return *this;
  }

  bool operator==(const WedgeVector&) const = default;
};

template <class To, class From>
WedgeVector<To> convert_wedge(const WedgeVector<From>& v) {
  WedgeVector<To> out{v.charge, {}};
  for (const auto& [k, c] : v.terms) out.add(k, To(c));
  return out;
}

/// p_m(u_β) = Σ_k u_{β1} ∧ … ∧ u_{βk − eℓm} ∧ …, for m ≠ 0.
///
/// Past k = len(λ) + eℓ|m| every replaced index collides with another one
/// (the tail, or β_{k−eℓ|m|}), so the sum stops there.
template <class Coeff>
WedgeVector<Coeff> p_action(int m, const WedgeVector<Coeff>& v, int e, int l) {
  if (m == 0) throw std::invalid_argument("p_0 is not part of the boson algebra");
  if (e < 2 || l < 2) throw std::invalid_argument("e and l must be at least 2");
  const int shift = e * l * m;
  WedgeVector<Coeff> out{v.charge, {}};
  for (const auto& [lambda, c] : v.terms) {
    const std::size_t n = lambda.length() + static_cast<std::size_t>(e * l * std::abs(m));
    const std::vector<int> beta = wedge_indices(lambda, v.charge, n);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> moved = beta;
      moved[k] -= shift;
      const NormalizedWedge w = normalize_wedge(std::move(moved), v.charge);
      if (w.sign != 0) out.add(w.key, w.sign > 0 ? c : -c);
    }
  }
  return out;
}

/// p_{π1} p_{π2} ⋯ applied to v.
template <class Coeff>
WedgeVector<Coeff> p_product(const Partition& pi, WedgeVector<Coeff> v, int e, int l) {
  for (auto it = pi.parts().rbegin(); it != pi.parts().rend(); ++it) v = p_action(*it, v, e, l);
  return v;
}

/// h_m = Σ_{|π| = m} p_π / z_π.
inline WedgeVector<Rational> h_operator(int m, const WedgeVector<Rational>& v, int e, int l) {
  if (m < 0) throw std::invalid_argument("h_m needs m ≥ 0");
  if (m == 0) return v;
  WedgeVector<Rational> out{v.charge, {}};
  for (const Partition& pi : partitions_of(m)) {
    WedgeVector<Rational> term = p_product(pi, v, e, l);
    term *= Rational(1, z_value(pi));
    out += term;
  }
  return out;
}

/// h_σ = h_{σ1} h_{σ2} ⋯.
inline WedgeVector<Rational> h_sigma(const Partition& sigma, WedgeVector<Rational> v, int e, int l) {
  for (auto it = sigma.parts().rbegin(); it != sigma.parts().rend(); ++it) v = h_operator(*it, v, e, l);
  return v;
}

/// s_σ = Σ_π K⁻¹_{π,σ} h_π. The coefficients come out integral; a
/// fractional coefficient is reported as an internal error.
inline WedgeVector<std::int64_t> s_sigma(const Partition& sigma, const WedgeVector<std::int64_t>& v, int e, int l) {
  const KostkaTable t = kostka_table(sigma.size());
  const std::size_t col = t.position(sigma);
  const auto rv = convert_wedge<Rational>(v);
  WedgeVector<Rational> acc{v.charge, {}};
  for (std::size_t r = 0; r < t.basis.size(); ++r) {
    if (t.k_inverse[r][col] == 0) continue;
    WedgeVector<Rational> term = h_sigma(t.basis[r], rv, e, l);
    term *= Rational(t.k_inverse[r][col]);
    acc += term;
  }
  WedgeVector<std::int64_t> out{v.charge, {}};
  for (const auto& [k, c] : acc.terms) {
    if (c.denominator() != 1) throw std::logic_error("s_sigma produced a fractional coefficient");
    out.add(k, c.numerator());
  }
  return out;
}

/// Polynomial in up to 12 variables, exponents packed 5 bits each.
template <class Coeff>
class Polynomial {
 public:
  static constexpr int kMaxVariables = 12;
  static constexpr int kBits = 5;

  explicit Polynomial(int variables) : vars_(variables) {
    if (variables < 1 || variables > kMaxVariables) throw std::invalid_argument("unsupported variable count");
  }

  static Polynomial constant(int variables, const Coeff& c) {
    Polynomial p(variables);
    p.add_term(0, c);
    return p;
  }

  int variables() const noexcept { return vars_; }
  const std::unordered_map<std::uint64_t, Coeff>& terms() const noexcept { return terms_; }

  static std::uint64_t pack(const std::vector<int>& exps) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] >= (1 << kBits)) throw std::out_of_range("exponent too large");
      key |= static_cast<std::uint64_t>(exps[i]) << (kBits * i);
    }
    return key;
  }

  void add_term(std::uint64_t key, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Coeff coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(pack(exps));
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }

  Polynomial& operator*=(const Coeff& c) {
    if (c == Coeff(0)) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.vars_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    }
    return out;
  }

  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  int vars_;
  std::unordered_map<std::uint64_t, Coeff> terms_;
};

/// Complete homogeneous polynomial H_m: the sum of all monomials of degree m.
template <class Coeff>
Polynomial<Coeff> complete_polynomial(int m, int variables) {
  Polynomial<Coeff> out(variables);
  if (m < 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(variables), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == variables - 1) {
      exps[static_cast<std::size_t>(var)] = left;
      out.add_term(Polynomial<Coeff>::pack(exps), Coeff(1));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      exps[static_cast<std::size_t>(var)] = d;
      rec(var + 1, left - d);
    }
  };
  rec(0, m);
  return out;
}

/// Power sum P_m = x_1^m + … + x_n^m.
template <class Coeff>
Polynomial<Coeff> power_sum_polynomial(int m, int variables) {
  Polynomial<Coeff> out(variables);
  for (int i = 0; i < variables; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(variables), 0);
    exps[static_cast<std::size_t>(i)] = m;
    out.add_term(Polynomial<Coeff>::pack(exps), Coeff(1));
  }
  return out;
}

/// Product over the parts of σ of the polynomials `single(part)`.
template <class Coeff, class F>
Polynomial<Coeff> multiplicative_polynomial(const Partition& sigma, int variables, F single) {
  Polynomial<Coeff> out = Polynomial<Coeff>::constant(variables, Coeff(1));
  for (int p : sigma.parts()) out = out * single(p);
  return out;
}

/// Schur polynomial by the Jacobi–Trudi determinant det(H_{σ_i − i + j}).
template <class Coeff>
Polynomial<Coeff> schur_polynomial(const Partition& sigma, int variables) {
  const int n = static_cast<int>(sigma.length());
  if (n == 0) return Polynomial<Coeff>::constant(variables, Coeff(1));
  std::map<int, Polynomial<Coeff>> h;
  auto entry = [&](int i, int j) -> const Polynomial<Coeff>& {
    const int d = sigma.part(static_cast<std::size_t>(i + 1)) - (i + 1) + (j + 1);
    auto it = h.find(d);
    if (it == h.end()) it = h.emplace(d, d == 0 ? Polynomial<Coeff>::constant(variables, Coeff(1))
                                                : complete_polynomial<Coeff>(d, variables)).first;
    return it->second;
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Polynomial<Coeff> out(variables);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
    }
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) zero = entry(i, perm[static_cast<std::size_t>(i)]).terms().empty();
    if (zero) continue;
    Polynomial<Coeff> term = Polynomial<Coeff>::constant(variables, Coeff(inversions % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i) term = term * entry(i, perm[static_cast<std::size_t>(i)]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct IdentityCheck {
  Partition sigma;
  bool holds = false;
};

/// H_σ = Σ_π K_{π,σ} S_π for every σ of degree n, as polynomials in
/// max(n, 8) variables.
inline std::vector<IdentityCheck> verify_complete_schur(int n) {
  std::vector<IdentityCheck> out;
  if (n <= 0) return out;
  const int vars = std::max(n, 8);
  const KostkaTable t = kostka_table(n);
  std::vector<Polynomial<std::int64_t>> schur;
  for (const Partition& pi : t.basis) schur.push_back(schur_polynomial<std::int64_t>(pi, vars));
  for (std::size_t col = 0; col < t.basis.size(); ++col) {
    const Partition& sigma = t.basis[col];
    const auto lhs = multiplicative_polynomial<std::int64_t>(
        sigma, vars, [&](int p) { return complete_polynomial<std::int64_t>(p, vars); });
    Polynomial<std::int64_t> rhs(vars);
    for (std::size_t r = 0; r < t.basis.size(); ++r) {
      Polynomial<std::int64_t> term = schur[r];
      term *= t.k[r][col];
      rhs += term;
    }
    out.push_back({sigma, lhs == rhs});
  }
  return out;
}

/// H_m = Σ_{|π| = m} P_π / z_π in the given number of variables.
inline bool verify_complete_power_sum(int m, int variables) {
  const auto lhs = complete_polynomial<Rational>(m, variables);
  Polynomial<Rational> rhs(variables);
  for (const Partition& pi : partitions_of(m)) {
    auto term = multiplicative_polynomial<Rational>(
        pi, variables, [&](int p) { return power_sum_polynomial<Rational>(p, variables); });
    term *= Rational(1, z_value(pi));
    rhs += term;
  }
  return lhs == rhs;
}

}  // namespace hfock
