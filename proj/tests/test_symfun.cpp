#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "hfock/symfun.hpp"
#include "hfock/verify.hpp"

using namespace hfock;

namespace {

// Number of permutations of n letters with cycle type π, by enumeration.
std::map<Partition, std::int64_t> cycle_type_counts(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, std::int64_t> out;
  do {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    ++out[Partition(cycles)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Semistandard fillings of shape σ with content π, counted cell by cell.
std::int64_t kostka_oracle(const Partition& sigma, const Partition& pi) {
  if (sigma.size() != pi.size()) return 0;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 1; r <= sigma.length(); ++r) {
    for (int c = 1; c <= sigma.part(r); ++c) cells.push_back({static_cast<int>(r), c});
  }
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> left(pi.parts());
  std::int64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 1 && fill[{r, c - 1}] > v) continue;
      if (r > 1 && fill[{r - 1, c}] >= v) continue;
      fill[{r, c}] = v;
      --left[static_cast<std::size_t>(v - 1)];
      rec(k + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    fill.erase({r, c});
  };
  rec(0);
  return count;
}

// p_m with a doubled prefix length, as an independent bound check.
WedgeVector<std::int64_t> p_long_prefix(int m, const WedgeVector<std::int64_t>& v, int e, int l) {
  WedgeVector<std::int64_t> out{v.charge, {}};
  for (const auto& [lambda, c] : v.terms) {
    const std::size_t n = 2 * (lambda.length() + static_cast<std::size_t>(e * l * std::abs(m))) + 3;
    const auto beta = wedge_indices(lambda, v.charge, n);
    for (std::size_t k = 0; k < n; ++k) {
      auto moved = beta;
      moved[k] -= e * l * m;
      const auto w = normalize_wedge(moved, v.charge);
      if (w.sign != 0) out.add(w.key, w.sign * c);
    }
  }
  return out;
}

using IntWedge = WedgeVector<std::int64_t>;

IntWedge commutator(int m, int mp, const IntWedge& v, int e, int l) {
  IntWedge a = p_action(m, p_action(mp, v, e, l), e, l);
  a -= p_action(mp, p_action(m, v, e, l), e, l);
  return a;
}

}  // namespace

TEST(ZValue, Examples) {
  EXPECT_EQ(z_value({}), 1);
  EXPECT_EQ(z_value({1, 1}), 2);
  EXPECT_EQ(z_value({2}), 2);
  EXPECT_EQ(z_value({2, 2, 1}), 8);
  EXPECT_EQ(z_value({1, 1, 1, 1}), 24);
}

TEST(ZValue, CentralizerOrderOracle) {
  std::int64_t fact = 1;
  for (int n = 1; n <= 7; ++n) {
    fact *= n;
    const auto counts = cycle_type_counts(n);
    ASSERT_EQ(counts.size(), partitions_of(n).size());
    for (const auto& [pi, c] : counts) EXPECT_EQ(z_value(pi) * c, fact) << to_string(pi);
  }
}

TEST(Kostka, ExamplesAndOracle) {
  EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(kostka({3, 2}, {2, 2, 1}), 2);
  EXPECT_EQ(kostka({2, 2}, {3, 1}), 0);
  EXPECT_EQ(kostka({}, {}), 1);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& s : partitions_of(n)) {
      for (const auto& p : partitions_of(n)) EXPECT_EQ(kostka(s, p), kostka_oracle(s, p));
    }
  }
}

TEST(Kostka, UnitriangularAndInverse) {
  for (int n = 0; n <= 8; ++n) {
    const KostkaTable t = kostka_table(n);
    const std::size_t m = t.basis.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) {
          EXPECT_EQ(t.k[i][j], 1);
        }
        if (i > j) {
          EXPECT_EQ(t.k[i][j], 0);
          EXPECT_EQ(t.k_inverse[i][j], 0);
        }
        std::int64_t prod = 0;
        for (std::size_t q = 0; q < m; ++q) prod += t.k[i][q] * t.k_inverse[q][j];
        EXPECT_EQ(prod, i == j ? 1 : 0);
      }
    }
  }
  EXPECT_EQ(inverse_kostka({2}, {1, 1}), -1);
  EXPECT_EQ(inverse_kostka({1, 1}, {2}), 0);
  EXPECT_EQ(inverse_kostka({1}, {2}), 0);
}

TEST(Wedge, Normalization) {
  const auto a = normalize_wedge({1, 3}, 0);
  EXPECT_EQ(a.sign, -1);
  EXPECT_EQ(a.key, Partition({3, 2}));
  EXPECT_EQ(normalize_wedge({2, 2}, 0).sign, 0);
  EXPECT_EQ(normalize_wedge({1, -2}, 0).sign, 0);
  const auto b = normalize_wedge({3, 0, 1}, 0);
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.key, Partition({3, 2, 2}));
  for (const auto& p : partitions_of(5)) {
    const auto w = normalize_wedge(wedge_indices(p, 2, p.length() + 1), 2);
    EXPECT_EQ(w.sign, 1);
    EXPECT_EQ(w.key, p);
  }
}

TEST(Boson, PrefixBoundAgreesWithLongerPrefix) {
  for (int e = 2; e <= 3; ++e) {
    for (int l = 2; l <= 3; ++l) {
      for (int n = 0; n <= 4; ++n) {
        for (const auto& p : partitions_of(n)) {
          const auto v = IntWedge::basis(p, e - l);
          for (int m : {-2, -1, 1, 2}) EXPECT_EQ(p_action(m, v, e, l), p_long_prefix(m, v, e, l));
        }
      }
    }
  }
  EXPECT_THROW(p_action(0, IntWedge::basis({}, 0), 2, 2), std::invalid_argument);
}

TEST(Boson, PMinusOneOnVacuum) {
  const auto v = p_action(-1, IntWedge::basis({}, 0), 2, 2);
  // Ribbons of size 4 on the empty partition: hooks with sign (−1)^{height}.
  IntWedge want{0, {}};
  want.add({4}, 1);
  want.add({3, 1}, -1);
  want.add({2, 1, 1}, 1);
  want.add({1, 1, 1, 1}, -1);
  EXPECT_EQ(v, want);
  EXPECT_TRUE(p_action(1, IntWedge::basis({}, 0), 2, 2).terms.empty());
}

TEST(Boson, HeisenbergCommutators) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 24; ++t) {
    const int e = 2 + t % 2;
    const int l = 2 + (t / 2) % 2;
    const auto p = random_partition(rng, static_cast<int>(rng() % 5));
    const int s = static_cast<int>(rng() % 3) - 1;
    const auto v = IntWedge::basis(p, s);
    for (int m : {-2, -1, 1, 2}) {
      for (int mp : {-2, -1, 1, 2}) {
        IntWedge want{s, {}};
        if (m + mp == 0) want.add(p, static_cast<std::int64_t>(m) * e * l);
        EXPECT_EQ(commutator(m, mp, v, e, l), want) << m << " " << mp << " " << to_string(p);
      }
    }
  }
}

TEST(Boson, CompleteAndSchurOperators) {
  const auto v = convert_wedge<Rational>(IntWedge::basis({4, 4, 1}, 0));
  EXPECT_EQ(h_operator(0, v, 2, 2), v);
  EXPECT_EQ(h_operator(1, v, 2, 2), p_action(1, v, 2, 2));
  EXPECT_THROW(h_operator(-1, v, 2, 2), std::invalid_argument);
  EXPECT_EQ(convert_wedge<Rational>(s_sigma({1}, IntWedge::basis({4, 4, 1}, 0), 2, 2)), p_action(1, v, 2, 2));
  EXPECT_EQ(s_sigma({}, IntWedge::basis({1}, 0), 2, 2), IntWedge::basis({1}, 0));
  // h_π = Σ_σ K_{σ,π} s_σ recovers the complete operators.
  const auto base = IntWedge::basis({4, 4, 4}, 0);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& pi : partitions_of(n)) {
      WedgeVector<Rational> rebuilt{0, {}};
      for (const auto& tau : partitions_of(n)) {
        auto term = convert_wedge<Rational>(s_sigma(tau, base, 2, 2));
        term *= Rational(kostka(tau, pi));
        rebuilt += term;
      }
      EXPECT_EQ(rebuilt, h_sigma(pi, convert_wedge<Rational>(base), 2, 2));
    }
  }
  EXPECT_FALSE(h_sigma({2, 1}, convert_wedge<Rational>(base), 2, 2).terms.empty());
}

TEST(Polynomials, Basics) {
  const auto h2 = complete_polynomial<std::int64_t>(2, 3);
  EXPECT_EQ(h2.terms().size(), 6u);
  EXPECT_EQ(h2.coefficient({1, 1, 0}), 1);
  const auto p2 = power_sum_polynomial<std::int64_t>(2, 3);
  EXPECT_EQ(p2.coefficient({0, 2, 0}), 1);
  EXPECT_EQ(p2.coefficient({1, 1, 0}), 0);
  const auto s21 = schur_polynomial<std::int64_t>({2, 1}, 3);
  EXPECT_EQ(s21.coefficient({1, 1, 1}), 2);
  EXPECT_EQ(s21.coefficient({2, 1, 0}), 1);
  EXPECT_EQ(s21.coefficient({3, 0, 0}), 0);
  EXPECT_THROW(Polynomial<std::int64_t>(13), std::invalid_argument);
}

TEST(Polynomials, SchurMatchesTableauExpansion) {
  // s_σ(x1..x4) = Σ_π K_{σ,π} m_π, read at the monomial x^π.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& sigma : partitions_of(n)) {
      const auto s = schur_polynomial<std::int64_t>(sigma, 4);
      for (const auto& pi : partitions_of(n)) {
        if (pi.length() > 4) continue;
        std::vector<int> exps(4, 0);
        for (std::size_t i = 0; i < pi.length(); ++i) exps[i] = pi.parts()[i];
        EXPECT_EQ(s.coefficient(exps), kostka(sigma, pi));
      }
    }
  }
}

TEST(Identities, CompleteInSchurAndPowerSums) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& check : verify_complete_schur(n)) EXPECT_TRUE(check.holds) << to_string(check.sigma);
    EXPECT_TRUE(verify_complete_power_sum(n, 12)) << n;
  }
}

TEST(Identities, NonFactorialWeightsFail) {
  // Dropping the α! factor breaks the identity from m = 2 on.
  const int vars = 4;
  const auto lhs = complete_polynomial<Rational>(2, vars);
  Polynomial<Rational> rhs(vars);
  for (const auto& pi : partitions_of(2)) {
    auto term = multiplicative_polynomial<Rational>(
        pi, vars, [&](int p) { return power_sum_polynomial<Rational>(p, vars); });
    std::int64_t z = 1;
    for (int p : pi.parts()) z *= p;
    term *= Rational(1, z);
    rhs += term;
  }
  EXPECT_FALSE(lhs == rhs);
}
