#pragma once

// Self-check suites run by `hfock verify`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heisenberg.hpp"
#include "kashiwara.hpp"
#include "symfun.hpp"

namespace hfock {

struct SuiteCheck {
  explicit SuiteCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  int passed = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (c.failed) return false;
    }
    return true;
  }
};

inline Partition random_partition(std::mt19937_64& rng, int n) {
  const auto all = partitions_of(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

/// Uniform total size in [0, max_size], split at random over l components;
/// charges uniform in [-charge_range, charge_range].
inline ChargedMultipartition random_multipartition(std::mt19937_64& rng, int max_size, int e, int l,
                                                   int charge_range = 3) {
  std::uniform_int_distribution<int> size(0, max_size);
  std::uniform_int_distribution<int> comp(0, l - 1);
  std::uniform_int_distribution<int> ch(-charge_range, charge_range);
  std::vector<int> sizes(static_cast<std::size_t>(l), 0);
  for (int n = size(rng); n > 0; --n) ++sizes[static_cast<std::size_t>(comp(rng))];
  std::vector<Partition> comps;
  std::vector<int> s;
  for (int j = 0; j < l; ++j) {
    comps.push_back(random_partition(rng, sizes[static_cast<std::size_t>(j)]));
    s.push_back(ch(rng));
  }
  return {std::move(comps), std::move(s), e};
}

/// Symmetric functions and boson relations up to degree `bound`.
inline SuiteReport identities_suite(int bound) {
  SuiteReport report;
  if (bound <= 0) return report;
  SuiteCheck tri{"kostka unitriangular"}, inv{"kostka inverse"}, cs{"complete in schur basis"},
      ps{"complete in power sums"}, comm{"boson commutators"};
  for (int n = 1; n <= bound; ++n) {
    const KostkaTable t = kostka_table(n);
    const std::size_t m = t.basis.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const bool ok = (i == j) ? t.k[i][j] == 1 : (i < j || t.k[i][j] == 0);
        tri.record(ok, to_string(t.basis[i]) + " " + to_string(t.basis[j]));
        std::int64_t prod = 0;
        for (std::size_t q = 0; q < m; ++q) prod += t.k[i][q] * t.k_inverse[q][j];
        inv.record(prod == (i == j ? 1 : 0), to_string(t.basis[i]) + " " + to_string(t.basis[j]));
      }
    }
    for (const auto& r : verify_complete_schur(n)) cs.record(r.holds, to_string(r.sigma));
    ps.record(verify_complete_power_sum(n, 12), "degree " + std::to_string(n));
  }
  const int wedge_bound = std::min(bound, 4);
  for (int e = 2; e <= 3; ++e) {
    for (int l = 2; l <= 3; ++l) {
      for (int size = 0; size <= wedge_bound; ++size) {
        for (const Partition& lambda : partitions_of(size)) {
          for (int s = -1; s <= 1; ++s) {
            const auto v = WedgeVector<std::int64_t>::basis(lambda, s);
            for (int m : {-2, -1, 1, 2}) {
              for (int mp : {-2, -1, 1, 2}) {
                auto lhs = p_action(m, p_action(mp, v, e, l), e, l);
                lhs -= p_action(mp, p_action(m, v, e, l), e, l);
                WedgeVector<std::int64_t> rhs{s, {}};
                if (m + mp == 0) rhs.add(lambda, static_cast<std::int64_t>(m) * e * l);
                comm.record(lhs == rhs, to_string(lambda) + " m=" + std::to_string(m) + " m'=" + std::to_string(mp));
              }
            }
          }
        }
      }
    }
  }
  report.checks = {tri, inv, cs, ps, comm};
  return report;
}

/// Crystal and Heisenberg laws on seeded random multipartitions of size
/// at most `bound`, e, ℓ ∈ {2, 3}.
inline SuiteReport crystals_suite(int bound, int samples = 40, std::uint64_t seed = 20240611) {
  SuiteReport report;
  if (bound <= 0) return report;
  std::mt19937_64 rng(seed);
  SuiteCheck inverse{"kashiwara inverse law"}, commute{"ue/ul commutation"}, route{"tc period route"},
      back{"tc inverse law"}, tck{"tc commutes with kashiwara"};
  std::uniform_int_distribution<int> sig(0, 3);
  for (int e = 2; e <= 3; ++e) {
    for (int l = 2; l <= 3; ++l) {
      for (int t = 0; t < samples; ++t) {
        const auto x = random_multipartition(rng, bound, e, l);
        const std::string tag = to_string(x) + " e=" + std::to_string(e);
        for (int i = 0; i < e; ++i) {
          if (auto y = f_tilde(x, i)) inverse.record(e_tilde(*y, i) == x, tag);
          if (auto y = e_tilde(x, i)) inverse.record(f_tilde(*y, i) == x, tag);
        }
        for (int j = 0; j < l; ++j) {
          if (auto y = dual_f_tilde(x, j)) inverse.record(dual_e_tilde(*y, j) == x, tag);
        }
        for (int i = 0; i < e; ++i) {
          for (int j = 0; j < l; ++j) {
            auto a = f_tilde(x, i);
            auto b = dual_f_tilde(x, j);
            std::optional<ChargedMultipartition> ab, ba;
            if (a) ab = dual_f_tilde(*a, j);
            if (b) ba = f_tilde(*b, i);
            commute.record(ab == ba, tag);
          }
        }
        const Partition sigma = random_partition(rng, sig(rng));
        const auto direct = tc(x, sigma);
        route.record(direct == b_sigma_by_periods(x, sigma), tag + " sigma=" + to_string(sigma));
        back.record(b_minus(direct, sigma) == x, tag + " sigma=" + to_string(sigma));
        for (int i = 0; i < e; ++i) {
          if (auto y = f_tilde(x, i)) tck.record(tc(*y, sigma) == f_tilde(direct, i), tag);
        }
      }
    }
  }
  report.checks = {inverse, commute, route, back, tck};
  return report;
}

}  // namespace hfock
