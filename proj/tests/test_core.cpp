#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hfock/core.hpp"
#include "hfock/verify.hpp"

using namespace hfock;

namespace {

// Transposition through the explicit set of boxes.
Partition transpose_oracle(const Partition& p) {
  std::set<std::pair<int, int>> boxes;
  for (std::size_t a = 1; a <= p.length(); ++a) {
    for (int b = 1; b <= p.part(a); ++b) boxes.insert({b, static_cast<int>(a)});
  }
  std::vector<int> rows;
  for (auto [a, b] : boxes) {
    if (static_cast<int>(rows.size()) < a) rows.resize(static_cast<std::size_t>(a), 0);
    ++rows[static_cast<std::size_t>(a - 1)];
  }
  return Partition(rows);
}

// All (λ̃, π) with λ = λ̃ + eπ and λ̃ e-regular, by trying every sub-multiset π.
std::vector<std::pair<Partition, Partition>> decompositions_oracle(const Partition& lambda, int e) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int m = 0; m * e <= lambda.size(); ++m) {
    for (const Partition& pi : partitions_of(m)) {
      std::multiset<int> rest(lambda.parts().begin(), lambda.parts().end());
      bool ok = true;
      for (int p : pi.parts()) {
        for (int t = 0; t < e && ok; ++t) {
          auto it = rest.find(p);
          if (it == rest.end()) {
            ok = false;
          } else {
            rest.erase(it);
          }
        }
      }
      if (!ok) continue;
      bool regular = true;
      for (int v : rest) regular = regular && static_cast<int>(rest.count(v)) < e;
      if (regular) out.emplace_back(Partition(std::vector<int>(rest.begin(), rest.end())), pi);
    }
  }
  return out;
}

const ChargedMultipartition kBipartition({{2, 1}, {1, 1}}, {-1, 2}, 3);

}  // namespace

TEST(Partition, NormalizesOnConstruction) {
  EXPECT_EQ(Partition({1, 0, 2}).parts(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(Partition({0, 0}).empty());
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1}).part(2), 1);
  EXPECT_EQ(Partition({3, 1}).part(5), 0);
  EXPECT_EQ(Partition({3, 1}).size(), 4);
}

TEST(Partition, PartitionsOfCountsAndOrder) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto all = partitions_of(n);
    EXPECT_EQ(all.size(), counts[static_cast<std::size_t>(n)]);
    EXPECT_TRUE(std::is_sorted(all.rbegin(), all.rend()));
    for (const auto& p : all) EXPECT_EQ(p.size(), n);
  }
}

TEST(Content, Examples) {
  EXPECT_EQ(content({1, 1, 1}, kBipartition), -1);
  EXPECT_EQ(content({1, 2, 2}, kBipartition), 3);
  const auto vac = ChargedMultipartition::empty({0, 0}, 2);
  EXPECT_EQ(content({1, 1, 2}, vac), 0);
  EXPECT_THROW(content({1, 1, 3}, kBipartition), std::out_of_range);
}

TEST(Conjugate, PartitionExamples) {
  EXPECT_EQ(conjugate_partition({}), Partition{});
  EXPECT_EQ(conjugate_partition({2, 1, 1}), Partition({3, 1}));
  EXPECT_EQ(conjugate_partition({4, 2, 2, 1, 1, 1, 1}), Partition({7, 3, 1, 1}));
}

TEST(Conjugate, MatchesTransposeOracleAndIsInvolution) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(conjugate_partition(p), transpose_oracle(p));
      EXPECT_EQ(conjugate_partition(conjugate_partition(p)), p);
    }
  }
}

TEST(Conjugate, ChargedExamples) {
  const auto c = conjugate_charged(kBipartition);
  EXPECT_EQ(c, ChargedMultipartition({{2}, {2, 1}}, {-2, 1}, 3));
  EXPECT_EQ(conjugate_charged(c), kBipartition);
  const auto vac = ChargedMultipartition::empty({0, 0, 0}, 3);
  EXPECT_EQ(conjugate_charged(vac), vac);
}

TEST(Conjugate, ChargedRandomInvolution) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int l = 2 + t % 3;
    const auto x = random_multipartition(rng, 20, 3, l, 6);
    const auto c = conjugate_charged(x);
    EXPECT_EQ(conjugate_charged(c), x);
    EXPECT_EQ(c.total_charge(), -x.total_charge());
    EXPECT_EQ(c.size(), x.size());
  }
}

TEST(Addition, Examples) {
  EXPECT_EQ(add_partitions({4, 1, 1}, scale_partition(2, {2, 1})), Partition({4, 2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(add_partitions({3, 1}, {}), Partition({3, 1}));
  EXPECT_EQ(add_partitions({3, 1}, {3, 2}), Partition({3, 3, 2, 1}));
  EXPECT_EQ(scale_partition(2, {2, 1}), Partition({2, 2, 1, 1}));
  EXPECT_EQ(scale_partition(1, {5, 2}), Partition({5, 2}));
  EXPECT_EQ(scale_partition(3, {1}), Partition({1, 1, 1}));
  EXPECT_TRUE(scale_partition(0, {4, 4}).empty());
}

TEST(Addition, MultisetLaws) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_partition(rng, t % 9);
    const auto b = random_partition(rng, (t / 3) % 8);
    const auto c = random_partition(rng, (t / 7) % 6);
    std::multiset<int> merged(a.parts().begin(), a.parts().end());
    merged.insert(b.parts().begin(), b.parts().end());
    EXPECT_EQ(add_partitions(a, b), Partition(std::vector<int>(merged.begin(), merged.end())));
    EXPECT_EQ(add_partitions(a, b), add_partitions(b, a));
    EXPECT_EQ(add_partitions(add_partitions(a, b), c), add_partitions(a, add_partitions(b, c)));
    EXPECT_EQ(add_partitions(a, b).size(), a.size() + b.size());
    const int k = t % 4;
    Partition repeated;
    for (int i = 0; i < k; ++i) repeated = add_partitions(repeated, a);
    EXPECT_EQ(scale_partition(k, a), repeated);
    EXPECT_EQ(conjugate_partition(add_partitions(a, b)),
              partwise_sum(conjugate_partition(a), conjugate_partition(b)));
  }
}

TEST(CompareBoxes, Examples) {
  const ChargedMultipartition strips({{4, 2}, {2}, {2, 2, 1, 1}}, {1, 4, 6}, 4);
  EXPECT_EQ(content({1, 5, 1}, strips), 5);
  EXPECT_EQ(content({4, 2, 3}, strips), 4);
  EXPECT_EQ(compare_boxes({1, 5, 1}, {4, 2, 3}, strips), std::strong_ordering::greater);
  EXPECT_EQ(compare_boxes({1, 5, 1}, {3, 2, 3}, strips), std::strong_ordering::greater);
  const ChargedMultipartition y({{2}, {1}, {4}}, {3, 2, 5}, 2);
  EXPECT_EQ(content({2, 1, 3}, y), 4);
  EXPECT_EQ(compare_boxes({1, 5, 1}, {1, 5, 1}, strips), std::strong_ordering::equal);
  const auto vac = ChargedMultipartition::empty({0, 0}, 2);
  EXPECT_EQ(compare_boxes({1, 1, 1}, {1, 1, 2}, vac), std::strong_ordering::greater);
  EXPECT_EQ(compare_boxes({1, 1, 2}, {1, 1, 1}, vac), std::strong_ordering::less);
}

TEST(CompareBoxes, TotalPreorder) {
  const ChargedMultipartition x({{3, 1}, {2, 2}, {1}}, {0, 2, -1}, 3);
  std::vector<Box> boxes;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int j = 1; j <= 3; ++j) boxes.push_back({a, b, j});
    }
  }
  for (const auto& p : boxes) {
    for (const auto& q : boxes) {
      const auto pq = compare_boxes(p, q, x);
      EXPECT_EQ(pq, 0 <=> (compare_boxes(q, p, x) <=> 0));
      EXPECT_EQ(pq == 0, content(p, x) == content(q, x) && p.component == q.component);
      for (const auto& r : boxes) {
        if (pq > 0 && compare_boxes(q, r, x) > 0) {
          EXPECT_TRUE(compare_boxes(p, r, x) > 0);
        }
      }
    }
  }
}

TEST(Asymptotic, Examples) {
  EXPECT_EQ(is_asymptotic(ChargedMultipartition::empty({4, -2, 7}, 3)), 1);
  EXPECT_EQ(is_asymptotic(ChargedMultipartition({{1}, {3, 2, 1}, {3, 1}}, {0, 7, 19}, 3)), 3);
  EXPECT_EQ(is_asymptotic(ChargedMultipartition({{5}, {1}}, {0, 1}, 2)), std::nullopt);
}

TEST(ERegular, Examples) {
  EXPECT_EQ(e_regular_decompose({1, 1, 1}, 3), std::make_pair(Partition{}, Partition({1})));
  EXPECT_EQ(e_regular_decompose({3, 2, 1}, 2), std::make_pair(Partition({3, 2, 1}), Partition{}));
  EXPECT_EQ(e_regular_decompose({2, 2, 2, 2, 1}, 2), std::make_pair(Partition({1}), Partition({2, 2})));
  EXPECT_TRUE(is_e_regular({3, 3, 1}, 3));
  EXPECT_FALSE(is_e_regular({3, 3, 1}, 2));
}

TEST(ERegular, UniqueAndMatchesExhaustiveOracle) {
  for (int e = 2; e <= 4; ++e) {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        const auto all = decompositions_oracle(lambda, e);
        ASSERT_EQ(all.size(), 1u) << to_string(lambda);
        const auto got = e_regular_decompose(lambda, e);
        EXPECT_EQ(got, all.front());
        EXPECT_EQ(add_partitions(got.first, scale_partition(e, got.second)), lambda);
      }
    }
  }
}

TEST(Cells, AddRemove) {
  const Partition p{3, 1, 1};
  EXPECT_EQ(addable_cells(p), (std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {4, 1}}));
  EXPECT_EQ(removable_cells(p), (std::vector<std::pair<int, int>>{{1, 3}, {3, 1}}));
  EXPECT_EQ(add_cell(p, 2), Partition({3, 2, 1}));
  EXPECT_EQ(add_cell(p, 4), Partition({3, 1, 1, 1}));
  EXPECT_THROW(add_cell(p, 3), std::invalid_argument);
  EXPECT_EQ(remove_cell(p, 3), Partition({3, 1}));
  EXPECT_THROW(remove_cell(p, 2), std::invalid_argument);
}

TEST(ChargedMultipartition, Validation) {
  EXPECT_THROW(ChargedMultipartition({{1}}, {0}, 2), std::invalid_argument);
  EXPECT_THROW(ChargedMultipartition({{1}, {}}, {0}, 2), std::invalid_argument);
  EXPECT_THROW(ChargedMultipartition({{1}, {}}, {0, 0}, 1), std::invalid_argument);
  EXPECT_EQ(to_string(kBipartition), "|((2,1),(1,1)),(-1,2)>");
  EXPECT_EQ(kBipartition.total_charge(), 1);
  EXPECT_TRUE(kBipartition.contains({2, 1, 1}));
  EXPECT_FALSE(kBipartition.contains({2, 2, 1}));
}
