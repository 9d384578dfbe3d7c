#include <algorithm>
#include <map>

#include "doctest.h"
#include "syzygy/exterior.hpp"

using namespace syz;

TEST_CASE("colex ranks") {
  CHECK(subset_rank({0, 1}, 4) == 0);
  CHECK(subset_rank({2, 3}, 4) == 5);
  CHECK(subset_rank({0, 1, 2}, 3) == 0);
  // Colex order of 2-subsets of {0..3}: 01 02 12 03 13 23.
  const std::vector<Subset> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(all_subsets(4, 2) == expected);
  for (std::uint64_t r = 0; r < 6; ++r) CHECK(subset_unrank(r, 2, 4) == expected[r]);
  CHECK_THROWS(subset_rank({3, 1}, 4));
  CHECK_THROWS(subset_rank({1, 4}, 4));
  CHECK_THROWS(subset_rank({1, 1}, 4));
}

TEST_CASE("rank and unrank are inverse") {
  for (std::size_t n = 0; n <= 9; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto subsets = all_subsets(n, k);
      CHECK(subsets.size() == binomial(n, k));
      SubsetRanker ranker(n);
      for (std::uint64_t r = 0; r < subsets.size(); ++r) {
        CHECK(subset_rank(subsets[r], n) == r);
        CHECK(ranker.rank(subsets[r]) == r);
        CHECK(subset_unrank(r, k, n) == subsets[r]);
        for (std::size_t i = 0; i < k; ++i)
          CHECK(ranker.rank_without(subsets[r], i) == subset_rank(wedge_delete(subsets[r], i).subset, n));
      }
    }
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ull);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("signed deletion and insertion") {
  CHECK(wedge_delete({2, 5}, 0) == SignedSubset{1, {5}});
  CHECK(wedge_delete({2, 5}, 1) == SignedSubset{-1, {2}});
  CHECK(wedge_delete({1, 3, 4}, 2) == SignedSubset{1, {1, 3}});
  CHECK_FALSE(wedge_insert({3, 7}, 3).has_value());
  CHECK(*wedge_insert({3, 7}, 0) == SignedSubset{1, {0, 3, 7}});
  CHECK(*wedge_insert({3, 7}, 5) == SignedSubset{-1, {3, 5, 7}});
  // Insert followed by deletion at the inserted position is the identity with sign +1.
  for (const Subset& s : all_subsets(7, 3))
    for (std::uint32_t idx = 0; idx < 7; ++idx) {
      auto ins = wedge_insert(s, idx);
      if (!ins) continue;
      std::size_t pos = static_cast<std::size_t>(std::find(ins->subset.begin(), ins->subset.end(), idx) - ins->subset.begin());
      auto del = wedge_delete(ins->subset, pos);
      CHECK(del.subset == s);
      CHECK(del.sign * ins->sign == 1);
    }
}

TEST_CASE("double deletion cancels") {
  // Sum over ordered pairs of deletions, as in d o d.
  for (const Subset& s : all_subsets(6, 4)) {
    std::map<Subset, int> acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto a = wedge_delete(s, i);
      for (std::size_t j = 0; j < a.subset.size(); ++j) {
        auto b = wedge_delete(a.subset, j);
        acc[b.subset] += a.sign * b.sign;
      }
    }
    for (const auto& [sub, coeff] : acc) CHECK(coeff == 0);
  }
}
