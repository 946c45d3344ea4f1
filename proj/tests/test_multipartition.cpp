#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "ks/multipartition.hpp"
#include "ks/pseudoroots.hpp"

using ks::Multipartition;

namespace {

Multipartition mp(std::vector<std::vector<int>> rows) {
  return Multipartition(std::move(rows));
}

}  // namespace

TEST_CASE("interleave") {
  CHECK(mp({{2, 0}, {0, 0}}).interleave() == std::vector<int>{2, 0, 0, 0});
  CHECK(mp({{3, 1, 0}}).interleave() == std::vector<int>{3, 1, 0});
  CHECK(mp({{1, 1}, {3, 2}}).interleave() == std::vector<int>{1, 3, 1, 2});
}

TEST_CASE("partial sums") {
  CHECK(mp({{2, 0}, {0, 0}}).partial_sums() ==
        std::vector<long long>{2, 2, 2, 2});
  CHECK(Multipartition(2, 2).partial_sums() ==
        std::vector<long long>{0, 0, 0, 0});
  CHECK(mp({{1, 1}, {1, 1}}).partial_sums() ==
        std::vector<long long>{1, 2, 3, 4});
}

TEST_CASE("dominance") {
  CHECK(mp({{2, 0}, {0, 0}}).dominates(mp({{1, 1}, {0, 0}})));
  Multipartition a = mp({{2, 1}, {1, 0}});
  CHECK(a.dominates(a));
  CHECK_FALSE(mp({{1, 1}, {0, 0}}).dominates(mp({{2, 0}, {0, 0}})));
  CHECK_THROWS_AS(mp({{1}}).dominates(mp({{1, 0}})), std::invalid_argument);
}

TEST_CASE("diff_alpha") {
  CHECK(mp({{2, 0}, {0, 0}}).diff_alpha(mp({{1, 1}, {0, 0}})) ==
        ks::AlphaVec{1, 1, 0});
  Multipartition a = mp({{2, 1}, {1, 0}});
  CHECK(a.diff_alpha(a) == ks::AlphaVec{0, 0, 0});
  CHECK(mp({{1}, {0}}).diff_alpha(mp({{0}, {1}})) == ks::AlphaVec{1});
  CHECK_THROWS_AS(mp({{2}}).diff_alpha(mp({{1}})), std::invalid_argument);
}

TEST_CASE("diff_alpha may be negative off the dominance cone") {
  ks::AlphaVec alpha = mp({{1, 1}, {0, 0}}).diff_alpha(mp({{2, 0}, {0, 0}}));
  CHECK(alpha == ks::AlphaVec{-1, -1, 0});
}

TEST_CASE("rho") {
  CHECK(Multipartition::rho(1, 3) == mp({{3, 2, 1}}));
  CHECK(Multipartition::rho(2, 1) == mp({{1}, {1}}));
  CHECK(Multipartition::rho(2, 2) == mp({{2, 1}, {2, 1}}));
}

TEST_CASE("validation rejects non-decreasing components") {
  CHECK_THROWS_AS(mp({{0, 1}}), std::invalid_argument);
  CHECK_NOTHROW(mp({{1, -2}}));  // generalized entries allowed
}

TEST_CASE("text round trip and parsing") {
  Multipartition a = mp({{3, 1, 0}, {2, 0, 0}});
  CHECK(a.to_text() == "3,1,0|2,0,0");
  CHECK(Multipartition::parse("3,1,0|2,0,0", 2, 3) == a);
  CHECK(Multipartition::parse("3,1|2", 2, 3) == a);  // zero padding
  CHECK_THROWS_AS(Multipartition::parse("1,2|0,0", 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(Multipartition::parse("1,0", 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Multipartition::parse("1,-1", 1, 3), std::invalid_argument);
  CHECK(Multipartition::parse("1,-1", 1, 2) == mp({{1, -1}}));
}

TEST_CASE("enumerate_multipartitions examples") {
  auto one_two = ks::enumerate_multipartitions(1, 2, 2);
  REQUIRE(one_two.size() == 2);
  CHECK(one_two[0] == mp({{2, 0}}));
  CHECK(one_two[1] == mp({{1, 1}}));

  auto two_one = ks::enumerate_multipartitions(2, 1, 1);
  REQUIRE(two_one.size() == 2);
  CHECK(two_one[0] == mp({{1}, {0}}));
  CHECK(two_one[1] == mp({{0}, {1}}));

  auto zero = ks::enumerate_multipartitions(3, 2, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Multipartition(3, 2));
}

TEST_CASE("enumeration has no duplicates and correct totals") {
  auto all = ks::enumerate_multipartitions(2, 4, 4);
  std::set<std::string> seen;
  for (const auto& m : all) {
    CHECK(m.total() == 4);
    CHECK(seen.insert(m.to_text()).second);
  }
}

TEST_CASE("signed_weyl_images examples") {
  auto s2 = ks::signed_weyl_images({4, 1}, 1, 2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == std::make_pair(1, std::vector<int>{4, 1}));
  CHECK(s2[1] == std::make_pair(-1, std::vector<int>{1, 4}));

  auto trivial = ks::signed_weyl_images({7, 3}, 2, 1);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == std::make_pair(1, std::vector<int>{7, 3}));

  auto s2x2 = ks::signed_weyl_images({4, 3, 2, 1}, 2, 2);
  REQUIRE(s2x2.size() == 4);
  CHECK(s2x2[0].first == 1);
  CHECK(s2x2[1].first == -1);
  CHECK(s2x2[2].first == -1);
  CHECK(s2x2[3].first == 1);
}

TEST_CASE("signed_weyl_images counts and sign balance") {
  auto images = ks::signed_weyl_images({6, 4, 1, 9, 5, 2}, 2, 3);
  CHECK(images.size() == 36);  // (3!)^2
  std::set<std::vector<int>> distinct;
  int sign_sum = 0;
  for (const auto& [sign, vec] : images) {
    distinct.insert(vec);
    sign_sum += sign;
  }
  CHECK(distinct.size() == 36);
  CHECK(sign_sum == 0);
}

TEST_CASE("dominance is a partial order on fixed-total sets") {
  for (int r = 1; r <= 3; ++r) {
    for (long long total = 0; total <= 5; ++total) {
      int n = static_cast<int>(std::max<long long>(total, 1));
      auto all = ks::enumerate_multipartitions(r, n, total);
      for (const auto& a : all) CHECK(a.dominates(a));
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (a.dominates(b) && b.dominates(a)) CHECK(a == b);
        }
      }
      // Transitivity, exhaustively.
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (!a.dominates(b)) continue;
          for (const auto& c : all) {
            if (b.dominates(c)) CHECK(a.dominates(c));
          }
        }
      }
    }
  }
}

TEST_CASE("diff_alpha nonnegative iff dominant") {
  auto all = ks::enumerate_multipartitions(2, 3, 3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      ks::AlphaVec alpha = a.diff_alpha(b);
      bool nonneg = true;
      for (int v : alpha) nonneg = nonneg && v >= 0;
      CHECK(nonneg == a.dominates(b));
    }
  }
}

TEST_CASE("alpha-to-x compatibility with interleaving") {
  std::mt19937_64 rng(31);
  auto all = ks::enumerate_multipartitions(2, 2, 3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      std::vector<int> w = ks::xexp_of_alpha(a.diff_alpha(b));
      std::vector<int> ia = a.interleave();
      std::vector<int> ib = b.interleave();
      for (size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i] == ib[i] - ia[i]);
      }
    }
  }
}
