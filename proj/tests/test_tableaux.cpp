#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "peakalg/tableaux.hpp"

using namespace peakalg;

TEST_CASE("subset_s") {
  CHECK(subset_s(Composition({2, 2}), Composition({2, 2, 1}), 1));
  CHECK(subset_s(Composition({2, 2}), Composition({3, 2}), 1));
  CHECK(subset_s(Composition({2, 1}), Composition({2, 3}), 2));
  CHECK(!subset_s(Composition({2, 1}), Composition({1, 2, 2}), 2));
  CHECK(!subset_s(Composition({2, 1}), Composition({2, 1, 1, 1}), 2));
  CHECK(!subset_s(Composition({2, 2}), Composition({2, 2}), 1));
  CHECK(subset_s(Composition({2, 2}), Composition({2, 2}), 0));
  CHECK_THROWS_AS(subset_s(Composition({2}), Composition({3}), -1),
                  std::invalid_argument);
}

TEST_CASE("immaculate tableaux") {
  const std::vector<Tableau> two =
      immaculate_tableaux(Composition({2, 1}), Composition({1, 1, 1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].rows == std::vector<std::vector<int>>({{1, 2}, {3}}));
  CHECK(two[1].rows == std::vector<std::vector<int>>({{1, 3}, {2}}));

  for (int n = 1; n <= 5; ++n)
    for (const Composition& a : compositions(n))
      CHECK(immaculate_tableaux(a, a).size() == 1);

  /* weakly increasing rows but a failing prefix condition */
  const Tableau loose{Composition({3, 4, 2}),
                      {{1, 1, 2}, {2, 4, 4, 4}, {3, 4}}};
  const std::vector<Tableau> all =
      immaculate_tableaux(Composition({3, 4, 2}), Composition({2, 2, 1, 4}));
  CHECK(std::find(all.begin(), all.end(), loose) != all.end());

  CHECK_THROWS_AS(immaculate_tableaux(Composition({2}), Composition({1})),
                  std::invalid_argument);
}

TEST_CASE("peak composition tableaux") {
  const std::vector<Tableau> only =
      pct(Composition({2, 1}), Composition({1, 1, 1}));
  REQUIRE(only.size() == 1);
  CHECK(only[0].rows == std::vector<std::vector<int>>({{1, 2}, {3}}));

  const std::vector<Tableau> four =
      pct(Composition({3, 4, 2}), Composition({2, 2, 1, 4}));
  REQUIRE(four.size() == 4);
  CHECK(four[0].rows ==
        std::vector<std::vector<int>>({{1, 1, 2}, {2, 3, 4, 4}, {4, 4}}));
  CHECK(four[1].rows ==
        std::vector<std::vector<int>>({{1, 1, 3}, {2, 2, 4, 4}, {4, 4}}));
  CHECK(four[2].rows ==
        std::vector<std::vector<int>>({{1, 1, 4}, {2, 2, 3, 4}, {4, 4}}));
  CHECK(four[3].rows ==
        std::vector<std::vector<int>>({{1, 1, 4}, {2, 2, 4, 4}, {3, 4}}));

  /* the non-peak prefix filling above is filtered out */
  const Tableau loose{Composition({3, 4, 2}),
                      {{1, 1, 2}, {2, 4, 4, 4}, {3, 4}}};
  CHECK(std::find(four.begin(), four.end(), loose) == four.end());

  CHECK(pct(Composition({1, 2}), Composition({1, 2})).empty());
  CHECK(pct(Composition({2, 3}), Composition({2, 3})).size() == 1);
}

TEST_CASE("statistics") {
  const Tableau t{Composition({3, 4, 2, 3, 1}),
                  {{1, 1, 2}, {2, 3, 3, 5}, {3, 4}, {4, 4, 5}, {5}}};
  CHECK(p_stat(t) == 5);
  CHECK(m_stat(t) == 2);
  const std::vector<Tableau> list =
      pct(Composition({3, 4, 2, 3, 1}), Composition({2, 2, 3, 3, 3}));
  CHECK(std::find(list.begin(), list.end(), t) != list.end());

  const Tableau flat{Composition({3}), {{1, 1, 2}}};
  CHECK(p_stat(flat) == 1);
  CHECK(m_stat(flat) == 0);
}

TEST_CASE("weight sums") {
  CHECK(pct_weight_sum(Composition({3}), Composition({2, 1})) == 2);
  CHECK(pct_weight_sum(Composition({2, 1}), Composition({2, 1})) == 1);
  CHECK(pct_weight_sum(Composition({4, 2}), Composition({2, 2, 2})) == 12);
  CHECK(pct_weight_sum(Composition({2, 3}), Composition({2, 3})) == 1);
  /* content must lex-precede the shape */
  CHECK(pct_weight_sum(Composition({2, 2}), Composition({3, 1})) == 0);
  CHECK(pct_weight_sum(Composition({2, 2}), Composition({4})) == 0);
  CHECK_THROWS_AS(pct_weight_sum(Composition({2, 2}), Composition({2})),
                  std::invalid_argument);
}

TEST_CASE("standard fillings and chains") {
  CHECK(standard_pct(Composition({2, 1})) == 1);
  CHECK(standard_pct(Composition({2, 2})) == 1);
  CHECK(standard_pct(Composition({3, 2})) == 3);
  for (int n = 1; n <= 6; ++n)
    for (const Composition& beta : peak_compositions(n))
      CHECK(standard_pct(beta) == chain_count(beta));
  CHECK_THROWS_AS(chain_count(Composition({1, 2})), std::invalid_argument);
}

TEST_CASE("poset covers") {
  const std::vector<PosetEdge> c2 = poset_covers(Composition({2}));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].upper == Composition({3}));
  CHECK(c2[0].row == 1);
  CHECK(c2[1].upper == Composition({2, 1}));
  CHECK(c2[1].row == 2);

  const std::vector<PosetEdge> c21 = poset_covers(Composition({2, 1}));
  REQUIRE(c21.size() == 2);
  CHECK(c21[0].upper == Composition({3, 1}));
  CHECK(c21[1].upper == Composition({2, 2}));

  CHECK_THROWS_AS(poset_covers(Composition({1, 2})), std::invalid_argument);
}
