#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#include "peakalg/golden.hpp"
#include "peakalg/nsqf.hpp"

using namespace peakalg;

namespace {

NSymElement monomial(Basis b, std::initializer_list<int> idx,
                     const Rational& c = Rational(1)) {
  return NSymElement::monomial(b, Composition(idx), c);
}

NSymElement q_terms(std::initializer_list<std::pair<Composition, int>> ts) {
  NSymElement e(Basis::Q);
  for (const auto& [idx, c] : ts) e.add(idx, Rational(c));
  return e;
}

NSymElement s_terms(std::initializer_list<std::pair<Composition, int>> ts) {
  NSymElement e(Basis::S);
  for (const auto& [idx, c] : ts) e.add(idx, Rational(c));
  return e;
}

const NSymElement kZero = NSymElement(Basis::Q);

}  // namespace

TEST_CASE("kperp") {
  const NSymElement q2 = monomial(Basis::Q, {2});
  CHECK(kperp(0, q2).same_terms(q2));
  CHECK(kperp(1, q2).same_terms(q_terms({{Composition({1}), 2}})));
  CHECK(kperp(2, q2).same_terms(q_terms({{Composition(), 2}})));
  CHECK(kperp(3, q2).is_zero());

  const NSymElement q11 = monomial(Basis::Q, {1, 1});
  CHECK(kperp(1, q11).same_terms(q_terms({{Composition({1}), 4}})));
  CHECK(kperp(2, q11).same_terms(q_terms({{Composition(), 4}})));

  CHECK_THROWS_AS(kperp(1, monomial(Basis::H, {2})), std::invalid_argument);
  CHECK_THROWS_AS(kperp(-1, q2), std::invalid_argument);
}

TEST_CASE("vertex operators") {
  const NSymElement one = NSymElement::monomial(Basis::Q, Composition());
  CHECK(vertex_y(3, one).same_terms(monomial(Basis::Q, {3})));

  const NSymElement y1q1 = vertex_y(1, monomial(Basis::Q, {1}));
  CHECK(y1q1.same_terms(q_terms({{Composition({1, 1}), 1},
                                 {Composition({2}), -2}})));

  const NSymElement y2q2 = vertex_y(2, monomial(Basis::Q, {2}));
  CHECK(y2q2.same_terms(q_terms({{Composition({2, 2}), 1},
                                 {Composition({3, 1}), -2},
                                 {Composition({4}), 2}})));

  CHECK_THROWS_AS(vertex_y(1, monomial(Basis::H, {1})),
                  std::invalid_argument);
}

TEST_CASE("vertex route basics") {
  CHECK(nsqf({}).same_terms(NSymElement::monomial(Basis::Q, Composition())));
  CHECK(nsqf({0}).same_terms(NSymElement::monomial(Basis::Q, Composition())));
  CHECK(nsqf({3}).same_terms(monomial(Basis::Q, {3})));
  CHECK(nsqf({-1}).is_zero());

  /* (1,1) collapses to zero, and so does anything built on top of it */
  CHECK(nsqf({1, 1}).same_terms(q_terms({{Composition({1, 1}), 1},
                                         {Composition({2}), -2}})));
  CHECK(equals(nsqf({1, 1}), kZero));
  CHECK(equals(nsqf({2, 1, 1}), kZero));
}

TEST_CASE("all four routes agree") {
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : compositions(n)) {
      const IntVector w(a.parts().begin(), a.parts().end());
      const NSymElement ref = nsqf(w);
      CHECK(equals(ref, nsqf_recursive(a)));
      CHECK(equals(ref, nsqf_pfaffian(pad_even(w))));
      CHECK(equals(ref, nsqf_raising(w)));
    }

  /* the pfaffian and raising routes also accept arbitrary integer words */
  const IntVector mixed{1, -2, 3};
  CHECK(equals(nsqf(mixed), nsqf_pfaffian(pad_even(mixed))));
  CHECK(equals(nsqf(mixed), nsqf_raising(mixed)));

  CHECK(equals(nsqf({2, 2, 1, 0}), nsqf({2, 2, 1})));
  CHECK(pad_even({2, 2, 1}) == IntVector({2, 2, 1, 0}));
  CHECK(pad_even({2, 2}) == IntVector({2, 2}));
  CHECK_THROWS_AS(nsqf_pfaffian({2, 2, 1}), std::invalid_argument);
}

TEST_CASE("key relations vanish") {
  CHECK(equals(key_relation(Composition(), 3), kZero));
  CHECK(equals(key_relation(Composition({2}), 4), kZero));
  CHECK(equals(key_relation(Composition({3, 2}), 5), kZero));
  CHECK_THROWS_AS(key_relation(Composition(), 1), std::invalid_argument);
}

TEST_CASE("right Pieri rule") {
  CHECK(pieri(Composition({2, 2}), 1)
            .same_terms(s_terms({{Composition({2, 2, 1}), 1},
                                 {Composition({2, 3}), 2},
                                 {Composition({3, 2}), 2}})));
  CHECK(pieri(Composition({2, 1}), 1)
            .same_terms(s_terms({{Composition({2, 1, 1}), 1},
                                 {Composition({2, 2}), 2},
                                 {Composition({3, 1}), 2}})));
  CHECK_THROWS_AS(pieri(Composition({2}), 0), std::invalid_argument);

  /* the rule really multiplies by Q_s */
  for (int s = 1; s <= 3; ++s)
    for (int m = 1; m <= 4; ++m)
      for (const Composition& a : compositions(m)) {
        const IntVector w(a.parts().begin(), a.parts().end());
        const NSymElement lhs =
            multiply(nsqf(w), NSymElement::monomial(Basis::Q,
                                                    Composition({s})));
        CHECK(equals(lhs, expand_s(pieri(a, s))));
      }
}

TEST_CASE("Pieri rule on peak compositions") {
  CHECK(pieri_peak(Composition({2, 1}), 1)
            .same_terms(s_terms({{Composition({2, 2}), 2},
                                 {Composition({3, 1}), 2}})));
  CHECK(pieri_peak(Composition({2, 2}), 1)
            .same_terms(s_terms({{Composition({2, 2, 1}), 1},
                                 {Composition({2, 3}), 2},
                                 {Composition({3, 2}), 2}})));
  /* trailing 1 lowers the exponent when a row is added */
  CHECK(pieri_peak(Composition({2, 1}), 2)
            .same_terms(s_terms({{Composition({2, 2, 1}), 1},
                                 {Composition({2, 3}), 2},
                                 {Composition({3, 2}), 4},
                                 {Composition({4, 1}), 2}})));
  CHECK_THROWS_AS(pieri_peak(Composition({1, 2}), 1), std::invalid_argument);

  for (int s = 1; s <= 3; ++s)
    for (int m = 1; m <= 5; ++m)
      for (const Composition& a : peak_compositions(m))
        CHECK(equals_expanded(pieri_peak(a, s), pieri(a, s)));
}

TEST_CASE("Q words over the S basis") {
  CHECK(q_to_nsqf(Composition({2, 1}))
            .same_terms(s_terms({{Composition({2, 1}), 1},
                                 {Composition({3}), 2}})));
  CHECK(q_to_nsqf(Composition({5}))
            .same_terms(monomial(Basis::S, {5})));
  CHECK(q_to_nsqf(Composition({2, 2}))
            .same_terms(s_terms({{Composition({2, 2}), 1},
                                 {Composition({3, 1}), 2},
                                 {Composition({4}), 2}})));
  CHECK(q_to_nsqf(Composition({2, 2, 2})).same_terms(golden_q222_in_s()));

  for (int n = 1; n <= 5; ++n)
    for (const Composition& a : compositions(n)) {
      CHECK(q_to_nsqf(a).same_terms(q_to_nsqf_chain(a)));
      CHECK(equals(expand_s(q_to_nsqf(a)),
                   NSymElement::monomial(Basis::Q, a)));
    }
}

TEST_CASE("expansion over the S basis") {
  CHECK(expand_in_nsqf(monomial(Basis::Q, {2, 2}), 4)
            .same_terms(s_terms({{Composition({2, 2}), 1},
                                 {Composition({3, 1}), 2},
                                 {Composition({4}), 2}})));

  for (const Composition& beta : peak_compositions(5))
    CHECK(expand_in_nsqf(nsqf_recursive(beta), 5)
              .same_terms(NSymElement::monomial(Basis::S, beta)));

  CHECK_THROWS_AS(expand_in_nsqf(monomial(Basis::H, {2}), 2),
                  std::domain_error);
  CHECK_THROWS_AS(expand_in_nsqf(monomial(Basis::Q, {2, 1}), 4),
                  std::invalid_argument);

  CHECK(equals_expanded(monomial(Basis::S, {2, 1}),
                        q_terms({{Composition({2, 1}), 1},
                                 {Composition({3}), -2}})));
}

TEST_CASE("transition matrices") {
  CHECK(matrix_pair_from_names("Q", "S") == MatrixPair::QS);
  CHECK(matrix_pair_from_names("Sbar", "Pi") == MatrixPair::SbarPi);
  CHECK_THROWS_AS(matrix_pair_from_names("Q", "R"), std::invalid_argument);

  const TransitionMatrix m = transition_matrix(5, MatrixPair::QS);
  CHECK(m.n == 5);
  CHECK(m.rows == "Q");
  CHECK(m.cols == "S");
  CHECK(m.index == peak_compositions(5));
  const std::vector<Rational> row0 = {Rational(1), Rational(2), Rational(6),
                                      Rational(6), Rational(4)};
  CHECK(m.entries[0] == row0);

  CHECK_THROWS_AS(transition_matrix(0, MatrixPair::QS),
                  std::invalid_argument);
}

TEST_CASE("matrix cache") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "peakalg_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  setenv("PEAKALG_CACHE_DIR", dir.c_str(), 1);

  const TransitionMatrix fresh = transition_matrix(4, MatrixPair::PiSbar);
  bool wrote = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    wrote = wrote || entry.path().extension() == ".json";
  CHECK(wrote);

  const TransitionMatrix reloaded = transition_matrix(4, MatrixPair::PiSbar);
  CHECK(fresh == reloaded);

  unsetenv("PEAKALG_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
