#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "peakalg/commutative.hpp"

using namespace peakalg;

TEST_CASE("forgetful map") {
  const SymElement h = forget(NSymElement::monomial(Basis::H,
                                                    Composition({1, 2})));
  CHECK(h.gen == SymGen::h);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms.begin()->first == Partition({2, 1}));
  CHECK(h.terms.begin()->second == 1);

  const SymElement q = forget(NSymElement::monomial(Basis::Q,
                                                    Composition({2, 3})));
  CHECK(q.gen == SymGen::q);
  CHECK(q.terms.begin()->first == Partition({3, 2}));

  CHECK_THROWS_AS(forget(NSymElement::monomial(Basis::R, Composition({2}))),
                  std::invalid_argument);

  const SymElement theta_image = theta_sym(h);
  CHECK(theta_image.gen == SymGen::q);
  CHECK(theta_image.terms == h.terms);
  CHECK_THROWS_AS(theta_sym(q), std::invalid_argument);
}

TEST_CASE("generator polynomials") {
  const TruncatedPolynomial q11 = q_gen_poly(1, 1);
  REQUIRE(q11.terms.size() == 1);
  CHECK(q11.terms.at(std::vector<int>{1}) == 2);

  const TruncatedPolynomial q21 = q_gen_poly(2, 1);
  REQUIRE(q21.terms.size() == 1);
  CHECK(q21.terms.at(std::vector<int>{2}) == 2);

  const TruncatedPolynomial q22 = q_gen_poly(2, 2);
  CHECK(q22.terms.at(std::vector<int>{2, 0}) == 2);
  CHECK(q22.terms.at(std::vector<int>{0, 2}) == 2);
  CHECK(q22.terms.at(std::vector<int>{1, 1}) == 4);

  const TruncatedPolynomial h22 = h_gen_poly(2, 2);
  CHECK(h22.terms.at(std::vector<int>{2, 0}) == 1);
  CHECK(h22.terms.at(std::vector<int>{0, 2}) == 1);
  CHECK(h22.terms.at(std::vector<int>{1, 1}) == 1);

  CHECK(q_gen_poly(0, 2).terms.at(std::vector<int>{0, 0}) == 1);
  CHECK_THROWS_AS(q_gen_poly(1, 0), std::invalid_argument);
}

TEST_CASE("evaluation") {
  SymElement q11;
  q11.gen = SymGen::q;
  q11.add(Partition({1, 1}), Rational(1));
  bool faithful = true;
  const TruncatedPolynomial v = eval_sym(q11, 1, &faithful);
  CHECK(!faithful);
  REQUIRE(v.terms.size() == 1);
  CHECK(v.terms.at(std::vector<int>{2}) == 4);
  eval_sym(q11, 2, &faithful);
  CHECK(faithful);

  SymElement q2;
  q2.gen = SymGen::q;
  q2.add(Partition({2}), Rational(2));
  CHECK(sym_equal(q11, q2, 3));
  CHECK(sym_equal(q11, q2, 1));

  const TruncatedPolynomial m2 =
      eval_qsym(QSymElement::monomial(QBasis::M, Composition({2})), 2);
  CHECK(m2.terms.at(std::vector<int>{2, 0}) == 1);
  CHECK(m2.terms.at(std::vector<int>{0, 2}) == 1);
  CHECK(m2.terms.size() == 2);

  const TruncatedPolynomial f11 =
      eval_qsym(QSymElement::monomial(QBasis::F, Composition({1, 1})), 2);
  CHECK(f11.terms.size() == 1);
  CHECK(f11.terms.at(std::vector<int>{1, 1}) == 1);

  CHECK_THROWS_AS(eval_qsym(QSymElement::monomial(QBasis::K,
                                                  Composition({2})),
                            2),
                  std::invalid_argument);
}

TEST_CASE("horizontal strips") {
  const std::vector<StripTerm> s1 = horizontal_strips(Partition({2}), 1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == StripTerm{Partition({2, 1}), 0});
  CHECK(s1[1] == StripTerm{Partition({3}), 1});

  const std::vector<StripTerm> s2 = horizontal_strips(Partition({2, 1}), 1);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == StripTerm{Partition({3, 1}), 1});

  const std::vector<StripTerm> s3 = horizontal_strips(Partition({3}), 2);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0] == StripTerm{Partition({3, 2}), 0});
  CHECK(s3[1] == StripTerm{Partition({4, 1}), 1});
  CHECK(s3[2] == StripTerm{Partition({5}), 1});

  CHECK_THROWS_AS(horizontal_strips(Partition({2, 2}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(horizontal_strips(Partition({2}), 0),
                  std::invalid_argument);
}

TEST_CASE("classical Pieri rule") {
  CHECK(classical_pieri_check(Partition({2}), 1, 3));
  CHECK(classical_pieri_check(Partition({2, 1}), 2, 5));
  CHECK(classical_pieri_check(Partition(), 2, 2));
  CHECK_THROWS_AS(classical_pieri_check(Partition({2, 2}), 1, 4),
                  std::invalid_argument);
}

TEST_CASE("Schur P refinement") {
  CHECK(schur_p_refinement_check(Partition({2, 1}), 3));
  CHECK(schur_p_refinement_check(Partition({3, 2}), 5));
  CHECK(schur_p_refinement_check(Partition({4}), 4));
  CHECK_THROWS_AS(schur_p_refinement_check(Partition({2, 2}), 4),
                  std::invalid_argument);
}

TEST_CASE("truncated polynomial algebra") {
  TruncatedPolynomial a = poly_zero(2, 2);
  a.terms.emplace(std::vector<int>{1, 0}, Rational(1));
  TruncatedPolynomial b = poly_zero(2, 2);
  b.terms.emplace(std::vector<int>{0, 2}, Rational(1));
  /* degree 3 exceeds the bound, so the product truncates to zero */
  CHECK(poly_mul(a, b).is_zero());
  CHECK(poly_add(a, b).terms.size() == 2);
  CHECK(poly_scale(a, Rational(0)).is_zero());
  CHECK_THROWS_AS(poly_add(a, poly_zero(3, 2)), std::invalid_argument);
}
