#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "peakalg/peak.hpp"

using namespace peakalg;

namespace {

NSymElement monomial(Basis b, std::initializer_list<int> idx,
                     const Rational& c = Rational(1)) {
  return NSymElement::monomial(b, Composition(idx), c);
}

}  // namespace

TEST_CASE("peak functions as ribbon sums") {
  NSymElement expect(Basis::R);
  expect.add(Composition({1, 1}), Rational(1));
  expect.add(Composition({2}), Rational(1));
  CHECK(pi_in_ribbons(PeakSet({}, 2)).same_terms(expect));

  CHECK(pi_in_ribbons(PeakSet({2}, 3))
            .same_terms(monomial(Basis::R, {2, 1})));

  NSymElement expect3(Basis::R);
  expect3.add(Composition({1, 1, 1}), Rational(1));
  expect3.add(Composition({1, 2}), Rational(1));
  expect3.add(Composition({3}), Rational(1));
  CHECK(pi_in_ribbons(PeakSet({}, 3)).same_terms(expect3));
}

TEST_CASE("theta sends H words to Q words") {
  CHECK(theta(monomial(Basis::H, {2, 1}))
            .same_terms(monomial(Basis::Q, {2, 1})));

  NSymElement expect(Basis::Q);
  expect.add(Composition({2, 1}), Rational(1));
  expect.add(Composition({3}), Rational(-1));
  CHECK(theta(to_h(monomial(Basis::R, {2, 1}))).same_terms(expect));

  CHECK_THROWS_AS(theta(monomial(Basis::R, {2, 1})), std::invalid_argument);

  const NSymElement zero(Basis::Q);
  CHECK(equals(theta(euler_element(2)), zero));
  CHECK(equals(theta(euler_element(4)), zero));
  CHECK(equals(theta(euler_element(6)), zero));
}

TEST_CASE("theta of a ribbon over the peak basis") {
  CHECK(theta_ribbon(Composition({3}))
            .same_terms(monomial(Basis::Pi, {3}, 2)));

  NSymElement expect(Basis::Pi);
  expect.add(Composition({2, 1}), Rational(4));
  expect.add(Composition({3}), Rational(2));
  CHECK(theta_ribbon(Composition({2, 1})).same_terms(expect));

  for (int n = 1; n <= 5; ++n)
    for (const Composition& a : compositions(n))
      CHECK(equals(theta_ribbon(a),
                   theta(to_h(NSymElement::monomial(Basis::R, a)))));
}

TEST_CASE("Q words over the peak basis") {
  NSymElement expect(Basis::Pi);
  expect.add(Composition({2, 2}), Rational(4));
  expect.add(Composition({3, 1}), Rational(4));
  expect.add(Composition({4}), Rational(4));
  CHECK(q_to_pi(Composition({2, 2})).same_terms(expect));

  NSymElement e221(Basis::Pi);
  for (const Composition& beta : peak_compositions(5))
    e221.add(beta, Rational(8));
  CHECK(q_to_pi(Composition({2, 2, 1})).same_terms(e221));

  CHECK(q_to_pi(Composition({1, 1}))
            .same_terms(monomial(Basis::Pi, {2}, 4)));

  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : compositions(n))
      CHECK(equals(q_to_pi(a), NSymElement::monomial(Basis::Q, a)));
}

TEST_CASE("peak functions over odd Q words") {
  const NSymElement pi5 = pi_in_q_odd(PeakSet({}, 5));
  CHECK(pi5.size() == 1);
  CHECK(pi5.coeff(Composition({5})) == Rational(1, 2));

  for (int n = 1; n <= 6; ++n)
    for (const PeakSet& p : peak_sets(n)) {
      const NSymElement expanded = pi_in_q_odd(p);
      for (const auto& [idx, c] : expanded.terms())
        for (int part : idx.parts()) CHECK(part % 2 == 1);

      std::set<int> d(p.elems().begin(), p.elems().end());
      const NSymElement pi = NSymElement::monomial(
          Basis::Pi, Composition::from_descents(d, n));
      CHECK(equals(expanded, pi));
      CHECK(q_element_to_pi(expanded).same_terms(pi));
    }
}

TEST_CASE("odd Q coordinates") {
  const std::vector<Rational> c =
      odd_q_coordinates(monomial(Basis::Q, {5}), 5);
  /* odd compositions of 5, lex: 11111, 113, 131, 311, 5 */
  REQUIRE(c.size() == 5);
  for (size_t i = 0; i + 1 < c.size(); ++i) CHECK(c[i] == 0);
  CHECK(c[4] == 1);

  CHECK_THROWS_AS(odd_q_coordinates(monomial(Basis::H, {2}), 2),
                  std::domain_error);
}
