#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "peakalg/nsym.hpp"

using namespace peakalg;

namespace {

NSymElement h_terms(std::initializer_list<std::pair<Composition, int>> ts) {
  NSymElement e(Basis::H);
  for (const auto& [idx, c] : ts) e.add(idx, Rational(c));
  return e;
}

}  // namespace

TEST_CASE("element arithmetic") {
  NSymElement e(Basis::H);
  e.add_word({2, 0, 1}, Rational(3));  /* zero entries are dropped */
  CHECK(e.coeff(Composition({2, 1})) == 3);
  e.add_word({1, -1, 1}, Rational(5)); /* negative entries kill the term */
  CHECK(e.size() == 1);
  e.add(Composition({2, 1}), Rational(-3));
  CHECK(e.is_zero());

  NSymElement a = NSymElement::monomial(Basis::H, Composition({2, 2, 1}));
  CHECK(a.degree() == 5);
  a *= Rational(3);
  CHECK(a.coeff(Composition({2, 2, 1})) == 3);
  const NSymElement b = a - a;
  CHECK(b.is_zero());
  CHECK(b.degree() == 0);
  const NSymElement c = a + a;
  CHECK(c.coeff(Composition({2, 2, 1})) == 6);

  NSymElement scalar = NSymElement::monomial(Basis::Q, Composition());
  CHECK(scalar.degree() == 0);
  CHECK(!scalar.is_zero());

  CHECK_THROWS_AS(a.add_scaled(scalar, Rational(1)), std::invalid_argument);
}

TEST_CASE("basis names") {
  CHECK(basis_name(Basis::Pi) == "Pi");
  CHECK(basis_from_name("S") == Basis::S);
  CHECK_THROWS_AS(basis_from_name("x"), std::invalid_argument);
  CHECK(is_multiplicative(Basis::Q));
  CHECK(!is_multiplicative(Basis::R));
}

TEST_CASE("printing") {
  CHECK(NSymElement(Basis::H).str() == "0");
  CHECK(euler_element(2).str() == "-1*H[1,1] + 2*H[2]");
}

TEST_CASE("concatenation product") {
  const NSymElement h2 = NSymElement::monomial(Basis::H, Composition({2}));
  const NSymElement h11 = NSymElement::monomial(Basis::H, Composition({1, 1}));
  const NSymElement prod = multiply(h2, h11);
  CHECK(prod.size() == 1);
  CHECK(prod.coeff(Composition({2, 1, 1})) == 1);

  const NSymElement q2 = NSymElement::monomial(Basis::Q, Composition({2}), 3);
  const NSymElement q1 = NSymElement::monomial(Basis::Q, Composition({1}), 2);
  CHECK(multiply(q2, q1).coeff(Composition({2, 1})) == 6);

  const NSymElement r = NSymElement::monomial(Basis::R, Composition({2}));
  CHECK_THROWS_AS(multiply(r, r), std::invalid_argument);
  CHECK_THROWS_AS(multiply(h2, q2), std::invalid_argument);
}

TEST_CASE("expansion into H") {
  const NSymElement e2 = NSymElement::monomial(Basis::E, Composition({2}));
  CHECK(to_h(e2).same_terms(h_terms({{Composition({1, 1}), 1},
                                     {Composition({2}), -1}})));

  const NSymElement q1 = NSymElement::monomial(Basis::Q, Composition({1}));
  CHECK(to_h(q1).same_terms(h_terms({{Composition({1}), 2}})));

  const NSymElement q2 = NSymElement::monomial(Basis::Q, Composition({2}));
  CHECK(to_h(q2).same_terms(h_terms({{Composition({1, 1}), 2}})));

  const NSymElement q3 = NSymElement::monomial(Basis::Q, Composition({3}));
  CHECK(to_h(q3).same_terms(h_terms({{Composition({1, 1, 1}), 2},
                                     {Composition({2, 1}), -2},
                                     {Composition({3}), 2}})));

  const NSymElement r21 = NSymElement::monomial(Basis::R, Composition({2, 1}));
  CHECK(to_h(r21).same_terms(h_terms({{Composition({2, 1}), 1},
                                      {Composition({3}), -1}})));

  /* Pi_{(2,1)} is the sum of the single ribbon with peak set {2} */
  const NSymElement pi21 =
      NSymElement::monomial(Basis::Pi, Composition({2, 1}));
  CHECK(to_h(pi21).same_terms(to_h(r21)));

  const NSymElement pi_bad =
      NSymElement::monomial(Basis::Pi, Composition({1, 2}));
  CHECK_THROWS_AS(to_h(pi_bad), std::invalid_argument);

  const NSymElement s21 = NSymElement::monomial(Basis::S, Composition({2, 1}));
  CHECK(to_h(s21).same_terms(h_terms({{Composition({2, 1}), 4},
                                      {Composition({3}), -4}})));

  const NSymElement one = NSymElement::monomial(Basis::Q, Composition());
  CHECK(to_h(one).same_terms(h_terms({{Composition(), 1}})));
}

TEST_CASE("roundtrips through H") {
  for (int n = 1; n <= 5; ++n)
    for (const Composition& a : compositions(n)) {
      const NSymElement e = NSymElement::monomial(Basis::E, a);
      CHECK(to_e(to_h(e)).same_terms(e));
      const NSymElement r = NSymElement::monomial(Basis::R, a);
      CHECK(to_r(to_h(r)).same_terms(r));
    }
}

TEST_CASE("equality is decided in H coordinates") {
  const NSymElement q11 = NSymElement::monomial(Basis::Q, Composition({1, 1}));
  const NSymElement q2 = NSymElement::monomial(Basis::Q, Composition({2}), 2);
  CHECK(equals(q11, q2));
  CHECK(!q11.same_terms(q2));
  CHECK(!equals(q11, NSymElement::monomial(Basis::Q, Composition({2}))));

  const NSymElement r21 = NSymElement::monomial(Basis::R, Composition({2, 1}));
  CHECK(equals(r21, h_terms({{Composition({2, 1}), 1},
                             {Composition({3}), -1}})));
}

TEST_CASE("euler element") {
  const NSymElement e2 = euler_element(2);
  CHECK(e2.basis() == Basis::H);
  CHECK(e2.same_terms(h_terms({{Composition({1, 1}), -1},
                               {Composition({2}), 2}})));

  const NSymElement e4 = euler_element(4);
  CHECK(e4.same_terms(h_terms({{Composition({1, 3}), -1},
                               {Composition({2, 2}), 1},
                               {Composition({3, 1}), -1},
                               {Composition({4}), 2}})));

  CHECK_THROWS_AS(euler_element(3), std::invalid_argument);
  CHECK_THROWS_AS(euler_element(0), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("even Q generators over odd words") {
  const NSymElement g2 = q_even_expansion(2);
  CHECK(g2.size() == 1);
  CHECK(g2.coeff(Composition({1, 1})) == Rational(1, 2));
  CHECK(equals(g2, NSymElement::monomial(Basis::Q, Composition({2}))));

  const NSymElement g4 = q_even_expansion(4);
  CHECK(g4.size() == 3);
  CHECK(g4.coeff(Composition({1, 3})) == Rational(1, 2));
  CHECK(g4.coeff(Composition({3, 1})) == Rational(1, 2));
  CHECK(g4.coeff(Composition({1, 1, 1, 1})) == Rational(-1, 8));
  CHECK(equals(g4, NSymElement::monomial(Basis::Q, Composition({4}))));

  CHECK_THROWS_AS(q_even_expansion(3), std::invalid_argument);
}

TEST_CASE("dense H coordinates") {
  CHECK(detail::mask_to_composition(0, 3) == Composition({3}));
  CHECK(detail::mask_to_composition(2, 3) == Composition({2, 1}));
  for (const Composition& a : compositions(6))
    CHECK(detail::mask_to_composition(detail::composition_to_mask(a), 6) == a);

  const NSymElement q3 = NSymElement::monomial(Basis::Q, Composition({3}));
  const std::vector<Rational> v = detail::dense_h_component(q3, 3);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 2);                 /* H_{(3)} */
  CHECK(v[2] == -2);                /* H_{(2,1)} */
  CHECK(detail::dense_h_component(q3, 2) ==
        std::vector<Rational>(2, Rational(0)));

  /* the dense engine refuses degrees past its bound */
  const NSymElement big = NSymElement::monomial(Basis::Q, Composition({23}));
  CHECK_THROWS_AS(to_h(big), std::runtime_error);
}
