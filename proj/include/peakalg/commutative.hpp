#pragma once

#include <map>
#include <string>
#include <vector>

#include "peakalg/composition.hpp"
#include "peakalg/nsym.hpp"
#include "peakalg/qsym.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/* Image of NSym in the commutative world: formal words in either the h or
 * the q generators, indexed by partitions.  These words are NOT linearly
 * independent (q_1^2 = 2 q_2), so element equality must go through the
 * polynomial oracle below. */
enum class SymGen { h, q };

struct SymElement {
  SymGen gen = SymGen::h;
  std::map<Partition, Rational> terms;

  void add(const Partition& idx, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  int degree() const;
  std::string str() const;
};

/* The forgetful map pi: sorts each index word.  H -> h words, Q -> q
 * words; other bases must be converted first. */
SymElement forget(const NSymElement& a);

/* h -> q relabeling (the commutative image of Theta). */
SymElement theta_sym(const SymElement& a);

/* Polynomials in x_1..x_k truncated beyond max_degree; the faithful
 * evaluation oracle for everything commutative. */
struct TruncatedPolynomial {
  int k = 0;
  int max_degree = 0;
  std::map<std::vector<int>, Rational> terms;  // exponent vectors, length k

  bool operator==(const TruncatedPolynomial& o) const = default;
  bool is_zero() const { return terms.empty(); }
};

TruncatedPolynomial poly_zero(int k, int max_degree);
TruncatedPolynomial poly_add(const TruncatedPolynomial& a,
                             const TruncatedPolynomial& b);
TruncatedPolynomial poly_scale(const TruncatedPolynomial& a,
                               const Rational& c);
TruncatedPolynomial poly_mul(const TruncatedPolynomial& a,
                             const TruncatedPolynomial& b);

/* q_r(x_1..x_k): degree-r coefficient of prod_i (1+x_i z)/(1-x_i z). */
TruncatedPolynomial q_gen_poly(int r, int k);

/* h_r(x_1..x_k). */
TruncatedPolynomial h_gen_poly(int r, int k);

/* Evaluates a SymElement in k variables.  Faithful on degree <= k; when
 * k is smaller, *faithful (if given) is set false. */
TruncatedPolynomial eval_sym(const SymElement& a, int k,
                             bool* faithful = nullptr);

/* Evaluates a QSym element (M or F basis) in k variables via
 * M_alpha -> sum over i_1 < ... < i_r <= k. */
TruncatedPolynomial eval_qsym(const QSymElement& a, int k,
                              bool* faithful = nullptr);

bool sym_equal(const SymElement& a, const SymElement& b, int k);

/* Ordinary-diagram horizontal strips lambda/mu of size s on strict
 * partitions, with b = #{i >= 1 : strip meets column i+1 but not i}. */
struct StripTerm {
  Partition lambda;
  int b = 0;

  bool operator==(const StripTerm& o) const = default;
};

std::vector<StripTerm> horizontal_strips(const Partition& mu, int s);

/* Checks pi(S_mu) q_s = sum over strips of 2^b pi(S_lambda) in the
 * polynomial oracle with k variables. */
bool classical_pieri_check(const Partition& mu, int s, int k);

/* Checks S'_lambda = sum over peak rearrangements alpha of lambda of
 * sign(alpha) S*_alpha for strict lambda (S' = 2^{-l} S on the dual side),
 * i.e. theta of the Schur-P expansion, in k variables. */
bool schur_p_refinement_check(const Partition& lambda, int k);

}  // namespace peakalg
