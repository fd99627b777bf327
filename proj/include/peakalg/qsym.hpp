#pragma once

#include <map>
#include <string>
#include <string_view>

#include "peakalg/composition.hpp"
#include "peakalg/nsym.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/* Quasisymmetric bases:
 *   M      monomial,
 *   F      fundamental,
 *   K      peak functions K_P, keyed by the peak composition with D = P,
 *   SStar  duals of the S basis,
 *   SBarStar  duals of the normalized basis 2^{-l} S (so 2^{l} SStar). */
enum class QBasis { M, F, K, SStar, SBarStar };

std::string_view qbasis_name(QBasis b);
QBasis qbasis_from_name(std::string_view s);

class QSymElement {
 public:
  explicit QSymElement(QBasis b) : basis_(b) {}

  static QSymElement monomial(QBasis b, Composition idx,
                              const Rational& c = Rational(1));

  void add(const Composition& idx, const Rational& c);
  void add_scaled(const QSymElement& other, const Rational& c);

  QBasis basis() const { return basis_; }
  const std::map<Composition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Composition& idx) const;

  QSymElement& operator*=(const Rational& c);

  bool same_terms(const QSymElement& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  QBasis basis_;
  std::map<Composition, Rational> terms_;
};

/* F_alpha = sum of M_beta over refinements beta of alpha; extended
 * linearly (input in the F basis). */
QSymElement f_to_m(const QSymElement& a);
QSymElement f_to_m_word(const Composition& alpha);

/* M -> F by Moebius inversion over coarsening. */
QSymElement m_to_f(const QSymElement& a);

/* K_P for P = D(alpha), alpha a peak composition:
 * over F: 2^{|P|+1} sum over beta with P inside D(beta) triangle (D(beta)+1);
 * over M: sum over beta with P inside D(beta) union (D(beta)+1) of
 * 2^{l(beta)} M_beta. */
QSymElement k_to_f(const Composition& alpha);
QSymElement k_to_m(const Composition& alpha);

/* vartheta: F_alpha -> K_{P(alpha)} (input in the F basis). */
QSymElement vartheta(const QSymElement& a);

/* Dual pairings.  <H,M>, <R,F> and [Pi,K] pair bases by equal index. */
Rational pairing_hm(const NSymElement& a, const QSymElement& f);
Rational pairing_rf(const NSymElement& a, const QSymElement& f);
Rational pairing_pik(const NSymElement& a, const QSymElement& f);

/* S*_alpha over M: coefficients are PCT weight sums with shape alpha. */
QSymElement qsqf_star_m(const Composition& alpha);

/* S*_alpha over F via inclusion-exclusion over coarsenings. */
QSymElement qsqf_star_f(const Composition& alpha);

/* 2^{l(alpha)} S*_alpha over M. */
QSymElement qsqf_bar_star_m(const Composition& alpha);

/* Writes a degree-n M-basis element over {K_P}; throws std::domain_error
 * when it is not in the peak quasisymmetric component. */
QSymElement expand_over_k(const QSymElement& a, int n);

}  // namespace peakalg
