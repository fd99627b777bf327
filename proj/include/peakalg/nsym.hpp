#pragma once

#include <map>
#include <string>
#include <string_view>

#include "peakalg/composition.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/* Bases of NSym handled here:
 *   H  complete homogeneous (the normal form for equality),
 *   E  elementary,
 *   R  ribbon,
 *   Q  noncommutative q (generators of the peak subalgebra),
 *   Pi peak functions Pi_P, keyed by the peak composition with D = P,
 *   S  the Schur-Q analogue basis of the peak subalgebra.
 * H, E, Q are multiplicative: products concatenate index words. */
enum class Basis { H, E, R, Q, Pi, S };

std::string_view basis_name(Basis b);
Basis basis_from_name(std::string_view s);
bool is_multiplicative(Basis b);

/* A finitely supported map Composition -> Rational tagged with a basis.
 * Terms iterate in lexicographic index order; zero coefficients are never
 * stored.  The empty composition carries scalars. */
class NSymElement {
 public:
  explicit NSymElement(Basis b) : basis_(b) {}

  static NSymElement zero(Basis b) { return NSymElement(b); }
  static NSymElement monomial(Basis b, Composition idx,
                              const Rational& c = Rational(1));

  /* Builds a term from a raw integer word using the convention of the
   * multiplicative bases: entries equal to 0 are dropped (X_0 = 1) and a
   * negative entry annihilates the whole term. */
  void add_word(const IntVector& word, const Rational& c);

  void add(const Composition& idx, const Rational& c);
  void add_scaled(const NSymElement& other, const Rational& c);

  Basis basis() const { return basis_; }
  const std::map<Composition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Composition& idx) const;
  int size() const { return static_cast<int>(terms_.size()); }

  /* Largest |index| among terms; 0 for scalars and zero. */
  int degree() const;

  NSymElement& operator*=(const Rational& c);
  NSymElement operator+(const NSymElement& o) const;
  NSymElement operator-(const NSymElement& o) const;

  bool same_terms(const NSymElement& o) const {
    return basis_ == o.basis_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  Basis basis_;
  std::map<Composition, Rational> terms_;
};

NSymElement operator*(const Rational& c, const NSymElement& e);

/* Concatenation product.  Both factors must share a multiplicative basis
 * (H, E or Q); anything else throws std::invalid_argument. */
NSymElement multiply(const NSymElement& a, const NSymElement& b);

/* Expansion in the H basis.  Defined for every basis: E and Q go through
 * the per-degree generator tables, R through descent-set coarsening, Pi
 * through its ribbon fiber and S through the vertex-operator expansion. */
NSymElement to_h(const NSymElement& a);

/* H -> E and H -> R conversions (inputs in any basis are first normalized
 * to H). */
NSymElement to_e(const NSymElement& a);
NSymElement to_r(const NSymElement& a);

/* Exact equality of the underlying elements, decided in H coordinates. */
bool equals(const NSymElement& a, const NSymElement& b);

/* sum_{i+j=n} (-1)^i H_i H_j (H_0 = 1) for even n >= 2, left unevaluated.
 * Lies in the kernel of theta; throws std::invalid_argument for odd n. */
NSymElement euler_element(int n);

/* Catalan number C_k. */
Integer catalan(int k);

/* For even n >= 2: the expansion of Q_n over Q-words with odd parts,
 * coefficient (-1)^{l/2-1} C_{l/2-1} 2^{1-l} on each odd word of length l. */
NSymElement q_even_expansion(int n);

namespace detail {

/* Dense H coordinates of one element, one vector per homogeneous degree.
 * Index = descent bitmask: bit j (0-based) set iff j+1 is a descent, so a
 * degree-d component has 2^{d-1} slots.  Degree 0 is the scalar. */
struct DenseH {
  Rational scalar;
  std::map<int, std::vector<Rational>> by_degree;

  void add_mask(int degree, std::uint32_t mask, const Rational& c);
  bool is_zero() const;
};

DenseH to_dense_h(const NSymElement& a);
Composition mask_to_composition(std::uint32_t mask, int degree);
std::uint32_t composition_to_mask(const Composition& a);

/* Dense H coordinates of the degree-n component of a, as a flat vector of
 * length 2^{n-1} (zero vector if a has no such component). */
std::vector<Rational> dense_h_component(const NSymElement& a, int n);

}  // namespace detail

}  // namespace peakalg
