#pragma once

#include "peakalg/composition.hpp"
#include "peakalg/nsym.hpp"

namespace peakalg {

/* Pi_P = sum of R_gamma over compositions gamma of n with P(gamma) = P,
 * returned in the R basis. */
NSymElement pi_in_ribbons(const PeakSet& p);

/* The projection Theta: H_alpha -> Q_alpha, extended linearly.  Input must
 * be in the H basis (convert first). */
NSymElement theta(const NSymElement& a);

/* Theta(R_alpha) expanded directly over the Pi basis:
 * sum over peak compositions beta of n with D(beta) inside
 * D(alpha) triangle (D(alpha)+1), coefficient 2^{l(beta)}. */
NSymElement theta_ribbon(const Composition& alpha);

/* Q_alpha (any composition alpha) over the Pi basis:
 * 2^{l(alpha)} sum over peak compositions beta with D(beta) inside
 * D(alpha) union (D(alpha)+1). */
NSymElement q_to_pi(const Composition& alpha);

/* Linear extension of q_to_pi to Q-basis elements. */
NSymElement q_element_to_pi(const NSymElement& a);

/* Pi_P written over the Q basis with odd index words (the unique such
 * expression; found by exact elimination in H coordinates). */
NSymElement pi_in_q_odd(const PeakSet& p);

/* Coordinates of a degree-n element over {Q_gamma : gamma odd composition
 * of n}, in lex order of gamma.  Throws std::domain_error when the element
 * does not lie in the peak subalgebra component. */
std::vector<Rational> odd_q_coordinates(const NSymElement& a, int n);

}  // namespace peakalg
