#pragma once

#include <string>
#include <vector>

#include "peakalg/composition.hpp"
#include "peakalg/nsym.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/* The perp operator of K_{empty_k} acting on Q words:
 * Q_alpha -> sum over beta in N_0^{l(alpha)} with |beta| = k of
 * 2^{#positive parts of beta} Q_{alpha - beta}, negative entries killing
 * the term and zero entries dropped.  Input must be in the Q basis. */
NSymElement kperp(int k, const NSymElement& a);

/* Vertex operator Y_{-m} applied to a Q-basis element:
 * sum_{i>=0} (-1)^i Q_{m+i} * kperp(i, a) (finite: i up to the degree of
 * each homogeneous component). */
NSymElement vertex_y(int m, const NSymElement& a);

/* S_alpha = Y_{-a1} ... Y_{-ar}(1) for any integer vector, as a Q-basis
 * element.  This is the reference semantics. */
NSymElement nsqf(const IntVector& alpha);

/* Same value for genuine compositions, computed by the length recursion
 * with memoization (fast path used by the transition matrices). */
NSymElement nsqf_recursive(const Composition& alpha);

/* Pfaffian-style expansion over matching representatives; the index must
 * have even length (append a 0 first via pad_even for odd length). */
NSymElement nsqf_pfaffian(const IntVector& alpha);

IntVector pad_even(IntVector alpha);

/* Raising-operator expansion: finitely many raising matrices survive once
 * columns are bounded right to left. */
NSymElement nsqf_raising(const IntVector& alpha);

/* sum_{i=1}^{n-1} S_{(alpha, i, n-i)}: identically zero; returned
 * unevaluated-as-Q so callers can assert equals(.,0). */
NSymElement key_relation(const Composition& alpha, int n);

/* Right Pieri rule: S_alpha * Q_s = sum over beta from alpha by s
 * (subset_s) of 2^{l(beta' - alpha)} S_beta, beta' the truncation of beta
 * to l(alpha) parts.  Result in the S basis over general compositions. */
NSymElement pieri(const Composition& alpha, int s);

/* Pieri restricted to the peak-composition basis: alpha must be a peak
 * composition, the sum runs over peak beta only, and the exponent drops by
 * one when alpha ends in 1 and beta has an extra part. */
NSymElement pieri_peak(const Composition& alpha, int s);

/* Q_alpha over the S basis via peak-composition tableaux:
 * sum over peak beta >=lex alpha of pct_weight_sum(beta, alpha) S_beta. */
NSymElement q_to_nsqf(const Composition& alpha);

/* Same expansion assembled from immaculate chains (independent route). */
NSymElement q_to_nsqf_chain(const Composition& alpha);

/* Replaces each S index by its Q expansion (linear extension of nsqf). */
NSymElement expand_s(const NSymElement& a);

/* Writes a homogeneous degree-n element of the peak subalgebra over
 * {S_beta : beta peak composition of n}.  Throws std::domain_error when
 * the element is not in the subalgebra, std::invalid_argument when it is
 * not homogeneous of degree n. */
NSymElement expand_in_nsqf(const NSymElement& a, int n);

/* equals() after expanding any S-basis inputs to Q. */
bool equals_expanded(const NSymElement& a, const NSymElement& b);

/* Transition matrices between degree-n bases, rows/cols indexed by the
 * peak compositions of n in lex order. */
enum class MatrixPair { QS, QPi, SbarPi, PiSbar, SbarStarK };

MatrixPair matrix_pair_from_names(std::string_view rows, std::string_view cols);
std::string matrix_row_label(MatrixPair p);
std::string matrix_col_label(MatrixPair p);

struct TransitionMatrix {
  int n = 0;
  std::string rows, cols;
  std::vector<Composition> index;
  std::vector<std::vector<Rational>> entries;

  bool operator==(const TransitionMatrix& o) const = default;
};

/* Respects PEAKALG_CACHE_DIR: when set, results are stored as JSON keyed
 * by (n, pair, library version) and reloaded on later calls. */
TransitionMatrix transition_matrix(int n, MatrixPair pair);

}  // namespace peakalg
