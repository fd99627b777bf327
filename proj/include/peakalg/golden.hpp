#pragma once

#include <vector>

#include "peakalg/composition.hpp"
#include "peakalg/nsqf.hpp"
#include "peakalg/qsym.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/* Frozen reference values the verification suites compare against:
 * the frozen transition tables for n = 3..6, the complete lists of
 * linear relations among the S_alpha for n <= 6, and two worked
 * expansions.  Everything here is data, no computation. */

/* Integer entry tables; rows/cols indexed by peak compositions lex. */
std::vector<std::vector<Rational>> golden_matrix(MatrixPair pair, int n);

/* One relation = a list of (coefficient, index word); each sums to the
 * zero element. */
using GoldenRelation = std::vector<std::pair<int, Composition>>;
std::vector<GoldenRelation> golden_relations(int n);  // n in 2..6

/* Q_{(2,2,2)} over the S basis. */
NSymElement golden_q222_in_s();

/* S*_{(3,2,1)} over M and over F. */
QSymElement golden_sstar_321_m();
QSymElement golden_sstar_321_f();

/* The p statistics of the 13 tableaux behind golden_q222_in_s, in
 * enumeration order (shapes lex, then row words lex). */
std::vector<int> golden_q222_p_stats();

}  // namespace peakalg
