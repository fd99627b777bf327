#pragma once

#include <string>
#include <vector>

#include "peakalg/composition.hpp"
#include "peakalg/rational.hpp"

namespace peakalg {

/* A filling of the (left-justified) diagram of shape with row i holding
 * shape[i] labels.  Rows are stored top to bottom. */
struct Tableau {
  Composition shape;
  std::vector<std::vector<int>> rows;

  bool operator==(const Tableau& o) const = default;
  std::string str() const;  // ASCII grid
};

/* beta covers-by-s test: |beta| = |alpha| + s, beta_i >= alpha_i on the
 * common prefix, and l(beta) <= l(alpha) + 1. */
bool subset_s(const Composition& alpha, const Composition& beta, int s);

/* Immaculate tableaux of the given shape and content: row-wise weakly
 * increasing, first column strictly increasing, content[v] copies of v+1.
 * Content parts must be positive and |shape| = |content|.
 * Deterministic order: row-reading-word lexicographic. */
std::vector<Tableau> immaculate_tableaux(const Composition& shape,
                                         const Composition& content);

/* Immaculate tableaux whose every label-prefix subdiagram is a peak
 * composition (trailing empty rows dropped).  Empty unless the shape is a
 * peak composition. */
std::vector<Tableau> pct(const Composition& shape, const Composition& content);

/* p(T) = sum over rows of (number of distinct labels - 1). */
int p_stat(const Tableau& t);

/* m(T) = number of first-column cells whose right and lower neighbors both
 * exist and carry equal labels. */
int m_stat(const Tableau& t);

/* sum over PCT(shape, content) of 2^{p(T) - m(T)}.  Zero when no tableau
 * exists (in particular unless content lex-precedes-or-equals shape). */
Rational pct_weight_sum(const Composition& shape, const Composition& content);

/* Number of PCT of the given peak shape with content 1^{|shape|}. */
long long standard_pct(const Composition& shape);

/* Number of maximal chains from (1) to shape in the peak-composition
 * poset; equals standard_pct(shape). */
long long chain_count(const Composition& shape);

/* Covers of alpha in the peak-composition poset: bump one part by 1 or
 * append a final part 1, staying a peak composition.  row is the 1-based
 * index of the changed part. */
struct PosetEdge {
  Composition lower;
  Composition upper;
  int row;

  bool operator==(const PosetEdge& o) const = default;
};

std::vector<PosetEdge> poset_covers(const Composition& alpha);

}  // namespace peakalg
