#include "peakalg/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace peakalg {

std::string Tableau::str() const {
  std::string s;
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(row[j]);
    }
    s += '\n';
  }
  return s;
}

bool subset_s(const Composition& alpha, const Composition& beta, int s) {
  if (s < 0) throw std::invalid_argument("subset_s needs s >= 0");
  if (beta.weight() != alpha.weight() + s) return false;
  if (beta.length() < alpha.length() ||
      beta.length() > alpha.length() + 1)
    return false;
  for (int i = 0; i < alpha.length(); ++i)
    if (beta[i] < alpha[i]) return false;
  return true;
}

namespace {

struct FillState {
  const Composition* shape;
  const Composition* content;
  bool peak_only = false;
  std::vector<int> filled;      // cells used so far per row
  std::vector<std::vector<int>> rows;
  std::vector<Tableau>* out;
};

/* Places all copies of label v (values are filled in increasing order, so
 * row-weak-increase is automatic).  Rows in use always form a prefix; at
 * most one new row may open per label or the first column would repeat. */
void place_label(FillState& st, int v, int remaining, int row, bool opened);

void next_label(FillState& st, int v) {
  if (st.peak_only) {
    /* every label-prefix diagram must be a peak composition */
    std::vector<int> prefix;
    for (int f : st.filled)
      if (f > 0) prefix.push_back(f);
    for (size_t i = 0; i + 1 < prefix.size(); ++i)
      if (prefix[i] < 2) return;
  }
  if (v > st.content->length()) {
    for (int i = 0; i < st.shape->length(); ++i)
      if (st.filled[static_cast<size_t>(i)] != (*st.shape)[i]) return;
    Tableau t;
    t.shape = *st.shape;
    t.rows = st.rows;
    st.out->push_back(std::move(t));
    return;
  }
  place_label(st, v, (*st.content)[v - 1], 0, false);
}

void place_label(FillState& st, int v, int remaining, int row, bool opened) {
  if (remaining == 0) {
    next_label(st, v + 1);
    return;
  }
  if (row >= st.shape->length()) return;
  const size_t r = static_cast<size_t>(row);
  const int cap = (*st.shape)[row] - st.filled[r];
  const bool row_open = st.filled[r] > 0;
  const bool prev_open = row == 0 || st.filled[r - 1] > 0;
  int max_here = 0;
  if (row_open) {
    max_here = std::min(cap, remaining);
  } else if (prev_open && !opened) {
    /* opening this row: allowed once per label, and only right below an
     * already-started row (first column must strictly increase) */
    max_here = std::min(cap, remaining);
  }
  for (int take = max_here; take >= 0; --take) {
    const bool opens = take > 0 && !row_open;
    st.filled[r] += take;
    for (int k = 0; k < take; ++k) st.rows[r].push_back(v);
    place_label(st, v, remaining - take, row + 1, opened || opens);
    for (int k = 0; k < take; ++k) st.rows[r].pop_back();
    st.filled[r] -= take;
  }
}

void check_shape_content(const Composition& shape, const Composition& content) {
  if (shape.weight() != content.weight())
    throw std::invalid_argument("|shape| = " + std::to_string(shape.weight()) +
                                " and |content| = " +
                                std::to_string(content.weight()) + " differ");
}

bool row_word_less(const Tableau& a, const Tableau& b) {
  std::vector<int> wa, wb;
  for (const auto& r : a.rows) wa.insert(wa.end(), r.begin(), r.end());
  for (const auto& r : b.rows) wb.insert(wb.end(), r.begin(), r.end());
  return wa < wb;
}

std::vector<Tableau> enumerate_fillings(const Composition& shape,
                                        const Composition& content,
                                        bool peak_only) {
  check_shape_content(shape, content);
  std::vector<Tableau> out;
  if (shape.empty()) {
    out.push_back(Tableau{shape, {}});
    return out;
  }
  FillState st;
  st.shape = &shape;
  st.content = &content;
  st.peak_only = peak_only;
  st.filled.assign(static_cast<size_t>(shape.length()), 0);
  st.rows.assign(static_cast<size_t>(shape.length()), {});
  st.out = &out;
  next_label(st, 1);
  std::sort(out.begin(), out.end(), row_word_less);
  return out;
}

}  // namespace

std::vector<Tableau> immaculate_tableaux(const Composition& shape,
                                         const Composition& content) {
  return enumerate_fillings(shape, content, false);
}

std::vector<Tableau> pct(const Composition& shape, const Composition& content) {
  if (!is_peak_composition(shape)) {
    check_shape_content(shape, content);
    return {};
  }
  return enumerate_fillings(shape, content, true);
}

int p_stat(const Tableau& t) {
  int p = 0;
  for (const auto& row : t.rows) {
    int distinct = 0;
    for (size_t j = 0; j < row.size(); ++j)
      if (j == 0 || row[j] != row[j - 1]) ++distinct;
    if (distinct > 0) p += distinct - 1;
  }
  return p;
}

int m_stat(const Tableau& t) {
  int m = 0;
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    if (t.rows[i].size() < 2) continue;
    if (t.rows[i + 1].empty()) continue;
    if (t.rows[i][1] == t.rows[i + 1][0]) ++m;
  }
  return m;
}

Rational pct_weight_sum(const Composition& shape, const Composition& content) {
  static std::map<std::pair<Composition, Composition>, Rational> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({shape, content});
    if (it != cache.end()) return it->second;
  }
  Rational sum(0);
  for (const Tableau& t : pct(shape, content))
    sum += pow2(p_stat(t) - m_stat(t));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(shape, content), sum);
  return sum;
}

long long standard_pct(const Composition& shape) {
  const int n = shape.weight();
  std::vector<int> ones(static_cast<size_t>(n), 1);
  return static_cast<long long>(pct(shape, Composition(ones)).size());
}

long long chain_count(const Composition& shape) {
  if (!is_peak_composition(shape))
    throw std::invalid_argument("chain_count needs a peak composition");
  if (shape.weight() == 1) return 1;
  /* sum over lower covers */
  long long total = 0;
  const auto& p = shape.parts();
  for (size_t i = 0; i < p.size(); ++i) {
    std::vector<int> lower = p;
    if (lower[i] == 1) {
      if (i + 1 != p.size()) continue;
      lower.pop_back();
    } else {
      lower[i] -= 1;
    }
    Composition lc(lower);
    if (!is_peak_composition(lc)) continue;
    total += chain_count(lc);
  }
  return total;
}

std::vector<PosetEdge> poset_covers(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("poset_covers needs a peak composition");
  std::vector<PosetEdge> out;
  const auto& p = alpha.parts();
  for (size_t i = 0; i < p.size(); ++i) {
    std::vector<int> upper = p;
    upper[i] += 1;
    Composition uc(upper);
    if (is_peak_composition(uc))
      out.push_back({alpha, uc, static_cast<int>(i) + 1});
  }
  {
    std::vector<int> upper = p;
    upper.push_back(1);
    Composition uc(upper);
    if (is_peak_composition(uc))
      out.push_back({alpha, uc, static_cast<int>(p.size()) + 1});
  }
  return out;
}

}  // namespace peakalg
