#include "peakalg/nsqf.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#include "peakalg/json_io.hpp"
#include "peakalg/linalg.hpp"
#include "peakalg/peak.hpp"
#include "peakalg/tableaux.hpp"
#include "peakalg/version.hpp"

namespace peakalg {

namespace {

/* all beta in N_0^len with |beta| = total */
void weak_compositions_rec(int total, int len, std::vector<int>& stem,
                           const std::function<void(const std::vector<int>&)>& f) {
  if (len == 0) {
    if (total == 0) f(stem);
    return;
  }
  if (len == 1) {
    stem.push_back(total);
    f(stem);
    stem.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    stem.push_back(x);
    weak_compositions_rec(total - x, len - 1, stem, f);
    stem.pop_back();
  }
}

void for_weak_compositions(int total, int len,
                           const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> stem;
  stem.reserve(static_cast<size_t>(len));
  weak_compositions_rec(total, len, stem, f);
}

int positive_count(const std::vector<int>& v) {
  int c = 0;
  for (int x : v)
    if (x > 0) ++c;
  return c;
}

void split_by_degree(const NSymElement& a,
                     std::map<int, NSymElement>& parts) {
  for (const auto& [idx, c] : a.terms()) {
    auto it = parts.find(idx.weight());
    if (it == parts.end())
      it = parts.emplace(idx.weight(), NSymElement(a.basis())).first;
    it->second.add(idx, c);
  }
}

}  // namespace

NSymElement kperp(int k, const NSymElement& a) {
  if (a.basis() != Basis::Q)
    throw std::invalid_argument("kperp expects the Q basis");
  if (k < 0) throw std::invalid_argument("kperp needs k >= 0");
  if (k == 0) return a;
  NSymElement out(Basis::Q);
  for (const auto& [idx, c] : a.terms()) {
    const int r = idx.length();
    if (r == 0) continue;  // scalars are killed for k > 0
    for_weak_compositions(k, r, [&](const std::vector<int>& beta) {
      IntVector word(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i) word[static_cast<size_t>(i)] = idx[i] - beta[static_cast<size_t>(i)];
      out.add_word(word, c * pow2(positive_count(beta)));
    });
  }
  return out;
}

NSymElement vertex_y(int m, const NSymElement& a) {
  if (a.basis() != Basis::Q)
    throw std::invalid_argument("vertex_y expects the Q basis");
  std::map<int, NSymElement> parts;
  split_by_degree(a, parts);
  NSymElement out(Basis::Q);
  for (const auto& [deg, comp] : parts) {
    for (int i = 0; i <= deg; ++i) {
      if (m + i < 0) continue;  // Q with negative index vanishes
      NSymElement shifted = kperp(i, comp);
      if (shifted.is_zero()) continue;
      if (i % 2 == 1) shifted *= Rational(-1);
      if (m + i > 0) {
        NSymElement q = NSymElement::monomial(Basis::Q, Composition{m + i});
        shifted = multiply(q, shifted);
      }
      out.add_scaled(shifted, Rational(1));
    }
  }
  return out;
}

NSymElement nsqf(const IntVector& alpha) {
  NSymElement e = NSymElement::monomial(Basis::Q, Composition{});
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it)
    e = vertex_y(*it, e);
  return e;
}

NSymElement nsqf_recursive(const Composition& alpha) {
  static std::map<Composition, NSymElement> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
  }
  NSymElement result(Basis::Q);
  const int r = alpha.length();
  if (r == 0) {
    result.add(Composition{}, Rational(1));
  } else if (r == 1) {
    result.add(alpha, Rational(1));
  } else {
    /* S_alpha = sum_{i=0}^{a_r} (sum over beta in N_0^{r-1}, |beta| = i,
     * prod_j (-1)^{beta_j} 2^{[beta_j > 0]} S_{alpha' + beta}) Q_{a_r - i} */
    std::vector<int> head(alpha.parts().begin(), alpha.parts().end() - 1);
    const int last = alpha.last();
    for (int i = 0; i <= last; ++i) {
      NSymElement bucket(Basis::Q);
      for_weak_compositions(i, r - 1, [&](const std::vector<int>& beta) {
        std::vector<int> idx(head);
        Rational coef(1);
        for (size_t j = 0; j < idx.size(); ++j) {
          idx[j] += beta[j];
          if (beta[j] > 0) {
            coef *= 2;
            if (beta[j] % 2 == 1) coef = -coef;
          }
        }
        bucket.add_scaled(nsqf_recursive(Composition(std::move(idx))), coef);
      });
      if (bucket.is_zero()) continue;
      if (last - i > 0) {
        NSymElement q = NSymElement::monomial(Basis::Q, Composition{last - i});
        bucket = multiply(bucket, q);
      }
      result.add_scaled(bucket, Rational(1));
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(alpha, std::move(result));
  return it->second;
}

IntVector pad_even(IntVector alpha) {
  if (alpha.size() % 2 == 1) alpha.push_back(0);
  return alpha;
}

namespace {

/* perfect matchings of {0..2n-1} as (a_1,b_1,a_2,b_2,...) with a_k the
 * smallest unused element; the sign is the inversion parity of that
 * one-line sequence */
void matchings_rec(std::vector<int>& order, std::vector<bool>& used,
                   const std::function<void(const std::vector<int>&)>& f) {
  const int size = static_cast<int>(used.size());
  int a = -1;
  for (int i = 0; i < size; ++i)
    if (!used[static_cast<size_t>(i)]) {
      a = i;
      break;
    }
  if (a < 0) {
    f(order);
    return;
  }
  used[static_cast<size_t>(a)] = true;
  order.push_back(a);
  for (int b = a + 1; b < size; ++b) {
    if (used[static_cast<size_t>(b)]) continue;
    used[static_cast<size_t>(b)] = true;
    order.push_back(b);
    matchings_rec(order, used, f);
    order.pop_back();
    used[static_cast<size_t>(b)] = false;
  }
  order.pop_back();
  used[static_cast<size_t>(a)] = false;
}

int inversion_parity(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2;
}

}  // namespace

NSymElement nsqf_pfaffian(const IntVector& alpha) {
  if (alpha.size() % 2 != 0)
    throw std::invalid_argument(
        "nsqf_pfaffian needs an even-length index; pad_even first");
  NSymElement out(Basis::Q);
  if (alpha.empty()) {
    out.add(Composition{}, Rational(1));
    return out;
  }
  const int pairs = static_cast<int>(alpha.size()) / 2;
  std::vector<int> order;
  std::vector<bool> used(alpha.size(), false);
  matchings_rec(order, used, [&](const std::vector<int>& seq) {
    const Rational msign(inversion_parity(seq) == 0 ? 1 : -1);
    /* independent shifts t_k >= 0 per pair; t_k <= alpha[b_k] or the
     * lowered entry goes negative and the word dies */
    std::vector<int> tmax(static_cast<size_t>(pairs));
    for (int k = 0; k < pairs; ++k) {
      const int bk = seq[static_cast<size_t>(2 * k + 1)];
      tmax[static_cast<size_t>(k)] = alpha[static_cast<size_t>(bk)];
      if (tmax[static_cast<size_t>(k)] < 0) return;  // every t fails
    }
    std::vector<int> t(static_cast<size_t>(pairs), 0);
    while (true) {
      IntVector word = alpha;
      Rational coef = msign;
      int zero_shifts = 0;
      for (int k = 0; k < pairs; ++k) {
        const int ak = seq[static_cast<size_t>(2 * k)];
        const int bk = seq[static_cast<size_t>(2 * k + 1)];
        const int tk = t[static_cast<size_t>(k)];
        word[static_cast<size_t>(ak)] += tk;
        word[static_cast<size_t>(bk)] -= tk;
        if (tk == 0) ++zero_shifts;
        if (tk % 2 == 1) coef = -coef;
      }
      coef *= pow2(pairs - zero_shifts);
      out.add_word(word, coef);
      /* odometer over t */
      int k = 0;
      while (k < pairs) {
        if (t[static_cast<size_t>(k)] < tmax[static_cast<size_t>(k)]) {
          ++t[static_cast<size_t>(k)];
          break;
        }
        t[static_cast<size_t>(k)] = 0;
        ++k;
      }
      if (k == pairs) break;
    }
  });
  return out;
}

NSymElement nsqf_raising(const IntVector& alpha) {
  NSymElement out(Basis::Q);
  const int r = static_cast<int>(alpha.size());
  if (r == 0) {
    out.add(Composition{}, Rational(1));
    return out;
  }
  /* process columns right to left; k_{ij} raises w_i and lowers w_j with
   * weight (-1)^{k_{ij}} 2^{[k_{ij} > 0]} */
  std::vector<int> w(alpha.begin(), alpha.end());
  std::function<void(int, Rational)> column = [&](int j, Rational coef) {
    if (j < 1) {
      out.add_word(w, coef);
      return;
    }
    const int budget = w[static_cast<size_t>(j)];
    if (budget < 0) return;
    std::function<void(int, int, Rational)> cell = [&](int i, int left,
                                                       Rational c) {
      if (i == j) {
        column(j - 1, c);
        return;
      }
      /* k_{ij} = 0 */
      cell(i + 1, left, c);
      /* k_{ij} >= 1 */
      Rational cc = c;
      int moved = 0;
      for (int kij = 1; kij <= left; ++kij) {
        w[static_cast<size_t>(i)] += 1;
        w[static_cast<size_t>(j)] -= 1;
        ++moved;
        cc = (kij == 1 ? cc * Rational(-2) : cc * Rational(-1));
        cell(i + 1, left - kij, cc);
      }
      w[static_cast<size_t>(i)] -= moved;
      w[static_cast<size_t>(j)] += moved;
    };
    cell(0, budget, coef);
  };
  column(r - 1, Rational(1));
  return out;
}

NSymElement key_relation(const Composition& alpha, int n) {
  if (n < 2) throw std::invalid_argument("key_relation needs n >= 2");
  NSymElement out(Basis::Q);
  for (int i = 1; i <= n - 1; ++i) {
    IntVector idx(alpha.parts().begin(), alpha.parts().end());
    idx.push_back(i);
    idx.push_back(n - i);
    out.add_scaled(nsqf(idx), Rational(1));
  }
  return out;
}

namespace {

/* common enumeration behind both Pieri rules */
void pieri_terms(const Composition& alpha, int s,
                 const std::function<void(const Composition&, int)>& emit) {
  const int r = alpha.length();
  /* same length: beta = alpha + gamma */
  for_weak_compositions(s, r, [&](const std::vector<int>& gamma) {
    std::vector<int> beta = alpha.parts();
    for (size_t i = 0; i < beta.size(); ++i) beta[i] += gamma[i];
    emit(Composition(std::move(beta)), positive_count(gamma));
  });
  /* length r+1: last part t >= 1 */
  for (int t = 1; t <= s; ++t) {
    for_weak_compositions(s - t, r, [&](const std::vector<int>& gamma) {
      std::vector<int> beta = alpha.parts();
      for (size_t i = 0; i < beta.size(); ++i) beta[i] += gamma[i];
      beta.push_back(t);
      emit(Composition(std::move(beta)), positive_count(gamma));
    });
  }
}

}  // namespace

NSymElement pieri(const Composition& alpha, int s) {
  if (s < 1) throw std::invalid_argument("pieri needs s >= 1");
  NSymElement out(Basis::S);
  pieri_terms(alpha, s, [&](const Composition& beta, int lg) {
    out.add(beta, pow2(lg));
  });
  return out;
}

NSymElement pieri_peak(const Composition& alpha, int s) {
  if (s < 1) throw std::invalid_argument("pieri_peak needs s >= 1");
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("pieri_peak needs a peak composition");
  const int r = alpha.length();
  const bool ends_in_one = r > 0 && alpha.last() == 1;
  NSymElement out(Basis::S);
  pieri_terms(alpha, s, [&](const Composition& beta, int lg) {
    if (!is_peak_composition(beta)) return;
    int e = lg;
    if (ends_in_one && beta.length() == r + 1) --e;
    out.add(beta, pow2(e));
  });
  return out;
}

NSymElement q_to_nsqf(const Composition& alpha) {
  const int n = alpha.weight();
  if (n < 1) throw std::invalid_argument("q_to_nsqf needs |alpha| >= 1");
  NSymElement out(Basis::S);
  for (const Composition& beta : peak_compositions(n)) {
    Rational w = pct_weight_sum(beta, alpha);
    if (w != 0) out.add(beta, w);
  }
  return out;
}

NSymElement q_to_nsqf_chain(const Composition& alpha) {
  const int n = alpha.weight();
  if (n < 1) throw std::invalid_argument("q_to_nsqf_chain needs |alpha| >= 1");
  /* grow chains (alpha_1) = beta^1 subset beta^2 subset ... of peak
   * compositions, each step a peak Pieri expansion by the next part */
  std::map<Composition, Rational> frontier;
  frontier.emplace(Composition{alpha[0]}, Rational(1));
  for (int step = 1; step < alpha.length(); ++step) {
    std::map<Composition, Rational> next;
    for (const auto& [cur, w] : frontier) {
      NSymElement layer = pieri_peak(cur, alpha[step]);
      for (const auto& [beta, c] : layer.terms()) {
        auto [it, fresh] = next.emplace(beta, Rational(0));
        it->second += w * c;
      }
    }
    frontier.swap(next);
  }
  NSymElement out(Basis::S);
  for (const auto& [beta, w] : frontier)
    if (w != 0) out.add(beta, w);
  return out;
}

NSymElement expand_s(const NSymElement& a) {
  if (a.basis() != Basis::S)
    throw std::invalid_argument("expand_s expects the S basis");
  NSymElement out(Basis::Q);
  for (const auto& [idx, c] : a.terms())
    out.add_scaled(nsqf_recursive(idx), c);
  return out;
}

bool equals_expanded(const NSymElement& a, const NSymElement& b) {
  const NSymElement& ea = a.basis() == Basis::S ? expand_s(a) : a;
  const NSymElement& eb = b.basis() == Basis::S ? expand_s(b) : b;
  return equals(ea, eb);
}

namespace {

struct NsqfOddBasis {
  std::vector<Composition> peaks;
  std::vector<Composition> odd;
  ExactSolver solver;  // rows: odd-Q coordinates of S_beta, beta peak comp
};

const NsqfOddBasis& nsqf_odd_basis(int n) {
  static std::map<int, NsqfOddBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Composition> peaks = peak_compositions(n);
    std::vector<Composition> odd = odd_compositions(n);
    std::map<Composition, size_t> odd_pos;
    for (size_t i = 0; i < odd.size(); ++i) odd_pos.emplace(odd[i], i);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(peaks.size());
    for (const Composition& beta : peaks) {
      std::vector<Rational> coords =
          odd_q_coordinates(nsqf_recursive(beta), n);
      rows.push_back(std::move(coords));
    }
    it = cache
             .emplace(n, NsqfOddBasis{std::move(peaks), std::move(odd),
                                      ExactSolver(std::move(rows))})
             .first;
  }
  return it->second;
}

}  // namespace

NSymElement expand_in_nsqf(const NSymElement& a, int n) {
  if (n < 1) throw std::invalid_argument("expand_in_nsqf needs n >= 1");
  for (const auto& [idx, c] : a.terms())
    if (idx.weight() != n)
      throw std::invalid_argument("element is not homogeneous of degree " +
                                  std::to_string(n));
  const NsqfOddBasis& basis = nsqf_odd_basis(n);
  std::vector<Rational> target = odd_q_coordinates(a, n);
  auto coords = basis.solver.solve(target);
  if (!coords)
    throw std::domain_error("element has no expansion over the S basis");
  NSymElement out(Basis::S);
  for (size_t i = 0; i < basis.peaks.size(); ++i)
    if ((*coords)[i] != 0) out.add(basis.peaks[i], (*coords)[i]);
  return out;
}

MatrixPair matrix_pair_from_names(std::string_view rows,
                                  std::string_view cols) {
  if (rows == "Q" && cols == "S") return MatrixPair::QS;
  if (rows == "Q" && cols == "Pi") return MatrixPair::QPi;
  if (rows == "Sbar" && cols == "Pi") return MatrixPair::SbarPi;
  if (rows == "Pi" && cols == "Sbar") return MatrixPair::PiSbar;
  if (rows == "SbarStar" && cols == "K") return MatrixPair::SbarStarK;
  throw std::invalid_argument("unsupported matrix pair " + std::string(rows) +
                              "," + std::string(cols));
}

std::string matrix_row_label(MatrixPair p) {
  switch (p) {
    case MatrixPair::QS: return "Q";
    case MatrixPair::QPi: return "Q";
    case MatrixPair::SbarPi: return "Sbar";
    case MatrixPair::PiSbar: return "Pi";
    case MatrixPair::SbarStarK: return "SbarStar";
  }
  throw std::logic_error("bad pair");
}

std::string matrix_col_label(MatrixPair p) {
  switch (p) {
    case MatrixPair::QS: return "S";
    case MatrixPair::QPi: return "Pi";
    case MatrixPair::SbarPi: return "Pi";
    case MatrixPair::PiSbar: return "Sbar";
    case MatrixPair::SbarStarK: return "K";
  }
  throw std::logic_error("bad pair");
}

namespace {

std::vector<std::vector<Rational>> transpose(
    const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return {};
  std::vector<std::vector<Rational>> t(m[0].size(),
                                       std::vector<Rational>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

TransitionMatrix compute_matrix(int n, MatrixPair pair) {
  TransitionMatrix m;
  m.n = n;
  m.rows = matrix_row_label(pair);
  m.cols = matrix_col_label(pair);
  m.index = peak_compositions(n);
  const size_t f = m.index.size();
  std::map<Composition, size_t> pos;
  for (size_t i = 0; i < f; ++i) pos.emplace(m.index[i], i);
  m.entries.assign(f, std::vector<Rational>(f));
  switch (pair) {
    case MatrixPair::QS:
      for (size_t i = 0; i < f; ++i) {
        NSymElement row = q_to_nsqf(m.index[i]);
        for (const auto& [idx, c] : row.terms()) m.entries[i][pos.at(idx)] = c;
      }
      break;
    case MatrixPair::QPi:
      for (size_t i = 0; i < f; ++i) {
        NSymElement row = q_to_pi(m.index[i]);
        for (const auto& [idx, c] : row.terms()) m.entries[i][pos.at(idx)] = c;
      }
      break;
    case MatrixPair::SbarPi:
      for (size_t i = 0; i < f; ++i) {
        NSymElement row = q_element_to_pi(nsqf_recursive(m.index[i]));
        const Rational scale = pow2(-m.index[i].length());
        for (const auto& [idx, c] : row.terms())
          m.entries[i][pos.at(idx)] = c * scale;
      }
      break;
    case MatrixPair::PiSbar: {
      TransitionMatrix inv = transition_matrix(n, MatrixPair::SbarPi);
      m.entries = invert_matrix(inv.entries);
      break;
    }
    case MatrixPair::SbarStarK: {
      TransitionMatrix inv = transition_matrix(n, MatrixPair::PiSbar);
      m.entries = transpose(inv.entries);
      break;
    }
  }
  return m;
}

std::filesystem::path cache_path(int n, MatrixPair pair) {
  const char* dir = std::getenv("PEAKALG_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) /
         ("matrix_v" + std::string(kVersion) + "_n" + std::to_string(n) + "_" +
          matrix_row_label(pair) + "_" + matrix_col_label(pair) + ".json");
}

}  // namespace

TransitionMatrix transition_matrix(int n, MatrixPair pair) {
  if (n < 1) throw std::invalid_argument("transition_matrix needs n >= 1");
  const std::filesystem::path path = cache_path(n, pair);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    Json j;
    in >> j;
    TransitionMatrix m = matrix_from_json(j);
    if (m.n == n && m.rows == matrix_row_label(pair) &&
        m.cols == matrix_col_label(pair))
      return m;
  }
  TransitionMatrix m = compute_matrix(n, pair);
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) out << matrix_json(m).dump(2) << "\n";
  }
  return m;
}

}  // namespace peakalg
