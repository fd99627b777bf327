#include "peakalg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "peakalg/commutative.hpp"
#include "peakalg/composition.hpp"
#include "peakalg/golden.hpp"
#include "peakalg/linalg.hpp"
#include "peakalg/nsqf.hpp"
#include "peakalg/nsym.hpp"
#include "peakalg/peak.hpp"
#include "peakalg/qsym.hpp"
#include "peakalg/tableaux.hpp"

namespace peakalg {

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

namespace {

void push(std::vector<CheckResult>& out, std::string name, bool pass,
          std::string detail = "") {
  out.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

NSymElement zero_q() { return NSymElement::zero(Basis::Q); }

std::string mat_name(MatrixPair pair, int n) {
  return "M_" + std::to_string(n) + "(" + matrix_row_label(pair) + "," +
         matrix_col_label(pair) + ")";
}

bool product_is_identity(const std::vector<std::vector<Rational>>& a,
                         const std::vector<std::vector<Rational>>& b) {
  const size_t k = a.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Rational s(0);
      for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      if (s != Rational(i == j ? 1 : 0)) return false;
    }
  return true;
}

std::vector<Partition> strict_partitions(int w) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p - 1);
      cur.pop_back();
    }
  };
  rec(rec, w, w);
  return out;
}

}  // namespace

std::vector<CheckResult> verify_tables() {
  std::vector<CheckResult> out;
  const MatrixPair pairs[] = {MatrixPair::QS, MatrixPair::QPi,
                              MatrixPair::SbarPi, MatrixPair::PiSbar};
  for (MatrixPair pair : pairs)
    for (int n = 3; n <= 6; ++n) {
      TransitionMatrix m = transition_matrix(n, pair);
      const bool ok = m.entries == golden_matrix(pair, n) &&
                      m.index == peak_compositions(n);
      push(out, mat_name(pair, n) + " matches the reference table", ok,
           ok ? "" : "computed entries differ from the stored table");
    }

  for (int n = 3; n <= 6; ++n) {
    TransitionMatrix inv = transition_matrix(n, MatrixPair::PiSbar);
    TransitionMatrix fwd = transition_matrix(n, MatrixPair::SbarPi);
    push(out,
         mat_name(MatrixPair::PiSbar, n) + " inverts " +
             mat_name(MatrixPair::SbarPi, n),
         product_is_identity(inv.entries, fwd.entries));

    TransitionMatrix dual = transition_matrix(n, MatrixPair::SbarStarK);
    bool tr_ok = dual.index == inv.index;
    const size_t k = inv.index.size();
    for (size_t i = 0; tr_ok && i < k; ++i)
      for (size_t j = 0; tr_ok && j < k; ++j)
        tr_ok = dual.entries[i][j] == inv.entries[j][i];
    push(out,
         mat_name(MatrixPair::SbarStarK, n) + " transposes " +
             mat_name(MatrixPair::PiSbar, n),
         tr_ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 7 && ok; ++n) {
      TransitionMatrix m = transition_matrix(n, MatrixPair::QS);
      const size_t k = m.index.size();
      for (size_t i = 0; i < k && ok; ++i)
        for (size_t j = 0; j <= i && ok; ++j)
          if (m.entries[i][j] != Rational(i == j ? 1 : 0)) {
            ok = false;
            detail = "n=" + std::to_string(n) + ", row (" +
                     m.index[i].str() + "), col (" + m.index[j].str() + ")";
          }
    }
    push(out, "M_n(Q,S) is upper unitriangular (n <= 7)", ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_relations() {
  std::vector<CheckResult> out;
  for (int n = 2; n <= 6; ++n) {
    const auto rels = golden_relations(n);
    const long long expected = (1LL << (n - 1)) - fibonacci(n - 1);
    bool ok = static_cast<long long>(rels.size()) == expected;
    std::string detail;
    if (!ok)
      detail = "expected " + std::to_string(expected) + " relations, stored " +
               std::to_string(rels.size());
    for (size_t i = 0; ok && i < rels.size(); ++i) {
      NSymElement sum(Basis::Q);
      for (const auto& [c, word] : rels[i])
        sum.add_scaled(nsqf(word.parts()), Rational(c));
      if (!equals(sum, zero_q())) {
        ok = false;
        detail = "relation " + std::to_string(i + 1) + " is nonzero";
      }
    }
    push(out,
         "relation table n=" + std::to_string(n) + " (" +
             std::to_string(rels.size()) + " relations) vanishes",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int m = 0; m <= 4 && ok; ++m) {
      std::vector<Composition> prefixes =
          m == 0 ? std::vector<Composition>{Composition()} : compositions(m);
      for (const Composition& alpha : prefixes) {
        for (int n = 2; n <= 6 && ok; ++n)
          if (!equals(key_relation(alpha, n), zero_q())) {
            ok = false;
            detail = "alpha=(" + alpha.str() + "), n=" + std::to_string(n);
          }
        if (!ok) break;
      }
    }
    push(out, "key relations vanish (|alpha| <= 4, n <= 6)", ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_euler(int max_n) {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= max_n && ok; ++n) {
      NSymElement e(Basis::Q);
      for (int r = 0; r <= n; ++r)
        e.add_word({r, n - r}, Rational(r % 2 == 0 ? 1 : -1));
      if (!equals(e, zero_q())) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    }
    push(out,
         "alternating sums of Q products vanish (n <= " +
             std::to_string(max_n) + ")",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= max_n && ok; n += 2)
      if (!equals(theta(euler_element(n)), zero_q())) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    push(out,
         "theta kills the even alternating H sums (n <= " +
             std::to_string(max_n) + ")",
         ok, detail);
  }

  const int small = std::min(max_n, 10);
  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= small && ok; n += 2)
      if (!equals(q_even_expansion(n),
                  NSymElement::monomial(Basis::Q, Composition{n}))) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    push(out,
         "even Q_n expands over odd words (n <= " + std::to_string(small) +
             ")",
         ok, detail);
  }

  bool odd_ok = true, pi_ok = true, s_ok = true;
  std::string odd_d, pi_d, s_d;
  for (int n = 1; n <= small; ++n) {
    const int f = static_cast<int>(fibonacci(n - 1));
    {
      std::vector<std::vector<Rational>> rows;
      for (const Composition& g : odd_compositions(n))
        rows.push_back(detail::dense_h_component(
            NSymElement::monomial(Basis::Q, g), n));
      if (odd_ok && ExactSolver(std::move(rows)).rank() != f) {
        odd_ok = false;
        odd_d = "n=" + std::to_string(n);
      }
    }
    {
      std::vector<std::vector<Rational>> rows;
      for (const Composition& b : peak_compositions(n))
        rows.push_back(detail::dense_h_component(
            NSymElement::monomial(Basis::Pi, b), n));
      if (pi_ok && ExactSolver(std::move(rows)).rank() != f) {
        pi_ok = false;
        pi_d = "n=" + std::to_string(n);
      }
    }
    {
      std::vector<std::vector<Rational>> rows;
      for (const Composition& b : peak_compositions(n))
        rows.push_back(detail::dense_h_component(nsqf_recursive(b), n));
      if (s_ok && ExactSolver(std::move(rows)).rank() != f) {
        s_ok = false;
        s_d = "n=" + std::to_string(n);
      }
    }
  }
  const std::string bound = " (n <= " + std::to_string(small) + ")";
  push(out, "odd Q words have rank f_{n-1}" + bound, odd_ok, odd_d);
  push(out, "peak functions have rank f_{n-1}" + bound, pi_ok, pi_d);
  push(out, "S over peak compositions has rank f_{n-1}" + bound, s_ok, s_d);
  return out;
}

std::vector<CheckResult> verify_oracles(int max_n, int random_vectors,
                                        unsigned seed) {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string detail;
    int cases = 0;
    for (int n = 1; n <= max_n && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        ++cases;
        const NSymElement base = nsqf(alpha.parts());
        if (!equals(base, nsqf_recursive(alpha))) {
          ok = false;
          detail = "recursive path differs at (" + alpha.str() + ")";
        } else if (!equals(base, nsqf_pfaffian(pad_even(alpha.parts())))) {
          ok = false;
          detail = "pfaffian path differs at (" + alpha.str() + ")";
        } else if (!equals(base, nsqf_raising(alpha.parts()))) {
          ok = false;
          detail = "raising path differs at (" + alpha.str() + ")";
        }
        if (!ok) break;
      }
    push(out,
         "expansion paths agree on all " + std::to_string(cases) +
             " compositions of n <= " + std::to_string(max_n),
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len_d(1, 4), ent_d(-2, 4);
    for (int t = 0; t < random_vectors && ok; ++t) {
      IntVector v(static_cast<size_t>(len_d(rng)));
      for (int& x : v) x = ent_d(rng);
      std::string word;
      for (size_t i = 0; i < v.size(); ++i)
        word += (i ? "," : "") + std::to_string(v[i]);
      const NSymElement base = nsqf(v);
      if (!equals(base, nsqf_pfaffian(pad_even(v)))) {
        ok = false;
        detail = "pfaffian path differs at (" + word + ")";
      } else if (!equals(base, nsqf_raising(v))) {
        ok = false;
        detail = "raising path differs at (" + word + ")";
      } else if (std::all_of(v.begin(), v.end(),
                             [](int x) { return x > 0; }) &&
                 !equals(base, nsqf_recursive(Composition(v)))) {
        ok = false;
        detail = "recursive path differs at (" + word + ")";
      }
    }
    push(out,
         "expansion paths agree on " + std::to_string(random_vectors) +
             " random integer vectors",
         ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_pieri(int max_m, int max_s) {
  std::vector<CheckResult> out;
  const std::string bound = " (m <= " + std::to_string(max_m) +
                            ", s <= " + std::to_string(max_s) + ")";
  {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= max_m && ok; ++m)
      for (const Composition& alpha : compositions(m)) {
        for (int s = 1; s <= max_s && ok; ++s) {
          const NSymElement lhs = multiply(
              nsqf(alpha.parts()),
              NSymElement::monomial(Basis::Q, Composition{s}));
          if (!equals(lhs, expand_s(pieri(alpha, s)))) {
            ok = false;
            detail = "alpha=(" + alpha.str() + "), s=" + std::to_string(s);
          }
        }
        if (!ok) break;
      }
    push(out, "right multiplication by Q_s matches the Pieri rule" + bound,
         ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int m = 1; m <= max_m && ok; ++m)
      for (const Composition& alpha : peak_compositions(m)) {
        for (int s = 1; s <= max_s && ok; ++s)
          if (!equals_expanded(pieri_peak(alpha, s), pieri(alpha, s))) {
            ok = false;
            detail = "alpha=(" + alpha.str() + "), s=" + std::to_string(s);
          }
        if (!ok) break;
      }
    push(out, "peak Pieri agrees with Pieri after straightening" + bound, ok,
         detail);
  }
  return out;
}

std::vector<CheckResult> verify_dual(int max_n, int matrix_max_n) {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= max_n && ok; ++n) {
      const auto odd = odd_compositions(n);
      const auto comps = compositions(n);
      const auto peaks = peak_compositions(n);
      std::vector<std::vector<Rational>> rhs(
          comps.size(), std::vector<Rational>(odd.size(), Rational(0)));
      for (const Composition& alpha : peaks) {
        const QSymElement km = k_to_m(alpha);
        const std::vector<Rational> pc = odd_q_coordinates(
            NSymElement::monomial(Basis::Pi, alpha), n);
        for (size_t i = 0; i < comps.size(); ++i) {
          const Rational c = km.coeff(comps[i]);
          if (c == 0) continue;
          for (size_t j = 0; j < odd.size(); ++j) rhs[i][j] += c * pc[j];
        }
      }
      for (size_t i = 0; i < comps.size() && ok; ++i) {
        const std::vector<Rational> lhs = odd_q_coordinates(
            NSymElement::monomial(Basis::Q, comps[i]), n);
        if (lhs != rhs[i]) {
          ok = false;
          detail = "n=" + std::to_string(n) + ", M index (" +
                   comps[i].str() + ")";
        }
      }
    }
    push(out,
         "sum M x Q equals sum K x Pi (n <= " + std::to_string(max_n) + ")",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= max_n && ok; ++n) {
      const auto peaks = peak_compositions(n);
      std::vector<NSymElement> s_pi;
      std::vector<QSymElement> star_k;
      for (const Composition& b : peaks)
        s_pi.push_back(q_element_to_pi(nsqf_recursive(b)));
      for (const Composition& a : peaks)
        star_k.push_back(expand_over_k(qsqf_star_m(a), n));
      for (size_t i = 0; i < peaks.size() && ok; ++i)
        for (size_t j = 0; j < peaks.size() && ok; ++j)
          if (pairing_pik(s_pi[i], star_k[j]) != Rational(i == j ? 1 : 0)) {
            ok = false;
            detail = "n=" + std::to_string(n) + ", S index (" +
                     peaks[i].str() + "), S* index (" + peaks[j].str() + ")";
          }
    }
    push(out,
         "[S_beta, S*_alpha] = delta (n <= " + std::to_string(max_n) + ")",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= matrix_max_n && ok; ++n) {
      TransitionMatrix t = transition_matrix(n, MatrixPair::PiSbar);
      const auto& peaks = t.index;
      for (size_t i = 0; i < peaks.size() && ok; ++i) {
        const QSymElement row = expand_over_k(qsqf_bar_star_m(peaks[i]), n);
        for (size_t j = 0; j < peaks.size() && ok; ++j)
          if (row.coeff(peaks[j]) != t.entries[j][i]) {
            ok = false;
            detail = "n=" + std::to_string(n) + ", S* index (" +
                     peaks[i].str() + "), K index (" + peaks[j].str() + ")";
          }
      }
    }
    push(out,
         "Sbar* over K transposes M_n(Pi,Sbar) (n <= " +
             std::to_string(matrix_max_n) + ")",
         ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_classical() {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        for (int i = 0; i < alpha.length() && ok; ++i)
          for (int j = i + 1; j < alpha.length() && ok; ++j) {
            if (alpha[i] == alpha[j]) continue;
            std::vector<int> swapped = alpha.parts();
            std::swap(swapped[static_cast<size_t>(i)],
                      swapped[static_cast<size_t>(j)]);
            SymElement sum = forget(nsqf(alpha.parts()));
            for (const auto& [idx, c] : forget(nsqf(swapped)).terms)
              sum.add(idx, c);
            if (!eval_sym(sum, n).is_zero()) {
              ok = false;
              detail = "alpha=(" + alpha.str() + "), swap " +
                       std::to_string(i + 1) + "," + std::to_string(j + 1);
            }
          }
        if (!ok) break;
      }
    push(out, "commutative images are antisymmetric in the parts (n <= 6)",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int w = 0; w <= 5 && ok; ++w)
      for (const Partition& mu : strict_partitions(w)) {
        for (int s = 1; s <= 3 && ok; ++s)
          if (!classical_pieri_check(mu, s, w + s)) {
            ok = false;
            detail = "mu=(" + mu.str() + "), s=" + std::to_string(s);
          }
        if (!ok) break;
      }
    push(out, "classical Pieri rule holds in the oracle (|mu| <= 5, s <= 3)",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int w = 1; w <= 7 && ok; ++w)
      for (const Partition& lambda : strict_partitions(w))
        if (!schur_p_refinement_check(lambda, w)) {
          ok = false;
          detail = "lambda=(" + lambda.str() + ")";
          break;
        }
    push(out, "P-function refinement over peak rearrangements (|lambda| <= 7)",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        const NSymElement h = NSymElement::monomial(Basis::H, alpha);
        const SymElement a = theta_sym(forget(h));
        const SymElement b = forget(theta(h));
        if (a.gen != b.gen || a.terms != b.terms) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
      }
    push(out, "theta commutes with the forgetful map (n <= 6)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n) {
      std::vector<TruncatedPolynomial> polys;
      std::map<std::vector<int>, size_t> col;
      for (const Composition& beta : compositions(n)) {
        polys.push_back(eval_qsym(
            QSymElement::monomial(QBasis::M, beta), n));
        for (const auto& [e, c] : polys.back().terms) col.emplace(e, col.size());
      }
      std::vector<std::vector<Rational>> rows(
          polys.size(), std::vector<Rational>(col.size(), Rational(0)));
      for (size_t i = 0; i < polys.size(); ++i)
        for (const auto& [e, c] : polys[i].terms) rows[i][col[e]] = c;
      if (ExactSolver(std::move(rows)).rank() !=
          static_cast<int>(polys.size())) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    }
    push(out, "polynomial oracle separates the M basis (n <= 6, k = n)", ok,
         detail);
  }
  return out;
}

std::vector<CheckResult> verify_expansions() {
  std::vector<CheckResult> out;
  push(out, "Q_(2,2,2) over S matches the worked expansion",
       q_to_nsqf(Composition{2, 2, 2}).same_terms(golden_q222_in_s()));

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        if (!q_to_nsqf(alpha).same_terms(q_to_nsqf_chain(alpha))) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
      }
    push(out, "tableau and chain expansions of Q agree (n <= 6)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        if (!equals(expand_s(q_to_nsqf(alpha)),
                    NSymElement::monomial(Basis::Q, alpha))) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
      }
    push(out, "S expansion of Q re-expands to Q (n <= 6)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        const NSymElement e = nsqf(alpha.parts());
        if (!equals(expand_s(expand_in_nsqf(e, n)), e)) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
      }
    push(out, "expand_in_nsqf round-trips S words (n <= 6)", ok, detail);
  }

  push(out, "S*_(3,2,1) over M matches the worked expansion",
       qsqf_star_m(Composition{3, 2, 1}).same_terms(golden_sstar_321_m()));
  push(out, "S*_(3,2,1) over F matches the worked expansion",
       qsqf_star_f(Composition{3, 2, 1}).same_terms(golden_sstar_321_f()));

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : peak_compositions(n))
        if (!f_to_m(qsqf_star_f(alpha)).same_terms(qsqf_star_m(alpha))) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
    push(out, "M and F expansions of S* agree (n <= 6)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : peak_compositions(n))
        if (!f_to_m(k_to_f(alpha)).same_terms(k_to_m(alpha))) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
    push(out, "K expansions over F and M agree (n <= 6)", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 8 && ok; ++n)
      for (const Composition& alpha : peak_compositions(n)) {
        const QSymElement star = qsqf_star_m(alpha);
        for (const auto& [idx, c] : star.terms())
          if (c < 0 || !is_integer(c)) {
            ok = false;
            detail = "alpha=(" + alpha.str() + "), M index (" + idx.str() +
                     ") has coefficient " + rational_str(c);
            break;
          }
        if (!ok) break;
      }
    push(out, "S* monomial coefficients are nonnegative integers (n <= 8)",
         ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : compositions(n)) {
        NSymElement back(Basis::Q);
        const NSymElement in_pi = q_to_pi(alpha);
        for (const auto& [idx, c] : in_pi.terms())
          back.add_scaled(pi_in_q_odd(PeakSet(idx.descents(), n)), c);
        if (!equals(back, NSymElement::monomial(Basis::Q, alpha))) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
      }
    push(out, "Pi expansion of Q round-trips through odd words (n <= 6)", ok,
         detail);
  }
  return out;
}

std::vector<CheckResult> verify_tableaux() {
  std::vector<CheckResult> out;
  push(out, "PCT((3,4,2),(2,2,1,4)) has exactly 4 fillings",
       pct(Composition{3, 4, 2}, Composition{2, 2, 1, 4}).size() == 4);

  {
    const Tableau t{Composition{3, 4, 2, 3, 1},
                    {{1, 1, 2}, {2, 3, 3, 5}, {3, 4}, {4, 4, 5}, {5}}};
    const auto list = pct(Composition{3, 4, 2, 3, 1},
                          Composition{2, 2, 3, 3, 3});
    const bool member = std::find(list.begin(), list.end(), t) != list.end();
    push(out, "the shape (3,4,2,3,1) example has p=5, m=2",
         p_stat(t) == 5 && m_stat(t) == 2 && member);
  }

  {
    std::vector<int> ps, ms;
    const Composition content{2, 2, 2};
    for (const Composition& shape : peak_compositions(6))
      for (const Tableau& t : pct(shape, content)) {
        ps.push_back(p_stat(t));
        ms.push_back(m_stat(t));
      }
    bool ok = ps == golden_q222_p_stats();
    for (size_t i = 0; ok && i < ms.size(); ++i)
      ok = ms[i] == (i == 3 ? 1 : 0);
    push(out, "the 13 tableaux of content (2,2,2) carry the stated p and m",
         ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 8 && ok; ++n)
      for (const Composition& shape : peak_compositions(n)) {
        for (const Composition& content : compositions(n)) {
          const auto list = pct(shape, content);
          if (content > shape && !list.empty()) {
            ok = false;
            detail = "nonempty PCT with content after shape: shape=(" +
                     shape.str() + "), content=(" + content.str() + ")";
            break;
          }
          for (const Tableau& t : list)
            if (p_stat(t) - m_stat(t) + shape.length() - content.length() <
                0) {
              ok = false;
              detail = "shape=(" + shape.str() + "), content=(" +
                       content.str() + ")";
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
      }
    push(out,
         "p - m + l(shape) - l(content) >= 0 and lex support (|shape| <= 8)",
         ok, detail);
  }

  {
    auto prefix_ok = [](const Tableau& t, int labels) {
      for (int v = 1; v <= labels; ++v) {
        std::vector<int> counts;
        for (const auto& row : t.rows) {
          int c = 0;
          for (int x : row)
            if (x <= v) ++c;
          counts.push_back(c);
        }
        while (!counts.empty() && counts.back() == 0) counts.pop_back();
        std::vector<int> parts;
        for (int c : counts) {
          if (c == 0) return false;
          parts.push_back(c);
        }
        if (!is_peak_composition(Composition(parts))) return false;
      }
      return true;
    };
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 5 && ok; ++n)
      for (const Composition& shape : peak_compositions(n)) {
        for (const Composition& content : compositions(n)) {
          std::vector<Tableau> filtered;
          for (const Tableau& t : immaculate_tableaux(shape, content))
            if (prefix_ok(t, content.length())) filtered.push_back(t);
          if (filtered != pct(shape, content)) {
            ok = false;
            detail = "shape=(" + shape.str() + "), content=(" +
                     content.str() + ")";
            break;
          }
        }
        if (!ok) break;
      }
    push(out,
         "PCT equals immaculate fillings with peak prefixes (n <= 5)", ok,
         detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 7 && ok; ++n)
      for (const Composition& beta : peak_compositions(n))
        if (standard_pct(beta) != chain_count(beta)) {
          ok = false;
          detail = "beta=(" + beta.str() + ")";
          break;
        }
    push(out, "standard fillings count maximal poset chains (n <= 7)", ok,
         detail);
  }

  {
    auto uppers = [](const Composition& a) {
      std::vector<Composition> ups;
      for (const PosetEdge& e : poset_covers(a)) ups.push_back(e.upper);
      std::sort(ups.begin(), ups.end());
      return ups;
    };
    const bool ok =
        uppers(Composition{2}) ==
            std::vector<Composition>{Composition{2, 1}, Composition{3}} &&
        uppers(Composition{2, 1}) ==
            std::vector<Composition>{Composition{2, 2}, Composition{3, 1}};
    push(out, "poset covers of (2) and (2,1) are as expected", ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n)
      for (const Composition& alpha : peak_compositions(n))
        if (pct(alpha, alpha).size() != 1 ||
            pct_weight_sum(alpha, alpha) != 1) {
          ok = false;
          detail = "alpha=(" + alpha.str() + ")";
          break;
        }
    push(out, "PCT(alpha, alpha) is a single weight-1 filling (n <= 6)", ok,
         detail);
  }
  return out;
}

std::vector<ScanRow> scan_conjecture(int max_n, int jobs) {
  if (max_n < 3)
    throw std::invalid_argument("scan-conjecture needs max_n >= 3");
  if (jobs < 1) jobs = 1;

  std::vector<ScanRow> rows(static_cast<size_t>(max_n - 2));
  std::atomic<int> next{3};
  auto worker = [&rows, &next, max_n]() {
    for (;;) {
      const int n = next.fetch_add(1);
      if (n > max_n) return;
      ScanRow row;
      row.n = n;
      row.nonnegative = row.integral = row.unitriangular = true;
      const TransitionMatrix m = transition_matrix(n, MatrixPair::PiSbar);
      const size_t k = m.index.size();
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
          const Rational& v = m.entries[i][j];
          std::string why;
          if (v < 0 && row.nonnegative) {
            row.nonnegative = false;
            why = "negative";
          }
          if (!is_integer(v) && row.integral) {
            row.integral = false;
            why = why.empty() ? "non-integral" : why;
          }
          if (row.unitriangular &&
              ((j < i && v != 0) || (j == i && v != 1))) {
            row.unitriangular = false;
            if (why.empty()) why = "breaks unitriangularity";
          }
          if (!why.empty() && row.witness.empty())
            row.witness = "n=" + std::to_string(n) + ", row (" +
                          m.index[i].str() + "), col (" + m.index[j].str() +
                          "): " + rational_str(v) + " " + why;
        }
      rows[static_cast<size_t>(n - 3)] = row;
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace peakalg
