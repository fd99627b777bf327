#include "peakalg/commutative.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "peakalg/nsqf.hpp"

namespace peakalg {

void SymElement::add(const Partition& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int SymElement::degree() const {
  int d = 0;
  for (const auto& [idx, c] : terms) d = std::max(d, idx.weight());
  return d;
}

std::string SymElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rational_str(c) << "*";
    os << (gen == SymGen::h ? "h" : "q") << "_" << idx.str();
  }
  return os.str();
}

SymElement forget(const NSymElement& a) {
  if (a.basis() != Basis::H && a.basis() != Basis::Q)
    throw std::invalid_argument("forget expects the H or Q basis");
  SymElement out;
  out.gen = a.basis() == Basis::H ? SymGen::h : SymGen::q;
  for (const auto& [idx, c] : a.terms()) {
    std::vector<int> parts = idx.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    out.add(Partition(std::move(parts)), c);
  }
  return out;
}

SymElement theta_sym(const SymElement& a) {
  if (a.gen != SymGen::h)
    throw std::invalid_argument("theta_sym expects h words");
  SymElement out;
  out.gen = SymGen::q;
  out.terms = a.terms;
  return out;
}

TruncatedPolynomial poly_zero(int k, int max_degree) {
  TruncatedPolynomial p;
  p.k = k;
  p.max_degree = max_degree;
  return p;
}

namespace {

void poly_insert(TruncatedPolynomial& p, const std::vector<int>& exp,
                 const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.terms.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

int exp_degree(const std::vector<int>& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

}  // namespace

TruncatedPolynomial poly_add(const TruncatedPolynomial& a,
                             const TruncatedPolynomial& b) {
  if (a.k != b.k)
    throw std::invalid_argument("polynomial variable counts differ");
  TruncatedPolynomial out = a;
  out.max_degree = std::min(a.max_degree, b.max_degree);
  /* drop terms of a beyond the common truncation */
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = exp_degree(it->first) > out.max_degree ? out.terms.erase(it)
                                                : std::next(it);
  for (const auto& [e, c] : b.terms)
    if (exp_degree(e) <= out.max_degree) poly_insert(out, e, c);
  return out;
}

TruncatedPolynomial poly_scale(const TruncatedPolynomial& a,
                               const Rational& c) {
  TruncatedPolynomial out = poly_zero(a.k, a.max_degree);
  if (c == 0) return out;
  for (const auto& [e, v] : a.terms) out.terms.emplace(e, v * c);
  return out;
}

TruncatedPolynomial poly_mul(const TruncatedPolynomial& a,
                             const TruncatedPolynomial& b) {
  if (a.k != b.k)
    throw std::invalid_argument("polynomial variable counts differ");
  TruncatedPolynomial out =
      poly_zero(a.k, std::min(a.max_degree, b.max_degree));
  std::vector<int> e(static_cast<size_t>(a.k));
  for (const auto& [ea, ca] : a.terms) {
    const int da = exp_degree(ea);
    if (da > out.max_degree) continue;
    for (const auto& [eb, cb] : b.terms) {
      if (da + exp_degree(eb) > out.max_degree) continue;
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      poly_insert(out, e, ca * cb);
    }
  }
  return out;
}

namespace {

/* z-series prod_{i<=k} g(x_i z) with per-variable z-coefficients
 * c_m x^m: conv[r] is the z^r coefficient as a polynomial */
std::vector<TruncatedPolynomial> generator_series(
    int r, int k, const std::function<Rational(int)>& coef) {
  std::vector<TruncatedPolynomial> conv(static_cast<size_t>(r) + 1,
                                        poly_zero(k, r));
  std::vector<int> zero(static_cast<size_t>(k), 0);
  conv[0].terms.emplace(zero, Rational(1));
  for (int i = 0; i < k; ++i) {
    std::vector<TruncatedPolynomial> next(static_cast<size_t>(r) + 1,
                                          poly_zero(k, r));
    for (int d = 0; d <= r; ++d) {
      if (conv[static_cast<size_t>(d)].is_zero()) continue;
      for (int m = 0; d + m <= r; ++m) {
        const Rational c = coef(m);
        if (c == 0) continue;
        TruncatedPolynomial mono = poly_zero(k, r);
        std::vector<int> e = zero;
        e[static_cast<size_t>(i)] = m;
        mono.terms.emplace(std::move(e), c);
        next[static_cast<size_t>(d + m)] =
            poly_add(next[static_cast<size_t>(d + m)],
                     poly_mul(conv[static_cast<size_t>(d)], mono));
      }
    }
    conv.swap(next);
  }
  return conv;
}

}  // namespace

TruncatedPolynomial q_gen_poly(int r, int k) {
  if (r < 0 || k < 1) throw std::invalid_argument("q_gen_poly needs r >= 0, k >= 1");
  /* (1+xz)/(1-xz) = 1 + 2 sum_{m>=1} x^m z^m */
  auto conv = generator_series(r, k, [](int m) {
    return m == 0 ? Rational(1) : Rational(2);
  });
  return conv[static_cast<size_t>(r)];
}

TruncatedPolynomial h_gen_poly(int r, int k) {
  if (r < 0 || k < 1) throw std::invalid_argument("h_gen_poly needs r >= 0, k >= 1");
  auto conv = generator_series(r, k, [](int) { return Rational(1); });
  return conv[static_cast<size_t>(r)];
}

TruncatedPolynomial eval_sym(const SymElement& a, int k, bool* faithful) {
  const int deg = a.degree();
  if (faithful) *faithful = k >= deg;
  TruncatedPolynomial out = poly_zero(k, deg);
  for (const auto& [idx, c] : a.terms) {
    TruncatedPolynomial prod = poly_zero(k, deg);
    prod.terms.emplace(std::vector<int>(static_cast<size_t>(k), 0),
                       Rational(1));
    for (int part : idx.parts()) {
      TruncatedPolynomial g = a.gen == SymGen::q ? q_gen_poly(part, k)
                                                 : h_gen_poly(part, k);
      /* every term of g has degree exactly part, so widening is lossless
       * and keeps poly_mul from truncating at the smallest factor */
      g.max_degree = deg;
      prod = poly_mul(prod, g);
    }
    out = poly_add(out, poly_scale(prod, c));
  }
  return out;
}

TruncatedPolynomial eval_qsym(const QSymElement& a, int k, bool* faithful) {
  QSymElement m = a.basis() == QBasis::F ? f_to_m(a) : a;
  if (m.basis() != QBasis::M)
    throw std::invalid_argument("eval_qsym expects the M or F basis");
  int deg = 0;
  for (const auto& [idx, c] : m.terms()) deg = std::max(deg, idx.weight());
  if (faithful) *faithful = k >= deg;
  TruncatedPolynomial out = poly_zero(k, deg);
  for (const auto& [idx, c] : m.terms()) {
    const int r = idx.length();
    if (r > k) continue;
    /* all 1 <= i_1 < ... < i_r <= k */
    std::vector<int> pick(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      std::vector<int> e(static_cast<size_t>(k), 0);
      for (int i = 0; i < r; ++i)
        e[static_cast<size_t>(pick[static_cast<size_t>(i)])] = idx[i];
      poly_insert(out, e, c);
      int j = r - 1;
      while (j >= 0 && pick[static_cast<size_t>(j)] == k - r + j) --j;
      if (j < 0) break;
      ++pick[static_cast<size_t>(j)];
      for (int t = j + 1; t < r; ++t)
        pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return out;
}

bool sym_equal(const SymElement& a, const SymElement& b, int k) {
  if (a.gen != b.gen) throw std::invalid_argument("generator mismatch");
  return eval_sym(a, k) == eval_sym(b, k);
}

std::vector<StripTerm> horizontal_strips(const Partition& mu, int s) {
  if (!mu.is_strict())
    throw std::invalid_argument("horizontal_strips needs a strict partition");
  if (s < 1) throw std::invalid_argument("horizontal_strips needs s >= 1");
  std::vector<StripTerm> out;
  const std::vector<int>& m = mu.parts();
  const int rows = static_cast<int>(m.size()) + 1;  // allow one new row
  std::vector<int> lam(static_cast<size_t>(rows));
  /* interlacing: mu_{i-1} >= lambda_i >= mu_i, so at most one strip box
   * per column; lambda must stay strict */
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rows) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int x : lam)
        if (x > 0) parts.push_back(x);
      for (size_t j = 0; j + 1 < parts.size(); ++j)
        if (parts[j] <= parts[j + 1]) return;
      Partition lambda(std::move(parts));
      const std::vector<int>& l = lambda.parts();
      auto in_strip = [&](int col) {
        for (size_t r = 0; r < l.size(); ++r) {
          const int mr = r < m.size() ? m[r] : 0;
          if (col > mr && col <= l[r]) return true;
        }
        return false;
      };
      int b = 0;
      const int maxcol = l.empty() ? 0 : l[0];
      for (int col = 1; col < maxcol; ++col)
        if (!in_strip(col) && in_strip(col + 1)) ++b;
      out.push_back(StripTerm{std::move(lambda), b});
      return;
    }
    const int mi =
        i < static_cast<int>(m.size()) ? m[static_cast<size_t>(i)] : 0;
    const int hi = i == 0 ? mi + left
                          : std::min(m[static_cast<size_t>(i - 1)], mi + left);
    for (int v = mi; v <= hi; ++v) {
      lam[static_cast<size_t>(i)] = v;
      rec(i + 1, left - (v - mi));
    }
    lam[static_cast<size_t>(i)] = 0;
  };
  rec(0, s);
  std::sort(out.begin(), out.end(),
            [](const StripTerm& x, const StripTerm& y) {
              return x.lambda.parts() < y.lambda.parts();
            });
  return out;
}

bool classical_pieri_check(const Partition& mu, int s, int k) {
  std::vector<StripTerm> strips = horizontal_strips(mu, s);
  IntVector mv(mu.parts().begin(), mu.parts().end());
  TruncatedPolynomial pmu = eval_sym(forget(nsqf(mv)), k);
  TruncatedPolynomial qs = q_gen_poly(s, k);
  pmu.max_degree = qs.max_degree = mu.weight() + s;
  TruncatedPolynomial lhs = poly_mul(pmu, qs);
  TruncatedPolynomial rhs = poly_zero(k, mu.weight() + s);
  for (const StripTerm& t : strips) {
    IntVector lv(t.lambda.parts().begin(), t.lambda.parts().end());
    rhs = poly_add(rhs, poly_scale(eval_sym(forget(nsqf(lv)), k), pow2(t.b)));
  }
  /* match truncation bounds before comparing */
  lhs.max_degree = std::min(lhs.max_degree, rhs.max_degree);
  rhs.max_degree = lhs.max_degree;
  auto trim = [](TruncatedPolynomial& p) {
    for (auto it = p.terms.begin(); it != p.terms.end();) {
      int d = 0;
      for (int x : it->first) d += x;
      it = d > p.max_degree ? p.terms.erase(it) : std::next(it);
    }
  };
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

bool schur_p_refinement_check(const Partition& lambda, int k) {
  if (!lambda.is_strict())
    throw std::invalid_argument("schur_p_refinement_check needs strict lambda");
  const int n = lambda.weight();
  /* S'_lambda = 2^{-l(lambda)} S_lambda as a polynomial */
  IntVector lv(lambda.parts().begin(), lambda.parts().end());
  TruncatedPolynomial lhs = poly_scale(eval_sym(forget(nsqf(lv)), k),
                                       pow2(-lambda.length()));
  TruncatedPolynomial rhs = poly_zero(k, n);
  for (const Composition& alpha : peak_compositions(n)) {
    bool distinct = true;
    for (int i = 0; distinct && i < alpha.length(); ++i)
      for (int j = i + 1; j < alpha.length(); ++j)
        if (alpha[i] == alpha[j]) {
          distinct = false;
          break;
        }
    if (!distinct) continue;
    auto [sorted, sign] = rearrangement(alpha);
    if (sorted.parts() != lambda.parts()) continue;
    TruncatedPolynomial term = eval_qsym(qsqf_star_m(alpha), k);
    rhs = poly_add(rhs, poly_scale(term, Rational(sign)));
  }
  lhs.max_degree = std::min(lhs.max_degree, rhs.max_degree);
  rhs.max_degree = lhs.max_degree;
  return lhs == rhs;
}

}  // namespace peakalg
