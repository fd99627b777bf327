#include "peakalg/qsym.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "peakalg/linalg.hpp"
#include "peakalg/tableaux.hpp"

namespace peakalg {

std::string_view qbasis_name(QBasis b) {
  switch (b) {
    case QBasis::M: return "M";
    case QBasis::F: return "F";
    case QBasis::K: return "K";
    case QBasis::SStar: return "SStar";
    case QBasis::SBarStar: return "SBarStar";
  }
  throw std::logic_error("bad QBasis");
}

QBasis qbasis_from_name(std::string_view s) {
  if (s == "M") return QBasis::M;
  if (s == "F") return QBasis::F;
  if (s == "K") return QBasis::K;
  if (s == "SStar") return QBasis::SStar;
  if (s == "SBarStar") return QBasis::SBarStar;
  throw std::invalid_argument("unknown QSym basis " + std::string(s));
}

QSymElement QSymElement::monomial(QBasis b, Composition idx,
                                  const Rational& c) {
  QSymElement e(b);
  e.add(idx, c);
  return e;
}

void QSymElement::add(const Composition& idx, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QSymElement::add_scaled(const QSymElement& other, const Rational& c) {
  if (other.basis_ != basis_)
    throw std::invalid_argument("QSym basis mismatch in add_scaled");
  for (const auto& [idx, v] : other.terms_) add(idx, v * c);
}

Rational QSymElement::coeff(const Composition& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

QSymElement& QSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

std::string QSymElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rational_str(c) << "*";
    os << qbasis_name(basis_) << "_" << idx.str();
  }
  return os.str();
}

namespace {

int descent_mask(const Composition& a) {
  int mask = 0;
  int run = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    run += a[i];
    mask |= 1 << (run - 1);
  }
  return mask;
}

Composition mask_composition(int mask, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int d = 1; d < n; ++d)
    if (mask & (1 << (d - 1))) {
      parts.push_back(d - prev);
      prev = d;
    }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

/* visits every superset of base inside [0, 2^{n-1}) */
template <typename F>
void for_supersets(int base, int n, F f) {
  const int full = (1 << (n - 1)) - 1;
  const int free = full & ~base;
  int sub = free;
  while (true) {
    f(base | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
}

}  // namespace

QSymElement f_to_m_word(const Composition& alpha) {
  const int n = alpha.weight();
  QSymElement out(QBasis::M);
  if (n == 0) {
    out.add(alpha, Rational(1));
    return out;
  }
  for_supersets(descent_mask(alpha), n,
                [&](int m) { out.add(mask_composition(m, n), Rational(1)); });
  return out;
}

QSymElement f_to_m(const QSymElement& a) {
  if (a.basis() != QBasis::F)
    throw std::invalid_argument("f_to_m expects the F basis");
  QSymElement out(QBasis::M);
  for (const auto& [idx, c] : a.terms())
    out.add_scaled(f_to_m_word(idx), c);
  return out;
}

QSymElement m_to_f(const QSymElement& a) {
  if (a.basis() != QBasis::M)
    throw std::invalid_argument("m_to_f expects the M basis");
  QSymElement out(QBasis::F);
  for (const auto& [idx, c] : a.terms()) {
    const int n = idx.weight();
    if (n == 0) {
      out.add(idx, c);
      continue;
    }
    const int base = descent_mask(idx);
    for_supersets(base, n, [&](int m) {
      const int extra = __builtin_popcount(m) - __builtin_popcount(base);
      out.add(mask_composition(m, n), extra % 2 == 0 ? c : -c);
    });
  }
  return out;
}

QSymElement k_to_f(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("K indices must be peak compositions");
  const int n = alpha.weight();
  const std::vector<int> dp = alpha.descents();
  const std::set<int> p(dp.begin(), dp.end());
  QSymElement out(QBasis::F);
  const Rational scale = pow2(static_cast<long>(p.size()) + 1);
  for (const Composition& beta : compositions(n)) {
    std::set<int> sym;
    for (int d : beta.descents()) {
      /* toggle: symmetric difference of D and D+1 */
      if (!sym.erase(d)) sym.insert(d);
      if (!sym.erase(d + 1)) sym.insert(d + 1);
    }
    bool ok = true;
    for (int x : p)
      if (!sym.count(x)) {
        ok = false;
        break;
      }
    if (ok) out.add(beta, scale);
  }
  return out;
}

QSymElement k_to_m(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("K indices must be peak compositions");
  const int n = alpha.weight();
  const std::vector<int> dp = alpha.descents();
  const std::set<int> p(dp.begin(), dp.end());
  QSymElement out(QBasis::M);
  for (const Composition& beta : compositions(n)) {
    std::set<int> u;
    for (int d : beta.descents()) {
      u.insert(d);
      u.insert(d + 1);
    }
    bool ok = true;
    for (int x : p)
      if (!u.count(x)) {
        ok = false;
        break;
      }
    if (ok) out.add(beta, pow2(beta.length()));
  }
  return out;
}

QSymElement vartheta(const QSymElement& a) {
  if (a.basis() != QBasis::F)
    throw std::invalid_argument("vartheta expects the F basis");
  QSymElement out(QBasis::K);
  for (const auto& [idx, c] : a.terms()) {
    const PeakSet p = peak_set(idx);
    const std::set<int> d(p.elems().begin(), p.elems().end());
    out.add(Composition::from_descents(d, idx.weight()), c);
  }
  return out;
}

namespace {

Rational kronecker_pairing(const NSymElement& a, const QSymElement& f) {
  Rational s(0);
  for (const auto& [idx, c] : a.terms()) {
    const Rational fc = f.coeff(idx);
    if (fc != 0) s += c * fc;
  }
  return s;
}

}  // namespace

Rational pairing_hm(const NSymElement& a, const QSymElement& f) {
  if (a.basis() != Basis::H || f.basis() != QBasis::M)
    throw std::invalid_argument("pairing_hm expects H against M");
  return kronecker_pairing(a, f);
}

Rational pairing_rf(const NSymElement& a, const QSymElement& f) {
  if (a.basis() != Basis::R || f.basis() != QBasis::F)
    throw std::invalid_argument("pairing_rf expects R against F");
  return kronecker_pairing(a, f);
}

Rational pairing_pik(const NSymElement& a, const QSymElement& f) {
  if (a.basis() != Basis::Pi || f.basis() != QBasis::K)
    throw std::invalid_argument("pairing_pik expects Pi against K");
  return kronecker_pairing(a, f);
}

QSymElement qsqf_star_m(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("qsqf_star_m needs a peak composition");
  const int n = alpha.weight();
  QSymElement out(QBasis::M);
  for (const Composition& beta : compositions(n)) {
    Rational w = pct_weight_sum(alpha, beta);
    if (w != 0) out.add(beta, w);
  }
  return out;
}

QSymElement qsqf_star_f(const Composition& alpha) {
  return m_to_f(qsqf_star_m(alpha));
}

QSymElement qsqf_bar_star_m(const Composition& alpha) {
  QSymElement out = qsqf_star_m(alpha);
  out *= pow2(alpha.length());
  return out;
}

QSymElement expand_over_k(const QSymElement& a, int n) {
  if (a.basis() != QBasis::M)
    throw std::invalid_argument("expand_over_k expects the M basis");
  for (const auto& [idx, c] : a.terms())
    if (idx.weight() != n)
      throw std::invalid_argument("element is not homogeneous of degree " +
                                  std::to_string(n));
  const std::vector<Composition> all = compositions(n);
  std::map<Composition, size_t> pos;
  for (size_t i = 0; i < all.size(); ++i) pos.emplace(all[i], i);
  const std::vector<Composition> peaks = peak_compositions(n);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(peaks.size());
  for (const Composition& p : peaks) {
    std::vector<Rational> row(all.size());
    const QSymElement kp = k_to_m(p);
    for (const auto& [idx, c] : kp.terms()) row[pos.at(idx)] = c;
    rows.push_back(std::move(row));
  }
  ExactSolver solver(std::move(rows));
  std::vector<Rational> target(all.size());
  for (const auto& [idx, c] : a.terms()) target[pos.at(idx)] = c;
  auto coords = solver.solve(target);
  if (!coords)
    throw std::domain_error("element is not in the span of the K basis");
  QSymElement out(QBasis::K);
  for (size_t i = 0; i < peaks.size(); ++i)
    if ((*coords)[i] != 0) out.add(peaks[i], (*coords)[i]);
  return out;
}

}  // namespace peakalg
