#include "peakalg/nsym.hpp"

#include <mutex>
#include <stdexcept>

#include "peakalg/nsqf.hpp"
#include "peakalg/peak.hpp"

namespace peakalg {

namespace {

constexpr int kMaxDenseDegree = 22;

void check_degree_bound(int n) {
  if (n > kMaxDenseDegree)
    throw std::runtime_error("degree " + std::to_string(n) +
                             " exceeds the dense H-coordinate bound");
}

/* Homogeneous word expansions are held densely, indexed by descent
 * bitmask (bit j set iff j+1 is a descent).  Concatenating words of
 * degrees d1, d2 is then pure mask arithmetic. */
std::vector<Rational> concat(const std::vector<Rational>& a, int da,
                             const std::vector<Rational>& b, int db) {
  std::vector<Rational> out(size_t(1) << (da + db - 1));
  const std::uint32_t join = std::uint32_t(1) << (da - 1);
  for (std::uint32_t ma = 0; ma < a.size(); ++ma) {
    if (a[ma] == 0) continue;
    const std::uint32_t base = ma | join;
    for (std::uint32_t mb = 0; mb < b.size(); ++mb) {
      if (b[mb] == 0) continue;
      out[base | (mb << da)] += a[ma] * b[mb];
    }
  }
  return out;
}

std::mutex g_table_mutex;

/* E_n over H, from sum_{i=0}^{n} (-1)^i E_i H_{n-i} = [n = 0]. */
const std::vector<Rational>& e_table(int n) {
  static std::vector<std::vector<Rational>> cache;  // cache[d-1] = E_d
  check_degree_bound(n);
  while (static_cast<int>(cache.size()) < n) {
    const int d = static_cast<int>(cache.size()) + 1;
    std::vector<Rational> v(size_t(1) << (d - 1));
    /* E_d = (-1)^{d+1} sum_{i=0}^{d-1} (-1)^i E_i H_{d-i} */
    for (int i = 0; i < d; ++i) {
      const Rational sign((d + 1 + i) % 2 == 0 ? 1 : -1);
      if (i == 0) {
        v[0] += sign;  // H_{(d)}: empty descent set
      } else {
        const auto& ei = cache[i - 1];
        const std::uint32_t join = std::uint32_t(1) << (i - 1);
        for (std::uint32_t m = 0; m < ei.size(); ++m)
          if (ei[m] != 0) v[m | join] += sign * ei[m];
      }
    }
    cache.push_back(std::move(v));
  }
  return cache[n - 1];
}

/* Q_n over H: Q_n = sum_{k=0}^{n} E_k H_{n-k}. */
const std::vector<Rational>& q_table(int n) {
  static std::vector<std::vector<Rational>> cache;
  check_degree_bound(n);
  while (static_cast<int>(cache.size()) < n) {
    const int d = static_cast<int>(cache.size()) + 1;
    std::vector<Rational> v(size_t(1) << (d - 1));
    v[0] += Rational(1);  // k = 0 term: H_d
    for (int k = 1; k <= d; ++k) {
      const auto& ek = e_table(k);
      if (k == d) {
        for (std::uint32_t m = 0; m < ek.size(); ++m) v[m] += ek[m];
      } else {
        const std::uint32_t join = std::uint32_t(1) << (k - 1);
        for (std::uint32_t m = 0; m < ek.size(); ++m)
          if (ek[m] != 0) v[m | join] += ek[m];
      }
    }
    cache.push_back(std::move(v));
  }
  return cache[n - 1];
}

/* H_n over E (mask indexes E words here), via
 * H_d = sum_{i=1}^{d} (-1)^{i-1} E_i H_{d-i}. */
const std::vector<Rational>& h_in_e_table(int n) {
  static std::vector<std::vector<Rational>> cache;
  check_degree_bound(n);
  while (static_cast<int>(cache.size()) < n) {
    const int d = static_cast<int>(cache.size()) + 1;
    std::vector<Rational> v(size_t(1) << (d - 1));
    for (int i = 1; i <= d; ++i) {
      const Rational sign(i % 2 == 1 ? 1 : -1);
      if (i == d) {
        v[0] += sign;  // the word (d)
      } else {
        const auto& rest = cache[d - i - 1];
        const std::uint32_t join = std::uint32_t(1) << (i - 1);
        for (std::uint32_t m = 0; m < rest.size(); ++m)
          if (rest[m] != 0) v[join | (m << i)] += sign * rest[m];
      }
    }
    cache.push_back(std::move(v));
  }
  return cache[n - 1];
}

enum class Gen { E, Q, HinE };

const std::vector<Rational>& gen_table(Gen g, int n) {
  switch (g) {
    case Gen::E: return e_table(n);
    case Gen::Q: return q_table(n);
    case Gen::HinE: return h_in_e_table(n);
  }
  throw std::logic_error("bad table tag");
}

/* Expansion of a product word over per-part tables; empty word = scalar. */
std::vector<Rational> fold_word(Gen g, const Composition& idx) {
  std::vector<Rational> cur;
  int deg = 0;
  std::lock_guard<std::mutex> lock(g_table_mutex);
  for (int part : idx.parts()) {
    const auto& t = gen_table(g, part);
    if (deg == 0) {
      cur = t;
    } else {
      check_degree_bound(deg + part);
      cur = concat(cur, deg, t, part);
    }
    deg += part;
  }
  return cur;
}

}  // namespace

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::E: return "E";
    case Basis::R: return "R";
    case Basis::Q: return "Q";
    case Basis::Pi: return "Pi";
    case Basis::S: return "S";
  }
  throw std::logic_error("bad basis tag");
}

Basis basis_from_name(std::string_view s) {
  if (s == "H") return Basis::H;
  if (s == "E") return Basis::E;
  if (s == "R") return Basis::R;
  if (s == "Q") return Basis::Q;
  if (s == "Pi") return Basis::Pi;
  if (s == "S") return Basis::S;
  throw std::invalid_argument("unknown basis '" + std::string(s) + "'");
}

bool is_multiplicative(Basis b) {
  return b == Basis::H || b == Basis::E || b == Basis::Q;
}

NSymElement NSymElement::monomial(Basis b, Composition idx, const Rational& c) {
  NSymElement e(b);
  e.add(idx, c);
  return e;
}

void NSymElement::add(const Composition& idx, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NSymElement::add_word(const IntVector& word, const Rational& c) {
  std::vector<int> parts;
  parts.reserve(word.size());
  for (int x : word) {
    if (x < 0) return;  // annihilated term
    if (x > 0) parts.push_back(x);
  }
  add(Composition(std::move(parts)), c);
}

void NSymElement::add_scaled(const NSymElement& other, const Rational& c) {
  if (basis_ != other.basis_)
    throw std::invalid_argument("add_scaled across bases");
  if (c == 0) return;
  for (const auto& [idx, v] : other.terms_) add(idx, v * c);
}

Rational NSymElement::coeff(const Composition& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

int NSymElement::degree() const {
  int d = 0;
  for (const auto& [idx, c] : terms_) d = std::max(d, idx.weight());
  return d;
}

NSymElement& NSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

NSymElement NSymElement::operator+(const NSymElement& o) const {
  NSymElement r = *this;
  r.add_scaled(o, Rational(1));
  return r;
}

NSymElement NSymElement::operator-(const NSymElement& o) const {
  NSymElement r = *this;
  r.add_scaled(o, Rational(-1));
  return r;
}

std::string NSymElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : terms_) {
    std::string cs = rational_str(c);
    if (s.empty()) {
      // first term keeps its sign as-is
    } else if (cs[0] == '-') {
      s += " - ";
      cs = cs.substr(1);
    } else {
      s += " + ";
    }
    s += cs;
    s += "*";
    s += basis_name(basis_);
    s += "[";
    s += idx.str();
    s += "]";
  }
  return s;
}

NSymElement operator*(const Rational& c, const NSymElement& e) {
  NSymElement r = e;
  r *= c;
  return r;
}

NSymElement multiply(const NSymElement& a, const NSymElement& b) {
  if (a.basis() != b.basis() || !is_multiplicative(a.basis()))
    throw std::invalid_argument(
        "multiply needs both factors in one multiplicative basis (H, E, Q)");
  NSymElement out(a.basis());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia.parts();
      idx.insert(idx.end(), ib.parts().begin(), ib.parts().end());
      out.add(Composition(std::move(idx)), ca * cb);
    }
  return out;
}

namespace detail {

void DenseH::add_mask(int degree, std::uint32_t mask, const Rational& c) {
  if (degree == 0) {
    scalar += c;
    return;
  }
  auto& v = by_degree[degree];
  if (v.empty()) v.resize(size_t(1) << (degree - 1));
  v[mask] += c;
}

bool DenseH::is_zero() const {
  if (scalar != 0) return false;
  for (const auto& [d, v] : by_degree)
    for (const auto& c : v)
      if (c != 0) return false;
  return true;
}

Composition mask_to_composition(std::uint32_t mask, int degree) {
  if (degree == 0) return Composition{};
  std::vector<int> parts;
  int prev = 0;
  for (int pos = 1; pos < degree; ++pos)
    if (mask & (std::uint32_t(1) << (pos - 1))) {
      parts.push_back(pos - prev);
      prev = pos;
    }
  parts.push_back(degree - prev);
  return Composition(std::move(parts));
}

std::uint32_t composition_to_mask(const Composition& a) {
  std::uint32_t mask = 0;
  int acc = 0;
  const auto& p = a.parts();
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    mask |= std::uint32_t(1) << (acc - 1);
  }
  return mask;
}

DenseH to_dense_h(const NSymElement& a) {
  DenseH acc;
  switch (a.basis()) {
    case Basis::H:
      for (const auto& [idx, c] : a.terms())
        acc.add_mask(idx.weight(), composition_to_mask(idx), c);
      return acc;
    case Basis::E:
    case Basis::Q: {
      const Gen g = a.basis() == Basis::E ? Gen::E : Gen::Q;
      for (const auto& [idx, c] : a.terms()) {
        if (idx.empty()) {
          acc.scalar += c;
          continue;
        }
        std::vector<Rational> v = fold_word(g, idx);
        const int deg = idx.weight();
        auto& target = acc.by_degree[deg];
        if (target.empty()) target.resize(v.size());
        for (std::uint32_t m = 0; m < v.size(); ++m)
          if (v[m] != 0) target[m] += c * v[m];
      }
      return acc;
    }
    case Basis::R:
      for (const auto& [idx, c] : a.terms()) {
        const int n = idx.weight();
        if (n == 0) {
          acc.scalar += c;
          continue;
        }
        check_degree_bound(n);
        /* R_alpha = sum_{D(beta) subset D(alpha)} (-1)^{|D(alpha)\D(beta)|} H_beta */
        const std::uint32_t mask = composition_to_mask(idx);
        const int bits = __builtin_popcount(mask);
        std::uint32_t sub = mask;
        while (true) {
          const int sb = __builtin_popcount(sub);
          acc.add_mask(n, sub, (bits - sb) % 2 == 0 ? c : -c);
          if (sub == 0) break;
          sub = (sub - 1) & mask;
        }
      }
      return acc;
    case Basis::Pi:
      for (const auto& [idx, c] : a.terms()) {
        if (idx.empty()) {
          acc.scalar += c;
          continue;
        }
        if (!is_peak_composition(idx))
          throw std::invalid_argument("Pi index " + idx.str() +
                                      " is not a peak composition");
        DenseH part = to_dense_h(pi_in_ribbons(peak_set(idx)));
        for (auto& [d, v] : part.by_degree) {
          auto& target = acc.by_degree[d];
          if (target.empty()) target.resize(v.size());
          for (size_t m = 0; m < v.size(); ++m)
            if (v[m] != 0) target[m] += c * v[m];
        }
      }
      return acc;
    case Basis::S: {
      NSymElement q(Basis::Q);
      for (const auto& [idx, c] : a.terms())
        q.add_scaled(nsqf_recursive(idx), c);
      return to_dense_h(q);
    }
  }
  throw std::logic_error("bad basis tag");
}

std::vector<Rational> dense_h_component(const NSymElement& a, int n) {
  check_degree_bound(n);
  DenseH d = to_dense_h(a);
  auto it = d.by_degree.find(n);
  if (it == d.by_degree.end() || it->second.empty())
    return std::vector<Rational>(size_t(1) << (n - 1));
  return std::move(it->second);
}

}  // namespace detail

NSymElement to_h(const NSymElement& a) {
  detail::DenseH d = detail::to_dense_h(a);
  NSymElement out(Basis::H);
  if (d.scalar != 0) out.add(Composition{}, d.scalar);
  for (const auto& [deg, v] : d.by_degree)
    for (std::uint32_t m = 0; m < v.size(); ++m)
      if (v[m] != 0) out.add(detail::mask_to_composition(m, deg), v[m]);
  return out;
}

bool equals(const NSymElement& a, const NSymElement& b) {
  if (a.basis() == b.basis() && a.same_terms(b)) return true;  // fast path
  detail::DenseH da = detail::to_dense_h(a);
  detail::DenseH db = detail::to_dense_h(b);
  if (da.scalar != db.scalar) return false;
  /* union of degrees, treating absent components as zero */
  for (const auto& [d, v] : db.by_degree)
    if (!da.by_degree.count(d)) da.by_degree[d] = {};
  auto all_zero = [](const std::vector<Rational>& v) {
    for (const auto& c : v)
      if (c != 0) return false;
    return true;
  };
  for (const auto& [d, va] : da.by_degree) {
    auto itb = db.by_degree.find(d);
    const std::vector<Rational>* vb =
        (itb != db.by_degree.end() && !itb->second.empty()) ? &itb->second
                                                            : nullptr;
    if (va.empty() && !vb) continue;
    if (va.empty()) {
      if (!all_zero(*vb)) return false;
    } else if (!vb) {
      if (!all_zero(va)) return false;
    } else if (va != *vb) {
      return false;
    }
  }
  return true;
}

NSymElement to_e(const NSymElement& a) {
  NSymElement h = a.basis() == Basis::H ? a : to_h(a);
  NSymElement out(Basis::E);
  for (const auto& [idx, c] : h.terms()) {
    if (idx.empty()) {
      out.add(idx, c);
      continue;
    }
    std::vector<Rational> v = fold_word(Gen::HinE, idx);
    const int deg = idx.weight();
    for (std::uint32_t m = 0; m < v.size(); ++m)
      if (v[m] != 0) out.add(detail::mask_to_composition(m, deg), c * v[m]);
  }
  return out;
}

NSymElement to_r(const NSymElement& a) {
  NSymElement h = a.basis() == Basis::H ? a : to_h(a);
  NSymElement out(Basis::R);
  for (const auto& [idx, c] : h.terms()) {
    if (idx.empty()) {
      out.add(idx, c);
      continue;
    }
    /* H_alpha = sum over coarsenings of alpha of R_beta */
    const int n = idx.weight();
    const std::uint32_t mask = detail::composition_to_mask(idx);
    std::uint32_t sub = mask;
    while (true) {
      out.add(detail::mask_to_composition(sub, n), c);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  return out;
}

NSymElement euler_element(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("euler_element needs even n >= 2");
  NSymElement out(Basis::H);
  for (int i = 0; i <= n; ++i)
    out.add_word({i, n - i}, Rational(i % 2 == 0 ? 1 : -1));
  return out;
}

Integer catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan of negative index");
  Integer num;
  mpz_bin_uiui(num.get_mpz_t(), 2 * static_cast<unsigned long>(k),
               static_cast<unsigned long>(k));
  return num / (k + 1);
}

NSymElement q_even_expansion(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("q_even_expansion needs even n >= 2");
  NSymElement out(Basis::Q);
  for (const Composition& a : odd_compositions(n)) {
    const int l = a.length();  // even, since n is
    Rational c = Rational(catalan(l / 2 - 1)) * pow2(1 - l);
    if ((l / 2 - 1) % 2 == 1) c = -c;
    out.add(a, c);
  }
  return out;
}

}  // namespace peakalg
