#include "peakalg/peak.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "peakalg/linalg.hpp"

namespace peakalg {

namespace {

std::vector<int> with_offsets(const std::vector<int>& d, int offset, int n) {
  /* d union (d + offset), clipped to [1, n-1], sorted unique */
  std::vector<int> out;
  for (int x : d) {
    out.push_back(x);
    if (x + offset <= n - 1) out.push_back(x + offset);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/* cached per-degree solver over {Q_gamma : gamma odd} in H coordinates */
const ExactSolver& odd_q_solver(int n, std::vector<Composition>& odd_out) {
  static std::map<int, std::pair<std::vector<Composition>, ExactSolver>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Composition> odd = odd_compositions(n);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(odd.size());
    for (const Composition& g : odd)
      rows.push_back(detail::dense_h_component(
          NSymElement::monomial(Basis::Q, g), n));
    it = cache
             .emplace(n, std::make_pair(std::move(odd),
                                        ExactSolver(std::move(rows))))
             .first;
  }
  odd_out = it->second.first;
  return it->second.second;
}

}  // namespace

NSymElement pi_in_ribbons(const PeakSet& p) {
  const int n = p.n();
  if (n < 1) throw std::invalid_argument("pi_in_ribbons needs n >= 1");
  NSymElement out(Basis::R);
  for (const Composition& g : compositions(n))
    if (peak_set(g) == p) out.add(g, Rational(1));
  return out;
}

NSymElement theta(const NSymElement& a) {
  if (a.basis() != Basis::H)
    throw std::invalid_argument("theta expects the H basis; convert first");
  NSymElement out(Basis::Q);
  for (const auto& [idx, c] : a.terms()) out.add(idx, c);
  return out;
}

NSymElement theta_ribbon(const Composition& alpha) {
  const int n = alpha.weight();
  if (n < 1) throw std::invalid_argument("theta_ribbon needs |alpha| >= 1");
  const std::vector<int> d = alpha.descents();
  /* D triangle (D+1), clipped to [1, n-1] */
  std::vector<int> sym;
  for (int x : d) {
    const bool in_d1 = std::binary_search(d.begin(), d.end(), x - 1);
    if (!in_d1) sym.push_back(x);  // in D, not in D+1
  }
  for (int x : d) {
    const int y = x + 1;
    if (y <= n - 1 && !std::binary_search(d.begin(), d.end(), y))
      sym.push_back(y);  // in D+1, not in D
  }
  std::sort(sym.begin(), sym.end());
  NSymElement out(Basis::Pi);
  for (const Composition& beta : peak_compositions(n))
    if (subset_of(beta.descents(), sym))
      out.add(beta, pow2(beta.length()));
  return out;
}

NSymElement q_to_pi(const Composition& alpha) {
  const int n = alpha.weight();
  if (n < 1) throw std::invalid_argument("q_to_pi needs |alpha| >= 1");
  const std::vector<int> uni = with_offsets(alpha.descents(), 1, n);
  NSymElement out(Basis::Pi);
  const Rational scale = pow2(alpha.length());
  for (const Composition& beta : peak_compositions(n))
    if (subset_of(beta.descents(), uni)) out.add(beta, scale);
  return out;
}

NSymElement q_element_to_pi(const NSymElement& a) {
  if (a.basis() != Basis::Q)
    throw std::invalid_argument("q_element_to_pi expects the Q basis");
  NSymElement out(Basis::Pi);
  for (const auto& [idx, c] : a.terms()) {
    if (idx.empty())
      throw std::invalid_argument("scalar term has no Pi expansion");
    out.add_scaled(q_to_pi(idx), c);
  }
  return out;
}

std::vector<Rational> odd_q_coordinates(const NSymElement& a, int n) {
  if (n < 1) throw std::invalid_argument("odd_q_coordinates needs n >= 1");
  std::vector<Composition> odd;
  const ExactSolver& solver = odd_q_solver(n, odd);
  auto coords = solver.solve(detail::dense_h_component(a, n));
  if (!coords)
    throw std::domain_error(
        "element is not in the degree-" + std::to_string(n) +
        " component of the peak subalgebra");
  return *coords;
}

NSymElement pi_in_q_odd(const PeakSet& p) {
  const int n = p.n();
  /* Pi_P is keyed by the peak composition with D = P */
  std::set<int> dset(p.elems().begin(), p.elems().end());
  Composition key = Composition::from_descents(dset, n);
  if (!is_peak_composition(key))
    throw std::invalid_argument("no peak composition has descent set " +
                                p.str());
  NSymElement pi = NSymElement::monomial(Basis::Pi, key);
  std::vector<Composition> odd;
  odd_q_solver(n, odd);
  std::vector<Rational> coords = odd_q_coordinates(pi, n);
  NSymElement out(Basis::Q);
  for (size_t i = 0; i < odd.size(); ++i)
    if (coords[i] != 0) out.add(odd[i], coords[i]);
  return out;
}

}  // namespace peakalg
