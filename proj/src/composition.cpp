#include "peakalg/composition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace peakalg {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1)
      throw std::invalid_argument("composition parts must be positive, got " +
                                  std::to_string(p));
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::from_descents(const std::set<int>& d, int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  if (n == 0) {
    if (!d.empty()) throw std::invalid_argument("descents out of range");
    return Composition{};
  }
  std::vector<int> parts;
  int prev = 0;
  for (int x : d) {
    if (x <= prev || x >= n)
      throw std::invalid_argument("descent " + std::to_string(x) +
                                  " outside {1,...," + std::to_string(n - 1) +
                                  "}");
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

Composition Composition::parse(std::string_view text) {
  if (text.empty()) return Composition{};
  std::vector<int> parts;
  size_t i = 0;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("invalid composition '" + std::string(text) +
                                  "' at position " + std::to_string(i));
    long v = 0;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000)
        throw std::invalid_argument("part too large at position " +
                                    std::to_string(start));
      ++i;
    }
    parts.push_back(static_cast<int>(v));
    if (i < text.size()) {
      if (text[i] != ',')
        throw std::invalid_argument("invalid composition '" +
                                    std::string(text) + "' at position " +
                                    std::to_string(i));
      ++i;
      if (i == text.size())
        throw std::invalid_argument("trailing comma in '" + std::string(text) +
                                    "'");
    }
  }
  return Composition(std::move(parts));
}

int Composition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::descents() const {
  std::vector<int> d;
  int acc = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    d.push_back(acc);
  }
  return d;
}

std::string Composition::str() const { return join_parts(parts_); }

PeakSet::PeakSet(std::vector<int> elems, int n) : elems_(std::move(elems)), n_(n) {
  if (n_ < 0) throw std::invalid_argument("negative n for peak set");
  std::sort(elems_.begin(), elems_.end());
  int prev = 0;
  for (int x : elems_) {
    if (x < 2 || x > n_ - 1)
      throw std::invalid_argument("peak " + std::to_string(x) +
                                  " outside [2," + std::to_string(n_ - 1) +
                                  "]");
    if (prev != 0 && x == prev + 1)
      throw std::invalid_argument("adjacent peaks " + std::to_string(prev) +
                                  "," + std::to_string(x));
    prev = x;
  }
}

std::string PeakSet::str() const {
  return "{" + join_parts(elems_) + "}/" + std::to_string(n_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
  for (size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] == parts_[i + 1]) return false;
  return true;
}

std::string Partition::str() const { return join_parts(parts_); }

long long fibonacci(int k) {
  if (k < 0) throw std::invalid_argument("fibonacci of negative index");
  long long a = 1, b = 1;  // f_0, f_1
  if (k == 0 || k == 1) return 1;
  for (int i = 2; i <= k; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::vector<int> descent_set(const Composition& a) { return a.descents(); }

PeakSet peak_set(const Composition& a) {
  const int n = a.weight();
  std::vector<int> d = a.descents();
  std::vector<int> peaks;
  auto has = [&d](int x) {
    return std::binary_search(d.begin(), d.end(), x);
  };
  for (int x : d)
    if (x >= 2 && x <= n - 1 && !has(x - 1)) peaks.push_back(x);
  return PeakSet(std::move(peaks), n);
}

bool is_peak_composition(const Composition& a) {
  const auto& p = a.parts();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < 2) return false;
  return true;
}

bool refines(const Composition& a, const Composition& b) {
  if (a.weight() != b.weight())
    throw std::invalid_argument("refines: weights differ (" +
                                std::to_string(a.weight()) + " vs " +
                                std::to_string(b.weight()) + ")");
  std::vector<int> da = a.descents(), db = b.descents();
  return std::includes(da.begin(), da.end(), db.begin(), db.end());
}

namespace {

void compositions_rec(int n, std::vector<int>& stem,
                      std::vector<Composition>& out, bool odd_only) {
  if (n == 0) {
    out.push_back(Composition(stem));
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (odd_only && a % 2 == 0) continue;
    stem.push_back(a);
    compositions_rec(n - a, stem, out, odd_only);
    stem.pop_back();
  }
}

void peak_compositions_rec(int n, std::vector<int>& stem,
                           std::vector<Composition>& out) {
  if (n == 1 && stem.empty()) {
    out.push_back(Composition{1});
    return;
  }
  /* first parts ascending keeps the output lexicographic */
  for (int a = 2; a <= n - 1; ++a) {
    stem.push_back(a);
    if (n - a == 1) {
      stem.push_back(1);
      out.push_back(Composition(stem));
      stem.pop_back();
    } else {
      peak_compositions_rec(n - a, stem, out);
    }
    stem.pop_back();
  }
  stem.push_back(n);
  out.push_back(Composition(stem));
  stem.pop_back();
}

void check_positive_n(int n, const char* what) {
  if (n < 1)
    throw std::invalid_argument(std::string(what) + " needs n >= 1, got " +
                                std::to_string(n));
}

}  // namespace

std::vector<Composition> compositions(int n) {
  check_positive_n(n, "compositions");
  std::vector<Composition> out;
  std::vector<int> stem;
  compositions_rec(n, stem, out, false);
  return out;
}

std::vector<Composition> odd_compositions(int n) {
  check_positive_n(n, "odd_compositions");
  std::vector<Composition> out;
  std::vector<int> stem;
  compositions_rec(n, stem, out, true);
  return out;
}

std::vector<Composition> peak_compositions(int n) {
  check_positive_n(n, "peak_compositions");
  std::vector<Composition> out;
  std::vector<int> stem;
  peak_compositions_rec(n, stem, out);
  return out;
}

std::vector<PeakSet> peak_sets(int n) {
  std::vector<PeakSet> out;
  for (const Composition& c : peak_compositions(n)) {
    std::vector<int> d = c.descents();
    out.emplace_back(std::move(d), n);
  }
  return out;
}

std::pair<Partition, int> rearrangement(const Composition& a) {
  const auto& p = a.parts();
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j])
        throw std::invalid_argument(
            "rearrangement sign undefined for repeated part " +
            std::to_string(p[i]));
      if (p[i] < p[j]) ++inversions;  // out of order wrt decreasing
    }
  std::vector<int> sorted = p;
  std::sort(sorted.rbegin(), sorted.rend());
  return {Partition(std::move(sorted)), inversions % 2 == 0 ? 1 : -1};
}

}  // namespace peakalg
