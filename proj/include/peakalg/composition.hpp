#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace peakalg {

class Composition;
class PeakSet;
class Partition;

/* Integer vectors with no positivity constraint (operator indices). */
using IntVector = std::vector<int>;

/* A composition of n: a finite sequence of positive integers.  The empty
 * sequence is the unique composition of 0.  Comparison is lexicographic,
 * which fixes the term order of every element and matrix in the library. */
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  /* Inverse of descent_set: rebuilds the composition of n whose partial
   * sums are exactly d.  Requires d subset of {1,...,n-1}. */
  static Composition from_descents(const std::set<int>& d, int n);

  /* Parses "2,2,1"; "" denotes the empty composition.  Errors carry the
   * offset of the offending character. */
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;  // |alpha|
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  int last() const { return parts_.back(); }

  /* D(alpha) = {a1, a1+a2, ...} without |alpha| itself, increasing. */
  std::vector<int> descents() const;

  std::string str() const;

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Composition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
};

/* A peak set in [2, n-1] with no two consecutive entries, tied to its n. */
class PeakSet {
 public:
  PeakSet(std::vector<int> elems, int n);

  const std::vector<int>& elems() const { return elems_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }

  bool operator==(const PeakSet& o) const {
    return n_ == o.n_ && elems_ == o.elems_;
  }
  auto operator<=>(const PeakSet& o) const = default;

  std::string str() const;

 private:
  std::vector<int> elems_;
  int n_ = 0;
};

/* Weakly decreasing positive parts. */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  /* strictly decreasing parts */
  bool is_strict() const;

  std::string str() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
};

/* f_0 = f_1 = 1, f_k = f_{k-1} + f_{k-2}. */
long long fibonacci(int k);

std::vector<int> descent_set(const Composition& a);

/* P(alpha): positions x in [2, n-1] with x in D(alpha), x-1 not in D(alpha). */
PeakSet peak_set(const Composition& a);

/* Every part > 1 except possibly the last. */
bool is_peak_composition(const Composition& a);

/* alpha refines beta (alpha <= beta): D(beta) subset of D(alpha).
 * Throws if |alpha| != |beta|. */
bool refines(const Composition& a, const Composition& b);

/* All compositions of n >= 1 in lexicographic order (2^{n-1} of them). */
std::vector<Composition> compositions(int n);

/* Compositions of n with all parts odd (f_{n-1} of them). */
std::vector<Composition> odd_compositions(int n);

/* Peak compositions of n in lexicographic order (f_{n-1} of them). */
std::vector<Composition> peak_compositions(int n);

/* Peak sets in [2, n-1], ordered by their peak compositions. */
std::vector<PeakSet> peak_sets(int n);

/* Sorts alpha weakly decreasing and reports the sign (-1)^{inversions} of
 * the sorting permutation.  Repeated parts make the sign ill-defined:
 * throws std::invalid_argument. */
std::pair<Partition, int> rearrangement(const Composition& a);

}  // namespace peakalg
