#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace curvop {

// Strictly increasing multi-index over {1, ..., n}. The empty index (degree
// zero) is a first-class value: it is the unit for the wedge bookkeeping and
// indexes the scalar slot of degree-(0,0) forms. All entries are 1-based.
class MultiIndex {
 public:
  MultiIndex(int n, std::vector<int> entries);

  static MultiIndex empty(int n);
  static MultiIndex full(int n);

  int ambient() const { return n_; }
  int degree() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int entry(int pos) const;  // 1-based position within the index

  bool contains(int s) const;
  // 1-based rank of s among the entries; 0 when s is absent.
  int position_of(int s) const;

  MultiIndex with(int s) const;     // s must be absent
  MultiIndex without(int s) const;  // s must be present

  std::string to_string() const;  // e.g. "{1,3}" or "{}"

  bool operator==(const MultiIndex&) const = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

// Sign of contracting the s-th coordinate out of the index: 0 when s is
// absent, otherwise (-1)^(k-1) where s is the k-th smallest entry. This is the
// coefficient in  dz_s-slot interior product:  dz_I  ->  sign * dz_{I \ s}.
int contraction_sign(int s, const MultiIndex& I);

MultiIndex complement(const MultiIndex& I);

// Sign of the permutation taking (1, ..., n) to the concatenation
// (I, complement(I)). Both halves are increasing, so the inversion count is
// sum over positions t of (I_t - t).
int complement_sign(const MultiIndex& I);

// complement_sign(I) * (-1)^degree(I): the per-index coefficient of the
// degree-reversing duality map on forms.
int duality_sign(const MultiIndex& I);

// All degree-d multi-indices over {1..n} in lexicographic order. Empty when
// d < 0 or d > n.
std::vector<MultiIndex> enumerate_multi_indices(int n, int d);

// Position of I within enumerate_multi_indices(I.ambient(), I.degree()).
std::size_t multi_index_rank(const MultiIndex& I);

// Inverse of multi_index_rank for the given (n, d).
MultiIndex multi_index_unrank(int n, int d, std::size_t rank);

std::uint64_t binomial(int n, int k);

}  // namespace curvop
