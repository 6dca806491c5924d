#include <algorithm>
#include <stdexcept>
#include <vector>

#include "curvop/multiindex.hpp"
#include "doctest.h"

using namespace curvop;

namespace {

// Independent parity oracle: sign of the permutation sending (1..n) to the
// concatenation (I, complement(I)), by literal inversion counting.
int parity_by_inversions(const MultiIndex& I) {
  std::vector<int> perm = I.entries();
  const MultiIndex comp = complement(I);
  perm.insert(perm.end(), comp.entries().begin(), comp.entries().end());
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("contraction sign: position parity, zero when absent") {
  const MultiIndex I(3, {2, 3});
  CHECK(contraction_sign(2, I) == 1);
  CHECK(contraction_sign(3, I) == -1);
  CHECK(contraction_sign(1, I) == 0);

  const MultiIndex J(5, {1, 3, 4});
  CHECK(contraction_sign(1, J) == 1);
  CHECK(contraction_sign(3, J) == -1);
  CHECK(contraction_sign(4, J) == 1);
  CHECK(contraction_sign(2, J) == 0);
  CHECK(contraction_sign(5, J) == 0);

  CHECK(contraction_sign(1, MultiIndex::empty(4)) == 0);
}

TEST_CASE("contraction sign is the coefficient of removal then re-insertion") {
  // Removing s and putting it back in front costs exactly the crossing count
  // the sign encodes: sign * (insert position parity) must reproduce identity.
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= n; ++d)
      for (const auto& I : enumerate_multi_indices(n, d))
        for (int s : I.entries()) {
          const MultiIndex less = I.without(s);
          CHECK(less.with(s) == I);
          CHECK(contraction_sign(s, I) ==
                (I.position_of(s) % 2 == 1 ? 1 : -1));
        }
}

TEST_CASE("complement") {
  CHECK(complement(MultiIndex(4, {1, 3})) == MultiIndex(4, {2, 4}));
  CHECK(complement(MultiIndex::empty(3)) == MultiIndex::full(3));
  CHECK(complement(MultiIndex::full(3)) == MultiIndex::empty(3));
  for (int n = 0; n <= 5; ++n)
    for (int d = 0; d <= n; ++d)
      for (const auto& I : enumerate_multi_indices(n, d))
        CHECK(complement(complement(I)) == I);
}

TEST_CASE("complement sign equals inversion-count parity") {
  CHECK(complement_sign(MultiIndex(2, {2})) == -1);
  CHECK(complement_sign(MultiIndex(2, {1})) == 1);
  CHECK(complement_sign(MultiIndex(4, {2, 4})) == -1);
  for (int n = 0; n <= 6; ++n)
    for (int d = 0; d <= n; ++d)
      for (const auto& I : enumerate_multi_indices(n, d))
        CHECK(complement_sign(I) == parity_by_inversions(I));
}

TEST_CASE("duality sign") {
  CHECK(duality_sign(MultiIndex(2, {2})) == 1);
  CHECK(duality_sign(MultiIndex(2, {1})) == -1);
  for (int n = 0; n <= 6; ++n)
    for (int d = 0; d <= n; ++d)
      for (const auto& I : enumerate_multi_indices(n, d))
        CHECK(duality_sign(I) == complement_sign(I) * (d % 2 == 0 ? 1 : -1));
}

TEST_CASE("enumeration is lexicographic, complete, and consistent with rank") {
  for (int n = 0; n <= 6; ++n)
    for (int d = -1; d <= n + 1; ++d) {
      const auto all = enumerate_multi_indices(n, d);
      if (d < 0 || d > n) {
        CHECK(all.empty());
        continue;
      }
      CHECK(all.size() == binomial(n, d));
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(multi_index_rank(all[i]) == i);
        CHECK(multi_index_unrank(n, d, i) == all[i]);
        if (i > 0) CHECK(all[i - 1].entries() < all[i].entries());
      }
    }
}

TEST_CASE("binomial edges and the Pascal identity") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  for (int n = 1; n <= 16; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("multi-index invariants and rejection of malformed input") {
  CHECK_THROWS_AS(MultiIndex(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(3, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex(3, {4}), std::invalid_argument);

  const MultiIndex I(5, {2, 4});
  CHECK(I.degree() == 2);
  CHECK(I.entry(1) == 2);
  CHECK(I.entry(2) == 4);
  CHECK(I.position_of(4) == 2);
  CHECK(I.position_of(3) == 0);
  CHECK(I.to_string() == "{2,4}");
  CHECK(MultiIndex::empty(5).to_string() == "{}");
  CHECK_THROWS_AS(I.with(2), std::invalid_argument);
  CHECK_THROWS_AS(I.without(3), std::invalid_argument);
  CHECK(I.with(3).entries() == std::vector<int>{2, 3, 4});
  CHECK(I.without(2).entries() == std::vector<int>{4});
}
