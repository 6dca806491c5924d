#include "curvop/multiindex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curvop {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

MultiIndex::MultiIndex(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  require(n >= 0, "multi-index: ambient dimension must be nonnegative");
  int prev = 0;
  for (int e : entries_) {
    require(e >= 1 && e <= n_,
            "multi-index: entry " + std::to_string(e) + " outside 1.." +
                std::to_string(n_));
    require(e > prev, "multi-index: entries must be strictly increasing");
    prev = e;
  }
}

MultiIndex MultiIndex::empty(int n) { return MultiIndex(n, {}); }

MultiIndex MultiIndex::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return MultiIndex(n, std::move(all));
}

int MultiIndex::entry(int pos) const {
  require(pos >= 1 && pos <= degree(), "multi-index: position out of range");
  return entries_[static_cast<std::size_t>(pos - 1)];
}

bool MultiIndex::contains(int s) const {
  return std::binary_search(entries_.begin(), entries_.end(), s);
}

int MultiIndex::position_of(int s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s);
  if (it == entries_.end() || *it != s) return 0;
  return static_cast<int>(it - entries_.begin()) + 1;
}

MultiIndex MultiIndex::with(int s) const {
  require(s >= 1 && s <= n_, "multi-index: inserted entry out of range");
  require(!contains(s), "multi-index: entry already present");
  std::vector<int> out = entries_;
  out.insert(std::upper_bound(out.begin(), out.end(), s), s);
  return MultiIndex(n_, std::move(out));
}

MultiIndex MultiIndex::without(int s) const {
  require(contains(s), "multi-index: entry not present");
  std::vector<int> out = entries_;
  out.erase(std::find(out.begin(), out.end(), s));
  return MultiIndex(n_, std::move(out));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << '}';
  return os.str();
}

int contraction_sign(int s, const MultiIndex& I) {
  int pos = I.position_of(s);
  if (pos == 0) return 0;
  return (pos % 2 == 1) ? 1 : -1;
}

MultiIndex complement(const MultiIndex& I) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(I.ambient() - I.degree()));
  for (int v = 1; v <= I.ambient(); ++v)
    if (!I.contains(v)) out.push_back(v);
  return MultiIndex(I.ambient(), std::move(out));
}

int complement_sign(const MultiIndex& I) {
  // Inversions of (I, I^C) against (1..n): each entry I_t precedes exactly
  // the I_t - t smaller complement entries.
  long inv = 0;
  const auto& e = I.entries();
  for (std::size_t t = 0; t < e.size(); ++t)
    inv += e[t] - static_cast<long>(t + 1);
  return (inv % 2 == 0) ? 1 : -1;
}

int duality_sign(const MultiIndex& I) {
  return complement_sign(I) * ((I.degree() % 2 == 0) ? 1 : -1);
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int d) {
  std::vector<MultiIndex> out;
  if (d < 0 || d > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, d)));
  std::vector<int> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    // Advance to the next combination in lexicographic order.
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t multi_index_rank(const MultiIndex& I) {
  const int n = I.ambient();
  const int d = I.degree();
  std::uint64_t rank = 0;
  int prev = 0;
  for (int t = 1; t <= d; ++t) {
    const int cur = I.entry(t);
    for (int v = prev + 1; v < cur; ++v) rank += binomial(n - v, d - t);
    prev = cur;
  }
  return static_cast<std::size_t>(rank);
}

MultiIndex multi_index_unrank(int n, int d, std::size_t rank) {
  if (d < 0 || d > n)
    throw std::invalid_argument("multi-index unrank: degree out of range");
  std::uint64_t rem = rank;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d));
  int prev = 0;
  for (int t = 1; t <= d; ++t) {
    int v = prev + 1;
    while (true) {
      const std::uint64_t block = binomial(n - v, d - t);
      if (rem < block) break;
      rem -= block;
      ++v;
      if (v > n)
        throw std::invalid_argument("multi-index unrank: rank out of range");
    }
    out.push_back(v);
    prev = v;
  }
  if (rem != 0)
    throw std::invalid_argument("multi-index unrank: rank out of range");
  return MultiIndex(n, std::move(out));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace curvop
