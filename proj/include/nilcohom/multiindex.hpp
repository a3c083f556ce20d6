#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace nilcohom {

/// Strictly increasing tuple of generator indices in [1, n]. The empty
/// tuple is the degree-0 monomial.
using MultiIndex = std::vector<int>;

/// All C(n,k) strictly increasing k-tuples in lexicographic order. This
/// ordering is the global monomial-order contract: every matrix in the
/// library is written against it. k < 0 or k > n yields the empty list.
inline std::vector<MultiIndex> enumerate_basis(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  MultiIndex cur(k);
  // iterative lexicographic enumeration
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Sign and sorted tuple of the concatenation I++J, or nullopt when the
/// tuples overlap (the wedge of such monomials vanishes).
inline std::optional<std::pair<int, MultiIndex>> merge_indices(const MultiIndex& a,
                                                              const MultiIndex& b) {
  MultiIndex out;
  out.reserve(a.size() + b.size());
  // merge two sorted runs, counting transpositions
  std::size_t i = 0, j = 0;
  long swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      swaps += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(swaps % 2 == 0 ? 1 : -1, out);
}

/// Interior product against generator idx: sign and reduced tuple, or
/// nullopt when idx does not occur in I.
inline std::optional<std::pair<int, MultiIndex>> remove_index(const MultiIndex& I, int idx) {
  const auto it = std::find(I.begin(), I.end(), idx);
  if (it == I.end()) return std::nullopt;
  const auto pos = static_cast<int>(it - I.begin());
  MultiIndex out;
  out.reserve(I.size() - 1);
  for (int x : I)
    if (x != idx) out.push_back(x);
  return std::make_pair(pos % 2 == 0 ? 1 : -1, out);
}

/// Complementary tuple inside [1, n].
inline MultiIndex complement(const MultiIndex& I, int n) {
  MultiIndex out;
  out.reserve(n - I.size());
  std::size_t j = 0;
  for (int x = 1; x <= n; ++x) {
    if (j < I.size() && I[j] == x) {
      ++j;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

/// Position of I in the lexicographic basis of its degree; -1 if absent.
inline int basis_position(const std::vector<MultiIndex>& basis, const MultiIndex& I) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), I);
  if (it == basis.end() || *it != I) return -1;
  return static_cast<int>(it - basis.begin());
}

}  // namespace nilcohom
