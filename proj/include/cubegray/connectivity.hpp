#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cubegray/arc_word.hpp"
#include "cubegray/big_count.hpp"
#include "cubegray/errors.hpp"
#include "cubegray/signed_permutation.hpp"

namespace cubegray {

// True iff every proper prefix contains exactly one member of some pair
// {k, -k}; equivalently, the enumeration is a shelling of the cube boundary.
inline bool is_sign_connected(const SignedPermutation& p) {
  const int n = p.n();
  std::vector<char> seen(n + 1, 0);
  int unpaired = 0;
  for (int m = 1; m <= 2 * n - 1; ++m) {
    const int k = std::abs(p.value_at(m));
    unpaired += seen[k] ? -1 : 1;
    seen[k] = 1;
    if (unpaired == 0) return false;
  }
  return true;
}

// Standard permutations are sign-connected exactly when all proper prefix
// sums are strictly positive.
inline bool is_sign_connected(const StandardPermutation& p) {
  long long sum = 0;
  const auto& e = p.entries();
  for (size_t m = 0; m + 1 < e.size(); ++m) {
    sum += e[m];
    if (sum <= 0) return false;
  }
  return true;
}

// Word criterion: disconnected iff some k >= 2 has a_k = 2k-1 with every
// later letter >= 2k-1.  (k = 1 is excluded: a_1 = 1 always.)
inline bool is_arc_connected(std::span<const int> letters) {
  int suffix_min = std::numeric_limits<int>::max();
  for (int k = static_cast<int>(letters.size()); k >= 2; --k) {
    suffix_min = std::min(suffix_min, letters[static_cast<size_t>(k) - 1]);
    if (suffix_min >= 2 * k - 1) return false;
  }
  return true;
}

inline bool is_arc_connected(const ArcWord& w) { return is_arc_connected(std::span(w.letters())); }

// Ends of the connected components of a word's diagram, as arc counts.
// Arcs k+1..n stay right of arcs 1..k exactly when every later letter
// is >= 2k+1, so the boundaries fall out of one suffix-minimum sweep.
struct ComponentSplit {
  std::vector<int> boundaries;  // increasing; last element is n

  int count() const { return static_cast<int>(boundaries.size()); }
  bool connected() const { return boundaries.size() == 1; }
};

inline ComponentSplit components(const ArcWord& w) {
  const int n = w.n();
  std::vector<int> suffix_min(n + 2, std::numeric_limits<int>::max());
  for (int k = n; k >= 1; --k)
    suffix_min[k] = std::min(suffix_min[k + 1], w.letter(k));
  ComponentSplit split;
  for (int k = 1; k < n; ++k)
    if (suffix_min[k + 1] >= 2 * k + 1) split.boundaries.push_back(k);
  split.boundaries.push_back(n);
  return split;
}

// The components as free-standing words, re-based to their own positions.
inline std::vector<ArcWord> component_words(const ArcWord& w) {
  const ComponentSplit split = components(w);
  std::vector<ArcWord> out;
  out.reserve(split.boundaries.size());
  int start = 0;
  for (int end : split.boundaries) {
    std::vector<int> letters;
    letters.reserve(end - start);
    for (int j = start + 1; j <= end; ++j) letters.push_back(w.letter(j) - 2 * start);
    out.emplace_back(std::move(letters));
    start = end;
  }
  return out;
}

// (2n-1)!!: the number of standard permutations / valid words of length n.
inline BigCount count_standard(int n) {
  if (n < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
  return odd_double_factorial(n);
}

// Number of arc-connected words of length n, by peeling off the first
// connected component:  C_n = (2n-1)!! - sum_{k=1}^{n-1} C_k (2(n-k)-1)!!.
// Starts 1, 2, 10, 74, 706 (A000698).
inline BigCount count_connected(int n) {
  if (n < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
  std::vector<BigCount> c(n + 1);
  for (int m = 1; m <= n; ++m) {
    BigCount total = odd_double_factorial(m);
    for (int k = 1; k < m; ++k) total -= c[k] * odd_double_factorial(m - k);
    c[m] = total;
  }
  return c[n];
}

}  // namespace cubegray
