#pragma once

#include <algorithm>
#include <vector>

#include "cubegray/arc_diagram.hpp"
#include "cubegray/arc_word.hpp"
#include "cubegray/double_occurrence_word.hpp"
#include "cubegray/involution.hpp"
#include "cubegray/signed_permutation.hpp"

// The four mutually convertible encodings of one object:
//
//   arc word  <->  standard permutation  <->  double occurrence word
//       \               |
//        `->  arc diagram  (the underlying perfect matching)
//
// A word decodes by inserting arcs 1..n in order: arc i puts its left
// endpoint at slot a_i of the current diagram and its right endpoint at the
// far right.  Encoding removes the rightmost arc repeatedly and records
// where its left endpoint was.

namespace cubegray {

namespace detail {

// Entry sequence of the standard permutation encoded by in-bounds letters.
inline std::vector<int> decode_entries(const std::vector<int>& letters) {
  std::vector<int> entries;
  entries.reserve(2 * letters.size());
  for (size_t i = 0; i < letters.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    entries.insert(entries.begin() + (letters[i] - 1), k);
    entries.push_back(-k);
  }
  return entries;
}

}  // namespace detail

inline StandardPermutation to_permutation(const ArcWord& w) {
  return StandardPermutation(SignedPermutation(detail::decode_entries(w.letters())));
}

inline ArcWord to_word(const StandardPermutation& p) {
  const int n = p.n();
  std::vector<int> pos_pos(n + 1), pos_neg(n + 1);  // positions of k and -k
  for (int i = 0; i < 2 * n; ++i) {
    const int v = p.entries()[i];
    (v > 0 ? pos_pos[v] : pos_neg[-v]) = i + 1;
  }
  // a_i = rank of the left endpoint of arc i among the endpoints of arcs 1..i
  std::vector<int> letters(n);
  for (int i = 1; i <= n; ++i) {
    int rank = 0;
    for (int j = 1; j <= i; ++j) {
      rank += (pos_pos[j] <= pos_pos[i]) + (pos_neg[j] <= pos_pos[i]);
    }
    letters[i - 1] = rank;
  }
  return ArcWord(std::move(letters));
}

inline ArcDiagram to_arc_diagram(const ArcWord& w) {
  const std::vector<int> entries = detail::decode_entries(w.letters());
  const int n = w.n();
  std::vector<ArcDiagram::Arc> arcs(n);
  for (int i = 0; i < 2 * n; ++i) {
    const int v = entries[i];
    (v > 0 ? arcs[v - 1].first : arcs[-v - 1].second) = i + 1;
  }
  return ArcDiagram(std::move(arcs));
}

inline ArcWord to_word(const ArcDiagram& d) {
  const int n = d.n();
  std::vector<int> letters(n);
  for (int i = 1; i <= n; ++i) {
    const int left = d.arc(i).first;
    int rank = 0;
    for (int j = 1; j <= i; ++j) {
      rank += (d.arc(j).first <= left) + (d.arc(j).second <= left);
    }
    letters[i - 1] = rank;
  }
  return ArcWord(std::move(letters));
}

inline StandardPermutation to_permutation(const ArcDiagram& d) {
  return to_permutation(to_word(d));
}

// Strip signs, reverse, and complement (k -> n+1-k).
inline DoubleOccurrenceWord to_dow(const StandardPermutation& p) {
  const int n = p.n();
  std::vector<int> letters(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    letters[2 * n - 1 - i] = n + 1 - std::abs(p.entries()[i]);
  }
  return DoubleOccurrenceWord(std::move(letters));
}

// Inverse of to_dow: reverse, complement, then negate second occurrences.
inline StandardPermutation to_permutation(const DoubleOccurrenceWord& d) {
  const int n = d.n();
  std::vector<int> entries(2 * n);
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < 2 * n; ++i) {
    const int k = n + 1 - d.letters()[2 * n - 1 - i];
    entries[i] = seen[k]++ ? -k : k;
  }
  return StandardPermutation(SignedPermutation(std::move(entries)));
}

// The matching that swaps the positions of i and -i for every i.
inline FppInvolution to_involution(const StandardPermutation& p) {
  const int n = p.n();
  std::vector<FppInvolution::Pair> pairs(n);
  for (int i = 0; i < 2 * n; ++i) {
    const int v = p.entries()[i];
    (v > 0 ? pairs[v - 1].first : pairs[-v - 1].second) = i + 1;
  }
  return FppInvolution(std::move(pairs));
}

}  // namespace cubegray
