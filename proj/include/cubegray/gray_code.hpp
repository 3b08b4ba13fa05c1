#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubegray/arc_word.hpp"
#include "cubegray/big_count.hpp"
#include "cubegray/connectivity.hpp"
#include "cubegray/errors.hpp"
#include "cubegray/signed_permutation.hpp"

namespace cubegray {

// Streaming cursor over the reflected Gray code of all words of length n:
// letter i sweeps its range [1, 2i-1] alternately upward and downward, the
// last letter fastest.  Starts at 11...1 and ends at 1 3 5 ... (2n-1) after
// (2n-1)!! words; each step changes one letter by +-1, which swaps one
// adjacent pair in the decoded permutation.  Single-owner, mutable.
class GrayCursor {
 public:
  explicit GrayCursor(int n) : n_(n), letters_(n, 1), dirs_(n, +1), index_(1) {
    if (n < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
  }

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  ArcWord word() const { return ArcWord(letters_); }
  const BigCount& index() const { return index_; }  // 1-based position in the full code
  bool exhausted() const { return exhausted_; }

  // Step to the successor word; false once the code is exhausted.
  // Amortized constant work: the scan pointer moves like an odometer.
  bool advance() {
    if (exhausted_) return false;
    for (int i = n_ - 1; i >= 1; --i) {  // letter a_1 is pinned at 1
      const int next = letters_[i] + dirs_[i];
      if (next >= 1 && next <= 2 * (i + 1) - 1) {
        letters_[i] = next;
        ++index_;
        return true;
      }
      dirs_[i] = -dirs_[i];
    }
    exhausted_ = true;
    return false;
  }

  // Step to the next arc-connected word, skipping the disconnected ones.
  bool advance_connected() {
    while (advance()) {
      if (is_arc_connected(std::span<const int>(letters_))) return true;
    }
    return false;
  }

 private:
  int n_;
  std::vector<int> letters_;
  std::vector<signed char> dirs_;
  BigCount index_;
  bool exhausted_ = false;
};

// 1-based position of a word in the full code.  The direction in which
// letter i sweeps is fixed by the parity of the prefix's own rank.
inline BigCount gray_rank(const ArcWord& w) {
  BigCount r = 1;
  for (int i = 2; i <= w.n(); ++i) {
    const int offset = ((r & 1) != 0) ? w.letter(i) : 2 * i - w.letter(i);
    r = (r - 1) * (2 * i - 1) + offset;
  }
  return r;
}

inline ArcWord gray_unrank(int n, BigCount m) {
  if (n < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
  if (m < 1 || m > count_standard(n))
    throw validation_error(errc::out_of_range,
                           "rank " + m.str() + " outside [1, (2n-1)!!] for n = " +
                               std::to_string(n));
  std::vector<int> letters(n, 1);
  for (int i = n; i >= 2; --i) {
    const int radix = 2 * i - 1;
    const BigCount q = (m + radix - 1) / radix;
    const int offset = static_cast<int>(m - (q - 1) * radix);
    letters[i - 1] = ((q & 1) != 0) ? offset : 2 * i - offset;
    m = q;
  }
  return ArcWord(std::move(letters));
}

// True iff q is p with exactly one adjacent pair of entries swapped.
inline bool is_adjacent_transposition(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.n() != q.n())
    throw validation_error(errc::dimension_mismatch, "permutations disagree on n");
  const auto& a = p.entries();
  const auto& b = q.entries();
  size_t i = 0;
  while (i < a.size() && a[i] == b[i]) ++i;
  if (i + 1 >= a.size()) return false;  // equal everywhere, or one trailing mismatch
  if (a[i] != b[i + 1] || a[i + 1] != b[i]) return false;
  for (size_t j = i + 2; j < a.size(); ++j)
    if (a[j] != b[j]) return false;
  return true;
}

enum class RunDirection { increasing, decreasing };

// A run is the block of consecutive full-code words sharing the truncation
// a_1...a_{n-1}; the last letter sweeps up in odd runs, down in even runs.
// threshold_k splits each run: words with a_n <= 2k-2 are arc-connected and
// words with a_n >= 2k-1 are arc-disconnected.
struct RunDescriptor {
  ArcWord prefix;  // a_1...a_{n-1}
  RunDirection direction;
  BigCount ordinal;  // 1-based run count within the full code
  int threshold_k;
};

namespace detail {

// Least k' in [2, n-1] with a_j >= 2k'-1 for all j in [k', n-1]; n if none.
// Matches the end of the prefix's first connected component.
inline int run_threshold(std::span<const int> prefix) {
  const int len = static_cast<int>(prefix.size());
  int threshold = len + 1;
  int suffix_min = std::numeric_limits<int>::max();
  for (int k = len; k >= 2; --k) {
    suffix_min = std::min(suffix_min, prefix[static_cast<size_t>(k) - 1]);
    if (suffix_min >= 2 * k - 1) threshold = k;
  }
  return threshold;
}

}  // namespace detail

inline RunDescriptor run_descriptor(const ArcWord& prefix, const BigCount& ordinal) {
  // Run ordinal parity and letter-sum parity must agree: the run is
  // increasing iff the ordinal is odd iff sum(prefix) + (n-2) is odd.
  long long sum = 0;
  for (int a : prefix.letters()) sum += a;
  const bool odd_ordinal = (ordinal & 1) != 0;
  const bool odd_sum = ((sum + prefix.n() - 1) % 2) != 0;  // (n-2) with n = prefix.n()+1
  if (odd_ordinal != odd_sum)
    throw validation_error(errc::ordinal_mismatch,
                           "run ordinal " + ordinal.str() + " has the wrong parity for this prefix");
  return RunDescriptor{prefix,
                       odd_ordinal ? RunDirection::increasing : RunDirection::decreasing,
                       ordinal, detail::run_threshold(std::span(prefix.letters()))};
}

inline RunDescriptor run_descriptor(const ArcWord& prefix) {
  return run_descriptor(prefix, gray_rank(prefix));
}

}  // namespace cubegray
