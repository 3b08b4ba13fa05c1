#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cubegray/errors.hpp"

namespace cubegray {

// A fixed-point-free involution of a 2n-element ground set, stored as the n
// unordered pairs of matched positions.  Built from a standard permutation it
// swaps the positions of i and -i for every i, i.e. it is the arc matching.
class FppInvolution {
 public:
  using Pair = std::pair<int, int>;

  explicit FppInvolution(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty())
      throw validation_error(errc::zero_dimension, "an involution on 2n points needs n >= 1");
    n_ = static_cast<int>(pairs_.size());
    partner_.assign(2 * n_ + 1, 0);
    std::vector<char> seen(2 * n_ + 1, 0);
    for (auto& [a, b] : pairs_) {
      if (a == b)
        throw validation_error(errc::bad_involution,
                               "fixed point at " + std::to_string(a));
      if (a > b) std::swap(a, b);
      for (int p : {a, b}) {
        if (p < 1 || p > 2 * n_)
          throw validation_error(errc::bad_involution,
                                 "point " + std::to_string(p) + " outside 1.." +
                                     std::to_string(2 * n_));
        if (seen[p]++)
          throw validation_error(errc::bad_involution,
                                 "point " + std::to_string(p) + " paired twice");
      }
      partner_[a] = b;
      partner_[b] = a;
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [](const Pair& x, const Pair& y) { return x.second < y.second; });
  }

  int n() const { return n_; }

  // Pairs normalized to (smaller, larger) and sorted by larger point.
  const std::vector<Pair>& pairs() const { return pairs_; }

  // Image of a point; applying twice gives the identity.
  int apply(int p) const {
    if (p < 1 || p > 2 * n_)
      throw validation_error(errc::out_of_range, "point " + std::to_string(p));
    return partner_[p];
  }

  // The same matching with the ground set renamed into {+-1..+-n}: the r-th
  // smaller endpoint from the left becomes +r, the s-th larger endpoint -s.
  // Each pair then reads (+r, -s); sorted by s.
  std::vector<Pair> signed_pairs() const {
    std::vector<int> lefts;
    lefts.reserve(n_);
    for (const auto& [a, b] : pairs_) lefts.push_back(a);
    std::sort(lefts.begin(), lefts.end());
    std::vector<Pair> out;
    out.reserve(n_);
    for (int s = 1; s <= n_; ++s) {
      const int a = pairs_[static_cast<size_t>(s) - 1].first;
      const int r =
          static_cast<int>(std::lower_bound(lefts.begin(), lefts.end(), a) - lefts.begin()) + 1;
      out.emplace_back(r, -s);
    }
    return out;
  }

  bool operator==(const FppInvolution& o) const { return pairs_ == o.pairs_; }

 private:
  int n_;
  std::vector<Pair> pairs_;
  std::vector<int> partner_;
};

}  // namespace cubegray
