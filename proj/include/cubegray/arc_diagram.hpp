#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cubegray/errors.hpp"

namespace cubegray {

// A perfect matching of the positions 1..2n into n arcs.  Arcs are kept
// sorted by right endpoint, so arc k is exactly the arc whose endpoints
// carry the labels k (left) and -k (right) in the associated standard
// permutation; the last arc always ends at position 2n.
class ArcDiagram {
 public:
  using Arc = std::pair<int, int>;  // (left, right) positions

  // Accepts arcs in any order and orientation; normalizes each pair to
  // left < right and sorts by right endpoint.  Rejects anything that is
  // not a perfect matching of 1..2n.
  explicit ArcDiagram(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.empty())
      throw validation_error(errc::zero_dimension, "an arc diagram has at least one arc");
    n_ = static_cast<int>(arcs_.size());
    for (auto& [l, r] : arcs_) {
      if (l == r)
        throw validation_error(errc::bad_matching,
                               "arc endpoints coincide at " + std::to_string(l));
      if (l > r) std::swap(l, r);
    }
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& a, const Arc& b) { return a.second < b.second; });
    std::vector<char> seen(2 * n_ + 1, 0);
    for (const auto& [l, r] : arcs_) {
      for (int p : {l, r}) {
        if (p < 1 || p > 2 * n_)
          throw validation_error(errc::bad_matching,
                                 "endpoint " + std::to_string(p) + " outside 1.." +
                                     std::to_string(2 * n_));
        if (seen[p]++)
          throw validation_error(errc::bad_matching,
                                 "endpoint " + std::to_string(p) + " used twice");
      }
    }
  }

  int n() const { return n_; }

  // Arc k (1-based) at index k-1; sorted by right endpoint.
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int k) const { return arcs_[static_cast<size_t>(k) - 1]; }

  bool operator==(const ArcDiagram& o) const = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

}  // namespace cubegray
