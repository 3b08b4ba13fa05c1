#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "cubegray/errors.hpp"

namespace cubegray {

// An enumeration of the facets of the boundary of the n-cube, encoded as a
// sequence containing each value of {-n,...,-1,1,...,n} exactly once.
// Entry +k names the facet with coordinate k fixed at +1, entry -k the
// antipodal facet fixed at -1.  Positions are 1-based in every interface.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() % 2 != 0)
      throw validation_error(errc::not_a_signed_permutation,
                             "a signed permutation needs 2n entries, n >= 1");
    n_ = static_cast<int>(entries_.size()) / 2;
    std::vector<char> seen(2 * n_ + 1, 0);  // index n_ + value
    for (int v : entries_) {
      if (v == 0 || v < -n_ || v > n_)
        throw validation_error(errc::not_a_signed_permutation,
                               "entry " + std::to_string(v) + " outside {-" +
                                   std::to_string(n_) + "..-1, 1.." + std::to_string(n_) + "}");
      if (seen[n_ + v]++)
        throw validation_error(errc::not_a_signed_permutation,
                               "entry " + std::to_string(v) + " repeated");
    }
  }

  int n() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }

  // Value at 1-based position p.
  int value_at(int p) const { return entries_[static_cast<size_t>(p) - 1]; }

  // 1-based position of a value; the inverse map evaluated pointwise.
  int position_of(int value) const {
    for (size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] == value) return static_cast<int>(i) + 1;
    throw validation_error(errc::out_of_range, "no such value " + std::to_string(value));
  }

  bool operator==(const SignedPermutation& o) const = default;

 private:
  int n_;
  std::vector<int> entries_;
};

// The canonical representative of a hyperoctahedral equivalence class:
// a signed permutation in which (1) every i occurs before -i, and
// (2) the negative entries read left to right are exactly -1, -2, ..., -n.
class StandardPermutation {
 public:
  explicit StandardPermutation(SignedPermutation p) : perm_(std::move(p)) {
    const int n = perm_.n();
    std::vector<char> seen(n + 1, 0);
    int next_negative = 1;
    for (int v : perm_.entries()) {
      if (v > 0) {
        seen[v] = 1;
        continue;
      }
      const int k = -v;
      if (k != next_negative)
        throw validation_error(errc::negatives_out_of_order,
                               "negative entries must appear in the order -1, -2, ..., -n (saw " +
                                   std::to_string(v) + " where -" +
                                   std::to_string(next_negative) + " was due)");
      if (!seen[k])
        throw validation_error(errc::positive_after_negative,
                               std::to_string(k) + " must occur before " + std::to_string(v));
      ++next_negative;
    }
  }

  explicit StandardPermutation(std::vector<int> entries)
      : StandardPermutation(SignedPermutation(std::move(entries))) {}

  int n() const { return perm_.n(); }
  const std::vector<int>& entries() const { return perm_.entries(); }
  const SignedPermutation& permutation() const { return perm_; }

  bool operator==(const StandardPermutation& o) const = default;

 private:
  SignedPermutation perm_;
};

}  // namespace cubegray
