#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cubegray/errors.hpp"
#include "cubegray/signed_permutation.hpp"

namespace cubegray {

// An isometry of the n-cube acting on facet labels: first flip the sign of
// every pair class in sign_flips (the reflections eps_k), then rename pair
// classes by a bijection of {1..n} (products of the reflections rho_{i,j}).
class SignedRelabeling {
 public:
  SignedRelabeling(std::vector<bool> sign_flips, std::vector<int> relabeling)
      : flips_(std::move(sign_flips)), relabel_(std::move(relabeling)) {
    n_ = static_cast<int>(relabel_.size());
    if (n_ < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
    if (flips_.size() != static_cast<size_t>(n_))
      throw validation_error(errc::dimension_mismatch, "sign flips and relabeling disagree on n");
    std::vector<char> hit(n_ + 1, 0);
    for (int image : relabel_) {
      if (image < 1 || image > n_ || hit[image]++)
        throw validation_error(errc::bad_relabeling, "relabeling is not a bijection on {1..n}");
    }
  }

  static SignedRelabeling identity(int n) {
    if (n < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    return SignedRelabeling(std::vector<bool>(n, false), std::move(id));
  }

  int n() const { return n_; }
  bool flips(int k) const { return flips_[static_cast<size_t>(k) - 1]; }
  int relabel(int k) const { return relabel_[static_cast<size_t>(k) - 1]; }

  std::vector<int> sign_flips() const {
    std::vector<int> out;
    for (int k = 1; k <= n_; ++k)
      if (flips(k)) out.push_back(k);
    return out;
  }
  const std::vector<int>& relabeling() const { return relabel_; }

  bool is_identity() const {
    for (int k = 1; k <= n_; ++k)
      if (flips(k) || relabel(k) != k) return false;
    return true;
  }

  // Image of one signed facet label.
  int map(int value) const {
    const int k = std::abs(value);
    int sign = value > 0 ? 1 : -1;
    if (flips(k)) sign = -sign;
    return sign * relabel(k);
  }

  bool operator==(const SignedRelabeling& o) const = default;

 private:
  int n_;
  std::vector<bool> flips_;
  std::vector<int> relabel_;
};

inline SignedPermutation apply(const SignedRelabeling& g, const SignedPermutation& p) {
  if (g.n() != p.n())
    throw validation_error(errc::dimension_mismatch, "group element and permutation disagree on n");
  std::vector<int> out;
  out.reserve(p.entries().size());
  for (int v : p.entries()) out.push_back(g.map(v));
  return SignedPermutation(std::move(out));
}

// compose(g, h) maps x to g.map(h.map(x)), so apply(compose(g, h), p) equals
// apply(g, apply(h, p)).
inline SignedRelabeling compose(const SignedRelabeling& g, const SignedRelabeling& h) {
  if (g.n() != h.n())
    throw validation_error(errc::dimension_mismatch, "group elements disagree on n");
  const int n = g.n();
  std::vector<bool> flips(n);
  std::vector<int> relabel(n);
  for (int k = 1; k <= n; ++k) {
    flips[k - 1] = h.flips(k) != g.flips(h.relabel(k));
    relabel[k - 1] = g.relabel(h.relabel(k));
  }
  return SignedRelabeling(std::move(flips), std::move(relabel));
}

inline SignedRelabeling inverse(const SignedRelabeling& g) {
  const int n = g.n();
  std::vector<bool> flips(n);
  std::vector<int> relabel(n);
  for (int k = 1; k <= n; ++k) {
    relabel[g.relabel(k) - 1] = k;
    flips[g.relabel(k) - 1] = g.flips(k);
  }
  return SignedRelabeling(std::move(flips), std::move(relabel));
}

// The unique standard permutation in the orbit of p, together with the group
// element carrying p onto it.  Pass one flips every pair whose negative
// member comes first; pass two renames pair classes so the negatives read
// -1, -2, ..., -n.  Canonicalizing a standard permutation returns it
// unchanged with the identity witness.
inline std::pair<StandardPermutation, SignedRelabeling> canonicalize(const SignedPermutation& p) {
  const int n = p.n();
  std::vector<bool> flips(n, false);
  std::vector<char> seen(n + 1, 0);
  for (int v : p.entries()) {
    const int k = std::abs(v);
    if (!seen[k]) {
      seen[k] = 1;
      if (v < 0) flips[k - 1] = true;  // -k met before k
    }
  }
  std::vector<int> relabel(n, 0);
  int next = 1;
  for (int v : p.entries()) {
    const int k = std::abs(v);
    const bool negative = flips[k - 1] ? v > 0 : v < 0;
    if (negative) relabel[k - 1] = next++;
  }
  SignedRelabeling g(std::move(flips), std::move(relabel));
  return {StandardPermutation(apply(g, p)), std::move(g)};
}

// Same orbit under the hyperoctahedral action?
inline bool equivalent(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.n() != q.n())
    throw validation_error(errc::dimension_mismatch, "permutations disagree on n");
  return canonicalize(p).first == canonicalize(q).first;
}

}  // namespace cubegray
