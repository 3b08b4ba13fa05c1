#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "cubegray/errors.hpp"
#include "cubegray/signed_permutation.hpp"

namespace cubegray {

// One facet of the n-cube boundary: +k fixes coordinate k at +1, -k at -1.
struct FacetLabel {
  int value;

  FacetLabel(int v, int n) : value(v) {
    if (v == 0 || std::abs(v) > n)
      throw validation_error(errc::out_of_range,
                             "facet label " + std::to_string(v) + " for an " +
                                 std::to_string(n) + "-cube");
  }

  int axis() const { return std::abs(value); }
  FacetLabel antipode() const { return FacetLabel(-value, axis()); }
  bool operator==(const FacetLabel& o) const { return value == o.value; }
};

// The enumeration read as a facet list.
inline std::vector<FacetLabel> facets(const SignedPermutation& p) {
  std::vector<FacetLabel> out;
  out.reserve(p.entries().size());
  for (int v : p.entries()) out.emplace_back(v, p.n());
  return out;
}

// Per-step accounting of how facet m meets the union of facets 1..m-1.
// The intersection is a union of codimension-2 faces of the cube, one for
// every other coordinate axis already touched: an axis with one listed facet
// contributes an unpaired face, an axis with both contributes an antipodal
// pair.  A valid shelling keeps at least one antipodally unpaired facet in
// every proper prefix.
struct StepType {
  int unpaired = 0;  // i
  int paired = 0;    // j

  bool operator==(const StepType& o) const = default;
};

struct ShellingReport {
  bool valid = true;
  std::optional<int> failure_prefix;   // length of the first fully paired proper prefix
  std::vector<StepType> step_types;    // steps m = 2 .. 2n
  std::vector<int> unpaired_counts;    // prefixes m = 1 .. 2n
};

inline ShellingReport shelling_report(const SignedPermutation& p) {
  const int n = p.n();
  ShellingReport report;
  report.step_types.reserve(2 * n - 1);
  report.unpaired_counts.reserve(2 * n);
  std::vector<char> listed(n + 1, 0);  // how many of {k, -k} are listed so far
  int unpaired = 0;
  int paired = 0;
  for (int m = 1; m <= 2 * n; ++m) {
    const int axis = std::abs(p.value_at(m));
    if (m >= 2) {
      // the arriving facet's own axis never contributes to the intersection
      report.step_types.push_back(StepType{unpaired - (listed[axis] == 1), paired});
    }
    if (listed[axis]++ == 0) {
      ++unpaired;
    } else {
      --unpaired;
      ++paired;
    }
    report.unpaired_counts.push_back(unpaired);
    if (m < 2 * n && unpaired == 0 && !report.failure_prefix) {
      report.valid = false;
      report.failure_prefix = m;
    }
  }
  return report;
}

// True iff the enumeration is a shelling of the boundary of the n-cube:
// every proper prefix leaves some antipodal pair half-listed.  Agrees with
// is_sign_connected on every enumeration.
inline bool is_shelling(const SignedPermutation& p) { return shelling_report(p).valid; }

// Brute-force enumeration of all shellings, in lexicographic order of their
// entry sequences.  Factorial in n; intended as a small-n oracle.
inline std::vector<SignedPermutation> enumerate_shellings(int n) {
  if (n < 1) throw validation_error(errc::zero_dimension, "n must be at least 1");
  if (n > 4)
    throw validation_error(errc::out_of_range,
                           "enumerate_shellings is limited to n <= 4; (2n)! grows too fast");
  std::vector<int> entries;
  for (int v = -n; v <= n; ++v)
    if (v != 0) entries.push_back(v);
  std::vector<SignedPermutation> out;
  do {
    SignedPermutation candidate(entries);
    if (is_shelling(candidate)) out.push_back(std::move(candidate));
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

}  // namespace cubegray
