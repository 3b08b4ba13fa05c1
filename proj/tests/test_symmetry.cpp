#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cubegray/connectivity.hpp"
#include "cubegray/convert.hpp"
#include "cubegray/symmetry.hpp"
#include "oracles.hpp"

using namespace cubegray;

namespace {

SignedPermutation P(std::vector<int> entries) { return SignedPermutation(std::move(entries)); }

SignedRelabeling eps(int n, int k) {
  std::vector<bool> flips(n, false);
  flips[k - 1] = true;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  return SignedRelabeling(std::move(flips), std::move(id));
}

SignedRelabeling rho(int n, int i, int j) {
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 1);
  std::swap(relabel[i - 1], relabel[j - 1]);
  return SignedRelabeling(std::vector<bool>(n, false), std::move(relabel));
}

// Every element of the hyperoctahedral group: 2^n sign masks times n!
// relabelings.
std::vector<SignedRelabeling> whole_group(int n) {
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 1);
  std::vector<SignedRelabeling> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<bool> flips(n);
      for (int k = 0; k < n; ++k) flips[k] = (mask >> k) & 1;
      out.emplace_back(std::move(flips), relabel);
    }
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return out;
}

}  // namespace

TEST_CASE("generators act as advertised") {
  CHECK(apply(eps(1, 1), P({1, -1})) == P({-1, 1}));
  CHECK(apply(eps(2, 2), P({-2, 1, 2, -1})) == P({2, 1, -2, -1}));
  CHECK(apply(rho(2, 1, 2), P({2, 1, -2, -1})) == P({1, 2, -1, -2}));
}

TEST_CASE("identity and composition") {
  const auto p = P({3, -1, 1, 2, -2, -3});
  CHECK(apply(SignedRelabeling::identity(3), p) == p);
  CHECK(SignedRelabeling::identity(3).is_identity());

  const auto q = P({-2, 1, 2, -1});
  for (const auto& g : whole_group(2)) {
    CHECK(apply(compose(g, inverse(g)), q) == q);
    CHECK(compose(g, inverse(g)).is_identity());
    for (const auto& h : whole_group(2)) {
      CHECK(apply(g, apply(h, q)) == apply(compose(g, h), q));
    }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(apply(SignedRelabeling::identity(2), P({1, -1})), validation_error);
  CHECK_THROWS_AS(equivalent(P({1, -1}), P({1, 2, -1, -2})), validation_error);
  CHECK_THROWS_AS(SignedRelabeling({true}, {1, 2}), validation_error);
  CHECK_THROWS_AS(SignedRelabeling({false, false}, {1, 1}), validation_error);
}

TEST_CASE("canonicalize lands on the standard representative") {
  const auto [c1, g1] = canonicalize(P({-2, 1, 2, -1}));
  CHECK(c1 == StandardPermutation({1, 2, -1, -2}));
  CHECK(apply(g1, P({-2, 1, 2, -1})) == c1.permutation());

  const auto [c2, g2] = canonicalize(P({3, 1, -1, 2, -2, -3}));
  CHECK(c2 == StandardPermutation({3, 1, -1, 2, -2, -3}));
  CHECK(g2.is_identity());

  const auto [c3, g3] = canonicalize(P({-1, -2, 1, 2}));
  CHECK(c3 == StandardPermutation({1, 2, -1, -2}));
  CHECK(g3.sign_flips() == std::vector<int>{1, 2});
  CHECK(apply(g3, P({-1, -2, 1, 2})) == c3.permutation());
}

TEST_CASE("equivalence is orbit membership") {
  CHECK(equivalent(P({1, -1}), P({-1, 1})));
  CHECK_FALSE(equivalent(P({1, 2, -1, -2}), P({2, 1, -1, -2})));
  CHECK(equivalent(P({-2, 1, 2, -1}), P({1, 2, -1, -2})));
}

TEST_CASE("orbits: free action, size, unique standard representative, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto group = whole_group(n);
    const auto everyone = oracle::all_signed_permutations(n);
    const BigCount group_order = BigCount(1 << n) * [&] {
      BigCount f = 1;
      for (int i = 2; i <= n; ++i) f *= i;
      return f;
    }();
    REQUIRE(BigCount(group.size()) == group_order);

    // free action
    for (const auto& g : group) {
      if (g.is_identity()) continue;
      for (const auto& entries : everyone) {
        const SignedPermutation p(entries);
        REQUIRE(apply(g, p) != p);
      }
    }

    // orbit bookkeeping via canonical forms
    std::map<std::vector<int>, int> orbit_size;
    std::map<std::vector<int>, int> standard_in_orbit;
    for (const auto& entries : everyone) {
      const SignedPermutation p(entries);
      const auto [canon, witness] = canonicalize(p);
      CHECK(apply(witness, p) == canon.permutation());
      ++orbit_size[canon.entries()];
      if (oracle::is_standard(entries)) ++standard_in_orbit[canon.entries()];
      // connectivity is constant on the orbit
      CHECK(is_sign_connected(p) == is_sign_connected(canon.permutation()));
    }
    CHECK(BigCount(orbit_size.size()) == odd_double_factorial(n));
    for (const auto& [canon, size] : orbit_size) {
      CHECK(BigCount(size) == group_order);
      CHECK(standard_in_orbit[canon] == 1);
    }
  }
}

TEST_CASE("canonicalizing a standard permutation is the identity, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& letters : oracle::all_words(n)) {
      const StandardPermutation p = to_permutation(ArcWord(letters));
      const auto [canon, witness] = canonicalize(p.permutation());
      REQUIRE(canon == p);
      REQUIRE(witness.is_identity());
    }
  }
}
