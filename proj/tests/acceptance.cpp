// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <sys/wait.h>
#include <unordered_set>
#include <vector>

#include "cubegray/cubegray.hpp"

using namespace cubegray;

namespace {

int failures = 0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first violation
    pass = false;
  }
};

template <typename Fn>
void criterion(int id, const char* name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  fn(outcome);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %2d %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", id, name, secs,
              outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.pass) ++failures;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  FILE* pipe = popen((std::string(CUBEGRAY_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string word_key(const std::vector<int>& letters) {
  std::string key;
  for (int a : letters) {
    key += std::to_string(a);
    key += ' ';
  }
  return key;
}

const std::vector<long long> kConnectedCounts{1, 2, 10, 74, 706, 8162, 110410};

}  // namespace

int main() {
  criterion(1, "table reproduction via the CLI, byte-exact, under 1s", [](Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const CliResult two = run_cli("gen --n 2");
    if (two.exit_code != 0 || two.out != "1 1\n1 2\n1 3\n") o.fail("gen --n 2 output differs");
    const CliResult three = run_cli("gen --n 3");
    const std::string expected =
        "1 1 1\n1 1 2\n1 1 3\n1 1 4\n1 1 5\n"
        "1 2 5\n1 2 4\n1 2 3\n1 2 2\n1 2 1\n"
        "1 3 1\n1 3 2\n1 3 3\n1 3 4\n1 3 5\n";
    if (three.exit_code != 0 || three.out != expected) o.fail("gen --n 3 output differs");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) o.fail("took " + std::to_string(secs) + "s");
  });

  criterion(2, "full Gray property, n <= 7, under 30s", [](Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 7; ++n) {
      GrayCursor cur(n);
      std::unordered_set<std::string> seen;
      BigCount count = 0;
      std::vector<int> prev;
      std::vector<int> prev_entries;
      do {
        const std::vector<int>& letters = cur.letters();
        if (!seen.insert(word_key(letters)).second) o.fail("duplicate word at n=" + std::to_string(n));
        ++count;
        const std::vector<int> entries = detail::decode_entries(letters);
        if (!prev.empty()) {
          int changed = 0;
          bool unit = true;
          for (int i = 0; i < n; ++i) {
            if (prev[i] != letters[i]) {
              ++changed;
              if (std::abs(prev[i] - letters[i]) != 1) unit = false;
            }
          }
          if (changed != 1 || !unit) o.fail("non-unit word step at n=" + std::to_string(n));
          if (!is_adjacent_transposition(SignedPermutation(prev_entries), SignedPermutation(entries)))
            o.fail("permutations not adjacent at n=" + std::to_string(n));
        }
        prev = letters;
        prev_entries = entries;
      } while (cur.advance());
      if (count != count_standard(n)) o.fail("wrong cardinality at n=" + std::to_string(n));
      if (n == 7 && count != 135135) o.fail("expected 135135 words at n=7");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) o.fail("took " + std::to_string(secs) + "s");
  });

  criterion(3, "connected Gray property, n <= 7", [](Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
      GrayCursor cur(n);
      BigCount count = 0;
      std::vector<int> prev_entries;
      do {
        ++count;
        const std::vector<int> entries = detail::decode_entries(cur.letters());
        if (!prev_entries.empty() &&
            !is_adjacent_transposition(SignedPermutation(prev_entries), SignedPermutation(entries)))
          o.fail("connected outputs not adjacent at n=" + std::to_string(n));
        prev_entries = entries;
      } while (cur.advance_connected());
      if (count != kConnectedCounts[n - 1] || count != count_connected(n))
        o.fail("wrong connected cardinality at n=" + std::to_string(n));
    }
  });

  criterion(4, "parity law at every index, n <= 7", [](Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
      GrayCursor cur(n);
      do {
        long long sum = n - 1;
        for (int a : cur.letters()) sum += a;
        if (BigCount(sum) % 2 != cur.index() % 2) {
          o.fail("parity violated at n=" + std::to_string(n) + ", m=" + cur.index().str());
          break;
        }
      } while (cur.advance());
    }
  });

  criterion(5, "run structure: count, alternation, threshold split, 2 <= n <= 6", [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      GrayCursor cur(n);
      BigCount runs = 0;
      std::vector<int> run_prefix;
      int run_len = 0, run_connected = 0, run_disconnected = 0, threshold = 0;
      bool increasing = true;
      int prev_last = 0;
      const auto close_run = [&](Outcome& oo) {
        if (run_len != 2 * n - 1) oo.fail("run of length " + std::to_string(run_len));
        if (run_connected < 2 || run_disconnected < 1)
          oo.fail("run without 2 connected + 1 disconnected word at n=" + std::to_string(n));
      };
      do {
        const std::vector<int>& w = cur.letters();
        const std::vector<int> prefix(w.begin(), w.end() - 1);
        if (prefix != run_prefix) {
          if (run_len > 0) close_run(o);
          run_prefix = prefix;
          ++runs;
          run_len = 0;
          run_connected = run_disconnected = 0;
          const RunDescriptor desc = run_descriptor(ArcWord(prefix), runs);
          increasing = desc.direction == RunDirection::increasing;
          threshold = desc.threshold_k;
          if (increasing != ((runs & 1) != 0)) o.fail("direction/ordinal parity mismatch");
        } else {
          const int step = w.back() - prev_last;
          if (step != (increasing ? 1 : -1))
            o.fail("run " + runs.str() + " does not sweep monotonically");
        }
        ++run_len;
        prev_last = w.back();
        const bool conn = is_arc_connected(std::span<const int>(w));
        (conn ? run_connected : run_disconnected)++;
        if (conn != (w.back() <= 2 * threshold - 2))
          o.fail("threshold split wrong in run " + runs.str() + " at n=" + std::to_string(n));
      } while (cur.advance());
      close_run(o);
      if (runs != odd_double_factorial(n - 1))
        o.fail("expected (2n-3)!! runs at n=" + std::to_string(n));
    }
  });

  criterion(6, "gap structure of the connected code, 2 <= n <= 6", [](Outcome& o) {
    long long logged_i_equals_n = 0;
    for (int n = 2; n <= 6; ++n) {
      GrayCursor cur(n);
      std::vector<int> a;
      BigCount a_index = 0;
      do {
        const std::vector<int>& b = cur.letters();
        if (!a.empty() && cur.index() != a_index + 1) {
          // consecutive in the connected code, not in the full code
          if (a[n - 1] != b[n - 1]) o.fail("gap pair with different last letters");
          const int last = a[n - 1];
          if (last % 2 != 0) o.fail("gap pair with odd last letter");
          const int i = last / 2 + 1;
          if (i < 2 || i > n) o.fail("gap pair with i outside {2..n}");
          if (i < n) {
            if (a[i - 1] != 2 * i - 1 || b[i - 1] != 2 * i - 1)
              o.fail("gap pair missing a_i = b_i = 2i-1");
            for (int j = i; j <= n - 1; ++j)
              if (a[j - 1] < 2 * i - 1 || b[j - 1] < 2 * i - 1)
                o.fail("gap pair violates a_j, b_j >= 2i-1");
          } else {
            ++logged_i_equals_n;  // observed, not asserted
          }
          const ArcWord ta(std::vector<int>(a.begin(), a.end() - 1));
          const ArcWord tb(std::vector<int>(b.begin(), b.end() - 1));
          if (is_arc_connected(ta) != is_arc_connected(tb))
            o.fail("gap pair truncations disagree on connectivity");
          if (!is_arc_connected(ta) &&
              components(ta).boundaries.front() != components(tb).boundaries.front())
            o.fail("gap pair first components differ in length");
        }
        a = b;
        a_index = cur.index();
      } while (cur.advance_connected());
    }
    if (o.pass) o.detail = std::to_string(logged_i_equals_n) + " gap pairs with i=n logged";
  });

  criterion(7, "shellings = sign-connected enumerations, whole orbits, n <= 3, under 5s",
            [](Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 3; ++n) {
      std::map<std::vector<int>, long long> orbit_sizes;
      long long shellings = 0;
      std::vector<int> entries;
      for (int v = -n; v <= n; ++v)
        if (v != 0) entries.push_back(v);
      do {
        const SignedPermutation p(entries);
        const bool shelling = is_shelling(p);
        if (shelling != is_sign_connected(p)) o.fail("shelling/sign-connected mismatch");
        if (shelling) {
          ++shellings;
          ++orbit_sizes[canonicalize(p).first.entries()];
        }
      } while (std::next_permutation(entries.begin(), entries.end()));
      long long group_order = 1 << n;
      for (int i = 2; i <= n; ++i) group_order *= i;
      if (BigCount(orbit_sizes.size()) != count_connected(n))
        o.fail("orbit count differs from the connected count at n=" + std::to_string(n));
      for (const auto& [canon, size] : orbit_sizes)
        if (size != group_order) o.fail("orbit not whole at n=" + std::to_string(n));
      if (shellings != group_order * kConnectedCounts[n - 1])
        o.fail("wrong shelling count at n=" + std::to_string(n));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 5.0) o.fail("took " + std::to_string(secs) + "s");
  });

  criterion(8, "bijection round trips over every word, n <= 6", [](Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
      GrayCursor cur(n);
      do {
        const ArcWord w = cur.word();
        const StandardPermutation p = to_permutation(w);
        if (to_word(p) != w) o.fail("word-permutation round trip failed");
        if (to_word(to_arc_diagram(w)) != w) o.fail("word-arcs round trip failed");
        if (to_permutation(to_dow(p)) != p) o.fail("permutation-dow round trip failed");
        const FppInvolution inv = to_involution(p);
        for (int pos = 1; pos <= 2 * n; ++pos)
          if (inv.apply(pos) == pos || inv.apply(inv.apply(pos)) != pos)
            o.fail("involution is not a fixed-point-free square root of the identity");
      } while (cur.advance());
    }
  });

  criterion(9, "named example conversions", [](Outcome& o) {
    const ArcWord w131({1, 3, 1});
    const StandardPermutation p131({3, 1, -1, 2, -2, -3});
    if (to_permutation(w131) != p131 || to_word(p131) != w131) o.fail("131 conversion differs");
    if (to_dow(p131) != DoubleOccurrenceWord({1, 2, 2, 3, 3, 1})) o.fail("dow of 131 differs");
    if (to_permutation(DoubleOccurrenceWord({1, 2, 2, 3, 3, 1})) != p131)
      o.fail("dow decoding differs");
    if (!is_arc_connected(w131)) o.fail("131 should be connected");

    const ArcWord w125({1, 2, 5});
    const StandardPermutation p125({1, 2, -1, -2, 3, -3});
    if (to_permutation(w125) != p125 || to_word(p125) != w125) o.fail("125 conversion differs");
    if (is_arc_connected(w125)) o.fail("125 should be disconnected");

    const auto p112 = to_permutation(ArcWord({1, 1, 2}));
    const auto p122 = to_permutation(ArcWord({1, 2, 2}));
    if (is_adjacent_transposition(p112.permutation(), p122.permutation()))
      o.fail("words 112 and 122 decode to non-adjacent permutations");
  });

  criterion(10, "exact counting: brute force, closed form, recurrence", [](Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
      long long standard = 0;
      std::vector<int> entries;
      for (int v = -n; v <= n; ++v)
        if (v != 0) entries.push_back(v);
      do {
        bool ok = true;
        int next_negative = 1;
        std::vector<char> seen(n + 1, 0);
        for (int v : entries) {
          if (v > 0) {
            seen[v] = 1;
          } else if (-v != next_negative || !seen[-v]) {
            ok = false;
            break;
          } else {
            ++next_negative;
          }
        }
        if (ok) ++standard;
      } while (std::next_permutation(entries.begin(), entries.end()));
      if (count_standard(n) != standard)
        o.fail("count_standard differs from brute force at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 64; ++n) {
      BigCount product = 1;
      for (int i = 1; i <= n; ++i) product *= 2 * i - 1;
      if (count_standard(n) != product) o.fail("count_standard is not (2n-1)!!");
      BigCount fact2n = 1, factn = 1, pow2 = 1;
      for (int i = 1; i <= 2 * n; ++i) fact2n *= i;
      for (int i = 1; i <= n; ++i) factn *= i;
      for (int i = 0; i < n; ++i) pow2 *= 2;
      if (count_standard(n) != fact2n / (pow2 * factn))
        o.fail("count_standard differs from (2n)!/(2^n n!)");
    }
    for (int n = 1; n <= 20; ++n) {
      BigCount sum = count_connected(n);
      for (int k = 1; k < n; ++k) sum += count_connected(k) * odd_double_factorial(n - k);
      if (sum != count_standard(n)) o.fail("connected recurrence fails at n=" + std::to_string(n));
    }
  });

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
