// Command-line frontend: generate, verify, count, convert, canonicalize,
// test shellings, and draw arc diagrams.
//
// Exit codes: 0 success / verified / shelling, 1 verification failed or
// not a shelling, 2 usage or parse errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "cubegray/cubegray.hpp"

namespace {

using namespace cubegray;

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

std::string json_array(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

int run_gen(int n, bool connected, const std::string& fmt, std::uint64_t limit) {
  GrayCursor cur(n);
  std::uint64_t emitted = 0;
  while (true) {
    if (limit && emitted == limit) break;
    if (fmt == "words") {
      std::cout << format(cur.word()) << '\n';
    } else if (fmt == "perms") {
      std::cout << format(to_permutation(cur.word())) << '\n';
    } else if (fmt == "dow") {
      std::cout << format(to_dow(to_permutation(cur.word()))) << '\n';
    } else {  // json
      const ArcWord w = cur.word();
      const StandardPermutation p = to_permutation(w);
      std::cout << "{\"word\":" << json_array(w.letters()) << ",\"perm\":"
                << json_array(p.entries()) << ",\"dow\":" << json_array(to_dow(p).letters())
                << ",\"connected\":" << (is_arc_connected(w) ? "true" : "false")
                << ",\"rank\":" << cur.index().str() << "}\n";
    }
    ++emitted;
    if (!(connected ? cur.advance_connected() : cur.advance())) break;
  }
  return 0;
}

int run_verify(int n, bool connected, const std::string& input_path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input_path.empty()) {
    file.open(input_path);
    if (!file) {
      std::cerr << "error: cannot read " << input_path << '\n';
      return 2;
    }
    in = &file;
  }

  std::string line;
  int line_no = 0;
  std::uint64_t count = 0;
  std::optional<ArcWord> prev;
  std::optional<StandardPermutation> prev_perm;
  std::unordered_set<std::string> seen;
  const auto fail = [&](const std::string& why) {
    std::cout << "line " << line_no << ": " << why << "\nFAIL\n";
    return 1;
  };

  while (std::getline(*in, line)) {
    ++line_no;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::optional<ArcWord> parsed;
    try {
      parsed = parse_word(line);
    } catch (const validation_error& e) {
      std::cerr << "line " << line_no << ": " << e.what() << '\n';
      return 2;
    }
    const ArcWord& w = *parsed;
    if (w.n() != n) {
      std::cerr << "line " << line_no << ": expected " << n << " letters, got " << w.n() << '\n';
      return 2;
    }

    if (!seen.insert(format(w)).second) return fail("word already listed");
    if (connected && !is_arc_connected(w)) return fail("word is not arc-connected");
    ++count;

    long long sum = 0;
    for (int a : w.letters()) sum += a;
    if (!connected && ((n - 1 + sum) % 2) != static_cast<long long>(count % 2))
      return fail("parity law violated: (n-1) + sum of letters must match the index mod 2");

    const StandardPermutation p = to_permutation(w);
    if (prev) {
      if (!connected) {
        int changed = 0;
        bool unit_step = true;
        for (int i = 1; i <= n; ++i) {
          const int d = std::abs(w.letter(i) - prev->letter(i));
          if (d != 0) {
            ++changed;
            if (d != 1) unit_step = false;
          }
        }
        if (changed != 1 || !unit_step)
          return fail("consecutive words must differ in exactly one letter by 1");
      }
      if (!is_adjacent_transposition(prev_perm->permutation(), p.permutation()))
        return fail("consecutive permutations do not differ by an adjacent transposition");
    }
    prev = w;
    prev_perm = p;
  }

  const BigCount expected = connected ? count_connected(n) : count_standard(n);
  if (BigCount(count) != expected) {
    std::cout << "expected " << expected.str() << " words, saw " << count << "\nFAIL\n";
    return 1;
  }
  std::cout << "OK " << count << " words verified\n";
  return 0;
}

int run_count(int n, bool connected) {
  std::cout << (connected ? count_connected(n) : count_standard(n)).str() << '\n';
  return 0;
}

int run_convert(const std::string& from, const std::string& to, const std::string& value) {
  const ArcWord w = [&]() -> ArcWord {
    if (from == "word") return parse_word(value);
    if (from == "perm") return to_word(StandardPermutation(parse_permutation(value)));
    if (from == "dow") return to_word(to_permutation(parse_dow(value)));
    return to_word(parse_arcs(value));
  }();
  if (to == "word")
    std::cout << format(w) << '\n';
  else if (to == "perm")
    std::cout << format(to_permutation(w)) << '\n';
  else if (to == "dow")
    std::cout << format(to_dow(to_permutation(w))) << '\n';
  else
    std::cout << format(to_arc_diagram(w)) << '\n';
  return 0;
}

int run_canon(const std::string& value, bool witness) {
  const SignedPermutation p = parse_permutation(value);
  const auto [standard, g] = canonicalize(p);
  std::cout << format(standard) << '\n';
  if (witness) {
    std::cout << "flips:";
    for (int k : g.sign_flips()) std::cout << ' ' << k;
    std::cout << "\nrelabel:";
    for (int k = 1; k <= g.n(); ++k) std::cout << ' ' << g.relabel(k);
    std::cout << '\n';
  }
  return 0;
}

int run_shelling(const std::string& value, bool types) {
  const SignedPermutation p = parse_permutation(value);
  const ShellingReport report = shelling_report(p);
  if (report.valid)
    std::cout << "SHELLING\n";
  else
    std::cout << "NOT-A-SHELLING prefix=" << *report.failure_prefix << '\n';
  if (types) {
    std::cout << "types:";
    for (const StepType& t : report.step_types)
      std::cout << ' ' << t.unpaired << ',' << t.paired;
    std::cout << '\n';
  }
  return report.valid ? 0 : 1;
}

int run_render(const std::string& value, const std::string& out_path, bool ascii) {
  const ArcWord w = parse_word(value);
  const std::string image = ascii ? render_ascii(w) : render_svg(w);
  if (out_path.empty()) {
    std::cout << image;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << image;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Gray codes for the facet orderings of the cube boundary"};
  app.require_subcommand(1);
  int rc = 0;

  int n = 1;
  bool connected = false;

  auto* gen = app.add_subcommand("gen", "emit the full or connected Gray code in order");
  std::string gen_format = "words";
  std::uint64_t gen_limit = 0;
  gen->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  gen->add_flag("--connected", connected, "only arc-connected words (shelling types)");
  gen->add_option("--format", gen_format, "output form")
      ->check(CLI::IsMember({"words", "perms", "dow", "json"}));
  gen->add_option("--limit", gen_limit, "stop after this many items")->check(CLI::PositiveNumber);
  gen->callback([&] { rc = run_gen(n, connected, gen_format, gen_limit); });

  auto* verify = app.add_subcommand("verify", "check a Gray code read from a file or stdin");
  std::string verify_input;
  verify->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--connected", connected, "verify the connected code");
  verify->add_option("--input", verify_input, "input file (default: stdin)");
  verify->callback([&] { rc = run_verify(n, connected, verify_input); });

  auto* count = app.add_subcommand("count", "print the number of words");
  count->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 64));
  count->add_flag("--connected", connected, "count only arc-connected words");
  count->callback([&] { rc = run_count(n, connected); });

  auto* convert = app.add_subcommand("convert", "translate between representations");
  std::string from, to;
  std::vector<std::string> convert_value;
  const std::vector<std::string> reps{"word", "perm", "dow", "arcs"};
  convert->add_option("--from", from, "input representation")
      ->required()
      ->check(CLI::IsMember(reps));
  convert->add_option("--to", to, "output representation")->required()->check(CLI::IsMember(reps));
  convert->add_option("value", convert_value, "the value to translate")->required();
  convert->callback([&] { rc = run_convert(from, to, join_args(convert_value)); });

  auto* canon = app.add_subcommand("canon", "standard representative of a facet enumeration");
  std::vector<std::string> canon_value;
  bool witness = false;
  canon->add_option("value", canon_value, "signed permutation")->required();
  canon->add_flag("--witness", witness, "also print the sign flips and relabeling used");
  canon->callback([&] { rc = run_canon(join_args(canon_value), witness); });

  auto* shelling = app.add_subcommand("shelling", "is this facet enumeration a shelling?");
  std::vector<std::string> shelling_value;
  bool types = false;
  shelling->add_option("value", shelling_value, "signed permutation")->required();
  shelling->add_flag("--types", types, "print the per-step (unpaired,paired) types");
  shelling->callback([&] { rc = run_shelling(join_args(shelling_value), types); });

  auto* render = app.add_subcommand("render", "draw the arc diagram of a word");
  std::vector<std::string> render_value;
  std::string render_out;
  bool ascii = false;
  render->add_option("word", render_value, "arc word")->required();
  render->add_option("--out", render_out, "write to this file instead of stdout");
  render->add_flag("--ascii", ascii, "fixed-width text instead of SVG");
  render->callback([&] { rc = run_render(join_args(render_value), render_out, ascii); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cubegray::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
