#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "cubegray/arc_diagram.hpp"
#include "cubegray/arc_word.hpp"
#include "cubegray/double_occurrence_word.hpp"
#include "cubegray/errors.hpp"
#include "cubegray/signed_permutation.hpp"

// Text forms, one object per line:
//   word   "1 3 1"            space-separated letters; the compact digit
//                             string "131" is accepted on input when every
//                             letter is a single digit
//   perm   "3 1 -1 2 -2 -3"   space-separated signed entries
//   dow    "1 2 2 3 3 1"      space-separated letters; compact form as above
//   arcs   "2 3 4 5 1 6"      endpoint pairs, flattened

namespace cubegray {

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline int parse_int(std::string_view token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw validation_error(errc::parse_error, "not an integer: '" + std::string(token) + "'");
  return value;
}

// Letters of a word-like value: spaced integers, or one all-digit token
// read digit by digit.
inline std::vector<int> parse_letters(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw validation_error(errc::parse_error, "empty input");
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    bool all_digits = true;
    for (char c : tokens[0])
      if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
    if (all_digits) {
      std::vector<int> letters;
      letters.reserve(tokens[0].size());
      for (char c : tokens[0]) letters.push_back(c - '0');
      return letters;
    }
  }
  std::vector<int> letters;
  letters.reserve(tokens.size());
  for (auto t : tokens) letters.push_back(parse_int(t));
  return letters;
}

}  // namespace detail

inline ArcWord parse_word(std::string_view text) { return ArcWord(detail::parse_letters(text)); }

inline DoubleOccurrenceWord parse_dow(std::string_view text) {
  return DoubleOccurrenceWord(detail::parse_letters(text));
}

inline SignedPermutation parse_permutation(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  std::vector<int> entries;
  entries.reserve(tokens.size());
  for (auto t : tokens) entries.push_back(detail::parse_int(t));
  return SignedPermutation(std::move(entries));
}

inline ArcDiagram parse_arcs(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  if (tokens.size() % 2 != 0)
    throw validation_error(errc::parse_error, "arcs need an even number of endpoints");
  std::vector<ArcDiagram::Arc> arcs;
  arcs.reserve(tokens.size() / 2);
  for (size_t i = 0; i + 1 < tokens.size(); i += 2)
    arcs.emplace_back(detail::parse_int(tokens[i]), detail::parse_int(tokens[i + 1]));
  return ArcDiagram(std::move(arcs));
}

namespace detail {

inline std::string join(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

inline std::string format(const ArcWord& w) { return detail::join(w.letters()); }
inline std::string format(const SignedPermutation& p) { return detail::join(p.entries()); }
inline std::string format(const StandardPermutation& p) { return detail::join(p.entries()); }
inline std::string format(const DoubleOccurrenceWord& d) { return detail::join(d.letters()); }

inline std::string format(const ArcDiagram& d) {
  std::vector<int> flat;
  flat.reserve(2 * d.arcs().size());
  for (const auto& [l, r] : d.arcs()) {
    flat.push_back(l);
    flat.push_back(r);
  }
  return detail::join(flat);
}

}  // namespace cubegray
