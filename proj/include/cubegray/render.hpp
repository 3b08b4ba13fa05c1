#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cubegray/arc_diagram.hpp"
#include "cubegray/arc_word.hpp"
#include "cubegray/convert.hpp"

// Static pictures of an arc diagram: 2n vertices on a baseline, labeled by
// the standard permutation, one semicircular arc per matched pair.  Output
// is a pure function of the input, byte for byte.

namespace cubegray {

namespace detail {

// Stack heights for the arcs: overlapping arcs (nested or crossing) must
// sit at different heights.  Shorter spans are placed first.
inline std::vector<int> arc_levels(const ArcDiagram& d) {
  const int n = d.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = d.arcs()[a];
    const auto& y = d.arcs()[b];
    const int sx = x.second - x.first, sy = y.second - y.first;
    return sx != sy ? sx < sy : x.first < y.first;
  });
  std::vector<int> level(n, 0);
  for (int idx : order) {
    const auto& [l, r] = d.arcs()[idx];
    int below = 0;
    for (int other = 0; other < n; ++other) {
      if (level[other] == 0) continue;
      const auto& [ol, or_] = d.arcs()[other];
      if (std::max(l, ol) < std::min(r, or_)) below = std::max(below, level[other]);
    }
    level[idx] = below + 1;
  }
  return level;
}

}  // namespace detail

inline std::string render_ascii(const ArcWord& w) {
  const ArcDiagram d = to_arc_diagram(w);
  const StandardPermutation p = to_permutation(w);
  const int n = w.n();

  std::vector<std::string> labels;
  size_t cell = 0;
  for (int v : p.entries()) {
    labels.push_back(std::to_string(v));
    cell = std::max(cell, labels.back().size());
  }
  cell += 1;
  const auto col = [&](int pos) { return static_cast<size_t>(pos - 1) * cell; };

  const std::vector<int> level = detail::arc_levels(d);
  const int top = *std::max_element(level.begin(), level.end());
  std::vector<std::string> rows(top, std::string(col(2 * n) + 1, ' '));  // rows[h-1] = height h

  for (int k = 0; k < n; ++k) {
    const auto& [l, r] = d.arcs()[k];
    std::string& row = rows[level[k] - 1];
    row[col(l)] = '.';
    row[col(r)] = '.';
    for (size_t c = col(l) + 1; c < col(r); ++c) row[c] = '-';
  }
  // risers last, so crossings through another arc's span show as '+'
  for (int k = 0; k < n; ++k) {
    const auto& [l, r] = d.arcs()[k];
    for (int h = 1; h < level[k]; ++h) {
      for (size_t c : {col(l), col(r)}) {
        char& cellch = rows[h - 1][c];
        cellch = (cellch == '-') ? '+' : '|';
      }
    }
  }

  std::string base;
  for (int pos = 1; pos <= 2 * n; ++pos) {
    base.resize(col(pos), ' ');
    base += labels[pos - 1];
  }

  std::string out;
  for (int h = top; h >= 1; --h) {
    std::string row = rows[h - 1];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  out += base;
  out += '\n';
  return out;
}

inline std::string render_svg(const ArcWord& w) {
  const ArcDiagram d = to_arc_diagram(w);
  const StandardPermutation p = to_permutation(w);
  const int n = w.n();
  const int step = 40;
  const int margin = 30;

  int max_span = 0;
  for (const auto& [l, r] : d.arcs()) max_span = std::max(max_span, r - l);
  const int baseline = 12 + max_span * step / 2;
  const int width = 2 * margin + (2 * n - 1) * step;
  const int height = baseline + 34;
  const auto x = [&](int pos) { return margin + (pos - 1) * step; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
       " " + std::to_string(height) + "\">\n";
  s += "<g fill=\"none\" stroke=\"#000\" stroke-width=\"2\">\n";
  for (const auto& [l, r] : d.arcs()) {
    const int rx = (r - l) * step / 2;
    s += "<path d=\"M " + std::to_string(x(l)) + " " + std::to_string(baseline) + " A " +
         std::to_string(rx) + " " + std::to_string(rx) + " 0 0 1 " + std::to_string(x(r)) + " " +
         std::to_string(baseline) + "\"/>\n";
  }
  s += "</g>\n<g fill=\"#000\">\n";
  for (int pos = 1; pos <= 2 * n; ++pos) {
    s += "<circle cx=\"" + std::to_string(x(pos)) + "\" cy=\"" + std::to_string(baseline) +
         "\" r=\"3\"/>\n";
  }
  s += "</g>\n<g fill=\"#000\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (int pos = 1; pos <= 2 * n; ++pos) {
    s += "<text x=\"" + std::to_string(x(pos)) + "\" y=\"" + std::to_string(baseline + 22) +
         "\">" + std::to_string(p.entries()[pos - 1]) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace cubegray
