#include "betbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "betbench/stats.hpp"

namespace betbench {

namespace {

std::string percent(const EvalSummary& s) {
  const double acc = s.accuracy();
  if (!std::isfinite(acc)) return "n/a";
  char buf[32];
  const double pct = 100.0 * acc;
  if (std::fabs(pct - std::round(pct)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.0f", pct);
  } else {
    std::snprintf(buf, sizeof buf, "%.1f", pct);
  }
  return buf;
}

std::string p_text(const EvalSummary& s) {
  return std::isfinite(s.p_value) ? format_p(s.p_value) : "n/a";
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

}  // namespace

std::string render_rows(std::span<const EvalSummary> rows) {
  const std::vector<std::string> header = {"dataset", "scorer", "method", "metric", "theta", "n",
                                           "excl",    "correct", "acc%",  "baseline", "p"};
  std::vector<std::vector<std::string>> table;
  table.push_back(header);
  for (const auto& s : rows) {
    char theta[16] = "-";
    if (s.threshold) std::snprintf(theta, sizeof theta, "%.3f", *s.threshold);
    table.push_back({s.dataset, s.scorer, std::string(to_string(s.method)), s.metric, theta,
                     std::to_string(s.n_total), std::to_string(s.n_excluded),
                     std::to_string(s.n_correct), percent(s), to_string(s.baseline), p_text(s)});
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c + 1 == row.size() ? row[c] : pad(row[c], widths[c] + 2));
    }
    os << "\n";
  }
  return os.str();
}

std::string render_pivot(std::span<const EvalSummary> rows) {
  std::vector<std::string> scorers;
  std::vector<std::string> columns;
  std::map<std::pair<std::string, std::string>, std::string> cells;
  for (const auto& s : rows) {
    const std::string column = s.dataset + " " + s.metric;
    if (std::find(scorers.begin(), scorers.end(), s.scorer) == scorers.end()) {
      scorers.push_back(s.scorer);
    }
    if (std::find(columns.begin(), columns.end(), column) == columns.end()) {
      columns.push_back(column);
    }
    std::string cell = percent(s) + " (" + p_text(s) + ")";
    if (std::isfinite(s.p_value) && s.p_value <= 0.05) cell += " §";
    cells[{s.scorer, column}] = cell;
  }

  std::size_t first = std::string("scorer").size();
  for (const auto& s : scorers) first = std::max(first, s.size());
  std::vector<std::size_t> widths;
  for (const auto& c : columns) {
    std::size_t w = c.size();
    for (const auto& s : scorers) {
      auto it = cells.find({s, c});
      if (it != cells.end()) w = std::max(w, it->second.size());
    }
    widths.push_back(w);
  }

  std::ostringstream os;
  os << pad("scorer", first + 2);
  for (std::size_t i = 0; i < columns.size(); ++i) os << pad(columns[i], widths[i] + 2);
  os << "\n";
  for (const auto& s : scorers) {
    os << pad(s, first + 2);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      auto it = cells.find({s, columns[i]});
      os << pad(it == cells.end() ? "-" : it->second, widths[i] + 2);
    }
    os << "\n";
  }
  os << "cells: accuracy% (one-sided p vs. random baseline); § marks p <= .05\n";
  return os.str();
}

}  // namespace betbench
