#pragma once

// Text formats.
//
// Scenario file (UTF-8, '\n' line endings). Blank lines and lines whose first
// non-blank character is ';' are ignored. Sections appear in this order:
//
//   rows <m>
//   cols <n>
//   grid
//   <m lines of n characters: '.' empty, '#' occupied>
//   arrivals
//   [<space-separated group sizes>]
//   [observed
//    <step>: <row>,<seat> <row>,<seat> ...     one line per arrival, in order]
//
// Choices file: a sequence of records, conventionally separated by blank
// lines:
//
//   groups <k>
//   grid
//   <one or more lines of '.'/'#', all the same width>
//   chosen <row>,<seat>
//
// Coordinates are 1-based; row 1 is the back row.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "seating/analysis.hpp"
#include "seating/grid.hpp"
#include "seating/simulation.hpp"

namespace seating {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
  std::size_t column;  // column of text[0]

  std::vector<Token> tokens() const {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
      if (i > start) out.push_back({text.substr(start, i - start), column + start});
    }
    return out;
  }
};

/// Splits into meaningful lines: trimmed, with blanks and ';' comments dropped.
inline std::vector<Line> meaningful_lines(std::string_view doc) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= doc.size()) {
    std::size_t end = doc.find('\n', pos);
    if (end == std::string_view::npos) end = doc.size();
    std::string_view raw = doc.substr(pos, end - pos);
    ++number;
    std::size_t lead = 0;
    while (lead < raw.size() && (raw[lead] == ' ' || raw[lead] == '\t')) ++lead;
    std::size_t trail = raw.size();
    while (trail > lead && (raw[trail - 1] == ' ' || raw[trail - 1] == '\t' || raw[trail - 1] == '\r')) --trail;
    std::string_view text = raw.substr(lead, trail - lead);
    if (!text.empty() && text.front() != ';') out.push_back({number, text, lead + 1});
    if (end == doc.size()) break;
    pos = end + 1;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view doc) : lines_(meaningful_lines(doc)) {
    std::size_t total = 1;
    for (char c : doc)
      if (c == '\n') ++total;
    end_line_ = total;
  }

  bool done() const { return i_ >= lines_.size(); }
  const Line& peek() const { return lines_[i_]; }

  const Line& next(std::string_view expecting) {
    if (done()) throw ParseError(end_line_, 1, "unexpected end of input, expected " + std::string(expecting));
    return lines_[i_++];
  }

  std::size_t end_line() const { return end_line_; }

 private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
  std::size_t end_line_ = 1;
};

inline long long parse_int(const Line& line, const Token& tok, std::string_view what) {
  long long v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line.number, tok.column, "expected " + std::string(what) + ", found '" + std::string(tok.text) + "'");
  return v;
}

inline bool is_keyword_line(const Line& line, std::string_view word) {
  auto toks = line.tokens();
  return !toks.empty() && toks.front().text == word;
}

inline void expect_keyword(const Line& line, std::string_view word) {
  auto toks = line.tokens();
  if (toks.empty() || toks.front().text != word)
    throw ParseError(line.number, line.column, "expected '" + std::string(word) + "'");
  if (toks.size() > 1)
    throw ParseError(line.number, toks[1].column, "unexpected text after '" + std::string(word) + "'");
}

inline int parse_dimension(const Line& line, std::string_view word) {
  auto toks = line.tokens();
  if (toks.empty() || toks.front().text != word)
    throw ParseError(line.number, line.column, "expected '" + std::string(word) + " <count>'");
  if (toks.size() < 2) throw ParseError(line.number, line.column + line.text.size(), "missing count");
  if (toks.size() > 2) throw ParseError(line.number, toks[2].column, "unexpected text after count");
  const long long v = parse_int(line, toks[1], "a count");
  if (v < 1 || v > 100000)
    throw ValidationError(line.number, toks[1].column, std::string(word) + " must be between 1 and 100000");
  return static_cast<int>(v);
}

/// Reads one grid row, requiring `width` seats when width > 0.
inline std::vector<bool> parse_grid_row(const Line& line, std::size_t width) {
  std::vector<bool> row;
  row.reserve(line.text.size());
  for (std::size_t i = 0; i < line.text.size(); ++i) {
    const char c = line.text[i];
    if (c != '.' && c != '#')
      throw ParseError(line.number, line.column + i, std::string("expected '.' or '#', found '") + c + "'");
    row.push_back(c == '#');
  }
  if (width > 0 && row.size() != width)
    throw ParseError(line.number, line.column + std::min(row.size(), width),
                     "expected " + std::to_string(width) + " seats, found " + std::to_string(row.size()));
  return row;
}

inline SeatCoord parse_coord(const Line& line, const Token& tok) {
  const auto comma = tok.text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError(line.number, tok.column, "expected '<row>,<seat>', found '" + std::string(tok.text) + "'");
  const Token r{tok.text.substr(0, comma), tok.column};
  const Token s{tok.text.substr(comma + 1), tok.column + comma + 1};
  const long long row = parse_int(line, r, "a row number");
  const long long seat = parse_int(line, s, "a seat number");
  if (row < -1000000 || row > 1000000 || seat < -1000000 || seat > 1000000)
    throw ValidationError(line.number, tok.column, "coordinate out of range");
  return {static_cast<int>(row), static_cast<int>(seat)};
}

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Parses a scenario document. Throws ParseError on malformed syntax and
/// ValidationError on invalid content, both naming line and column.
inline Scenario parse_scenario(std::string_view text) {
  detail::Cursor in(text);
  Scenario sc;
  sc.rows = detail::parse_dimension(in.next("'rows <count>'"), "rows");
  sc.cols = detail::parse_dimension(in.next("'cols <count>'"), "cols");

  detail::expect_keyword(in.next("'grid'"), "grid");
  for (int r = 1; r <= sc.rows; ++r) {
    const auto& line = in.next("a grid row");
    const auto row = detail::parse_grid_row(line, static_cast<std::size_t>(sc.cols));
    for (int s = 1; s <= sc.cols; ++s)
      if (row[static_cast<std::size_t>(s - 1)]) sc.initial.push_back({r, s});
  }

  detail::expect_keyword(in.next("'arrivals'"), "arrivals");
  if (!in.done() && !detail::is_keyword_line(in.peek(), "observed")) {
    const auto& line = in.next("group sizes");
    for (const auto& tok : line.tokens()) {
      const long long v = detail::parse_int(line, tok, "a group size");
      if (v < 1) throw ValidationError(line.number, tok.column, "group size must be positive");
      if (v > sc.cols) throw ValidationError(line.number, tok.column, "group size exceeds the row width");
      sc.arrivals.push_back(static_cast<int>(v));
    }
  }

  if (!in.done()) {
    const auto& header = in.next("'observed'");
    detail::expect_keyword(header, "observed");
    std::set<SeatCoord> taken(sc.initial.begin(), sc.initial.end());
    std::vector<ObservedStep> steps;
    while (!in.done()) {
      const auto& line = in.next("an observed step");
      const auto toks = line.tokens();
      const auto& head = toks.front();
      if (head.text.size() < 2 || head.text.back() != ':')
        throw ParseError(line.number, head.column, "expected '<step>:'");
      const detail::Token num{head.text.substr(0, head.text.size() - 1), head.column};
      const long long step = detail::parse_int(line, num, "a step number");
      if (step != static_cast<long long>(steps.size()) + 1)
        throw ValidationError(line.number, head.column,
                              "observed step " + std::to_string(step) + " out of order, expected " +
                                  std::to_string(steps.size() + 1));
      if (steps.size() >= sc.arrivals.size())
        throw ValidationError(line.number, head.column, "more observed steps than arrivals");
      ObservedStep obs{static_cast<std::size_t>(step), {}};
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const SeatCoord c = detail::parse_coord(line, toks[k]);
        if (c.row < 1 || c.row > sc.rows || c.seat < 1 || c.seat > sc.cols)
          throw ValidationError(line.number, toks[k].column, "seat " + to_string(c) + " is out of bounds");
        if (!taken.insert(c).second)
          throw ValidationError(line.number, toks[k].column, "seat " + to_string(c) + " is already occupied");
        obs.seats.push_back(c);
      }
      const auto expected = static_cast<std::size_t>(sc.arrivals[steps.size()]);
      if (obs.seats.size() != expected)
        throw ValidationError(line.number, head.column,
                              "step " + std::to_string(step) + " lists " + std::to_string(obs.seats.size()) +
                                  " seats but the group size is " + std::to_string(expected));
      steps.push_back(std::move(obs));
    }
    if (steps.size() != sc.arrivals.size())
      throw ValidationError(header.number, header.column,
                            "observed block has " + std::to_string(steps.size()) + " steps but there are " +
                                std::to_string(sc.arrivals.size()) + " arrivals");
    sc.observed = std::move(steps);
  }

  sc.validate();
  return sc;
}

/// Canonical text form. Initial occupants are written as the grid, so they
/// read back in row-major order.
inline std::string serialize_scenario(const Scenario& sc) {
  sc.validate();
  const Auditorium aud = sc.initial_auditorium();
  std::string out;
  out += "rows " + std::to_string(sc.rows) + "\n";
  out += "cols " + std::to_string(sc.cols) + "\n";
  out += "grid\n";
  for (int r = 1; r <= sc.rows; ++r) {
    for (int s = 1; s <= sc.cols; ++s) out += aud.occupied(r, s) ? '#' : '.';
    out += '\n';
  }
  out += "arrivals\n";
  if (!sc.arrivals.empty()) {
    for (std::size_t i = 0; i < sc.arrivals.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(sc.arrivals[i]);
    }
    out += '\n';
  }
  if (sc.observed) {
    out += "observed\n";
    for (const auto& step : *sc.observed) {
      out += std::to_string(step.step) + ":";
      for (const auto& c : step.seats) out += " " + std::to_string(c.row) + "," + std::to_string(c.seat);
      out += '\n';
    }
  }
  return out;
}

/// Parses a choices document into records.
inline std::vector<ChoiceRecord> parse_choices(std::string_view text) {
  detail::Cursor in(text);
  std::vector<ChoiceRecord> records;
  while (!in.done()) {
    const auto& groups_line = in.next("'groups <count>'");
    auto toks = groups_line.tokens();
    if (toks.front().text != "groups")
      throw ParseError(groups_line.number, groups_line.column, "expected 'groups <count>'");
    if (toks.size() != 2)
      throw ParseError(groups_line.number, groups_line.column, "expected exactly one group count");
    const long long groups = detail::parse_int(groups_line, toks[1], "a group count");
    if (groups < 1) throw ValidationError(groups_line.number, toks[1].column, "group count must be positive");

    detail::expect_keyword(in.next("'grid'"), "grid");
    std::vector<std::vector<bool>> rows;
    while (true) {
      if (!in.done() && detail::is_keyword_line(in.peek(), "chosen")) break;
      const auto& line = in.next("a grid row or 'chosen'");
      const std::size_t width = rows.empty() ? 0 : rows.front().size();
      rows.push_back(detail::parse_grid_row(line, width));
    }
    const auto& chosen_line = in.next("'chosen <row>,<seat>'");
    if (rows.empty()) throw ParseError(chosen_line.number, chosen_line.column, "grid has no rows");
    toks = chosen_line.tokens();
    if (toks.size() != 2)
      throw ParseError(chosen_line.number, chosen_line.column, "expected 'chosen <row>,<seat>'");
    const SeatCoord chosen = detail::parse_coord(chosen_line, toks[1]);

    Auditorium aud(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t s = 0; s < rows[r].size(); ++s)
        if (rows[r][s]) aud.seat({static_cast<int>(r + 1), static_cast<int>(s + 1)});

    ChoiceRecord rec{std::move(aud), chosen, static_cast<int>(groups)};
    try {
      check_record(rec);
    } catch (const ValidationError& e) {
      throw ValidationError(chosen_line.number, toks[1].column, e.message());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

/// A trajectory series for CSV output.
struct LabeledSeries {
  std::string label;
  std::variant<MeanTrajectory, Trajectory> data;
};

/// CSV with header step,label,mean,std,min,max. Rows are ordered by step,
/// then by label. Plain trajectories report their value as mean, min and max
/// with std 0.
inline std::string emit_trajectories_csv(const std::vector<LabeledSeries>& series) {
  struct Row {
    double mean, stddev, min, max;
  };
  std::vector<std::pair<std::string, std::vector<Row>>> table;
  std::optional<std::size_t> steps;
  for (const auto& s : series) {
    std::vector<Row> rows;
    if (const auto* m = std::get_if<MeanTrajectory>(&s.data)) {
      if (m->stddev.size() != m->steps() || m->min.size() != m->steps() || m->max.size() != m->steps())
        throw LengthMismatch("series '" + s.label + "' has inconsistent statistic lengths");
      for (std::size_t t = 0; t < m->steps(); ++t) rows.push_back({m->mean[t], m->stddev[t], m->min[t], m->max[t]});
    } else {
      for (EntropyScore v : std::get<Trajectory>(s.data).entropy_by_step) {
        const auto d = static_cast<double>(v);
        rows.push_back({d, 0.0, d, d});
      }
    }
    if (steps && *steps != rows.size())
      throw LengthMismatch("series '" + s.label + "' has " + std::to_string(rows.size()) + " steps, expected " +
                           std::to_string(*steps));
    steps = rows.size();
    table.emplace_back(s.label, std::move(rows));
  }
  std::stable_sort(table.begin(), table.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out = "step,label,mean,std,min,max\n";
  for (std::size_t t = 0; t < steps.value_or(0); ++t) {
    for (const auto& [label, rows] : table) {
      const Row& r = rows[t];
      out += std::to_string(t) + "," + label + "," + detail::format_double(r.mean) + "," +
             detail::format_double(r.stddev) + "," + detail::format_double(r.min) + "," +
             detail::format_double(r.max) + "\n";
    }
  }
  return out;
}

inline std::string emit_histogram_csv(const Histogram& h) {
  std::string out = "distance,count\n";
  for (const auto& [d, n] : h.counts) out += std::to_string(d) + "," + std::to_string(n) + "\n";
  return out;
}

}  // namespace seating
