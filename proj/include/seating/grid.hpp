#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "seating/error.hpp"

namespace seating {

/// A seat position. Both indices are 1-based: row 1 is the back row and the
/// largest row index is the front; seats are numbered left to right.
struct SeatCoord {
  int row = 1;
  int seat = 1;

  friend constexpr auto operator<=>(const SeatCoord&, const SeatCoord&) = default;
};

inline std::string to_string(const SeatCoord& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.seat) + ")";
}

/// Manhattan distance between two seats.
constexpr int manhattan_distance(const SeatCoord& p, const SeatCoord& q) {
  const int dr = p.row - q.row;
  const int ds = p.seat - q.seat;
  return (dr < 0 ? -dr : dr) + (ds < 0 ? -ds : ds);
}

/// Seat distance that may be infinite. Infinite orders above every finite
/// value; it is produced only when nobody is seated yet.
class SeatDistance {
 public:
  constexpr explicit SeatDistance(int value) : value_(value) {}
  static constexpr SeatDistance infinite() { return SeatDistance(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  /// Finite value; meaningless when is_infinite().
  constexpr int value() const { return value_; }

  friend constexpr auto operator<=>(const SeatDistance&, const SeatDistance&) = default;

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int value_;
};

inline std::string to_string(const SeatDistance& d) {
  return d.is_infinite() ? std::string("inf") : std::to_string(d.value());
}

/// A contiguous horizontal run of `size` seats in one row starting at
/// `start_seat`.
struct Placement {
  int row = 1;
  int start_seat = 1;
  int size = 1;

  constexpr int end_seat() const { return start_seat + size - 1; }
  constexpr SeatCoord seat(int i) const { return {row, start_seat + i}; }

  friend constexpr auto operator<=>(const Placement&, const Placement&) = default;
};

inline std::string to_string(const Placement& p) {
  return "row " + std::to_string(p.row) + " seats " + std::to_string(p.start_seat) + "-" +
         std::to_string(p.end_seat());
}

/// Rectangular occupancy grid.
class Auditorium {
 public:
  Auditorium(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw ValidationError("auditorium dimensions must be positive");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool contains(const SeatCoord& c) const {
    return c.row >= 1 && c.row <= rows_ && c.seat >= 1 && c.seat <= cols_;
  }
  bool contains(const Placement& p) const {
    return p.size >= 1 && p.row >= 1 && p.row <= rows_ && p.start_seat >= 1 && p.end_seat() <= cols_;
  }

  bool occupied(int row, int seat) const { return cells_[index(row, seat)] != 0; }
  bool occupied(const SeatCoord& c) const { return occupied(c.row, c.seat); }

  /// Marks a single seat occupied. Throws SeatConflict if it already is.
  void seat(const SeatCoord& c) {
    if (!contains(c)) throw ValidationError("seat " + to_string(c) + " outside auditorium");
    auto& cell = cells_[index(c.row, c.seat)];
    if (cell != 0) throw SeatConflict("seat " + to_string(c) + " is already occupied");
    cell = 1;
    ++occupied_count_;
  }

  /// Occupies every seat of `p`; all-or-nothing.
  void place(const Placement& p) {
    if (!contains(p)) throw ValidationError("placement " + to_string(p) + " outside auditorium");
    for (int i = 0; i < p.size; ++i) {
      if (occupied(p.seat(i)))
        throw SeatConflict("placement " + to_string(p) + " overlaps occupied seat " + to_string(p.seat(i)));
    }
    for (int i = 0; i < p.size; ++i) cells_[index(p.row, p.start_seat + i)] = 1;
    occupied_count_ += static_cast<std::size_t>(p.size);
  }

  std::size_t occupied_count() const { return occupied_count_; }

  /// Occupied seats in row-major order.
  std::vector<SeatCoord> occupants() const {
    std::vector<SeatCoord> out;
    out.reserve(occupied_count_);
    for (int r = 1; r <= rows_; ++r)
      for (int s = 1; s <= cols_; ++s)
        if (occupied(r, s)) out.push_back({r, s});
    return out;
  }

  /// Left-right mirror image.
  Auditorium mirrored() const {
    Auditorium out(rows_, cols_);
    for (int r = 1; r <= rows_; ++r)
      for (int s = 1; s <= cols_; ++s)
        if (occupied(r, s)) out.seat({r, cols_ + 1 - s});
    return out;
  }

  friend bool operator==(const Auditorium& a, const Auditorium& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t index(int row, int seat) const {
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(seat - 1);
  }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
  std::size_t occupied_count_ = 0;
};

/// Returns `aud` with `p` occupied. Throws SeatConflict on overlap.
inline Auditorium occupy(Auditorium aud, const Placement& p) {
  aud.place(p);
  return aud;
}

inline Placement mirrored(const Placement& p, int cols) {
  return {p.row, cols + 1 - p.end_seat(), p.size};
}

/// All placements of `size` seats whose seats are empty, ordered by
/// (row, start_seat).
inline std::vector<Placement> feasible_placements(const Auditorium& aud, int size) {
  std::vector<Placement> out;
  if (size < 1 || size > aud.cols()) return out;
  for (int r = 1; r <= aud.rows(); ++r) {
    // Sliding window over the current run of empty seats.
    int run = 0;
    for (int s = 1; s <= aud.cols(); ++s) {
      run = aud.occupied(r, s) ? 0 : run + 1;
      if (run >= size) out.push_back({r, s - size + 1, size});
    }
  }
  return out;
}

/// Per-seat Manhattan distance to the nearest occupied seat, computed with a
/// two-pass distance transform. Every entry is infinite when the auditorium
/// is empty.
class DistanceField {
 public:
  explicit DistanceField(const Auditorium& aud) : rows_(aud.rows()), cols_(aud.cols()) {
    const int far = rows_ + cols_;  // exceeds any in-grid distance
    dist_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), far);
    empty_ = aud.occupied_count() == 0;
    if (empty_) return;
    for (int r = 1; r <= rows_; ++r) {
      for (int s = 1; s <= cols_; ++s) {
        int& d = at(r, s);
        if (aud.occupied(r, s)) {
          d = 0;
          continue;
        }
        if (r > 1) d = std::min(d, at(r - 1, s) + 1);
        if (s > 1) d = std::min(d, at(r, s - 1) + 1);
      }
    }
    for (int r = rows_; r >= 1; --r) {
      for (int s = cols_; s >= 1; --s) {
        int& d = at(r, s);
        if (r < rows_) d = std::min(d, at(r + 1, s) + 1);
        if (s < cols_) d = std::min(d, at(r, s + 1) + 1);
      }
    }
  }

  SeatDistance at(const SeatCoord& c) const {
    return empty_ ? SeatDistance::infinite() : SeatDistance(dist_[index(c.row, c.seat)]);
  }

  SeatDistance at(const Placement& p) const {
    if (empty_) return SeatDistance::infinite();
    int best = std::numeric_limits<int>::max();
    for (int i = 0; i < p.size; ++i) best = std::min(best, dist_[index(p.row, p.start_seat + i)]);
    return SeatDistance(best);
  }

 private:
  std::size_t index(int row, int seat) const {
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(seat - 1);
  }
  int& at(int row, int seat) { return dist_[index(row, seat)]; }

  int rows_;
  int cols_;
  bool empty_ = true;
  std::vector<int> dist_;
};

/// Minimum Manhattan distance from any seat of `p` to any occupied seat.
inline SeatDistance min_distance_to_seated(const Auditorium& aud, const Placement& p) {
  return DistanceField(aud).at(p);
}

/// Rounds a non-negative rational num/den to the nearest integer, halves up.
constexpr int round_half_up(long long num, long long den) { return static_cast<int>((2 * num + den) / (2 * den)); }

/// Mean row and mean seat of the occupied seats, each rounded half up.
/// Empty auditorium has no center.
inline std::optional<SeatCoord> center_of_mass(const Auditorium& aud) {
  long long row_sum = 0;
  long long seat_sum = 0;
  long long n = 0;
  for (int r = 1; r <= aud.rows(); ++r) {
    for (int s = 1; s <= aud.cols(); ++s) {
      if (!aud.occupied(r, s)) continue;
      row_sum += r;
      seat_sum += s;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return SeatCoord{round_half_up(row_sum, n), round_half_up(seat_sum, n)};
}

/// Distance from a group to a point: the minimum over the group's seats.
constexpr int placement_min_distance_to(const Placement& p, const SeatCoord& c) {
  const int dr = p.row < c.row ? c.row - p.row : p.row - c.row;
  int ds = 0;
  if (c.seat < p.start_seat) ds = p.start_seat - c.seat;
  else if (c.seat > p.end_seat()) ds = c.seat - p.end_seat();
  return dr + ds;
}

}  // namespace seating
