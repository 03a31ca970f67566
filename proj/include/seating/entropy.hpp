#pragma once

#include <cstdint>

#include "seating/grid.hpp"

namespace seating {

/// Row-transition entropy. Always a non-negative integer bounded by
/// rows * (cols - 1)^2.
using EntropyScore = std::int64_t;

/// Number of empty/occupied switches between horizontally adjacent seats.
inline int row_transitions(const Auditorium& aud, int row) {
  if (row < 1 || row > aud.rows())
    throw RowOutOfRange("row " + std::to_string(row) + " outside 1.." + std::to_string(aud.rows()));
  int count = 0;
  for (int s = 2; s <= aud.cols(); ++s)
    if (aud.occupied(row, s - 1) != aud.occupied(row, s)) ++count;
  return count;
}

/// Sum over rows of the squared row transition count.
inline EntropyScore entropy(const Auditorium& aud) {
  EntropyScore total = 0;
  for (int r = 1; r <= aud.rows(); ++r) {
    const EntropyScore t = row_transitions(aud, r);
    total += t * t;
  }
  return total;
}

inline EntropyScore max_entropy(int rows, int cols) {
  return static_cast<EntropyScore>(rows) * (cols - 1) * (cols - 1);
}

}  // namespace seating
