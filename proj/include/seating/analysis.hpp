#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "seating/grid.hpp"

namespace seating {

/// One questionnaire answer: the pre-seated configuration, the seat the
/// respondent marked, and how many separate groups were already seated.
struct ChoiceRecord {
  Auditorium configuration;
  SeatCoord chosen;
  int group_count = 1;
};

/// Distance -> number of records.
struct Histogram {
  std::map<int, std::size_t> counts;
  std::size_t total = 0;

  void add(int distance, std::size_t n = 1) {
    counts[distance] += n;
    total += n;
  }

  Histogram& merge(const Histogram& other) {
    for (const auto& [d, n] : other.counts) add(d, n);
    return *this;
  }

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

inline void check_record(const ChoiceRecord& rec) {
  if (!rec.configuration.contains(rec.chosen))
    throw ValidationError("chosen seat " + to_string(rec.chosen) + " is outside the configuration");
  if (rec.configuration.occupied(rec.chosen))
    throw ValidationError("chosen seat " + to_string(rec.chosen) + " is already occupied");
  if (rec.configuration.occupied_count() == 0) throw ValidationError("configuration has no seated participants");
  if (rec.group_count < 1) throw ValidationError("group count must be positive");
}

/// Histogram of the distance from each chosen seat to the nearest occupant.
inline Histogram nearest_distance_histogram(const std::vector<ChoiceRecord>& records) {
  if (records.empty()) throw EmptyInput("no choice records");
  Histogram h;
  for (const auto& rec : records) {
    check_record(rec);
    h.add(DistanceField(rec.configuration).at(rec.chosen).value());
  }
  return h;
}

/// Histogram of the distance from each chosen seat to the center of mass of
/// the occupants, over records with at least `min_groups` seated groups.
inline Histogram center_distance_histogram(const std::vector<ChoiceRecord>& records, int min_groups = 2) {
  if (records.empty()) throw EmptyInput("no choice records");
  Histogram h;
  for (const auto& rec : records) {
    check_record(rec);
    if (rec.group_count < min_groups) continue;
    h.add(manhattan_distance(rec.chosen, *center_of_mass(rec.configuration)));
  }
  if (h.total == 0)
    throw AllRecordsFiltered("no record has at least " + std::to_string(min_groups) + " seated groups");
  return h;
}

}  // namespace seating
