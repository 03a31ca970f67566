#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "seating/grid.hpp"
#include "seating/random.hpp"

namespace seating {

/// Seat-selection rules. Every rule first narrows the feasible placements to
/// a candidate set and then picks uniformly among the candidates.
enum class Policy {
  Random,  ///< any feasible placement
  Max,     ///< maximize the distance to the nearest seated person
  Space,   ///< nearest-person distance in [2, 4], else the smallest above 4
  Simple,  ///< nearest-person distance above 2
  Center,  ///< distance at least 2, then closest to the center of mass
};

inline constexpr std::array<Policy, 5> kAllPolicies = {Policy::Random, Policy::Max, Policy::Space,
                                                       Policy::Simple, Policy::Center};

constexpr std::string_view keyword(Policy p) {
  switch (p) {
    case Policy::Random: return "random";
    case Policy::Max: return "max";
    case Policy::Space: return "space";
    case Policy::Simple: return "simple";
    case Policy::Center: return "center";
  }
  return "";
}

constexpr std::optional<Policy> policy_from_keyword(std::string_view word) {
  for (Policy p : kAllPolicies)
    if (keyword(p) == word) return p;
  return std::nullopt;
}

// Thresholds of the distance-based rules.
inline constexpr SeatDistance kSpaceBandLow{2};
inline constexpr SeatDistance kSpaceBandHigh{4};
inline constexpr SeatDistance kSimpleAbove{2};
inline constexpr SeatDistance kCenterAtLeast{2};

namespace detail {

struct Scored {
  Placement placement;
  SeatDistance distance;
};

inline std::vector<Scored> score(const Auditorium& aud, const std::vector<Placement>& feasible) {
  const DistanceField field(aud);
  std::vector<Scored> out;
  out.reserve(feasible.size());
  for (const auto& p : feasible) out.push_back({p, field.at(p)});
  return out;
}

template <class Pred>
std::vector<Placement> filter(const std::vector<Scored>& scored, Pred pred) {
  std::vector<Placement> out;
  for (const auto& s : scored)
    if (pred(s.distance)) out.push_back(s.placement);
  return out;
}

inline std::vector<Placement> max_candidates(const std::vector<Scored>& scored) {
  SeatDistance best(0);
  for (const auto& s : scored) best = std::max(best, s.distance);
  return filter(scored, [&](SeatDistance d) { return d == best; });
}

inline std::vector<Placement> space_candidates(const std::vector<Scored>& scored) {
  auto band = filter(scored, [](SeatDistance d) {
    return !d.is_infinite() && d >= kSpaceBandLow && d <= kSpaceBandHigh;
  });
  if (!band.empty()) return band;

  std::optional<SeatDistance> nearest_above;
  for (const auto& s : scored)
    if (s.distance > kSpaceBandHigh && (!nearest_above || s.distance < *nearest_above))
      nearest_above = s.distance;
  if (nearest_above) return filter(scored, [&](SeatDistance d) { return d == *nearest_above; });

  return filter(scored, [](SeatDistance) { return true; });
}

inline std::vector<Placement> simple_candidates(const std::vector<Scored>& scored) {
  auto spaced = filter(scored, [](SeatDistance d) { return d > kSimpleAbove; });
  if (!spaced.empty()) return spaced;
  return filter(scored, [](SeatDistance) { return true; });
}

inline std::vector<Placement> center_candidates(const Auditorium& aud, const std::vector<Scored>& scored) {
  auto spaced = filter(scored, [](SeatDistance d) { return d >= kCenterAtLeast; });
  if (spaced.empty()) return filter(scored, [](SeatDistance) { return true; });

  const auto center = center_of_mass(aud);
  if (!center) return spaced;

  int best = std::numeric_limits<int>::max();
  for (const auto& p : spaced) best = std::min(best, placement_min_distance_to(p, *center));
  std::erase_if(spaced, [&](const Placement& p) { return placement_min_distance_to(p, *center) != best; });
  return spaced;
}

}  // namespace detail

/// The placements `policy` chooses among, in (row, start_seat) order. Empty
/// only when no placement is feasible.
inline std::vector<Placement> candidate_placements(Policy policy, const Auditorium& aud, int size) {
  auto feasible = feasible_placements(aud, size);
  if (feasible.empty() || policy == Policy::Random) return feasible;

  const auto scored = detail::score(aud, feasible);
  switch (policy) {
    case Policy::Max: return detail::max_candidates(scored);
    case Policy::Space: return detail::space_candidates(scored);
    case Policy::Simple: return detail::simple_candidates(scored);
    case Policy::Center: return detail::center_candidates(aud, scored);
    case Policy::Random: break;
  }
  return feasible;
}

/// Picks a placement for a group of `size` under `policy`. Draws exactly one
/// uniform index from `rng` over the candidate list.
inline Placement select_placement(Policy policy, const Auditorium& aud, int size, RandomSource& rng) {
  const auto candidates = candidate_placements(policy, aud, size);
  if (candidates.empty())
    throw NoFeasiblePlacement("no room for a group of " + std::to_string(size) + " under policy " +
                              std::string(keyword(policy)));
  return candidates[rng.uniform_index(candidates.size())];
}

inline Placement select_random(const Auditorium& aud, int size, RandomSource& rng) {
  return select_placement(Policy::Random, aud, size, rng);
}
inline Placement select_max(const Auditorium& aud, int size, RandomSource& rng) {
  return select_placement(Policy::Max, aud, size, rng);
}
inline Placement select_space(const Auditorium& aud, int size, RandomSource& rng) {
  return select_placement(Policy::Space, aud, size, rng);
}
inline Placement select_simple(const Auditorium& aud, int size, RandomSource& rng) {
  return select_placement(Policy::Simple, aud, size, rng);
}
inline Placement select_center(const Auditorium& aud, int size, RandomSource& rng) {
  return select_placement(Policy::Center, aud, size, rng);
}

}  // namespace seating
