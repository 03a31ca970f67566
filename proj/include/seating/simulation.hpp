#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "seating/entropy.hpp"
#include "seating/grid.hpp"
#include "seating/policies.hpp"
#include "seating/random.hpp"

namespace seating {

/// Seats claimed by one group in the recorded real-world sequence.
struct ObservedStep {
  std::size_t step = 1;  // 1-based arrival index
  std::vector<SeatCoord> seats;

  friend bool operator==(const ObservedStep&, const ObservedStep&) = default;
};

/// Complete experimental input: auditorium size, who is seated at the start,
/// the group sizes arriving in order, and optionally where each group
/// actually sat.
struct Scenario {
  int rows = 1;
  int cols = 1;
  std::vector<SeatCoord> initial;
  std::vector<int> arrivals;
  std::optional<std::vector<ObservedStep>> observed;

  friend bool operator==(const Scenario&, const Scenario&) = default;

  /// Throws ValidationError on the first violated invariant.
  void validate() const {
    if (rows < 1 || cols < 1) throw ValidationError("rows and cols must be positive");
    std::set<SeatCoord> taken;
    auto claim = [&](const SeatCoord& c, const char* what) {
      if (c.row < 1 || c.row > rows || c.seat < 1 || c.seat > cols)
        throw ValidationError(std::string(what) + " seat " + to_string(c) + " is out of bounds");
      if (!taken.insert(c).second)
        throw ValidationError(std::string(what) + " seat " + to_string(c) + " is occupied twice");
    };
    for (const auto& c : initial) claim(c, "initial");
    for (std::size_t i = 0; i < arrivals.size(); ++i) {
      if (arrivals[i] < 1) throw ValidationError("arrival " + std::to_string(i + 1) + " has non-positive size");
      if (arrivals[i] > cols)
        throw ValidationError("arrival " + std::to_string(i + 1) + " is wider than a row");
    }
    if (!observed) return;
    if (observed->size() != arrivals.size())
      throw ValidationError("observed block has " + std::to_string(observed->size()) + " steps but there are " +
                            std::to_string(arrivals.size()) + " arrivals");
    for (std::size_t i = 0; i < observed->size(); ++i) {
      const auto& step = (*observed)[i];
      if (step.step != i + 1)
        throw ValidationError("observed step " + std::to_string(step.step) + " out of order, expected " +
                              std::to_string(i + 1));
      if (step.seats.size() != static_cast<std::size_t>(arrivals[i]))
        throw ValidationError("observed step " + std::to_string(step.step) + " seats " +
                              std::to_string(step.seats.size()) + " but the arrival size is " +
                              std::to_string(arrivals[i]));
      for (const auto& c : step.seats) claim(c, "observed");
    }
  }

  Auditorium initial_auditorium() const {
    Auditorium aud(rows, cols);
    for (const auto& c : initial) aud.seat(c);
    return aud;
  }

  std::size_t total_arriving() const {
    std::size_t n = 0;
    for (int a : arrivals) n += static_cast<std::size_t>(a);
    return n;
  }
};

/// Left-right mirror image of a scenario.
inline Scenario mirrored(const Scenario& sc) {
  Scenario out = sc;
  auto flip = [&](SeatCoord& c) { c.seat = sc.cols + 1 - c.seat; };
  for (auto& c : out.initial) flip(c);
  if (out.observed)
    for (auto& step : *out.observed)
      for (auto& c : step.seats) flip(c);
  return out;
}

/// Entropy after each step; index 0 is the initial configuration.
struct Trajectory {
  std::vector<EntropyScore> entropy_by_step;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Per-step statistics over Monte Carlo runs. `stddev` is the population
/// standard deviation.
struct MeanTrajectory {
  std::vector<double> mean;
  std::vector<double> stddev;
  std::vector<double> min;
  std::vector<double> max;
  std::size_t run_count = 0;

  std::size_t steps() const { return mean.size(); }

  friend bool operator==(const MeanTrajectory&, const MeanTrajectory&) = default;
};

/// Result of one run that also exposes the final grid.
struct RunResult {
  Trajectory trajectory;
  Auditorium final_auditorium;
};

inline RunResult run_once_detailed(const Scenario& scenario, Policy policy, std::uint64_t seed) {
  RandomSource rng(seed);
  Auditorium aud = scenario.initial_auditorium();
  Trajectory traj;
  traj.entropy_by_step.reserve(scenario.arrivals.size() + 1);
  traj.entropy_by_step.push_back(entropy(aud));
  for (std::size_t i = 0; i < scenario.arrivals.size(); ++i) {
    Placement chosen;
    try {
      chosen = select_placement(policy, aud, scenario.arrivals[i], rng);
    } catch (const NoFeasiblePlacement& e) {
      throw NoFeasiblePlacement(std::string(e.what()) + " at step " + std::to_string(i + 1), i + 1);
    }
    aud.place(chosen);
    traj.entropy_by_step.push_back(entropy(aud));
  }
  return {std::move(traj), std::move(aud)};
}

/// One simulated evening: every group arrives in order and sits where the
/// policy puts it. Deterministic in (scenario, policy, seed).
inline Trajectory run_once(const Scenario& scenario, Policy policy, std::uint64_t seed) {
  return run_once_detailed(scenario, policy, seed).trajectory;
}

/// Aggregates per-step statistics over trajectories in the given order.
inline MeanTrajectory aggregate(const std::vector<Trajectory>& runs) {
  MeanTrajectory out;
  out.run_count = runs.size();
  if (runs.empty()) return out;
  const std::size_t steps = runs.front().entropy_by_step.size();
  for (const auto& r : runs)
    if (r.entropy_by_step.size() != steps) throw LengthMismatch("trajectories differ in length");

  const auto n = static_cast<double>(runs.size());
  out.mean.resize(steps);
  out.stddev.resize(steps);
  out.min.resize(steps);
  out.max.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    // Integer sums are exact, so the mean does not depend on summation order.
    std::int64_t sum = 0;
    EntropyScore lo = runs.front().entropy_by_step[t];
    EntropyScore hi = lo;
    for (const auto& r : runs) {
      const EntropyScore v = r.entropy_by_step[t];
      sum += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double mean = static_cast<double>(sum) / n;
    double sq = 0.0;
    for (const auto& r : runs) {
      const double d = static_cast<double>(r.entropy_by_step[t]) - mean;
      sq += d * d;
    }
    out.mean[t] = mean;
    out.stddev[t] = std::sqrt(sq / n);
    out.min[t] = static_cast<double>(lo);
    out.max[t] = static_cast<double>(hi);
  }
  return out;
}

/// Runs `runs` independent simulations, run i seeded with
/// split_seed(master_seed, i), on up to `threads` workers (0 picks the
/// hardware concurrency). The result does not depend on the thread count.
inline MeanTrajectory run_many(const Scenario& scenario, Policy policy, std::size_t runs, std::uint64_t master_seed,
                               unsigned threads = 1) {
  if (runs == 0) throw ValidationError("run count must be positive");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, runs));

  std::vector<Trajectory> results(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < runs; i = next.fetch_add(1)) {
      try {
        results[i] = run_once(scenario, policy, split_seed(master_seed, i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < runs; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const NoFeasiblePlacement& e) {
      throw NoFeasiblePlacement(std::string(e.what()) + " in run " + std::to_string(i), e.step(), i);
    }
  }
  return aggregate(results);
}

/// Entropy trajectory of the recorded real placements.
inline Trajectory replay_observed(const Scenario& scenario) {
  if (!scenario.observed) throw MissingObservedData("scenario has no observed block");
  Auditorium aud = scenario.initial_auditorium();
  Trajectory traj;
  traj.entropy_by_step.push_back(entropy(aud));
  for (const auto& step : *scenario.observed) {
    for (const auto& c : step.seats) aud.seat(c);
    traj.entropy_by_step.push_back(entropy(aud));
  }
  return traj;
}

/// Grid after every observed placement.
inline Auditorium observed_final_auditorium(const Scenario& scenario) {
  if (!scenario.observed) throw MissingObservedData("scenario has no observed block");
  Auditorium aud = scenario.initial_auditorium();
  for (const auto& step : *scenario.observed)
    for (const auto& c : step.seats) aud.seat(c);
  return aud;
}

}  // namespace seating
