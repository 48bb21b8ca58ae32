#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riesz/sphere.hpp"
#include "riesz/table.hpp"

namespace riesz {

struct MinimizeOptions {
  // Empty means the default budget max(64, 8N).
  std::optional<std::size_t> restarts;
  std::uint64_t seed = 1;
  double grad_tol = 1e-9;
  std::size_t max_iters = 20000;
  std::optional<double> polish_tol = 1e-13;
  // 0 = hardware concurrency.
  unsigned threads = 0;
  // Iterations before the line search switches to the two-point secant step.
  std::size_t bb_after = 50;
};

struct MinimizeResult {
  Configuration config;
  EnergyValue energy = kInfinity;
  double grad_norm = kInfinity;
  std::size_t iterations = 0;
  std::size_t restart_index = 0;
  bool converged = false;
  // Energy after every accepted step, starting with the start energy.  Only filled when asked.
  std::vector<double> trace;
};

struct PoolSummary {
  std::size_t attempted = 0;
  std::size_t failed = 0;
  // Local-minimum energies that differ by more than 1e-9.
  std::size_t distinct_energies = 0;
  std::vector<double> energies;  // sorted, successful runs only
};

struct MultiStartResult {
  MinimizeResult best;
  PoolSummary pool;
  std::string lane = "search";  // "search", or the analytic lane used for s <= -2
};

std::size_t default_restarts(std::size_t n);

Configuration random_config(std::size_t n, std::uint64_t seed);

// Throws CollisionError for s >= 0 when two points come closer than 1e-9.
MinimizeResult local_minimize(RieszExponent s, const Configuration& start, const MinimizeOptions& opts,
                              bool keep_trace = false);

// Random restarts get indices 0..R-1; named shapes and warm starts follow.
MultiStartResult multi_start(RieszExponent s, std::size_t n, const MinimizeOptions& opts,
                             const std::vector<Configuration>& warm_starts = {});

// Configuration realizing the analytic answer for s <= -2 and its lane label.
std::pair<Configuration, std::string> subcritical_configuration(RieszExponent s, std::size_t n);

EnergyTable scan(RieszExponent s, long n_lo, long n_hi, const MinimizeOptions& opts);

}  // namespace riesz
