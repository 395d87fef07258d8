// Copyright 2026 The cglmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cglmp/bell_expression.hpp"
#include "cglmp/quantum_model.hpp"

namespace cglmp {

/// Which parameter blocks the search may move. Fixed blocks keep their
/// standard values (linear phases, maximally entangled state).
struct FreeParameters {
  bool alice_phases = true;
  bool bob_phases = true;
  bool state_weights = false;
};

/// Flat parameter layout, in order, for each free block:
///   alice phases  2*d values, phi_1(0..d-1) then phi_2(0..d-1)
///   bob phases    2*d values, same ordering
///   state weights d non-negative reals, normalized internally
struct OptimizationProblem {
  int dimension = 2;
  Family family = Family::Id;
  FreeParameters free;
  /// Objective evaluations across all restarts, split evenly between them.
  std::int64_t budget = 50'000;
  int restarts = 20;
  std::uint64_t seed = 0;

  /// Throws std::domain_error on d < 2, budget < 1, restarts < 1 or no free block.
  void validate() const;
  std::size_t parameter_count() const;
};

struct TracePoint {
  std::int64_t evaluation = 0;
  double incumbent = 0.0;

  bool operator==(const TracePoint&) const = default;
};

struct OptimizationResult {
  double best_value = 0.0;
  MeasurementPhases best_phases;
  std::vector<double> best_state_weights;
  std::vector<double> best_parameters;
  /// Incumbent after every strict improvement, indexed by global evaluation
  /// count (1-based, restarts laid end to end).
  std::vector<TracePoint> trace;
  std::int64_t evaluations = 0;
  int best_restart = 0;
  /// False when nothing beat the very first evaluated point.
  bool improved = false;
};

/// Setup described by a flat parameter vector. Throws std::domain_error on a
/// length mismatch or an all-zero weight block.
QuantumSetup setup_from_parameters(const OptimizationProblem& problem,
                                   std::span<const double> parameters);

/// Bell value of problem.family on the Born-rule statistics of the setup.
double objective(const OptimizationProblem& problem, std::span<const double> parameters);

/// Seeded multi-start coordinate search.
///
/// Phase coordinates enter every amplitude through a single factor e^{i theta},
/// so along one phase the objective is exactly A + B cos(theta) + C sin(theta).
/// Each phase update samples three equally spaced angles, fits that curve and
/// moves to its maximum. Weight coordinates use a compass step that halves
/// after a sweep without improvement. Phases of outcome 0 stay at zero (global
/// phase gauge).
OptimizationResult maximize(const OptimizationProblem& problem);

/// best_value - quantum_value(d) for the Id family; zero for other families.
double excess_over_reference(const OptimizationProblem& problem,
                             const OptimizationResult& result);

/// CSV with header "evaluation_index,incumbent_value", values to 17 digits.
void write_trace_csv(const std::vector<TracePoint>& trace, std::ostream& out);
std::vector<TracePoint> read_trace_csv(std::istream& in);

}  // namespace cglmp
