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

#include "cglmp/optimizer.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cglmp {

namespace {

using std::numbers::pi;

constexpr double kConvergedGain = 1e-14;
constexpr double kInitialWeightStep = 0.25;
constexpr double kMinWeightStep = 1e-10;

struct Layout {
  int d;
  std::size_t alice = 0;
  std::size_t bob = 0;
  std::size_t weights = 0;
  std::size_t size = 0;
  FreeParameters free;

  explicit Layout(const OptimizationProblem& p) : d(p.dimension), free(p.free) {
    const auto block = static_cast<std::size_t>(2 * d);
    if (free.alice_phases) { alice = size; size += block; }
    if (free.bob_phases) { bob = size; size += block; }
    if (free.state_weights) { weights = size; size += static_cast<std::size_t>(d); }
  }

  std::vector<std::size_t> phase_coordinates() const {
    std::vector<std::size_t> coords;
    const auto add = [&](std::size_t offset) {
      for (int s = 0; s < 2; ++s)
        for (int j = 1; j < d; ++j) coords.push_back(offset + static_cast<std::size_t>(s * d + j));
    };
    if (free.alice_phases) add(alice);
    if (free.bob_phases) add(bob);
    return coords;
  }

  std::vector<std::size_t> weight_coordinates() const {
    std::vector<std::size_t> coords;
    if (free.state_weights)
      for (int j = 0; j < d; ++j) coords.push_back(weights + static_cast<std::size_t>(j));
    return coords;
  }
};

// Evaluation counter for one restart. Stops handing out evaluations once the
// allotment is spent.
class Budgeted {
 public:
  Budgeted(const OptimizationProblem& problem, std::int64_t allotment)
      : problem_(problem), remaining_(allotment) {}

  bool exhausted() const { return remaining_ <= 0; }

  double operator()(std::span<const double> x) {
    --remaining_;
    const double v = objective(problem_, x);
    history_.push_back(v);
    return v;
  }

  const std::vector<double>& history() const { return history_; }

 private:
  const OptimizationProblem& problem_;
  std::int64_t remaining_;
  std::vector<double> history_;
};

struct RestartOutcome {
  std::vector<double> best_x;
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> history;
};

double wrap_angle(double theta) { return std::remainder(theta, 2.0 * pi); }

RestartOutcome run_restart(const OptimizationProblem& problem, const Layout& layout,
                           std::int64_t allotment, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(problem.seed),
                    static_cast<std::uint32_t>(problem.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  std::uniform_real_distribution<double> weight(0.1, 1.0);

  std::vector<double> x(layout.size, 0.0);
  const auto phases = layout.phase_coordinates();
  const auto weights = layout.weight_coordinates();
  for (auto i : phases) x[i] = angle(rng);
  for (auto i : weights) x[i] = weight(rng);

  Budgeted f(problem, allotment);
  RestartOutcome out;
  if (f.exhausted()) return out;
  double current = f(x);
  double step = kInitialWeightStep;

  while (!f.exhausted()) {
    const double sweep_start = current;

    for (auto i : phases) {
      if (f.exhausted()) break;
      const double theta = x[i];
      x[i] = wrap_angle(theta + 2.0 * pi / 3.0);
      const double f1 = f(x);
      if (f.exhausted()) { x[i] = theta; break; }
      x[i] = wrap_angle(theta + 4.0 * pi / 3.0);
      const double f2 = f(x);
      // f(theta + delta) = A + B cos(delta) + C sin(delta)
      const double b = (2.0 * current - f1 - f2) / 3.0;
      const double c = (f1 - f2) / std::sqrt(3.0);
      double best = current;
      double best_theta = theta;
      if (f1 > best) { best = f1; best_theta = wrap_angle(theta + 2.0 * pi / 3.0); }
      if (f2 > best) { best = f2; best_theta = wrap_angle(theta + 4.0 * pi / 3.0); }
      if (!f.exhausted() && std::hypot(b, c) > 0.0) {
        x[i] = wrap_angle(theta + std::atan2(c, b));
        const double fit = f(x);
        if (fit > best) { best = fit; best_theta = x[i]; }
      }
      x[i] = best_theta;
      current = best;
    }

    bool weight_moved = false;
    for (auto i : weights) {
      for (double direction : {+1.0, -1.0}) {
        if (f.exhausted()) break;
        const double old = x[i];
        x[i] = std::max(0.0, old + direction * step);
        if (x[i] == old) continue;
        double trial = -std::numeric_limits<double>::infinity();
        try {
          trial = f(x);
        } catch (const std::domain_error&) {
          // all-zero weight block
        }
        if (trial > current) {
          current = trial;
          weight_moved = true;
          break;
        }
        x[i] = old;
      }
    }
    if (!weights.empty() && !weight_moved) step *= 0.5;

    const bool phases_settled = phases.empty() || current - sweep_start < kConvergedGain;
    const bool weights_settled = weights.empty() || step < kMinWeightStep;
    if (phases_settled && weights_settled) break;
  }

  out.best_x = x;
  out.best_value = current;
  out.history = f.history();
  return out;
}

}  // namespace

void OptimizationProblem::validate() const {
  if (dimension < 2) throw std::domain_error("dimension must be at least 2");
  if (budget < 1) throw std::domain_error("budget must be at least 1");
  if (restarts < 1) throw std::domain_error("restarts must be at least 1");
  if (!free.alice_phases && !free.bob_phases && !free.state_weights) {
    throw std::domain_error("at least one parameter block must be free");
  }
}

std::size_t OptimizationProblem::parameter_count() const { return Layout(*this).size; }

QuantumSetup setup_from_parameters(const OptimizationProblem& problem,
                                   std::span<const double> parameters) {
  problem.validate();
  const Layout layout(problem);
  if (parameters.size() != layout.size) {
    throw std::domain_error("expected " + std::to_string(layout.size) + " parameters, got " +
                            std::to_string(parameters.size()));
  }
  const int d = problem.dimension;
  QuantumSetup setup = QuantumSetup::standard(d);

  const auto block = [&](std::size_t offset) {
    std::array<std::vector<double>, 2> v;
    for (int s = 0; s < 2; ++s) {
      const auto begin = parameters.begin() + static_cast<std::ptrdiff_t>(offset + s * d);
      v[s].assign(begin, begin + d);
    }
    return v;
  };
  if (problem.free.alice_phases) setup.phases.alice_phases = block(layout.alice);
  if (problem.free.bob_phases) setup.phases.bob_phases = block(layout.bob);

  if (problem.free.state_weights) {
    double norm = 0.0;
    for (int j = 0; j < d; ++j) norm += parameters[layout.weights + j] * parameters[layout.weights + j];
    if (!(norm > 0.0)) throw std::domain_error("state weight block is all zero");
    norm = std::sqrt(norm);
    for (int j = 0; j < d; ++j) {
      setup.state_weights[j] = std::abs(parameters[layout.weights + j]) / norm;
    }
  }
  return setup;
}

double objective(const OptimizationProblem& problem, std::span<const double> parameters) {
  const auto setup = setup_from_parameters(problem, parameters);
  return evaluate(build_expression(problem.family, problem.dimension),
                  born_rule_distribution(setup));
}

OptimizationResult maximize(const OptimizationProblem& problem) {
  problem.validate();
  const Layout layout(problem);

  OptimizationResult result;
  result.best_value = -std::numeric_limits<double>::infinity();
  double first_value = std::numeric_limits<double>::quiet_NaN();
  std::int64_t offset = 0;

  for (int r = 0; r < problem.restarts; ++r) {
    std::int64_t allotment = problem.budget / problem.restarts;
    if (r < problem.budget % problem.restarts) ++allotment;
    const auto outcome = run_restart(problem, layout, allotment, r);

    for (std::size_t i = 0; i < outcome.history.size(); ++i) {
      const double v = outcome.history[i];
      if (std::isnan(first_value)) first_value = v;
      if (result.trace.empty() || v > result.trace.back().incumbent) {
        result.trace.push_back({offset + static_cast<std::int64_t>(i) + 1, v});
      }
    }
    offset += static_cast<std::int64_t>(outcome.history.size());

    if (!outcome.best_x.empty() && outcome.best_value > result.best_value) {
      result.best_value = outcome.best_value;
      result.best_parameters = outcome.best_x;
      result.best_restart = r;
    }
  }

  result.evaluations = offset;
  result.improved = result.best_value > first_value;
  const auto setup = setup_from_parameters(problem, result.best_parameters);
  result.best_phases = setup.phases;
  result.best_state_weights.reserve(setup.state_weights.size());
  for (const auto& w : setup.state_weights) result.best_state_weights.push_back(w.real());
  return result;
}

double excess_over_reference(const OptimizationProblem& problem,
                             const OptimizationResult& result) {
  if (problem.family != Family::Id) return 0.0;
  return result.best_value - quantum_value(problem.dimension);
}

void write_trace_csv(const std::vector<TracePoint>& trace, std::ostream& out) {
  out << "evaluation_index,incumbent_value\n";
  out << std::setprecision(17);
  for (const auto& p : trace) out << p.evaluation << ',' << p.incumbent << '\n';
}

std::vector<TracePoint> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "evaluation_index,incumbent_value") {
    throw std::runtime_error("trace CSV is missing its header row");
  }
  std::vector<TracePoint> trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed trace row: " + line);
    trace.push_back({std::stoll(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  return trace;
}

}  // namespace cglmp
