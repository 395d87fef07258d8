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

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "cglmp/bell_expression.hpp"

namespace cglmp {

/// One local-variable assignment: A1 -> j, A2 -> k, B1 -> l, B2 -> m.
struct DeterministicStrategy {
  int j = 0;
  int k = 0;
  int l = 0;
  int m = 0;

  auto operator<=>(const DeterministicStrategy&) const = default;
};

/// Throws std::domain_error unless every outcome lies in 0..d-1.
void validate(const DeterministicStrategy& strategy, int d);

/// Table of the point-mass local model concentrated on one strategy.
JointDistribution point_mass_distribution(const DeterministicStrategy& strategy, int d);

/// Mixture of deterministic strategies. Weights must be non-negative and sum
/// to one within 1e-12; the constructor throws std::domain_error otherwise.
class LocalModel {
 public:
  LocalModel(int dimension, std::map<DeterministicStrategy, double> weights);

  static LocalModel uniform(int dimension);

  int dimension() const { return dimension_; }
  const std::map<DeterministicStrategy, double>& weights() const { return weights_; }

  /// P(A_a = j, B_b = l) implied by the mixture.
  JointDistribution distribution() const;

 private:
  int dimension_;
  std::map<DeterministicStrategy, double> weights_;
};

/// Outcome differences of a strategy, reduced to the canonical interval:
/// A1 = B1 + r, B1 = A2 + s + 1, A2 = B2 + t, B2 = A1 + u.
/// Always r + s + t + u + 1 = 0 (mod d).
struct StrategyDifferences {
  int r = 0;
  int s = 0;
  int t = 0;
  int u = 0;

  auto operator<=>(const StrategyDifferences&) const = default;
};

StrategyDifferences differences_of(const DeterministicStrategy& strategy, int d);

/// True iff all four differences lie in the canonical interval and satisfy
/// the mod-d sum constraint.
bool is_admissible(const StrategyDifferences& differences, int d);

/// f(r) + f(s) + f(t) + f(u) for an Id expression. Throws std::domain_error for
/// the I and I3 families; use evaluate() on the point-mass table for those.
double strategy_value(const BellExpression& expression, const DeterministicStrategy& strategy);

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceBound {
  double max_value = 0.0;
  /// All maximizers, in lexicographic (j, k, l, m) order.
  std::vector<DeterministicStrategy> argmax;
};

/// Maximum over all d^4 deterministic strategies. With exact coefficients the
/// sums are taken over integer numerators, so the maximum and the set of
/// maximizers are exact; otherwise strategies within 1e-12 of the maximum
/// count as maximizers. Throws
/// EnumerationLimitExceeded when d^4 exceeds `cap`.
BruteForceBound local_bound_bruteforce(const BellExpression& expression,
                                       std::int64_t cap = kDefaultEnumerationCap);

struct CaseAnalysisBound {
  double max_value = 0.0;
  std::set<double> attainable_values;
  /// Number of admissible (r, s, t, u) tuples visited.
  std::int64_t tuples = 0;
};

/// Maximum of the Id family over all admissible difference tuples. Values are
/// accumulated as integers scaled by (d - 1) so the result is exact.
CaseAnalysisBound local_bound_cases(int d);

/// Sum over strategies of weight * value.
double model_value(const BellExpression& expression, const LocalModel& model);

}  // namespace cglmp
