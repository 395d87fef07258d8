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

#include "cglmp/local_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace cglmp {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kWeightTolerance = 1e-12;

// Value of one strategy read straight from the coefficient tensor.
double tensor_value(const SettingTable& c, int j, int k, int l, int m) {
  return c(0, 0, j, l) + c(0, 1, j, m) + c(1, 0, k, l) + c(1, 1, k, m);
}

// (d - 1) * f(x); integral for every admissible x.
int scaled_weight(int x, int d) { return x >= 0 ? (d - 1) - 2 * x : -2 * x - (d + 1); }

}  // namespace

void validate(const DeterministicStrategy& s, int d) {
  const auto in_range = [d](int x) { return x >= 0 && x < d; };
  if (d < 2 || !in_range(s.j) || !in_range(s.k) || !in_range(s.l) || !in_range(s.m)) {
    throw std::domain_error("strategy (" + std::to_string(s.j) + "," + std::to_string(s.k) +
                            "," + std::to_string(s.l) + "," + std::to_string(s.m) +
                            ") is not valid for d=" + std::to_string(d));
  }
}

JointDistribution point_mass_distribution(const DeterministicStrategy& s, int d) {
  validate(s, d);
  SettingTable table(d);
  table(0, 0, s.j, s.l) = 1.0;
  table(0, 1, s.j, s.m) = 1.0;
  table(1, 0, s.k, s.l) = 1.0;
  table(1, 1, s.k, s.m) = 1.0;
  return JointDistribution(std::move(table));
}

LocalModel::LocalModel(int dimension, std::map<DeterministicStrategy, double> weights)
    : dimension_(dimension), weights_(std::move(weights)) {
  double total = 0.0;
  for (const auto& [strategy, w] : weights_) {
    validate(strategy, dimension_);
    if (!(w >= 0.0)) throw std::domain_error("local model weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw std::domain_error("local model weights sum to " + std::to_string(total) +
                            ", expected 1");
  }
}

LocalModel LocalModel::uniform(int dimension) {
  if (dimension < 2) throw std::domain_error("dimension must be at least 2");
  const double w = 1.0 / std::pow(static_cast<double>(dimension), 4);
  std::map<DeterministicStrategy, double> weights;
  for (int j = 0; j < dimension; ++j)
    for (int k = 0; k < dimension; ++k)
      for (int l = 0; l < dimension; ++l)
        for (int m = 0; m < dimension; ++m) weights.emplace(DeterministicStrategy{j, k, l, m}, w);
  return LocalModel(dimension, std::move(weights));
}

JointDistribution LocalModel::distribution() const {
  SettingTable table(dimension_);
  for (const auto& [s, w] : weights_) {
    table(0, 0, s.j, s.l) += w;
    table(0, 1, s.j, s.m) += w;
    table(1, 0, s.k, s.l) += w;
    table(1, 1, s.k, s.m) += w;
  }
  return JointDistribution(std::move(table));
}

StrategyDifferences differences_of(const DeterministicStrategy& s, int d) {
  validate(s, d);
  return {canonical_difference(s.j - s.l, d), canonical_difference(s.l - s.k - 1, d),
          canonical_difference(s.k - s.m, d), canonical_difference(s.m - s.j, d)};
}

bool is_admissible(const StrategyDifferences& x, int d) {
  const auto in_interval = [d](int v) { return v >= min_difference(d) && v <= max_difference(d); };
  return in_interval(x.r) && in_interval(x.s) && in_interval(x.t) && in_interval(x.u) &&
         mod(x.r + x.s + x.t + x.u + 1, d) == 0;
}

double strategy_value(const BellExpression& expression, const DeterministicStrategy& strategy) {
  if (expression.family() != Family::Id) {
    throw std::domain_error("strategy_value is defined for the Id family only, got " +
                            std::string(family_name(expression.family())));
  }
  const int d = expression.dimension();
  const auto x = differences_of(strategy, d);
  return weight_f(x.r, d) + weight_f(x.s, d) + weight_f(x.t, d) + weight_f(x.u, d);
}

BruteForceBound local_bound_bruteforce(const BellExpression& expression, std::int64_t cap) {
  const int d = expression.dimension();
  const std::int64_t count = static_cast<std::int64_t>(d) * d * d * d;
  if (count > cap) {
    throw EnumerationLimitExceeded("d^4 = " + std::to_string(count) +
                                   " strategies exceeds the enumeration cap of " +
                                   std::to_string(cap) + "; use local_bound_cases instead");
  }
  if (const auto& exact = expression.exact()) {
    const auto& n = exact->numerators;
    const auto ud = static_cast<std::size_t>(d);
    const auto at = [&](int a, int b, int x, int y) {
      return n[((static_cast<std::size_t>(a) * 2 + static_cast<std::size_t>(b)) * ud +
                static_cast<std::size_t>(x)) * ud + static_cast<std::size_t>(y)];
    };
    const auto scaled = [&](int j, int k, int l, int m) {
      return at(0, 0, j, l) + at(0, 1, j, m) + at(1, 0, k, l) + at(1, 1, k, m);
    };
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m) best = std::max(best, scaled(j, k, l, m));
    BruteForceBound result{static_cast<double>(best) / static_cast<double>(exact->denominator), {}};
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m)
            if (scaled(j, k, l, m) == best) result.argmax.push_back({j, k, l, m});
    return result;
  }

  const auto& c = expression.coefficients();
  double best = -INFINITY;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m) best = std::max(best, tensor_value(c, j, k, l, m));

  BruteForceBound result{best, {}};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m)
          if (tensor_value(c, j, k, l, m) >= best - kTieTolerance)
            result.argmax.push_back({j, k, l, m});
  return result;
}

CaseAnalysisBound local_bound_cases(int d) {
  if (d < 2) throw std::domain_error("dimension must be at least 2");
  const int lo = min_difference(d);
  const int hi = max_difference(d);

  // r, s, t range freely over the interval; u is then fixed modulo d and has
  // exactly one canonical representative.
  std::set<int> scaled_values;
  std::int64_t tuples = 0;
  for (int r = lo; r <= hi; ++r) {
    for (int s = lo; s <= hi; ++s) {
      for (int t = lo; t <= hi; ++t) {
        const int u = canonical_difference(-(r + s + t + 1), d);
        scaled_values.insert(scaled_weight(r, d) + scaled_weight(s, d) + scaled_weight(t, d) +
                             scaled_weight(u, d));
        ++tuples;
      }
    }
  }

  CaseAnalysisBound result;
  result.tuples = tuples;
  for (int v : scaled_values) result.attainable_values.insert(static_cast<double>(v) / (d - 1));
  result.max_value = static_cast<double>(*scaled_values.rbegin()) / (d - 1);
  return result;
}

double model_value(const BellExpression& expression, const LocalModel& model) {
  if (expression.dimension() != model.dimension()) {
    throw std::domain_error("expression and local model dimensions differ");
  }
  const auto& c = expression.coefficients();
  double value = 0.0;
  for (const auto& [s, w] : model.weights()) value += w * tensor_value(c, s.j, s.k, s.l, s.m);
  return value;
}

}  // namespace cglmp
