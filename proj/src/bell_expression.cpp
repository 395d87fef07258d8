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

#include "cglmp/bell_expression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cglmp {

namespace {

void require_dimension(int d) {
  if (d < 2) {
    throw std::domain_error("dimension must be at least 2, got " + std::to_string(d));
  }
}

void require_setting(int s) {
  if (s != 0 && s != 1) {
    throw std::domain_error("setting index must be 0 or 1, got " + std::to_string(s));
  }
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::I:
      return "I";
    case Family::I3:
      return "I3";
    case Family::Id:
      return "Id";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "I") return Family::I;
  if (name == "I3") return Family::I3;
  if (name == "Id") return Family::Id;
  throw std::invalid_argument("unknown expression family '" + std::string(name) +
                              "' (expected I, I3 or Id)");
}

int mod(int x, int d) {
  const int r = x % d;
  return r < 0 ? r + d : r;
}

int canonical_difference(int x, int d) {
  require_dimension(d);
  const int r = mod(x, d);
  return r > max_difference(d) ? r - d : r;
}

SettingTable::SettingTable(int dimension) : SettingTable(dimension, {}) {}

SettingTable::SettingTable(int dimension, std::vector<double> values)
    : dimension_(dimension), values_(std::move(values)) {
  require_dimension(dimension);
  const auto expected = static_cast<std::size_t>(4 * dimension * dimension);
  if (values_.empty()) values_.assign(expected, 0.0);
  if (values_.size() != expected) {
    throw std::domain_error("setting table for d=" + std::to_string(dimension) + " needs " +
                            std::to_string(expected) + " entries, got " +
                            std::to_string(values_.size()));
  }
}

BellExpression::BellExpression(Family family, SettingTable coefficients)
    : family_(family), coefficients_(std::move(coefficients)) {}

BellExpression::BellExpression(Family family, int dimension, ExactCoefficients exact)
    : family_(family), coefficients_(dimension) {
  if (exact.denominator <= 0) throw std::domain_error("denominator must be positive");
  std::vector<double> values(exact.numerators.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<double>(exact.numerators[i]) / static_cast<double>(exact.denominator);
  }
  coefficients_ = SettingTable(dimension, std::move(values));
  exact_ = std::move(exact);
}

JointDistribution::JointDistribution(SettingTable table) : table_(std::move(table)) {
  const int d = table_.dimension();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double total = 0.0;
      for (int j = 0; j < d; ++j) {
        for (int l = 0; l < d; ++l) {
          const double p = table_(a, b, j, l);
          if (!(p >= -kDistributionTolerance && p <= 1.0 + kDistributionTolerance)) {
            throw std::domain_error("probability out of [0,1] at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(j) + "," +
                                    std::to_string(l) + "): " + std::to_string(p));
          }
          total += p;
        }
      }
      if (std::abs(total - 1.0) > kDistributionTolerance) {
        throw std::domain_error("setting pair (" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not normalized: sum = " + std::to_string(total));
      }
    }
  }
}

JointDistribution JointDistribution::uniform(int dimension) {
  require_dimension(dimension);
  const double p = 1.0 / (static_cast<double>(dimension) * dimension);
  return JointDistribution(
      SettingTable(dimension, std::vector<double>(4 * dimension * dimension, p)));
}

JointDistribution JointDistribution::mixture(double p, const JointDistribution& first,
                                             const JointDistribution& second) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("mixing weight must lie in [0,1], got " + std::to_string(p));
  }
  if (first.dimension() != second.dimension()) {
    throw std::domain_error("cannot mix distributions of different dimension");
  }
  const auto x = first.table().values();
  const auto y = second.table().values();
  std::vector<double> mixed(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mixed[i] = p * x[i] + (1.0 - p) * y[i];
  return JointDistribution(SettingTable(first.dimension(), std::move(mixed)));
}

double weight_f(int x, int d) {
  require_dimension(d);
  if (x < min_difference(d) || x > max_difference(d)) {
    throw std::domain_error("difference " + std::to_string(x) + " outside [" +
                            std::to_string(min_difference(d)) + ", " +
                            std::to_string(max_difference(d)) + "] for d=" + std::to_string(d));
  }
  // Numerator first so that integral weights come out exact.
  const int numerator = x >= 0 ? (d - 1) - 2 * x : -2 * x - (d + 1);
  return static_cast<double>(numerator) / (d - 1);
}

double bracket_weight(int k, int d) {
  require_dimension(d);
  return static_cast<double>((d - 1) - 2 * k) / (d - 1);
}

std::vector<CorrelatorTerm> correlator_terms(Family family, int d) {
  require_dimension(d);
  std::vector<CorrelatorTerm> terms;
  // Relations that a local assignment can satisfy at most three of at a time:
  // A1 = B1, B1 = A2 + 1, A2 = B2, B2 = A1.
  const auto plus_relations = [&](int k, std::int64_t w, std::int64_t den) {
    terms.push_back({0, 0, k, w, den});
    terms.push_back({1, 0, -(k + 1), w, den});
    terms.push_back({1, 1, k, w, den});
    terms.push_back({0, 1, -k, w, den});
  };
  const auto minus_relations = [&](int k, std::int64_t w, std::int64_t den) {
    terms.push_back({0, 0, -(k + 1), -w, den});
    terms.push_back({1, 0, k, -w, den});
    terms.push_back({1, 1, -(k + 1), -w, den});
    terms.push_back({0, 1, k + 1, -w, den});
  };
  switch (family) {
    case Family::I:
      plus_relations(0, 1, 1);
      break;
    case Family::I3:
      plus_relations(0, 1, 1);
      minus_relations(0, 1, 1);
      break;
    case Family::Id:
      // Bracket k carries weight (d - 1 - 2k) / (d - 1).
      for (int k = 0; k < d / 2; ++k) {
        plus_relations(k, (d - 1) - 2 * k, d - 1);
        minus_relations(k, (d - 1) - 2 * k, d - 1);
      }
      break;
  }
  return terms;
}

BellExpression build_expression(Family family, int d) {
  const auto terms = correlator_terms(family, d);
  ExactCoefficients exact;
  exact.denominator = family == Family::Id ? d - 1 : 1;
  exact.numerators.assign(static_cast<std::size_t>(4 * d * d), 0);
  const auto ud = static_cast<std::size_t>(d);
  for (const auto& term : terms) {
    for (int j = 0; j < d; ++j) {
      const std::size_t cell =
          ((static_cast<std::size_t>(term.a) * 2 + static_cast<std::size_t>(term.b)) * ud +
           static_cast<std::size_t>(j)) * ud + static_cast<std::size_t>(mod(j - term.shift, d));
      exact.numerators[cell] += term.numerator;
    }
  }
  return BellExpression(family, d, std::move(exact));
}

double evaluate(const BellExpression& expression, const JointDistribution& distribution) {
  if (expression.dimension() != distribution.dimension()) {
    throw std::domain_error("expression has d=" + std::to_string(expression.dimension()) +
                            " but distribution has d=" +
                            std::to_string(distribution.dimension()));
  }
  const auto c = expression.coefficients().values();
  const auto p = distribution.table().values();
  double value = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) value += c[i] * p[i];
  return value;
}

double correlator(const JointDistribution& distribution, int a, int b, int k) {
  require_setting(a);
  require_setting(b);
  const int d = distribution.dimension();
  double total = 0.0;
  for (int j = 0; j < d; ++j) total += distribution(a, b, j, mod(j - k, d));
  return total;
}

double evaluate_correlator_form(Family family, const JointDistribution& distribution) {
  double value = 0.0;
  for (const auto& term : correlator_terms(family, distribution.dimension())) {
    value += term.weight() * correlator(distribution, term.a, term.b, term.shift);
  }
  return value;
}

}  // namespace cglmp
