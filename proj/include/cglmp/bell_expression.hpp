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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace cglmp {

/// Which member of the expression family to construct.
///
///   I   four "+" correlator relations, one per setting pair.
///   I3  the I relations minus the four once-shifted relations.
///   Id  the full weighted family for d outcomes (coincides with I3 at d = 3).
enum class Family { I, I3, Id };

std::string_view family_name(Family family);

/// Accepts "I", "I3" and "Id" (case-sensitive). Throws std::invalid_argument.
Family parse_family(std::string_view name);

/// Absolute tolerance for normalization and non-negativity checks.
inline constexpr double kDistributionTolerance = 1e-9;

/// Smallest member of the canonical interval of outcome differences, -floor(d/2).
constexpr int min_difference(int d) { return -(d / 2); }

/// Largest member of the canonical interval, floor((d-1)/2).
constexpr int max_difference(int d) { return (d - 1) / 2; }

/// Non-negative residue of x modulo d.
int mod(int x, int d);

/// The representative of x (mod d) lying in [min_difference(d), max_difference(d)].
int canonical_difference(int x, int d);

/// Dense table over (a, b, j, l) with a, b in {0, 1} and j, l in 0..d-1,
/// stored row-major. Setting index 0 stands for A1 / B1, index 1 for A2 / B2.
class SettingTable {
 public:
  explicit SettingTable(int dimension);
  SettingTable(int dimension, std::vector<double> values);

  int dimension() const { return dimension_; }

  double operator()(int a, int b, int j, int l) const { return values_[index(a, b, j, l)]; }
  double& operator()(int a, int b, int j, int l) { return values_[index(a, b, j, l)]; }

  // Views into temporaries would dangle, so only lvalues hand out spans.
  std::span<const double> values() const& { return values_; }
  std::span<const double> values() && = delete;

 private:
  std::size_t index(int a, int b, int j, int l) const {
    const auto d = static_cast<std::size_t>(dimension_);
    return ((static_cast<std::size_t>(a) * 2 + static_cast<std::size_t>(b)) * d +
            static_cast<std::size_t>(j)) * d + static_cast<std::size_t>(l);
  }

  int dimension_;
  std::vector<double> values_;
};

/// A correlator relation A_a = B_b + shift (mod d) with signed weight
/// numerator / denominator. Relations written as B_b = A_a + c are stored
/// with shift = -c.
struct CorrelatorTerm {
  int a;
  int b;
  int shift;
  std::int64_t numerator;
  std::int64_t denominator;

  double weight() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Coefficients as integer numerators over one common denominator, laid out
/// like SettingTable. Every built-in family has such a form.
struct ExactCoefficients {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> numerators;
};

/// Linear functional over joint outcome probabilities.
class BellExpression {
 public:
  BellExpression(Family family, SettingTable coefficients);
  /// Coefficients numerators[i] / denominator, kept alongside their doubles.
  BellExpression(Family family, int dimension, ExactCoefficients exact);

  Family family() const { return family_; }
  int dimension() const { return coefficients_.dimension(); }
  const SettingTable& coefficients() const& { return coefficients_; }
  SettingTable coefficients() && { return std::move(coefficients_); }
  double coefficient(int a, int b, int j, int l) const { return coefficients_(a, b, j, l); }

  /// Present for expressions made by build_expression.
  const std::optional<ExactCoefficients>& exact() const { return exact_; }

 private:
  Family family_;
  SettingTable coefficients_;
  std::optional<ExactCoefficients> exact_;
};

/// Table of P(A_a = j, B_b = l). Construction validates non-negativity and
/// per-setting-pair normalization to kDistributionTolerance and throws
/// std::domain_error otherwise.
class JointDistribution {
 public:
  explicit JointDistribution(SettingTable table);

  static JointDistribution uniform(int dimension);

  /// p * first + (1 - p) * second.
  static JointDistribution mixture(double p, const JointDistribution& first,
                                   const JointDistribution& second);

  int dimension() const { return table_.dimension(); }
  double operator()(int a, int b, int j, int l) const { return table_(a, b, j, l); }
  const SettingTable& table() const& { return table_; }
  SettingTable table() && { return std::move(table_); }

 private:
  SettingTable table_;
};

/// Weight given to a setting pair whose outcome difference is x:
/// 1 - 2x/(d-1) for x >= 0, and -2x/(d-1) - (d+1)/(d-1) for x < 0.
/// x must lie in the canonical interval, otherwise std::domain_error.
double weight_f(int x, int d);

/// (1 - 2k/(d-1)), the weight of the k-th bracket of the Id family.
double bracket_weight(int k, int d);

/// The correlator relations making up an expression, in the order they are
/// written: for Id, bracket k contributes four "+" relations then four "-".
std::vector<CorrelatorTerm> correlator_terms(Family family, int d);

/// Expands every correlator relation into its d joint-probability coefficients.
BellExpression build_expression(Family family, int d);

/// Contraction of coefficients against the probability table.
double evaluate(const BellExpression& expression, const JointDistribution& distribution);

/// P(A_a = B_b + k) = sum_j P(A_a = j, B_b = j - k mod d). k is taken mod d.
double correlator(const JointDistribution& distribution, int a, int b, int k);

/// Same value as evaluate(build_expression(family, d), distribution), computed
/// as a weighted sum of correlators instead of a tensor contraction.
double evaluate_correlator_form(Family family, const JointDistribution& distribution);

}  // namespace cglmp
