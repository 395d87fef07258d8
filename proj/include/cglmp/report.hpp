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

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cglmp/bell_expression.hpp"
#include "cglmp/local_models.hpp"
#include "cglmp/optimizer.hpp"

namespace cglmp {

inline constexpr int kReportSchemaVersion = 1;

/// Two independent computations of the same quantity disagreed.
class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive range of dimensions, written "3" or "2..16".
struct DimensionRange {
  int first = 2;
  int last = 2;
};

/// Throws std::invalid_argument on malformed text, d < 2 or first > last.
DimensionRange parse_dimension_range(const std::string& text);

/// Local bound of a family: brute force where d^4 fits the enumeration cap,
/// otherwise the case analysis (Id only). For Id both run when possible and
/// must agree, else CrossCheckFailure.
double local_bound(Family family, int d);

/// Value of the family on the standard quantum statistics. For Id the tensor
/// contraction is checked against the closed-form sum to 1e-12.
double family_quantum_value(Family family, int d);

struct BoundReport {
  Family family = Family::Id;
  int dimension = 2;
  std::optional<double> bruteforce_max;
  std::vector<DeterministicStrategy> maximizers;
  std::optional<double> cases_max;
  std::vector<double> spectrum;
};

BoundReport bound_report(Family family, int d);

struct CorrelatorRow {
  int c = 0;
  double q = 0.0;
};

struct QuantumReport {
  int dimension = 2;
  double quantum_value = 0.0;
  double quantum_value_I = 0.0;
  std::vector<CorrelatorRow> correlators;
};

QuantumReport quantum_report(int d);

struct ThresholdReport {
  Family family = Family::Id;
  int dimension = 2;
  double local_bound = 0.0;
  double quantum_value = 0.0;
  double noise_threshold = 0.0;
  std::optional<double> noise_p;
  std::optional<double> noisy_value;
  std::optional<bool> violated;
};

/// With noise_p, the mixed-state value and a strict "> local bound" verdict.
ThresholdReport threshold_report(Family family, int d, std::optional<double> noise_p);

struct SweepRow {
  int d = 2;
  double local_bound = 0.0;
  double quantum_value = 0.0;
  double noise_threshold = 0.0;

  bool operator==(const SweepRow&) const = default;
};

std::vector<SweepRow> sweep(Family family, DimensionRange range);

struct ReproductionRow {
  std::string name;
  double quoted = 0.0;
  double computed = 0.0;
  double relative_tolerance = 0.0;
  bool pass = false;
};

/// Published constants beside freshly computed values.
std::vector<ReproductionRow> reproduce();

struct OptimizeReport {
  OptimizationProblem problem;
  OptimizationResult result;
  double reference_value = 0.0;
  std::string trace_path;
};

// Machine formats. Every JSON document carries "schema_version".
nlohmann::json to_json(const SettingTable& table);
SettingTable setting_table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BellExpression& expression);
BellExpression expression_from_json(const nlohmann::json& j);
nlohmann::json to_json(const JointDistribution& distribution);
JointDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const QuantumReport& report);
nlohmann::json to_json(const ThresholdReport& report);
ThresholdReport threshold_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<ReproductionRow>& rows);
std::vector<ReproductionRow> reproduction_from_json(const nlohmann::json& j);
nlohmann::json to_json(const OptimizeReport& report);

/// Header "d,local_bound,quantum_value,noise_threshold", 17 significant digits.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> read_sweep_csv(std::istream& in);
void write_reproduction_csv(const std::vector<ReproductionRow>& rows, std::ostream& out);

// Human tables, 6 significant digits.
std::string format_table(const BoundReport& report);
std::string format_table(const QuantumReport& report);
std::string format_table(const ThresholdReport& report);
std::string format_table(const std::vector<SweepRow>& rows);
std::string format_table(const std::vector<ReproductionRow>& rows);
std::string format_table(const OptimizeReport& report);

}  // namespace cglmp
