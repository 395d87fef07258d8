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

#include "cglmp/report.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "cglmp/quantum_model.hpp"

namespace cglmp {

namespace {

constexpr double kQuotedRelativeTolerance = 5e-5;
constexpr double kAnalyticTolerance = 1e-12;
// Above this the full closed-form table is not worth building for a cross-check.
constexpr int kTableCrossCheckMaxDimension = 256;

bool bruteforce_feasible(int d) {
  return static_cast<std::int64_t>(d) * d * d * d <= kDefaultEnumerationCap;
}

std::string sig6(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

nlohmann::json versioned(const char* kind) {
  return {{"schema_version", kReportSchemaVersion}, {"kind", kind}};
}

void require_kind(const nlohmann::json& j, const char* kind) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion || j.at("kind") != kind) {
    throw std::runtime_error(std::string("expected a version ") +
                             std::to_string(kReportSchemaVersion) + " '" + kind + "' document");
  }
}

}  // namespace

DimensionRange parse_dimension_range(const std::string& text) {
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed dimension '" + text + "'");
    }
    if (used != s.size()) throw std::invalid_argument("malformed dimension '" + text + "'");
    return v;
  };
  DimensionRange range;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    range.first = range.last = to_int(text);
  } else {
    range.first = to_int(text.substr(0, dots));
    range.last = to_int(text.substr(dots + 2));
  }
  if (range.first < 2) throw std::invalid_argument("dimension must be at least 2");
  if (range.first > range.last) throw std::invalid_argument("empty dimension range '" + text + "'");
  return range;
}

double local_bound(Family family, int d) {
  std::optional<double> brute;
  if (bruteforce_feasible(d)) brute = local_bound_bruteforce(build_expression(family, d)).max_value;
  if (family != Family::Id) {
    if (!brute) {
      throw EnumerationLimitExceeded("no case analysis for family " +
                                     std::string(family_name(family)) + " at d=" +
                                     std::to_string(d));
    }
    return *brute;
  }
  const double cases = local_bound_cases(d).max_value;
  if (brute && std::abs(*brute - cases) > kAnalyticTolerance) {
    throw CrossCheckFailure("local bound mismatch at d=" + std::to_string(d) + ": brute force " +
                            std::to_string(*brute) + " vs case analysis " +
                            std::to_string(cases));
  }
  return cases;
}

double family_quantum_value(Family family, int d) {
  std::optional<double> closed;
  if (family == Family::Id) closed = quantum_value(d);
  if (family == Family::I) closed = quantum_value_I(d);
  if (closed && d > kTableCrossCheckMaxDimension) return *closed;

  const double contracted = evaluate(build_expression(family, d), closed_form_distribution(d));
  if (closed && std::abs(*closed - contracted) > kAnalyticTolerance) {
    throw CrossCheckFailure("quantum value mismatch at d=" + std::to_string(d) +
                            ": closed form " + std::to_string(*closed) +
                            " vs tensor contraction " + std::to_string(contracted));
  }
  return closed.value_or(contracted);
}

BoundReport bound_report(Family family, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  BoundReport report;
  report.family = family;
  report.dimension = d;
  if (bruteforce_feasible(d)) {
    auto brute = local_bound_bruteforce(build_expression(family, d));
    report.bruteforce_max = brute.max_value;
    report.maximizers = std::move(brute.argmax);
  }
  if (family == Family::Id) {
    const auto cases = local_bound_cases(d);
    report.cases_max = cases.max_value;
    report.spectrum.assign(cases.attainable_values.begin(), cases.attainable_values.end());
  } else if (report.bruteforce_max) {
    const auto expression = build_expression(family, d);
    std::set<double> values;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m)
            values.insert(evaluate(expression, point_mass_distribution({j, k, l, m}, d)));
    report.spectrum.assign(values.begin(), values.end());
  } else {
    throw EnumerationLimitExceeded("d=" + std::to_string(d) + " is too large to enumerate");
  }
  if (report.bruteforce_max && report.cases_max &&
      std::abs(*report.bruteforce_max - *report.cases_max) > kAnalyticTolerance) {
    throw CrossCheckFailure("local bound mismatch at d=" + std::to_string(d));
  }
  return report;
}

QuantumReport quantum_report(int d) {
  QuantumReport report;
  report.dimension = d;
  report.quantum_value = family_quantum_value(Family::Id, d);
  report.quantum_value_I = family_quantum_value(Family::I, d);
  for (int c = min_difference(d); c <= max_difference(d); ++c) {
    report.correlators.push_back({c, correlator_q(c, d)});
  }
  return report;
}

ThresholdReport threshold_report(Family family, int d, std::optional<double> noise_p) {
  ThresholdReport report;
  report.family = family;
  report.dimension = d;
  report.local_bound = local_bound(family, d);
  report.quantum_value = family_quantum_value(family, d);

  // Value of the maximally mixed state's uniform statistics; zero for I3 and Id.
  const double uniform = evaluate(build_expression(family, d), JointDistribution::uniform(d));
  report.noise_threshold = family == Family::Id
                               ? noise_threshold(d)
                               : (report.local_bound - uniform) / (report.quantum_value - uniform);
  if (noise_p) {
    const NoiseModel noise{*noise_p};
    noise.validate();
    report.noise_p = noise.p;
    report.noisy_value = family == Family::Id
                             ? noisy_value(d, noise)
                             : noise.p * report.quantum_value + (1.0 - noise.p) * uniform;
    report.violated = *report.noisy_value > report.local_bound;
  }
  return report;
}

std::vector<SweepRow> sweep(Family family, DimensionRange range) {
  std::vector<SweepRow> rows;
  for (int d = range.first; d <= range.last; ++d) {
    const auto t = threshold_report(family, d, std::nullopt);
    rows.push_back({d, t.local_bound, t.quantum_value, t.noise_threshold});
  }
  return rows;
}

std::vector<ReproductionRow> reproduce() {
  std::vector<ReproductionRow> rows = {
      {"I3_QM", 2.87293, quantum_value(3)},
      {"I4_QM", 2.89624, quantum_value(4)},
      {"pmin3", 0.69615, noise_threshold(3)},
      {"pmin4", 0.69055, noise_threshold(4)},
      {"limit", 2.6981, asymptotic_value()},
      {"pmin_limit", 0.67344, asymptotic_noise_threshold()},
      {"local_bound_I_d2", 3.0, local_bound(Family::I, 2)},
      {"local_bound_Id_d3", 2.0, local_bound(Family::Id, 3)},
  };
  for (auto& row : rows) {
    row.relative_tolerance = kQuotedRelativeTolerance;
    row.pass = std::abs(row.computed - row.quoted) <= row.relative_tolerance * std::abs(row.quoted);
  }
  return rows;
}

nlohmann::json to_json(const SettingTable& table) {
  const int d = table.dimension();
  nlohmann::json out = nlohmann::json::array();
  for (int a = 0; a < 2; ++a) {
    nlohmann::json by_b = nlohmann::json::array();
    for (int b = 0; b < 2; ++b) {
      nlohmann::json rows = nlohmann::json::array();
      for (int j = 0; j < d; ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (int l = 0; l < d; ++l) row.push_back(table(a, b, j, l));
        rows.push_back(std::move(row));
      }
      by_b.push_back(std::move(rows));
    }
    out.push_back(std::move(by_b));
  }
  return out;
}

SettingTable setting_table_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[0][0].is_array()) {
    throw std::runtime_error("setting table must be a (2,2,d,d) nested array");
  }
  const int d = static_cast<int>(j[0][0].size());
  SettingTable table(d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (j.at(a).size() != 2 || j.at(a).at(b).size() != static_cast<std::size_t>(d)) {
        throw std::runtime_error("ragged setting table");
      }
      for (int r = 0; r < d; ++r) {
        const auto& row = j.at(a).at(b).at(r);
        if (row.size() != static_cast<std::size_t>(d)) throw std::runtime_error("ragged setting table");
        for (int l = 0; l < d; ++l) table(a, b, r, l) = row.at(l).get<double>();
      }
    }
  return table;
}

nlohmann::json to_json(const BellExpression& expression) {
  auto out = versioned("bell_expression");
  out["family"] = family_name(expression.family());
  out["dimension"] = expression.dimension();
  out["coefficients"] = to_json(expression.coefficients());
  return out;
}

BellExpression expression_from_json(const nlohmann::json& j) {
  require_kind(j, "bell_expression");
  return BellExpression(parse_family(j.at("family").get<std::string>()),
                        setting_table_from_json(j.at("coefficients")));
}

nlohmann::json to_json(const JointDistribution& distribution) {
  auto out = versioned("joint_distribution");
  out["dimension"] = distribution.dimension();
  out["table"] = to_json(distribution.table());
  return out;
}

JointDistribution distribution_from_json(const nlohmann::json& j) {
  require_kind(j, "joint_distribution");
  return JointDistribution(setting_table_from_json(j.at("table")));
}

nlohmann::json to_json(const BoundReport& report) {
  auto out = versioned("bound");
  out["family"] = family_name(report.family);
  out["dimension"] = report.dimension;
  out["bruteforce_max"] = report.bruteforce_max ? nlohmann::json(*report.bruteforce_max) : nullptr;
  out["cases_max"] = report.cases_max ? nlohmann::json(*report.cases_max) : nullptr;
  nlohmann::json maximizers = nlohmann::json::array();
  for (const auto& s : report.maximizers) maximizers.push_back({s.j, s.k, s.l, s.m});
  out["maximizers"] = std::move(maximizers);
  out["spectrum"] = report.spectrum;
  return out;
}

nlohmann::json to_json(const QuantumReport& report) {
  auto out = versioned("quantum");
  out["dimension"] = report.dimension;
  out["quantum_value"] = report.quantum_value;
  out["quantum_value_I"] = report.quantum_value_I;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.correlators) rows.push_back({{"c", r.c}, {"q", r.q}});
  out["correlators"] = std::move(rows);
  return out;
}

nlohmann::json to_json(const ThresholdReport& report) {
  auto out = versioned("threshold");
  out["family"] = family_name(report.family);
  out["dimension"] = report.dimension;
  out["local_bound"] = report.local_bound;
  out["quantum_value"] = report.quantum_value;
  out["noise_threshold"] = report.noise_threshold;
  out["noise_p"] = report.noise_p ? nlohmann::json(*report.noise_p) : nullptr;
  out["noisy_value"] = report.noisy_value ? nlohmann::json(*report.noisy_value) : nullptr;
  out["violated"] = report.violated ? nlohmann::json(*report.violated) : nullptr;
  return out;
}

ThresholdReport threshold_report_from_json(const nlohmann::json& j) {
  require_kind(j, "threshold");
  ThresholdReport r;
  r.family = parse_family(j.at("family").get<std::string>());
  r.dimension = j.at("dimension").get<int>();
  r.local_bound = j.at("local_bound").get<double>();
  r.quantum_value = j.at("quantum_value").get<double>();
  r.noise_threshold = j.at("noise_threshold").get<double>();
  if (!j.at("noise_p").is_null()) r.noise_p = j.at("noise_p").get<double>();
  if (!j.at("noisy_value").is_null()) r.noisy_value = j.at("noisy_value").get<double>();
  if (!j.at("violated").is_null()) r.violated = j.at("violated").get<bool>();
  return r;
}

nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  auto out = versioned("sweep");
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : rows) {
    items.push_back({{"d", r.d},
                     {"local_bound", r.local_bound},
                     {"quantum_value", r.quantum_value},
                     {"noise_threshold", r.noise_threshold}});
  }
  out["rows"] = std::move(items);
  return out;
}

std::vector<SweepRow> sweep_from_json(const nlohmann::json& j) {
  require_kind(j, "sweep");
  std::vector<SweepRow> rows;
  for (const auto& item : j.at("rows")) {
    rows.push_back({item.at("d").get<int>(), item.at("local_bound").get<double>(),
                    item.at("quantum_value").get<double>(),
                    item.at("noise_threshold").get<double>()});
  }
  return rows;
}

nlohmann::json to_json(const std::vector<ReproductionRow>& rows) {
  auto out = versioned("reproduce");
  nlohmann::json items = nlohmann::json::array();
  bool all = true;
  for (const auto& r : rows) {
    items.push_back({{"name", r.name},
                     {"quoted", r.quoted},
                     {"computed", r.computed},
                     {"relative_tolerance", r.relative_tolerance},
                     {"pass", r.pass}});
    all = all && r.pass;
  }
  out["rows"] = std::move(items);
  out["all_pass"] = all;
  return out;
}

std::vector<ReproductionRow> reproduction_from_json(const nlohmann::json& j) {
  require_kind(j, "reproduce");
  std::vector<ReproductionRow> rows;
  for (const auto& item : j.at("rows")) {
    rows.push_back({item.at("name").get<std::string>(), item.at("quoted").get<double>(),
                    item.at("computed").get<double>(),
                    item.at("relative_tolerance").get<double>(), item.at("pass").get<bool>()});
  }
  return rows;
}

nlohmann::json to_json(const OptimizeReport& report) {
  auto out = versioned("optimize");
  const auto& p = report.problem;
  const auto& r = report.result;
  out["dimension"] = p.dimension;
  out["family"] = family_name(p.family);
  out["free"] = {{"alice_phases", p.free.alice_phases},
                 {"bob_phases", p.free.bob_phases},
                 {"state_weights", p.free.state_weights}};
  out["budget"] = p.budget;
  out["restarts"] = p.restarts;
  out["seed"] = p.seed;
  out["best_value"] = r.best_value;
  out["reference_value"] = report.reference_value;
  out["best_restart"] = r.best_restart;
  out["evaluations"] = r.evaluations;
  out["improved"] = r.improved;
  out["best_parameters"] = r.best_parameters;
  out["best_state_weights"] = r.best_state_weights;
  out["trace_path"] = report.trace_path;
  return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "d,local_bound,quantum_value,noise_threshold\n" << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.d << ',' << r.local_bound << ',' << r.quantum_value << ',' << r.noise_threshold
        << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "d,local_bound,quantum_value,noise_threshold") {
    throw std::runtime_error("sweep CSV is missing its header row");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string d, bound, value, threshold;
    if (!std::getline(fields, d, ',') || !std::getline(fields, bound, ',') ||
        !std::getline(fields, value, ',') || !std::getline(fields, threshold)) {
      throw std::runtime_error("malformed sweep row: " + line);
    }
    rows.push_back({std::stoi(d), std::stod(bound), std::stod(value), std::stod(threshold)});
  }
  return rows;
}

void write_reproduction_csv(const std::vector<ReproductionRow>& rows, std::ostream& out) {
  out << "name,quoted,computed,relative_tolerance,pass\n" << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.name << ',' << r.quoted << ',' << r.computed << ',' << r.relative_tolerance << ','
        << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

std::string format_table(const BoundReport& report) {
  std::ostringstream os;
  os << "family " << family_name(report.family) << ", d = " << report.dimension << '\n';
  if (report.bruteforce_max) {
    os << "  brute force:   local bound = " << sig6(*report.bruteforce_max) << " ("
       << report.maximizers.size() << " maximizing strategies)\n";
  } else {
    os << "  brute force:   skipped (d^4 above enumeration cap)\n";
  }
  if (report.cases_max) os << "  case analysis: local bound = " << sig6(*report.cases_max) << '\n';
  os << "  attainable deterministic values:";
  for (double v : report.spectrum) os << ' ' << sig6(v);
  os << '\n';
  return os.str();
}

std::string format_table(const QuantumReport& report) {
  std::ostringstream os;
  os << "d = " << report.dimension << '\n'
     << "  I_d(QM) = " << sig6(report.quantum_value) << '\n'
     << "  I(QM)   = " << sig6(report.quantum_value_I) << '\n'
     << "  c      q_c = P(A1 = B1 + c)\n";
  for (const auto& r : report.correlators) {
    os << "  " << std::setw(5) << r.c << "  " << sig6(r.q) << '\n';
  }
  return os.str();
}

std::string format_table(const ThresholdReport& report) {
  std::ostringstream os;
  os << "family " << family_name(report.family) << ", d = " << report.dimension << '\n'
     << "  local bound     = " << sig6(report.local_bound) << '\n'
     << "  quantum value   = " << sig6(report.quantum_value) << '\n'
     << "  noise threshold = " << sig6(report.noise_threshold) << '\n';
  if (report.noise_p) {
    os << "  p = " << sig6(*report.noise_p) << ": noisy value = " << sig6(*report.noisy_value)
       << ", " << (*report.violated ? "violated" : "not violated") << '\n';
  }
  return os.str();
}

std::string format_table(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << std::setw(6) << "d" << std::setw(14) << "local_bound" << std::setw(16) << "quantum_value"
     << std::setw(18) << "noise_threshold" << '\n';
  for (const auto& r : rows) {
    os << std::setw(6) << r.d << std::setw(14) << sig6(r.local_bound) << std::setw(16)
       << sig6(r.quantum_value) << std::setw(18) << sig6(r.noise_threshold) << '\n';
  }
  return os.str();
}

std::string format_table(const std::vector<ReproductionRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "quantity" << std::right << std::setw(12) << "quoted"
     << std::setw(12) << "computed" << "  verdict\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(20) << r.name << std::right << std::setw(12) << sig6(r.quoted)
       << std::setw(12) << sig6(r.computed) << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

std::string format_table(const OptimizeReport& report) {
  const auto& r = report.result;
  std::ostringstream os;
  os << "family " << family_name(report.problem.family) << ", d = " << report.problem.dimension
     << ", restarts = " << report.problem.restarts << ", budget = " << report.problem.budget
     << ", seed = " << report.problem.seed << '\n'
     << "  best value      = " << sig6(r.best_value) << " (restart " << r.best_restart << ", "
     << r.evaluations << " evaluations" << (r.improved ? "" : ", no improvement") << ")\n";
  if (report.problem.family == Family::Id) {
    os << "  reference I_d(QM) = " << sig6(report.reference_value) << '\n';
  }
  if (!report.trace_path.empty()) os << "  trace written to " << report.trace_path << '\n';
  return os.str();
}

}  // namespace cglmp
