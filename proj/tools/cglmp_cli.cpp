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

// Command-line front end: local bounds, quantum values, noise thresholds,
// dimension sweeps, measurement search and the reproduction table.
//
// Exit status: 0 success, 2 invalid invocation, 3 failed internal cross-check
// (or a reproduction row outside tolerance).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cglmp/bell_expression.hpp"
#include "cglmp/optimizer.hpp"
#include "cglmp/quantum_model.hpp"
#include "cglmp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;
constexpr const char* kOutputDirEnv = "CGLMP_OUTPUT_DIR";

struct Options {
  std::string family = "Id";
  std::string dimension = "3";
  std::string format = "table";
  std::string output;
  std::optional<double> noise_p;
  std::uint64_t seed = 0;
  std::int64_t budget = 50'000;
  int restarts = 20;
  bool free_weights = false;
  std::string trace;
};

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  const auto path = resolve_output(opt.output);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int single_dimension(const Options& opt) {
  const auto range = cglmp::parse_dimension_range(opt.dimension);
  if (range.first != range.last) {
    throw std::invalid_argument("this command takes a single --dimension, got '" +
                                opt.dimension + "'");
  }
  return range.first;
}

int run_bound(const Options& opt) {
  const auto report = cglmp::bound_report(cglmp::parse_family(opt.family), single_dimension(opt));
  if (opt.format == "json") {
    emit(opt, dump(cglmp::to_json(report)));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "family,d,bruteforce_max,cases_max\n" << std::setprecision(17)
       << cglmp::family_name(report.family) << ',' << report.dimension << ',';
    if (report.bruteforce_max) os << *report.bruteforce_max;
    os << ',';
    if (report.cases_max) os << *report.cases_max;
    os << '\n';
    emit(opt, os.str());
  } else {
    emit(opt, cglmp::format_table(report));
  }
  return kExitOk;
}

int run_quantum(const Options& opt) {
  const auto report = cglmp::quantum_report(single_dimension(opt));
  if (opt.format == "json") {
    emit(opt, dump(cglmp::to_json(report)));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "c,q\n" << std::setprecision(17);
    for (const auto& r : report.correlators) os << r.c << ',' << r.q << '\n';
    emit(opt, os.str());
  } else {
    emit(opt, cglmp::format_table(report));
  }
  return kExitOk;
}

int run_threshold(const Options& opt) {
  const auto report =
      cglmp::threshold_report(cglmp::parse_family(opt.family), single_dimension(opt), opt.noise_p);
  if (opt.format == "json") {
    emit(opt, dump(cglmp::to_json(report)));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "family,d,local_bound,quantum_value,noise_threshold,noise_p,noisy_value,violated\n"
       << std::setprecision(17) << cglmp::family_name(report.family) << ',' << report.dimension
       << ',' << report.local_bound << ',' << report.quantum_value << ','
       << report.noise_threshold << ',';
    if (report.noise_p) {
      os << *report.noise_p << ',' << *report.noisy_value << ','
         << (*report.violated ? "true" : "false");
    } else {
      os << ",,";
    }
    os << '\n';
    emit(opt, os.str());
  } else {
    emit(opt, cglmp::format_table(report));
  }
  return kExitOk;
}

int run_sweep(const Options& opt) {
  const auto rows =
      cglmp::sweep(cglmp::parse_family(opt.family), cglmp::parse_dimension_range(opt.dimension));
  if (opt.format == "json") {
    emit(opt, dump(cglmp::to_json(rows)));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    cglmp::write_sweep_csv(rows, os);
    emit(opt, os.str());
  } else {
    emit(opt, cglmp::format_table(rows));
  }
  return kExitOk;
}

int run_optimize(const Options& opt) {
  cglmp::OptimizeReport report;
  auto& problem = report.problem;
  problem.dimension = single_dimension(opt);
  problem.family = cglmp::parse_family(opt.family);
  problem.free.state_weights = opt.free_weights;
  problem.budget = opt.budget;
  problem.restarts = opt.restarts;
  problem.seed = opt.seed;
  problem.validate();

  report.result = cglmp::maximize(problem);
  report.reference_value =
      problem.family == cglmp::Family::Id ? cglmp::quantum_value(problem.dimension) : 0.0;

  const std::string trace_name = opt.trace.empty()
                                     ? "optimize_trace_d" + std::to_string(problem.dimension) +
                                           "_seed" + std::to_string(problem.seed) + ".csv"
                                     : opt.trace;
  const auto trace_path = resolve_output(trace_name);
  if (trace_path.has_parent_path()) std::filesystem::create_directories(trace_path.parent_path());
  std::ofstream trace(trace_path);
  if (!trace) throw std::runtime_error("cannot write " + trace_path.string());
  cglmp::write_trace_csv(report.result.trace, trace);
  report.trace_path = trace_path.string();

  const double excess = cglmp::excess_over_reference(problem, report.result);
  if (excess > 1e-6) {
    std::cerr << "!!! search found I_d = " << std::setprecision(12) << report.result.best_value
              << ", above the phased-DFT reference " << report.reference_value << " by "
              << excess << " !!!\n";
  }

  if (opt.format == "json") {
    emit(opt, dump(cglmp::to_json(report)));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    cglmp::write_trace_csv(report.result.trace, os);
    emit(opt, os.str());
  } else {
    emit(opt, cglmp::format_table(report));
  }
  return kExitOk;
}

int run_reproduce(const Options& opt) {
  const auto rows = cglmp::reproduce();
  if (opt.format == "json") {
    emit(opt, dump(cglmp::to_json(rows)));
  } else if (opt.format == "csv") {
    std::ostringstream os;
    cglmp::write_reproduction_csv(rows, os);
    emit(opt, os.str());
  } else {
    emit(opt, cglmp::format_table(rows));
  }
  for (const auto& r : rows)
    if (!r.pass) return kExitCrossCheck;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CGLMP Bell expressions: local bounds, quantum violations, noise thresholds"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub, const std::string& default_dimension) {
    opt.dimension = default_dimension;
    sub->add_option("--family", opt.family, "Expression family: I, I3 or Id")
        ->check(CLI::IsMember({"I", "I3", "Id"}))
        ->capture_default_str();
    sub->add_option("-d,--dimension", opt.dimension, "Outcome count d, or a range such as 2..16")
        ->capture_default_str();
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("-o,--output", opt.output,
                    std::string("Write output here (relative paths resolve under $") +
                        kOutputDirEnv + " when set)");
  };

  auto* bound = app.add_subcommand("bound", "Local bound by brute force and case analysis");
  auto* quantum = app.add_subcommand("quantum", "Quantum values and correlator table");
  auto* threshold = app.add_subcommand("threshold", "Noise threshold and noisy-state verdict");
  auto* sweep = app.add_subcommand("sweep", "One row per dimension");
  auto* optimize = app.add_subcommand("optimize", "Numerical search over measurement phases");
  auto* reproduce = app.add_subcommand("reproduce", "Published constants vs computed values");

  for (auto* sub : {bound, quantum, threshold, optimize, reproduce}) add_common(sub, "3");
  add_common(sweep, "2..16");
  opt.dimension = "3";

  threshold->add_option("--noise-p", opt.noise_p, "Visibility p of the noisy state, in [0,1]");
  optimize->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  optimize->add_option("--budget", opt.budget, "Objective evaluations, all restarts combined")
      ->capture_default_str();
  optimize->add_option("--restarts", opt.restarts, "Random starting points")
      ->capture_default_str();
  optimize->add_flag("--free-weights", opt.free_weights, "Also search over Schmidt weights");
  optimize->add_option("--trace", opt.trace, "Path of the trace CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }
  if (sweep->parsed() && sweep->count("--dimension") == 0) opt.dimension = "2..16";

  try {
    if (bound->parsed()) return run_bound(opt);
    if (quantum->parsed()) return run_quantum(opt);
    if (threshold->parsed()) return run_threshold(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (optimize->parsed()) return run_optimize(opt);
    if (reproduce->parsed()) return run_reproduce(opt);
  } catch (const cglmp::CrossCheckFailure& e) {
    std::cerr << "cross-check failed: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cglmp::EnumerationLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
