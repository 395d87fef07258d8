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

#include "cglmp/quantum_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cglmp {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kStateNormTolerance = 1e-12;

void require_dimension(int d) {
  if (d < 2) throw std::domain_error("dimension must be at least 2, got " + std::to_string(d));
}

// Column j of the result is the image of |j> after the phase and the transform.
Eigen::MatrixXcd measurement_unitary(int d, int sign, const auto& phase) {
  Eigen::MatrixXcd u(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int out = 0; out < d; ++out) {
    for (int j = 0; j < d; ++j) {
      u(out, j) = norm * std::polar(1.0, phase(j) + sign * 2.0 * pi * j * out / d);
    }
  }
  return u;
}

}  // namespace

MeasurementPhases MeasurementPhases::standard(int d) {
  require_dimension(d);
  MeasurementPhases phases;
  phases.dimension = d;
  return phases;
}

double MeasurementPhases::alice(int a, int j) const {
  if (alice_phases) return (*alice_phases)[a][j];
  return 2.0 * pi / dimension * alice_slopes[a] * j;
}

double MeasurementPhases::bob(int b, int j) const {
  if (bob_phases) return (*bob_phases)[b][j];
  return 2.0 * pi / dimension * bob_slopes[b] * j;
}

void MeasurementPhases::validate() const {
  require_dimension(dimension);
  const auto check = [this](const auto& vectors, const char* who) {
    if (!vectors) return;
    for (const auto& v : *vectors) {
      if (static_cast<int>(v.size()) != dimension) {
        throw std::domain_error(std::string(who) + " phase vector has length " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(dimension));
      }
    }
  };
  check(alice_phases, "alice");
  check(bob_phases, "bob");
}

QuantumSetup QuantumSetup::standard(int d) {
  require_dimension(d);
  QuantumSetup setup;
  setup.dimension = d;
  setup.state_weights.assign(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
  setup.phases = MeasurementPhases::standard(d);
  return setup;
}

void QuantumSetup::validate() const {
  require_dimension(dimension);
  if (static_cast<int>(state_weights.size()) != dimension) {
    throw std::domain_error("state has " + std::to_string(state_weights.size()) +
                            " Schmidt weights, expected " + std::to_string(dimension));
  }
  if (phases.dimension != dimension) {
    throw std::domain_error("measurement phases and state have different dimensions");
  }
  phases.validate();
  double norm = 0.0;
  for (const auto& w : state_weights) norm += std::norm(w);
  if (std::abs(norm - 1.0) > kStateNormTolerance) {
    throw std::domain_error("state is not normalized: sum |w|^2 = " + std::to_string(norm));
  }
}

void NoiseModel::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("visibility p must lie in [0,1], got " + std::to_string(p));
  }
}

JointDistribution born_rule_distribution(const QuantumSetup& setup) {
  setup.validate();
  const int d = setup.dimension;

  // Coefficient matrix of sum_j w_j |j>|j>; (U_A (x) U_B) psi becomes U_A C U_B^T.
  Eigen::MatrixXcd state = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) state(j, j) = setup.state_weights[j];

  SettingTable table(d);
  for (int a = 0; a < 2; ++a) {
    const Eigen::MatrixXcd ua =
        measurement_unitary(d, +1, [&](int j) { return setup.phases.alice(a, j); });
    const Eigen::MatrixXcd alice_side = ua * state;
    for (int b = 0; b < 2; ++b) {
      const Eigen::MatrixXcd ub =
          measurement_unitary(d, -1, [&](int j) { return setup.phases.bob(b, j); });
      const Eigen::MatrixXcd amplitudes = alice_side * ub.transpose();
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) table(a, b, k, l) = std::norm(amplitudes(k, l));
    }
  }
  return JointDistribution(std::move(table));
}

double closed_form_probability(int a, int b, int k, int l, int d) {
  require_dimension(d);
  const auto phases = MeasurementPhases::standard(d);
  const double offset = phases.alice_slopes[a] + phases.bob_slopes[b];
  const double s = std::sin(pi * (k - l + offset) / d);
  return 1.0 / (2.0 * d * d * d * s * s);
}

JointDistribution closed_form_distribution(int d) {
  SettingTable table(d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) table(a, b, k, l) = closed_form_probability(a, b, k, l, d);
  return JointDistribution(std::move(table));
}

double correlator_q(int c, int d) {
  require_dimension(d);
  if (c < min_difference(d) || c > max_difference(d)) {
    throw std::domain_error("correlator index " + std::to_string(c) +
                            " outside the canonical interval for d=" + std::to_string(d));
  }
  const double s = std::sin(pi * (c + 0.25) / d);
  return 1.0 / (2.0 * d * d * s * s);
}

bool symmetry_check(const JointDistribution& distribution) {
  const int d = distribution.dimension();
  for (int c = 0; c < d; ++c) {
    const double reference = correlator(distribution, 0, 0, c);
    const double chain[] = {
        correlator(distribution, 1, 0, -(c + 1)),  // B1 = A2 + c + 1
        correlator(distribution, 1, 1, c),         // A2 = B2 + c
        correlator(distribution, 0, 1, -c),        // B2 = A1 + c
    };
    for (double v : chain) {
      if (std::abs(v - reference) > kSymmetryTolerance) return false;
    }
  }
  return true;
}

double quantum_value(int d) {
  require_dimension(d);
  double value = 0.0;
  for (int k = 0; k < d / 2; ++k) {
    value += bracket_weight(k, d) * (correlator_q(k, d) - correlator_q(-(k + 1), d));
  }
  return 4.0 * value;
}

double quantum_value_I(int d) {
  const double value = 4.0 * correlator_q(0, d);
  if (!(value > 3.0)) {
    throw std::logic_error("I expression not violated at d=" + std::to_string(d));
  }
  return value;
}

double catalan_constant() {
  static const double value = [] {
    // The alternating-series remainder is below the first omitted term.
    double sum = 0.0;
    double compensation = 0.0;
    for (long k = 0;; ++k) {
      const double denom = 2.0 * k + 1.0;
      const double term = 1.0 / (denom * denom);
      if (term < 1e-14) break;
      const double y = (k % 2 == 0 ? term : -term) - compensation;
      const double t = sum + y;
      compensation = (t - sum) - y;
      sum = t;
    }
    return sum;
  }();
  return value;
}

double asymptotic_value() { return 32.0 * catalan_constant() / (pi * pi); }

double asymptotic_series_partial(int terms) {
  double sum = 0.0;
  for (int k = terms - 1; k >= 0; --k) {
    const double x = k + 0.25;
    const double y = k + 0.75;
    sum += 1.0 / (x * x) - 1.0 / (y * y);
  }
  return 2.0 / (pi * pi) * sum;
}

JointDistribution noisy_distribution(int d, const NoiseModel& noise) {
  noise.validate();
  return JointDistribution::mixture(noise.p, closed_form_distribution(d),
                                    JointDistribution::uniform(d));
}

double noisy_value(int d, const NoiseModel& noise) {
  noise.validate();
  return noise.p * quantum_value(d);
}

double noise_threshold(int d) { return 2.0 / quantum_value(d); }

double asymptotic_noise_threshold() { return pi * pi / (16.0 * catalan_constant()); }

}  // namespace cglmp
