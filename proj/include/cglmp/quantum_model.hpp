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

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "cglmp/bell_expression.hpp"

namespace cglmp {

/// Per-outcome phases applied before each party's Fourier transform.
///
/// By default the phases are linear in the outcome label,
/// phi_a(j) = (2 pi / d) * alice_slopes[a] * j and likewise for Bob, with the
/// slopes (0, 1/2) for Alice and (1/4, -1/4) for Bob. When explicit phase
/// vectors are present they replace the linear form for that party.
struct MeasurementPhases {
  int dimension = 2;
  std::array<double, 2> alice_slopes{0.0, 0.5};
  std::array<double, 2> bob_slopes{0.25, -0.25};
  std::optional<std::array<std::vector<double>, 2>> alice_phases;
  std::optional<std::array<std::vector<double>, 2>> bob_phases;

  static MeasurementPhases standard(int d);

  /// Phase (radians) Alice applies to |j> for setting a.
  double alice(int a, int j) const;
  /// Phase (radians) Bob applies to |j> for setting b.
  double bob(int b, int j) const;

  /// Throws std::domain_error when explicit phase vectors have the wrong length.
  void validate() const;
};

/// A shared state sum_j w_j |j>|j> together with the measurements.
struct QuantumSetup {
  int dimension = 2;
  std::vector<std::complex<double>> state_weights;
  MeasurementPhases phases;

  /// Maximally entangled state (all w_j = 1/sqrt(d)) with the standard phases.
  static QuantumSetup standard(int d);

  /// Throws std::domain_error unless sum |w_j|^2 = 1 within 1e-12.
  void validate() const;
};

/// Isotropic noise: rho = p |psi><psi| + (1 - p) 1/d^2.
struct NoiseModel {
  double p = 1.0;

  void validate() const;
};

/// Born-rule statistics of the setup. Each party applies its diagonal phase
/// unitary and a Fourier transform (Alice F, Bob F^*), then reads out in the
/// computational basis, so the amplitude of |k>|l> is
/// (1/d) sum_j w_j exp(i[phi_a(j) + varphi_b(j) + 2 pi j (k - l) / d]).
JointDistribution born_rule_distribution(const QuantumSetup& setup);

/// P(A_a = k, B_b = l) = 1 / (2 d^3 sin^2[pi (k - l + alpha_a + beta_b) / d])
/// for the standard phases.
double closed_form_probability(int a, int b, int k, int l, int d);

JointDistribution closed_form_distribution(int d);

/// q_c = P(A1 = B1 + c) = 1 / (2 d^2 sin^2[pi (c + 1/4) / d]) for the standard
/// setup. This is d times the single-cell probability P(A1 = c, B1 = 0).
/// c must lie in the canonical interval.
double correlator_q(int c, int d);

/// True iff P(A1 = B1 + c), P(B1 = A2 + c + 1), P(A2 = B2 + c) and
/// P(B2 = A1 + c) agree to 1e-10 for every c.
bool symmetry_check(const JointDistribution& distribution);

/// Value of the Id expression on the standard setup,
/// 4 sum_k (1 - 2k/(d-1)) (q_k - q_{-(k+1)}).
double quantum_value(int d);

/// Value of the I expression on the standard setup, 4 q_0. Always above 3.
double quantum_value_I(int d);

/// Catalan's constant from its alternating series with compensated summation.
double catalan_constant();

/// Large-d limit of quantum_value, 32 G / pi^2.
double asymptotic_value();

/// (2/pi^2) sum_{k=0}^{terms-1} [1/(k+1/4)^2 - 1/(k+3/4)^2].
double asymptotic_series_partial(int terms);

/// Standard-setup table mixed with the uniform table at weight p.
JointDistribution noisy_distribution(int d, const NoiseModel& noise);

/// p * quantum_value(d).
double noisy_value(int d, const NoiseModel& noise);

/// Smallest visibility still violating the local bound 2: 2 / quantum_value(d).
double noise_threshold(int d);

/// pi^2 / (16 G), the large-d limit of noise_threshold.
double asymptotic_noise_threshold();

}  // namespace cglmp
