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

// Shared helpers for the test binaries: random inputs and oracles that do not
// go through the library code they check.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "cglmp/bell_expression.hpp"
#include "cglmp/local_models.hpp"

namespace cglmp::testing {

/// Random valid table: positive entries, each setting pair normalized. Roughly
/// a third of the draws are sparse so that extreme tables also appear.
inline JointDistribution random_distribution(int d, std::mt19937_64& rng) {
  std::exponential_distribution<double> draw(1.0);
  std::bernoulli_distribution sparse(1.0 / 3.0);
  std::bernoulli_distribution keep(0.3);
  const bool is_sparse = sparse(rng);
  SettingTable table(d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double total = 0.0;
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
          double v = draw(rng);
          if (is_sparse && !keep(rng)) v = 0.0;
          table(a, b, j, l) = v;
          total += v;
        }
      if (total == 0.0) {
        table(a, b, 0, 0) = 1.0;
        total = 1.0;
      }
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) table(a, b, j, l) /= total;
    }
  return JointDistribution(std::move(table));
}

inline DeterministicStrategy random_strategy(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> outcome(0, d - 1);
  return {outcome(rng), outcome(rng), outcome(rng), outcome(rng)};
}

/// P(A_a = k, B_b = l) by summing the amplitude directly:
/// (1/d) sum_j w_j exp(i[phi(j) + varphi(j) + 2 pi j (k - l) / d]).
inline double direct_born_probability(const std::vector<double>& weights,
                                      const std::vector<double>& alice_phase,
                                      const std::vector<double>& bob_phase, int k, int l) {
  const int d = static_cast<int>(weights.size());
  std::complex<double> amplitude = 0.0;
  for (int j = 0; j < d; ++j) {
    const double angle = alice_phase[j] + bob_phase[j] + 2.0 * std::numbers::pi * j * (k - l) / d;
    amplitude += weights[j] * std::exp(std::complex<double>(0.0, angle));
  }
  return std::norm(amplitude) / (static_cast<double>(d) * d);
}

/// Id value from explicit phases and weights, using the weight rule
/// f(canonical difference) per setting pair instead of the correlator list.
inline double direct_id_value(const std::vector<double>& weights,
                              const std::vector<std::vector<double>>& alice,
                              const std::vector<std::vector<double>>& bob) {
  const int d = static_cast<int>(weights.size());
  const auto f = [d](int x) {
    int r = ((x % d) + d) % d;
    if (r > (d - 1) / 2) r -= d;
    return r >= 0 ? 1.0 - 2.0 * r / (d - 1) : -2.0 * r / (d - 1) - (d + 1.0) / (d - 1);
  };
  double value = 0.0;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      value += f(k - l) * direct_born_probability(weights, alice[0], bob[0], k, l);
      value += f(l - k - 1) * direct_born_probability(weights, alice[1], bob[0], k, l);
      value += f(k - l) * direct_born_probability(weights, alice[1], bob[1], k, l);
      value += f(l - k) * direct_born_probability(weights, alice[0], bob[1], k, l);
    }
  return value;
}

}  // namespace cglmp::testing
