// Copyright 2026 The gmeforge developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmeforge/thresholds.hpp"

#include <cmath>

namespace gmeforge {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(result);
}

double theta(const RealVector& mu) {
  if (mu.size() < 2) throw ArgumentError("theta: need at least two Schmidt weights");
  double sum = 0.0;
  for (Index i = 0; i < mu.size(); ++i) {
    if (mu(i) < 0.0) throw ArgumentError("theta: Schmidt weights must be nonnegative");
    sum += mu(i);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ArgumentError("theta: Schmidt weights must sum to 1");
  }
  double best = 0.0;
  for (Index i = 0; i < mu.size(); ++i) {
    for (Index j = i + 1; j < mu.size(); ++j) {
      best = std::max(best, std::sqrt(mu(i) * mu(j)));
    }
  }
  return best;
}

double p_sep_threshold(const RealVector& mu, int d) {
  if (mu.size() != d) {
    throw ArgumentError("p_sep_threshold: weight count does not match dimension");
  }
  return 1.0 / (static_cast<double>(d) * d * theta(mu) + 1.0);
}

double theta_dicke(int d) {
  if (d < 2) throw ArgumentError("theta_dicke: dimension must be >= 2");
  const int n = d - 1;
  const double denom = binomial(2 * n, n);
  if (d % 2 == 0) {
    return binomial(n, n / 2) * binomial(n, (n + 1) / 2) / denom;
  }
  return binomial(n, n / 2) *
         std::sqrt(binomial(n, (d - 3) / 2) * binomial(n, (d + 1) / 2)) / denom;
}

double p_gm(int d) {
  if (d < 2) throw ArgumentError("p_gm: dimension must be >= 2");
  const double dd = static_cast<double>(d);
  return (3.0 * dd - 1.0) * std::pow(dd - 1.0, dd - 1.0) /
         ((dd + 1.0) * std::pow(dd, dd));
}

double p_gm_tilde(int d) {
  const double p = p_gm(d);
  return p / ((1.0 - p) * (static_cast<double>(d) - 1.0) + 1.0);
}

}  // namespace gmeforge
