// Copyright 2026 The aerialq Authors
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

#pragma once

// Statistical oracles used by the tests. Kept free of any aerialq code so
// they stay independent of the implementation they check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace aerialq::testing {

/// Two-sided one-sample Kolmogorov-Smirnov statistic against `cdf`.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

/// Asymptotic p-value of the KS statistic (Stephens' small-sample correction).
inline double ks_p_value(double d, std::size_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    if (lambda < 1e-3) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-12) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

inline double chi_square(std::span<const double> observed, std::span<const double> expected) {
    double x2 = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double d = observed[i] - expected[i];
        x2 += d * d / expected[i];
    }
    return x2;
}

/// Upper 1% critical value of the chi-square distribution with 3 degrees of freedom.
inline constexpr double kChiSquare3Dof99 = 11.344866730144373;

}  // namespace aerialq::testing
