/*
 * Copyright 2026 The efp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "torus_analysis.hpp"

namespace efp {

/// Barnes G on the disk |z| <= 8, via the Weierstrass-type product in log
/// form with an adaptive truncation plus a Hurwitz-zeta tail correction.
/// Total error stays below 1e-10 (observed ~1e-13 across the disk).
cplx barnes_g(cplx z);

/// One singular point of a jump/root symbol.
struct SingularPoint {
    cplx t;      // location on the unit circle
    cplx alpha;  // root exponent
    cplx beta;   // jump phase
};

struct FHSymbolData {
    TorusSymbol regular_part;
    std::vector<SingularPoint> singular;
};

/// G(b) = exp((log b)_0).
cplx szego_constant(const LogSymbolSeries& logs);

/// Q = sum_j (alpha_j^2 - beta_j^2).
cplx power_exponent(std::span<const SingularPoint> singular);

/// E(b) = exp(sum_{l>=1} l (log b)_l (log b)_{-l}). The truncation tail is
/// bounded from the observed coefficient decay; a non-convergent estimate
/// raises a precision error.
cplx e_of_b(const LogSymbolSeries& logs, double* tail_bound = nullptr);

/// b_pm(t_j) = exp(sum_{l>=1} (log b)_{pm l} t_j^{pm l}).
std::pair<cplx, cplx> b_plus_minus(const LogSymbolSeries& logs, cplx t_point);

struct AsymptoticConstants {
    cplx log_g{};
    cplx q{};
    cplx log_f{};

    cplx e_b{};
    double e_b_tail_bound = 0.0;
    std::vector<SingularPoint> singular;
    std::vector<cplx> b_plus;          // per singular point
    std::vector<cplx> b_minus;
    std::vector<cplx> barnes_factors;  // G(1+a+b) G(1+a-b) / G(1+2a)
    cplx cross_factor{1.0, 0.0};

    // relative gap between the general product and the jump-only
    // specialization; negative when the specialization does not apply
    double two_path_gap = -1.0;
};

/// Assembles log G, Q and log F with all sub-factors. When every alpha is
/// zero and the singular points are {1, -1}, the jump-only closed form is
/// evaluated as a second route and the relative gap recorded.
AsymptoticConstants fh_constant(const FHSymbolData& data, const LogSymbolSeries& logs);

/// n log G + Q log n + log F, real part.
double fh_log_asymptote(const AsymptoticConstants& constants, int n);

}  // namespace efp
