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

#include <vector>

#include "ness_symbol.hpp"

namespace efp {

/// Fourier coefficients a_x for |x| <= radius, a_x = int a(e^{ik}) e^{-ikx} dk / 2pi.
struct FourierWindow {
    int radius = 0;
    double err_target = 1e-12;
    std::vector<cplx> coeffs;  // index x + radius

    cplx at(int x) const {
        if (x < -radius || x > radius) throw validation_error("FourierWindow: index out of range");
        return coeffs[static_cast<std::size_t>(x + radius)];
    }
};

/// Coefficients of a continuous logarithm of a nonvanishing index-zero symbol.
struct LogSymbolSeries {
    int radius = 0;
    std::vector<cplx> coeffs;  // index l + radius

    cplx at(int l) const {
        if (l < -radius || l > radius) throw validation_error("LogSymbolSeries: index out of range");
        return coeffs[static_cast<std::size_t>(l + radius)];
    }
};

struct QuadratureOptions {
    int min_panels = 4;       // floor on panels per smooth arc
    int max_index = 4096;     // largest |x| accepted by fourier_coefficient
    double err_target = 1e-12;
    int panel_scale = 1;      // multiplier for self-consistency checks
};

/// Panel Gauss-Legendre on each smooth arc; panel width <= pi / max(1,|x|)
/// keeps the oscillatory factor resolved to machine precision.
cplx fourier_coefficient(const TorusSymbol& symbol, int x, const QuadratureOptions& opts = {});

/// All coefficients for |x| <= radius. Real-valued symbols are computed on
/// x >= 0 and mirrored hermitially. A spot check against doubled panel
/// counts enforces err_target.
FourierWindow fourier_window(const TorusSymbol& symbol, int radius,
                             const QuadratureOptions& opts = {});

/// Coefficients of log(symbol), branch chosen continuously along each arc
/// and anchored at the principal value of the arc midpoint. Requires a
/// nonvanishing symbol of winding number zero.
LogSymbolSeries log_symbol_series(const TorusSymbol& symbol, int radius,
                                  const QuadratureOptions& opts = {});

/// Winding number by phase unwrapping on a refinement grid; requires the
/// integer residual to be below 0.01.
int winding_number(const TorusSymbol& symbol);

/// Truncated second-difference integral against the 4 pi^2 ||b''||_inf bound.
struct BesovCheck {
    double integral_estimate = 0.0;
    double bound = 0.0;
    bool holds = false;
};
BesovCheck besov_b11_check(const TorusSymbol& symbol, double k_floor);

}  // namespace efp
