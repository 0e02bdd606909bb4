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

#include <optional>
#include <span>

#include "fh_asymptotics.hpp"
#include "toeplitz_core.hpp"

namespace efp {

struct ModelOptions {
    int log_radius = 512;  // radius of the log-symbol series behind E(b), b_pm
    QuadratureOptions quad;
};

/// All constants of the decay law P(n) ~ G^n n^Q F, plus the diagnostic
/// second routes used to cross-check them.
struct NessConstants {
    AsymptoticConstants fh;
    double log_g = 0.0;          // log G(b_P), from (log b_P)_0
    double log_g_integral = 0.0; // same constant from the reservoir average of log tau
    double q = 0.0;              // Q_P, from the jump phases
    double q_direct = 0.0;       // Q_P, from the tau ratios at the jump points
    double log_f = 0.0;          // Re log F(s_-)
    double log_f_imag = 0.0;     // imaginary residue of log F (should be ~0)
    cplx beta1{};                // zero when the corresponding jump is absent
    cplx beta2{};
};

struct EfpTableRow {
    int n = 0;
    double log_det = 0.0;
    double log_asymptote = 0.0;
    double residual_y = 0.0;  // log_det - n log G
    double ratio = 0.0;       // exp(log_det - log_asymptote)
};

struct FitReport {
    double q_hat = 0.0;
    double log_f_hat = 0.0;
    double q_reference = 0.0;
    double log_f_reference = 0.0;
    double q_gap_rel = 0.0;
    double log_f_gap_abs = 0.0;
    std::vector<int> window;
};

enum class FigureKind { symbol, regularized };
enum class ScheduleKind { geometric, linear };

/// Parameter-bound facade: owns the coefficient window and the constants,
/// growing the window on demand and computing the constants once.
class NessModel {
public:
    explicit NessModel(const NessParams& params, ModelOptions options = {});

    const NessParams& params() const { return params_; }
    const ModelOptions& options() const { return options_; }

    double log_probability(int n);
    const NessConstants& constants();
    double log_asymptote(int n);
    EfpTableRow table_row(int n);

    /// Least-squares fit of residual_y = Q log n + c over the rows with
    /// n >= 32; needs at least four such rows.
    FitReport fit(std::span<const int> ns);

    struct FigurePoint {
        double k = 0.0;
        double value = 0.0;
    };
    /// Uniform samples over (-pi, pi], nudged off exact jump angles.
    std::vector<FigurePoint> figure(FigureKind kind, int samples) const;

private:
    void ensure_window(int radius);

    NessParams params_;
    ModelOptions options_;
    TorusSymbol s_minus_;
    std::optional<FourierWindow> window_;
    std::optional<NessConstants> constants_;
};

std::vector<int> make_schedule(ScheduleKind kind, int n_max);

/// Plain least squares for y = slope * x + intercept.
std::pair<double, double> fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace efp
