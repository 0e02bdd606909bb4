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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace efp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

NessModel::NessModel(const NessParams& params, ModelOptions options)
    : params_(params), options_(options), s_minus_(s_hat_symbol(params, Branch::minus)) {
    if (options_.log_radius < 64) {
        throw validation_error("NessModel: log_radius must be >= 64");
    }
}

void NessModel::ensure_window(int radius) {
    if (window_ && window_->radius >= radius) return;
    FourierWindow grown = fourier_window(s_minus_, radius, options_.quad);
    window_ = std::move(grown);
}

double NessModel::log_probability(int n) {
    if (n < 1) throw validation_error("log_probability: n must be >= 1");
    ensure_window(n - 1);
    return log_det_posdef(toeplitz_section(*window_, n)).log_magnitude;
}

const NessConstants& NessModel::constants() {
    if (constants_) return *constants_;

    NessConstants c;
    const auto jumps = jump_data(params_);
    FHSymbolData data;
    data.regular_part = regularized_symbol_fn(params_);
    for (const auto& j : jumps) {
        data.singular.push_back(SingularPoint{j.point, cplx{}, j.beta});
        if (j.angle == 0.0) c.beta1 = j.beta;
        else c.beta2 = j.beta;
    }
    const LogSymbolSeries logs =
        log_symbol_series(data.regular_part, options_.log_radius, options_.quad);
    c.fh = fh_constant(data, logs);

    c.log_g = c.fh.log_g.real();
    c.q = c.fh.q.real();
    c.log_f = c.fh.log_f.real();
    c.log_f_imag = c.fh.log_f.imag();

    // second routes: reservoir average of log tau, and the squared log
    // ratios of the reservoir occupations at the jump angles
    TorusSymbol mean_log_tau;
    const NessParams p = params_;
    mean_log_tau.eval = [p](double k) {
        return cplx{0.5 * (std::log(tau(p, Side::left, k)) + std::log(tau(p, Side::right, k))),
                    0.0};
    };
    mean_log_tau.real_valued = true;
    mean_log_tau.min_panels_hint = s_minus_.min_panels_hint;
    c.log_g_integral = fourier_coefficient(mean_log_tau, 0, options_.quad).real();
    double qd = 0.0;
    for (double kj : {0.0, kPi}) {
        const double lr = std::log(tau(params_, Side::right, kj) / tau(params_, Side::left, kj));
        qd += lr * lr;
    }
    c.q_direct = qd / (4.0 * kPi * kPi);

    constants_ = std::move(c);
    return *constants_;
}

double NessModel::log_asymptote(int n) {
    if (n == 1) {
        // log 1 = 0 kills the power-law term; the n >= 2 gate of
        // fh_log_asymptote does not apply to table rows
        const NessConstants& c = constants();
        return c.log_g + c.log_f;
    }
    return fh_log_asymptote(constants().fh, n);
}

EfpTableRow NessModel::table_row(int n) {
    EfpTableRow row;
    row.n = n;
    row.log_det = log_probability(n);
    row.log_asymptote = log_asymptote(n);
    row.residual_y = row.log_det - n * constants().log_g;
    row.ratio = std::exp(row.log_det - row.log_asymptote);
    return row;
}

FitReport NessModel::fit(std::span<const int> ns) {
    std::vector<double> xs, ys;
    std::vector<int> window;
    for (int n : ns) {
        if (n < 32) continue;
        const EfpTableRow row = table_row(n);
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(row.residual_y);
        window.push_back(n);
    }
    if (window.size() < 4) {
        std::ostringstream os;
        os << "fit: need at least 4 rows with n >= 32, got " << window.size();
        throw validation_error(os.str());
    }
    const auto [slope, intercept] = fit_line(xs, ys);
    FitReport report;
    report.q_hat = slope;
    report.log_f_hat = intercept;
    report.q_reference = constants().q;
    report.log_f_reference = constants().log_f;
    report.q_gap_rel = report.q_reference != 0.0
                           ? std::abs(report.q_hat - report.q_reference) / report.q_reference
                           : std::abs(report.q_hat);
    report.log_f_gap_abs = std::abs(report.log_f_hat - report.log_f_reference);
    report.window = std::move(window);
    return report;
}

std::vector<NessModel::FigurePoint> NessModel::figure(FigureKind kind, int samples) const {
    if (samples < 2) throw validation_error("figure: samples must be >= 2");
    const auto jumps = jump_set(params_);
    std::vector<FigurePoint> out;
    out.reserve(static_cast<std::size_t>(samples));
    const double step = kTwoPi / samples;
    for (int i = 0; i < samples; ++i) {
        double k = -kPi + (i + 0.5) * step;
        for (double kj : jumps) {
            if (std::abs(wrap_angle(k - kj)) < 1e-12) k += 0.25 * step;
        }
        k = wrap_angle(k);
        FigurePoint pt;
        pt.k = k;
        pt.value = kind == FigureKind::symbol ? s_hat(params_, Branch::minus, k)
                                              : regularized_symbol(params_, k);
        out.push_back(pt);
    }
    std::sort(out.begin(), out.end(),
              [](const FigurePoint& a, const FigurePoint& b) { return a.k < b.k; });
    return out;
}

std::vector<int> make_schedule(ScheduleKind kind, int n_max) {
    if (n_max < 1) throw validation_error("make_schedule: n_max must be >= 1");
    std::vector<int> out;
    if (kind == ScheduleKind::linear) {
        const int step = std::max(1, (n_max + 255) / 256);
        for (int n = 1; n <= n_max; n += step) out.push_back(n);
        return out;
    }
    // powers of two interleaved with 3*2^j: 1, 2, 3, 4, 6, 8, 12, 16, ...
    for (int n : {1, 2}) {
        if (n <= n_max) out.push_back(n);
    }
    for (long p = 4; ; p *= 2) {
        const long three = 3 * p / 4;
        if (three <= n_max) out.push_back(static_cast<int>(three));
        if (p <= n_max) out.push_back(static_cast<int>(p));
        if (p > n_max) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<double, double> fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw validation_error("fit_line: need two equally sized samples of length >= 2");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw validation_error("fit_line: regressor is constant");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace efp
