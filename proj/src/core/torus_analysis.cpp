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

#include "torus_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace efp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 16-point Gauss-Legendre rule on [-1, 1], positive half (rule is symmetric).
constexpr int kHalfNodes = 8;
constexpr double kNodes[kHalfNodes] = {
    0.09501250983763744018532, 0.2816035507792589132305, 0.4580167776572273863424,
    0.6178762444026437484467,  0.7554044083550030338951, 0.8656312023878317438805,
    0.944575023073232576078,   0.9894009349916499325962,
};
constexpr double kWeights[kHalfNodes] = {
    0.1894506104550684962854,  0.1826034150449235888668, 0.1691565193950025381893,
    0.1495959888165767320815,  0.1246289712555338720525, 0.09515851168249278480993,
    0.06225352393864789286284, 0.02715245941175409485178,
};

// Smooth arcs of the circle: consecutive split angles, with the wrap-around
// arc closing the circle. A splitless symbol is one arc over (-pi, pi].
std::vector<std::pair<double, double>> make_arcs(const TorusSymbol& symbol) {
    std::vector<double> cuts = symbol.splits;
    for (double j : symbol.jumps) cuts.push_back(j);
    for (double& c : cuts) c = wrap_angle(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-14; }),
               cuts.end());
    std::vector<std::pair<double, double>> arcs;
    if (cuts.empty()) {
        arcs.emplace_back(-kPi, kPi);
        return arcs;
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) arcs.emplace_back(cuts[i], cuts[i + 1]);
    arcs.emplace_back(cuts.back(), cuts.front() + kTwoPi);
    return arcs;
}

int panel_count(double arc_length, int x, const QuadratureOptions& opts, int hint) {
    const double width_cap = kPi / std::max(1, std::abs(x));
    const int n = static_cast<int>(std::ceil(arc_length / width_cap));
    return std::max({opts.min_panels, hint, n}) * std::max(1, opts.panel_scale);
}

// integral of f over [a, b] split into `panels` equal panels
template <typename F>
cplx integrate_panels(F&& f, double a, double b, int panels) {
    cplx total{0.0, 0.0};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        cplx acc{0.0, 0.0};
        for (int i = 0; i < kHalfNodes; ++i) {
            acc += kWeights[i] * (f(mid + half * kNodes[i]) + f(mid - half * kNodes[i]));
        }
        total += half * acc;
    }
    return total;
}

void require_scalar(const TorusSymbol& symbol, const char* who) {
    if (!symbol.scalar()) {
        throw validation_error(std::string(who) + ": symbol must be scalar (arity error)");
    }
}

cplx coefficient_with_scale(const TorusSymbol& symbol, int x, const QuadratureOptions& opts) {
    cplx total{0.0, 0.0};
    for (const auto& [a, b] : make_arcs(symbol)) {
        const int panels = panel_count(b - a, x, opts, symbol.min_panels_hint);
        total += integrate_panels(
            [&](double k) {
                const double kk = wrap_angle(k);
                return symbol.eval(kk) * std::exp(cplx{0.0, -1.0} * (static_cast<double>(x) * k));
            },
            a, b, panels);
    }
    return total / kTwoPi;
}

// Branch-corrected logarithm of a continuous nonvanishing symbol on one arc.
// An unwrapped phase is tabulated on a grid refined until successive
// increments stay below pi/2, then shifted so that the arc midpoint carries
// the principal value.
class ArcLog {
public:
    ArcLog(const TorusSymbol& symbol, double a, double b) : symbol_(symbol), a_(a), b_(b) {
        int n = 256;
        for (;;) {
            build(n);
            if (ok_) break;
            n *= 2;
            if (n > (1 << 20)) {
                throw numeric_error("log_symbol_series: phase refinement failed; "
                                    "symbol is not continuous enough on an arc");
            }
        }
        // anchor: principal value at the arc midpoint
        const double mid = 0.5 * (a_ + b_);
        const double shift = std::round((phase_at(mid) - std::arg(symbol_.eval(wrap_angle(mid)))) / kTwoPi);
        offset_ = -kTwoPi * shift;
    }

    cplx operator()(double k) const {
        const cplx v = symbol_.eval(wrap_angle(k));
        const double principal = std::arg(v);
        const double target = phase_at(k) + offset_;
        const double m = std::round((target - principal) / kTwoPi);
        return cplx{std::log(std::abs(v)), principal + kTwoPi * m};
    }

private:
    void build(int n) {
        grid_phase_.assign(static_cast<std::size_t>(n) + 1, 0.0);
        step_ = (b_ - a_) / n;
        double prev = std::arg(symbol_.eval(wrap_angle(a_ + 0.5 * step_ * 1e-3)));
        // seed slightly inside the arc; the endpoints may sit on jumps
        grid_phase_[0] = prev;
        ok_ = true;
        for (int i = 1; i <= n; ++i) {
            const double k = a_ + step_ * (i == n ? (n - 1e-3) : static_cast<double>(i));
            const cplx v = symbol_.eval(wrap_angle(k));
            if (std::abs(v) == 0.0) {
                throw numeric_error("log_symbol_series: symbol vanishes on an arc");
            }
            double ph = std::arg(v);
            double d = ph - prev;
            d -= kTwoPi * std::round(d / kTwoPi);
            if (std::abs(d) >= 0.5 * kPi) ok_ = false;
            grid_phase_[static_cast<std::size_t>(i)] = grid_phase_[static_cast<std::size_t>(i) - 1] + d;
            prev = ph;
        }
    }

    double phase_at(double k) const {
        const double pos = (k - a_) / step_;
        const auto i = static_cast<std::size_t>(
            std::clamp<long>(std::lround(pos), 0, static_cast<long>(grid_phase_.size()) - 1));
        return grid_phase_[i];
    }

    const TorusSymbol& symbol_;
    double a_, b_, step_ = 1.0;
    double offset_ = 0.0;
    std::vector<double> grid_phase_;
    bool ok_ = false;
};

}  // namespace

cplx fourier_coefficient(const TorusSymbol& symbol, int x, const QuadratureOptions& opts) {
    require_scalar(symbol, "fourier_coefficient");
    if (std::abs(x) > opts.max_index) {
        std::ostringstream os;
        os << "fourier_coefficient: |x|=" << std::abs(x) << " exceeds maximum " << opts.max_index;
        throw validation_error(os.str());
    }
    return coefficient_with_scale(symbol, x, opts);
}

FourierWindow fourier_window(const TorusSymbol& symbol, int radius, const QuadratureOptions& opts) {
    require_scalar(symbol, "fourier_window");
    if (radius < 0) throw validation_error("fourier_window: radius must be >= 0");
    FourierWindow w;
    w.radius = radius;
    w.err_target = opts.err_target;
    w.coeffs.assign(2 * static_cast<std::size_t>(radius) + 1, cplx{});
    for (int x = 0; x <= radius; ++x) {
        const cplx c = fourier_coefficient(symbol, x, opts);
        w.coeffs[static_cast<std::size_t>(x + radius)] = c;
        if (symbol.real_valued) {
            w.coeffs[static_cast<std::size_t>(radius - x)] = std::conj(c);
        }
    }
    if (!symbol.real_valued) {
        for (int x = 1; x <= radius; ++x) {
            w.coeffs[static_cast<std::size_t>(radius - x)] = fourier_coefficient(symbol, -x, opts);
        }
    }
    if (opts.err_target > 0.0) {
        QuadratureOptions doubled = opts;
        doubled.panel_scale = 2 * std::max(1, opts.panel_scale);
        for (int x : {0, radius / 2, radius}) {
            const cplx ref = fourier_coefficient(symbol, x, doubled);
            if (std::abs(ref - w.at(x)) > opts.err_target) {
                std::ostringstream os;
                os << "fourier_window: coefficient " << x << " misses error target "
                   << opts.err_target << " (doubling shift " << std::abs(ref - w.at(x)) << ")";
                throw numeric_error(os.str());
            }
        }
    }
    return w;
}

LogSymbolSeries log_symbol_series(const TorusSymbol& symbol, int radius,
                                  const QuadratureOptions& opts) {
    require_scalar(symbol, "log_symbol_series");
    if (radius < 0) throw validation_error("log_symbol_series: radius must be >= 0");

    // nonvanishing on a dense sample grid
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    double min_real = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4096; ++i) {
        const double k = -kPi + kTwoPi * (i + 0.37) / 4096.0;
        const cplx v = symbol.eval(k);
        min_abs = std::min(min_abs, std::abs(v));
        max_abs = std::max(max_abs, std::abs(v));
        min_real = std::min(min_real, v.real());
    }
    if (!(min_abs > 1e-13 * max_abs)) {
        throw numeric_error("log_symbol_series: symbol vanishes on the sample grid "
                            "(nonvanishing precondition failed)");
    }
    const int wind = winding_number(symbol);
    if (wind != 0) {
        std::ostringstream os;
        os << "log_symbol_series: winding number is " << wind
           << ", nonzero index precondition failed";
        throw numeric_error(os.str());
    }

    LogSymbolSeries series;
    series.radius = radius;
    series.coeffs.assign(2 * static_cast<std::size_t>(radius) + 1, cplx{});
    const auto arcs = make_arcs(symbol);
    std::vector<ArcLog> logs;
    logs.reserve(arcs.size());
    for (const auto& [a, b] : arcs) logs.emplace_back(symbol, a, b);

    // positive real symbols have a real logarithm, so the series is hermitian
    const bool hermitian = symbol.real_valued && min_real > 0.0;

    for (int l = hermitian ? 0 : -radius; l <= radius; ++l) {
        cplx total{0.0, 0.0};
        for (std::size_t ai = 0; ai < arcs.size(); ++ai) {
            const auto& [a, b] = arcs[ai];
            const ArcLog& lg = logs[ai];
            total += integrate_panels(
                [&](double k) {
                    return lg(k) * std::exp(cplx{0.0, -1.0} * (static_cast<double>(l) * k));
                },
                a, b, panel_count(b - a, l, opts, symbol.min_panels_hint));
        }
        series.coeffs[static_cast<std::size_t>(l + radius)] = total / kTwoPi;
        if (hermitian) {
            series.coeffs[static_cast<std::size_t>(radius - l)] = std::conj(total / kTwoPi);
        }
    }
    return series;
}

int winding_number(const TorusSymbol& symbol) {
    require_scalar(symbol, "winding_number");
    int n = 1024;
    for (;;) {
        double total = 0.0;
        double prev = std::arg(symbol.eval(wrap_angle(-kPi + kTwoPi * 0.25 / n)));
        const double first = prev;
        bool fine = true;
        for (int i = 1; i <= n; ++i) {
            const double k = wrap_angle(-kPi + kTwoPi * (i + 0.25) / n);
            const cplx v = symbol.eval(k);
            if (std::abs(v) < 1e-14) {
                throw numeric_error("winding_number: symbol vanishes on the grid");
            }
            const double ph = (i == n) ? first : std::arg(v);
            double d = ph - prev;
            d -= kTwoPi * std::round(d / kTwoPi);
            if (std::abs(d) >= 0.5 * kPi) fine = false;
            total += d;
            prev = ph;
        }
        if (fine) {
            const double w = total / kTwoPi;
            const double rounded = std::round(w);
            if (std::abs(w - rounded) >= 0.01) {
                std::ostringstream os;
                os << "winding_number: ill-conditioned winding " << w
                   << " (integer residual >= 0.01)";
                throw numeric_error(os.str());
            }
            return static_cast<int>(rounded);
        }
        n *= 2;
        if (n > (1 << 20)) {
            throw numeric_error("winding_number: phase refinement failed; "
                                "symbol appears discontinuous");
        }
    }
}

BesovCheck besov_b11_check(const TorusSymbol& symbol, double k_floor) {
    require_scalar(symbol, "besov_b11_check");
    if (!(k_floor > 0.0)) throw validation_error("besov_b11_check: k_floor must be > 0");

    // cache the symbol on a uniform grid; second differences become strided sums
    const int n = 1 << 17;
    const double h0 = kTwoPi / n;
    std::vector<cplx> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = symbol.eval(wrap_angle(-kPi + h0 * i));

    const auto second_difference_l1 = [&](int m) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const int ip = (i + m) % n;
            const int im = (i - m % n + n) % n;
            s += std::abs(f[static_cast<std::size_t>(ip)] - 2.0 * f[static_cast<std::size_t>(i)] +
                          f[static_cast<std::size_t>(im)]);
        }
        return s * h0;
    };

    // fixed geometric ladder from pi downward, snapped to grid multiples, so
    // shrinking k_floor only prepends panels (the estimate is monotone in it)
    std::vector<int> ladder;
    for (double k = kPi; k >= std::max(k_floor, h0); k /= 1.06) {
        const int m = std::max(1, static_cast<int>(std::lround(k / h0)));
        if (ladder.empty() || m < ladder.back()) ladder.push_back(m);
    }
    std::reverse(ladder.begin(), ladder.end());  // ascending in k

    double integral = 0.0;
    double prev_k = ladder.front() * h0;
    double prev_g = second_difference_l1(ladder.front()) / (prev_k * prev_k);
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        const double k = ladder[i] * h0;
        const double g = second_difference_l1(ladder[i]) / (k * k);
        integral += 0.5 * (g + prev_g) * (k - prev_k);
        prev_k = k;
        prev_g = g;
    }
    integral *= 2.0;  // the integrand is even in k

    // ||b''||_inf from central second differences away from jumps/kinks
    const double h = 1e-4;
    const double clearance = 10.0 * h;
    std::vector<double> cuts = symbol.splits;
    cuts.insert(cuts.end(), symbol.jumps.begin(), symbol.jumps.end());
    double binf = 0.0;
    const int samples = 4096;
    for (int i = 0; i < samples; ++i) {
        const double k = -kPi + kTwoPi * (i + 0.5) / samples;
        bool near_cut = false;
        for (double c : cuts) {
            if (std::abs(wrap_angle(k - c)) < clearance) near_cut = true;
        }
        if (near_cut) continue;
        const cplx dd = symbol.eval(wrap_angle(k + h)) - 2.0 * symbol.eval(wrap_angle(k)) +
                        symbol.eval(wrap_angle(k - h));
        binf = std::max(binf, std::abs(dd) / (h * h));
    }

    BesovCheck out;
    out.integral_estimate = integral;
    out.bound = 4.0 * kPi * kPi * binf;
    out.holds = integral <= out.bound * (1.0 + 1e-6);
    return out;
}

}  // namespace efp
