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

#include "fh_asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace efp {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Hurwitz zeta(s, a) for integer s >= 2 and large a, Euler-Maclaurin with
// four Bernoulli terms; ample for a >= 65.
double hurwitz_zeta_int(int s, double a) {
    static constexpr double kBernoulli[4] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    static constexpr double kFactorial[4] = {2.0, 24.0, 720.0, 40320.0};
    double val = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -static_cast<double>(s));
    for (int j = 1; j <= 4; ++j) {
        double poch = 1.0;
        for (int m = 0; m < 2 * j - 1; ++m) poch *= (s + m);
        val += kBernoulli[j - 1] / kFactorial[j - 1] * poch * std::pow(a, -(s + 2.0 * j - 1.0));
    }
    return val;
}

// principal power with a guard against bases sitting on the branch cut
cplx guarded_pow(cplx base, cplx exponent, const char* who) {
    if (std::abs(base.imag()) <= 1e-13 * std::abs(base) && base.real() < 0.0) {
        std::ostringstream os;
        os << who << ": power base " << base.real() << "+" << base.imag()
           << "i lies on the negative real axis; principal branch is ambiguous";
        throw numeric_error(os.str());
    }
    if (std::abs(base) == 0.0) {
        throw numeric_error(std::string(who) + ": zero power base");
    }
    return std::exp(exponent * std::log(base));
}

// sum_{l>=1} (log b)_{+l} t^{+l} and its mirror with -l, t^{-l}
std::pair<cplx, cplx> one_sided_log_sums(const LogSymbolSeries& logs, cplx t) {
    cplx sp{}, sm{};
    cplx tp{1.0, 0.0};
    const cplx tinv = cplx{1.0, 0.0} / t;
    cplx tm{1.0, 0.0};
    for (int l = 1; l <= logs.radius; ++l) {
        tp *= t;
        tm *= tinv;
        sp += logs.at(l) * tp;
        sm += logs.at(-l) * tm;
    }
    return {sp, sm};
}

}  // namespace

cplx barnes_g(cplx z) {
    if (std::abs(z) > 8.0) {
        std::ostringstream os;
        os << "barnes_g: |z| = " << std::abs(z) << " outside the supported disk |z| <= 8";
        throw validation_error(os.str());
    }
    const cplx w = z - 1.0;
    if (std::abs(w) == 0.0) return cplx{1.0, 0.0};

    const int terms = std::max(64, static_cast<int>(std::ceil(4.0 * std::abs(w))) + 8);
    cplx s = 0.5 * w * std::log(kTwoPi) - 0.5 * w * (w + 1.0) - 0.5 * kEulerGamma * w * w;
    for (int n = 1; n <= terms; ++n) {
        const cplx q = 1.0 + w / static_cast<double>(n);
        if (std::abs(q) == 0.0) return cplx{};  // zeros at z = 0, -1, -2, ...
        s += static_cast<double>(n) * std::log(q) - w + w * w / (2.0 * n);
    }
    // tail: sum_{m>=3} (-1)^{m-1} w^m / m * zeta(m-1, terms+1)
    const double a = terms + 1.0;
    cplx wp = w * w;
    for (int m = 3; m <= 80; ++m) {
        wp *= w;
        const cplx term = (m % 2 == 1 ? 1.0 : -1.0) * wp / static_cast<double>(m) *
                          hurwitz_zeta_int(m - 1, a);
        s += term;
        if (std::abs(term) < 1e-19 * (1.0 + std::abs(s))) break;
    }
    return std::exp(s);
}

cplx szego_constant(const LogSymbolSeries& logs) { return std::exp(logs.at(0)); }

cplx power_exponent(std::span<const SingularPoint> singular) {
    cplx q{};
    for (const auto& sp : singular) q += sp.alpha * sp.alpha - sp.beta * sp.beta;
    return q;
}

cplx e_of_b(const LogSymbolSeries& logs, double* tail_bound) {
    if (logs.radius < 64) {
        throw validation_error("e_of_b: log series radius must be >= 64");
    }
    cplx s{};
    for (int l = 1; l <= logs.radius; ++l) {
        s += static_cast<double>(l) * logs.at(l) * logs.at(-l);
    }
    // observed decay: |c_l| ~ A / l^3 for a symbol with kinked curvature,
    // so the tail of l c_l c_{-l} behaves like A^2 / l^5
    double amp = 0.0;
    for (int l = logs.radius / 2; l <= logs.radius; ++l) {
        amp = std::max(amp, std::abs(logs.at(l)) * std::pow(static_cast<double>(l), 3));
    }
    const double tail = amp * amp / (4.0 * std::pow(static_cast<double>(logs.radius), 4));
    if (tail_bound) *tail_bound = tail;
    if (!(tail < 1e-8)) {
        std::ostringstream os;
        os << "e_of_b: truncation tail estimate " << tail
           << " has not converged at radius " << logs.radius;
        throw numeric_error(os.str());
    }
    return std::exp(s);
}

std::pair<cplx, cplx> b_plus_minus(const LogSymbolSeries& logs, cplx t_point) {
    if (std::abs(std::abs(t_point) - 1.0) > 1e-12) {
        throw validation_error("b_plus_minus: point must lie on the unit circle");
    }
    const auto [sp, sm] = one_sided_log_sums(logs, t_point);
    return {std::exp(sp), std::exp(sm)};
}

AsymptoticConstants fh_constant(const FHSymbolData& data, const LogSymbolSeries& logs) {
    const auto& pts = data.singular;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (std::abs(pts[i].alpha.real()) >= 0.5 || std::abs(pts[i].beta.real()) >= 0.5) {
            throw validation_error("fh_constant: |Re(alpha_j)| and |Re(beta_j)| must be < 1/2");
        }
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (std::abs(pts[i].t - pts[j].t) < 1e-12) {
                throw validation_error("fh_constant: singular points must be pairwise distinct");
            }
        }
    }

    AsymptoticConstants out;
    out.singular = pts;
    out.log_g = logs.at(0);
    out.q = power_exponent(pts);
    out.e_b = e_of_b(logs, &out.e_b_tail_bound);

    cplx log_f = std::log(out.e_b);
    for (const auto& sp : pts) {
        const auto [lp, lm] = one_sided_log_sums(logs, sp.t);
        out.b_plus.push_back(std::exp(lp));
        out.b_minus.push_back(std::exp(lm));
        // b_+^{-(a-b)} b_-^{-(a+b)}, evaluated with the series logarithms
        log_f += -(sp.alpha - sp.beta) * lp - (sp.alpha + sp.beta) * lm;
        const cplx gb = barnes_g(1.0 + sp.alpha + sp.beta) * barnes_g(1.0 + sp.alpha - sp.beta) /
                        barnes_g(1.0 + 2.0 * sp.alpha);
        out.barnes_factors.push_back(gb);
        log_f += std::log(gb);
    }
    cplx cross{1.0, 0.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const cplx base = 1.0 - pts[i].t / pts[j].t;
            const cplx expo = -(pts[i].alpha - pts[i].beta) * (pts[j].alpha + pts[j].beta);
            cross *= guarded_pow(base, expo, "fh_constant");
        }
    }
    out.cross_factor = cross;
    log_f += std::log(cross);
    out.log_f = log_f;

    // second route for the pure-jump case on {1, -1}: the cross factor
    // collapses to 2^{2 b1 b2} and the Barnes factors to G(1+b)G(1-b)
    bool jump_only = !pts.empty();
    for (const auto& sp : pts) {
        if (std::abs(sp.alpha) > 0.0) jump_only = false;
        if (std::abs(sp.t - cplx{1.0, 0.0}) > 1e-12 && std::abs(sp.t + cplx{1.0, 0.0}) > 1e-12) {
            jump_only = false;
        }
    }
    if (jump_only) {
        cplx spec = std::log(out.e_b);
        cplx beta_prod{1.0, 0.0};
        for (const auto& sp : pts) beta_prod *= sp.beta;
        if (pts.size() == 2) spec += 2.0 * beta_prod * std::log(2.0);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const auto [lp, lm] = one_sided_log_sums(logs, pts[j].t);
            spec += pts[j].beta * (lp - lm);
            spec += std::log(barnes_g(1.0 + pts[j].beta) * barnes_g(1.0 - pts[j].beta));
        }
        const cplx f_general = std::exp(out.log_f);
        const cplx f_special = std::exp(spec);
        out.two_path_gap = std::abs(f_general - f_special) / std::abs(f_special);
    }
    return out;
}

double fh_log_asymptote(const AsymptoticConstants& constants, int n) {
    if (n < 2) throw validation_error("fh_log_asymptote: n must be >= 2");
    const cplx v = static_cast<double>(n) * constants.log_g +
                   constants.q * std::log(static_cast<double>(n)) + constants.log_f;
    return v.real();
}

}  // namespace efp
