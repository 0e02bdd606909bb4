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

#include "ness_symbol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace efp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double beta_of(const NessParams& p, Side side) {
    return side == Side::left ? p.beta_l : p.beta_r;
}

int sharpness_hint(const NessParams& p) {
    return std::max(4, static_cast<int>(std::ceil(p.beta_r)));
}

// log of the global ratio tau_L(t1) tau_R(t2) / (tau_R(t1) tau_L(t2));
// drives both the k-dependent prefactor of b_P and its derivative.
double log_prefactor_ratio(const NessParams& p) {
    return std::log(tau(p, Side::left, 0.0)) + std::log(tau(p, Side::right, kPi)) -
           std::log(tau(p, Side::right, 0.0)) - std::log(tau(p, Side::left, kPi));
}

}  // namespace

double wrap_angle(double k) {
    double r = std::remainder(k, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

NessParams make_params(double beta_l, double beta_r, double lambda) {
    if (!(beta_l > 0.0) || !std::isfinite(beta_l)) {
        std::ostringstream os;
        os << "make_params: beta_l must satisfy 0 < beta_l, got " << beta_l;
        throw validation_error(os.str());
    }
    if (!(beta_r >= beta_l) || !std::isfinite(beta_r)) {
        std::ostringstream os;
        os << "make_params: need beta_l <= beta_r < inf, got beta_l=" << beta_l
           << " beta_r=" << beta_r;
        throw validation_error(os.str());
    }
    if (!std::isfinite(lambda)) {
        throw validation_error("make_params: lambda must be finite");
    }
    NessParams p;
    p.beta_l = beta_l;
    p.beta_r = beta_r;
    p.lambda = lambda;
    p.beta = 0.5 * (beta_r + beta_l);
    p.delta = 0.5 * (beta_r - beta_l);
    return p;
}

double tau(const NessParams& p, Side side, double k) {
    return 0.5 * (1.0 - std::tanh(0.5 * beta_of(p, side) * (p.lambda + std::cos(k))));
}

double tau_tilde(const NessParams& p, Side side, double k) {
    return 0.5 * (1.0 + std::tanh(0.5 * beta_of(p, side) * (p.lambda + std::cos(k))));
}

double rho(const NessParams& p, Branch branch, double k) {
    const double s = sign_plus(std::sin(k));
    const double b = branch == Branch::plus ? p.beta + s * p.delta : p.beta - s * p.delta;
    return std::tanh(0.5 * b * (p.lambda + std::cos(k)));
}

double s_hat(const NessParams& p, Branch branch, double k) {
    const double r = rho(p, branch, k);
    return branch == Branch::plus ? 0.5 * (1.0 + r) : 0.5 * (1.0 - r);
}

std::vector<JumpDatum> jump_data(const NessParams& p) {
    std::vector<JumpDatum> out;
    if (p.equilibrium()) return out;
    // one-sided limits of s_- at t1 = 1: left arc carries tau_R, right tau_L;
    // at t2 = -1 the roles swap.
    const struct {
        double angle;
        double left;
        double right;
    } candidates[2] = {
        {0.0, tau(p, Side::right, 0.0), tau(p, Side::left, 0.0)},
        {kPi, tau(p, Side::left, kPi), tau(p, Side::right, kPi)},
    };
    for (const auto& c : candidates) {
        if (std::abs(std::log(c.left / c.right)) <= kJumpDegeneracyThreshold) continue;
        JumpDatum d;
        d.angle = c.angle;
        d.point = cplx{std::cos(c.angle), std::sin(c.angle)};
        d.beta = jump_phase(cplx{c.left, 0.0}, cplx{c.right, 0.0});
        out.push_back(d);
    }
    return out;
}

std::vector<double> jump_set(const NessParams& p) {
    std::vector<double> out;
    for (const auto& d : jump_data(p)) out.push_back(d.angle);
    return out;
}

cplx jump_phase(cplx left_limit, cplx right_limit) {
    if (left_limit == cplx{} || right_limit == cplx{}) {
        throw numeric_error("jump_phase: one-sided limit vanishes, symbol is singular");
    }
    const cplx ratio = left_limit / right_limit;
    double a = std::arg(ratio);
    if (a <= -kPi) a += kTwoPi;
    return cplx{a / kTwoPi, -std::log(std::abs(ratio)) / kTwoPi};
}

cplx pure_jump_symbol(cplx beta0, double angle0, double k) {
    // arg(-e^{i theta}) with theta = k - k0, principal value in (-pi, pi]
    double a = wrap_angle(wrap_angle(k) - angle0 - kPi);
    return std::exp(cplx{0.0, 1.0} * beta0 * a);
}

double regularized_symbol(const NessParams& p, double k) {
    k = wrap_angle(k);
    const double tL1 = tau(p, Side::left, 0.0), tR1 = tau(p, Side::right, 0.0);
    const double pref = std::exp(k / kTwoPi * log_prefactor_ratio(p));
    if (k >= 0.0) {
        return pref * std::sqrt(tR1 / tL1) * tau(p, Side::left, k);
    }
    return pref * std::sqrt(tL1 / tR1) * tau(p, Side::right, k);
}

double regularized_symbol_derivative(const NessParams& p, double k) {
    k = wrap_angle(k);
    const double tL1 = tau(p, Side::left, 0.0), tR1 = tau(p, Side::right, 0.0);
    const double lr = log_prefactor_ratio(p);
    const double pref = std::exp(k / kTwoPi * lr);
    if (k >= 0.0) {
        return pref * std::sqrt(tR1 / tL1) * tau(p, Side::left, k) *
               (lr / kTwoPi + p.beta_l * tau_tilde(p, Side::left, k) * std::sin(k));
    }
    return pref * std::sqrt(tL1 / tR1) * tau(p, Side::right, k) *
           (lr / kTwoPi + p.beta_r * tau_tilde(p, Side::right, k) * std::sin(k));
}

SecondDerivativeData second_derivative_jump(const NessParams& p, int j) {
    if (j != 1 && j != 2) {
        throw validation_error("second_derivative_jump: jump index must be 1 or 2");
    }
    const double kj = j == 1 ? 0.0 : kPi;
    const double root = std::sqrt(tau(p, Side::right, kj) * tau(p, Side::left, kj));
    const double slope2 = std::pow(log_prefactor_ratio(p) / kTwoPi, 2);
    const double wL = p.beta_l * tau_tilde(p, Side::left, kj);
    const double wR = p.beta_r * tau_tilde(p, Side::right, kj);
    SecondDerivativeData d;
    if (j == 1) {
        d.d_plus = root * (slope2 + wL);
        d.d_minus = root * (slope2 + wR);
    } else {
        d.d_plus = root * (slope2 - wR);
        d.d_minus = root * (slope2 - wL);
    }
    d.jump = root * (wR - wL);
    return d;
}

double factorization_residual(const NessParams& p, double k) {
    k = wrap_angle(k);
    for (double kj : jump_set(p)) {
        if (std::abs(wrap_angle(k - kj)) < kJumpExclusionRadius) {
            std::ostringstream os;
            os << "factorization_residual: k=" << k << " lies within the exclusion radius "
               << kJumpExclusionRadius << " of jump angle " << kj;
            throw validation_error(os.str());
        }
    }
    const cplx b1 = jump_phase(cplx{tau(p, Side::right, 0.0), 0.0}, cplx{tau(p, Side::left, 0.0), 0.0});
    const cplx b2 = jump_phase(cplx{tau(p, Side::left, kPi), 0.0}, cplx{tau(p, Side::right, kPi), 0.0});
    const cplx lhs{s_hat(p, Branch::minus, k), 0.0};
    const cplx rhs = regularized_symbol(p, k) * pure_jump_symbol(b1, 0.0, k) *
                     pure_jump_symbol(b2, kPi, k);
    return std::abs(lhs - rhs);
}

TorusSymbol constant_symbol(cplx c) {
    TorusSymbol s;
    s.eval = [c](double) { return c; };
    s.real_valued = c.imag() == 0.0;
    return s;
}

TorusSymbol s_hat_symbol(const NessParams& p, Branch branch) {
    TorusSymbol s;
    s.min_panels_hint = sharpness_hint(p);
    s.eval = [p, branch](double k) { return cplx{s_hat(p, branch, k), 0.0}; };
    s.jumps = jump_set(p);
    s.splits = s.jumps;
    s.real_valued = true;
    return s;
}

TorusSymbol s_hat_plus_shifted_symbol(const NessParams& p) {
    TorusSymbol s;
    s.min_panels_hint = sharpness_hint(p);
    s.eval = [p](double k) { return cplx{s_hat(p, Branch::plus, k) - 1.0, 0.0}; };
    s.jumps = jump_set(p);
    s.splits = s.jumps;
    s.real_valued = true;
    return s;
}

TorusSymbol regularized_symbol_fn(const NessParams& p) {
    TorusSymbol s;
    s.min_panels_hint = sharpness_hint(p);
    s.eval = [p](double k) { return cplx{regularized_symbol(p, k), 0.0}; };
    // continuous, but b'' has one-sided limits only at the former jump angles
    s.splits = jump_set(p);
    s.real_valued = true;
    return s;
}

}  // namespace efp
