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

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace efp {

using cplx = std::complex<double>;

/// Normalize an angle into (-pi, pi].
double wrap_angle(double k);

/// sign(0) = +1 convention used throughout the momentum-space densities.
inline double sign_plus(double x) { return x >= 0.0 ? 1.0 : -1.0; }

/// Physical inputs of the two-reservoir steady state. beta and delta are
/// the derived mean and half-difference of the inverse temperatures.
struct NessParams {
    double beta_l = 0.0;
    double beta_r = 0.0;
    double lambda = 0.0;
    double beta = 0.0;   // (beta_r + beta_l) / 2
    double delta = 0.0;  // (beta_r - beta_l) / 2

    bool equilibrium() const { return delta == 0.0; }
};

/// Validates 0 < beta_l <= beta_r < inf and finite lambda.
NessParams make_params(double beta_l, double beta_r, double lambda);

enum class Side { left, right };
enum class Branch { plus, minus };

/// Reservoir occupation tau_a(e^{ik}) = (1 - tanh(beta_a (lambda + cos k)/2))/2,
/// strictly inside (0,1) at finite temperature.
double tau(const NessParams& p, Side side, double k);

/// Companion factor (1 + tanh(beta_a (lambda + cos k)/2))/2 = 1 - tau_a.
double tau_tilde(const NessParams& p, Side side, double k);

/// Momentum density rho_pm(e^{ik}) = tanh((beta pm sign(sin k) delta)(lambda + cos k)/2).
double rho(const NessParams& p, Branch branch, double k);

/// Steady-state density s_pm(e^{ik}) = (1 pm rho_pm(e^{ik}))/2.
double s_hat(const NessParams& p, Branch branch, double k);

/// A jump point of the density symbol together with its pure jump phase.
struct JumpDatum {
    double angle = 0.0;  // in (-pi, pi]
    cplx point{1.0, 0.0};
    cplx beta{0.0, 0.0};
};

// A candidate jump is dropped when |log(left/right)| falls below this
// threshold (lambda = -+1 makes one jump phase exactly zero).
inline constexpr double kJumpDegeneracyThreshold = 1e-13;

// Pointwise identities are not evaluated closer than this to a jump angle;
// the one-sided limits are fine but the seam itself is branch-ambiguous.
inline constexpr double kJumpExclusionRadius = 1e-8;

/// Jump angles of s_- (subset of {0, pi}; empty in equilibrium).
std::vector<double> jump_set(const NessParams& p);

/// Jump angles with their phases beta_j, same filtering as jump_set.
std::vector<JumpDatum> jump_data(const NessParams& p);

/// Phase beta with e^{2 pi i beta} = left/right, principal determination:
/// beta = arg(left/right)/(2 pi) - i log|left/right|/(2 pi).
cplx jump_phase(cplx left_limit, cplx right_limit);

/// phi_{beta0,t0}(e^{ik}) = exp(i beta0 arg(-e^{i(k - k0)})), arg in (-pi, pi].
cplx pure_jump_symbol(cplx beta0, double angle0, double k);

/// The continuous positive factor b_P left after dividing both pure jump
/// symbols out of s_-.
double regularized_symbol(const NessParams& p, double k);

/// Closed-form derivative of the regularized symbol; continuous across the
/// jump angles, where both branch formulas coincide.
double regularized_symbol_derivative(const NessParams& p, double k);

/// One-sided limits of b_P'' at jump point j (1 -> t=1, 2 -> t=-1).
/// d_plus approaches from larger k (at t=-1: from the -pi side),
/// d_minus from smaller k. jump = d_minus - d_plus.
struct SecondDerivativeData {
    double d_plus = 0.0;
    double d_minus = 0.0;
    double jump = 0.0;
};
SecondDerivativeData second_derivative_jump(const NessParams& p, int j);

/// |s_-(e^{ik}) - b_P(e^{ik}) phi_1(e^{ik}) phi_2(e^{ik})|. Rejects k inside
/// the exclusion radius of an actual jump angle.
double factorization_residual(const NessParams& p, double k);

/// Evaluatable function on the unit circle. `jumps` is the discontinuity
/// set; `splits` additionally marks angles where higher derivatives kink,
/// so quadrature never integrates across them. Scalar symbols fill `eval`,
/// 2x2 block symbols fill `eval_block` (row major). `min_panels_hint`
/// raises the quadrature panel floor for sharp symbols (the tanh
/// transition narrows like 1/beta).
struct TorusSymbol {
    std::function<cplx(double)> eval;
    std::function<std::array<cplx, 4>(double)> eval_block;
    std::vector<double> jumps;
    std::vector<double> splits;
    bool real_valued = false;
    int min_panels_hint = 0;

    bool scalar() const { return static_cast<bool>(eval); }
};

TorusSymbol constant_symbol(cplx c);
TorusSymbol s_hat_symbol(const NessParams& p, Branch branch);
TorusSymbol s_hat_plus_shifted_symbol(const NessParams& p);  // s_+ - 1
TorusSymbol regularized_symbol_fn(const NessParams& p);

}  // namespace efp
