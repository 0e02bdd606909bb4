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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/ness_symbol.hpp"
#include "reference_values.hpp"

using namespace efp;
namespace ref = efp_ref;

namespace {
constexpr double kPi = std::numbers::pi;
const NessParams kBench = make_params(0.5, 2.5, 0.1);
}

TEST_CASE("make_params derives mean and half-difference") {
    const NessParams p = make_params(0.5, 2.5, 0.1);
    CHECK(p.beta == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(p.delta == doctest::Approx(1.0).epsilon(1e-15));
    const NessParams eq = make_params(1.5, 1.5, 0.0);
    CHECK(eq.delta == 0.0);
    CHECK(eq.equilibrium());
}

TEST_CASE("make_params rejects bad temperature ordering") {
    CHECK_THROWS_AS(make_params(2.5, 0.5, 0.1), validation_error);
    CHECK_THROWS_AS(make_params(0.0, 1.0, 0.0), validation_error);
    CHECK_THROWS_AS(make_params(-1.0, 1.0, 0.0), validation_error);
    CHECK_THROWS_AS(make_params(1.0, std::numeric_limits<double>::infinity(), 0.0),
                    validation_error);
    CHECK_THROWS_AS(make_params(1.0, 2.0, std::numeric_limits<double>::quiet_NaN()),
                    validation_error);
}

TEST_CASE("reservoir occupations at the benchmark point") {
    CHECK(tau(kBench, Side::left, 0.0) == doctest::Approx(ref::kTauL1).epsilon(1e-14));
    CHECK(tau(kBench, Side::right, 0.0) == doctest::Approx(ref::kTauR1).epsilon(1e-14));
    CHECK(tau(kBench, Side::left, kPi) == doctest::Approx(ref::kTauL2).epsilon(1e-14));
    CHECK(tau(kBench, Side::right, kPi) == doctest::Approx(ref::kTauR2).epsilon(1e-14));
    // lambda + cos k = 0 pins the occupation at 1/2 exactly
    const NessParams p = make_params(1.0, 3.0, -0.5);
    const double k0 = std::acos(0.5);
    CHECK(tau(p, Side::left, k0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tau_tilde(p, Side::right, k0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("density branches select the reservoir by the sign of sin k") {
    CHECK(rho(kBench, Branch::minus, kPi / 2) ==
          doctest::Approx(ref::kRhoMinusAtHalfPi).epsilon(1e-14));
    CHECK(rho(kBench, Branch::minus, -kPi / 2) ==
          doctest::Approx(ref::kRhoMinusAtMinusHalfPi).epsilon(1e-14));
    CHECK(s_hat(kBench, Branch::minus, kPi / 2) ==
          doctest::Approx(ref::kSMinusAtHalfPi).epsilon(1e-14));
    CHECK(s_hat(kBench, Branch::minus, -kPi / 2) ==
          doctest::Approx(ref::kSMinusAtMinusHalfPi).epsilon(1e-14));
}

TEST_CASE("equilibrium collapses the two density branches") {
    const NessParams eq = make_params(1.2, 1.2, 0.3);
    for (int i = 0; i < 64; ++i) {
        const double k = -kPi + 2 * kPi * (i + 0.5) / 64;
        CHECK(rho(eq, Branch::plus, k) ==
              doctest::Approx(rho(eq, Branch::minus, k)).epsilon(1e-15));
        CHECK(s_hat(eq, Branch::minus, k) + s_hat(eq, Branch::plus, k) ==
              doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("jump set holds both angles out of equilibrium and none at it") {
    const auto jumps = jump_set(kBench);
    REQUIRE(jumps.size() == 2);
    CHECK(jumps[0] == 0.0);
    CHECK(jumps[1] == doctest::Approx(kPi));
    CHECK(jump_set(make_params(1.5, 1.5, 0.1)).empty());
}

TEST_CASE("jump at t = 1 degenerates when lambda = -1") {
    const auto jumps = jump_set(make_params(0.5, 2.5, -1.0));
    REQUIRE(jumps.size() == 1);
    CHECK(jumps[0] == doctest::Approx(kPi));
    // mirrored case: lambda = +1 kills the jump at t = -1
    const auto mirrored = jump_set(make_params(0.5, 2.5, 1.0));
    REQUIRE(mirrored.size() == 1);
    CHECK(mirrored[0] == 0.0);
}

TEST_CASE("jump phases are purely imaginary with the expected magnitudes") {
    const auto data = jump_data(kBench);
    REQUIRE(data.size() == 2);
    CHECK(data[0].beta.real() == 0.0);
    CHECK(data[1].beta.real() == 0.0);
    CHECK(data[0].beta.imag() == doctest::Approx(ref::kImBeta1).epsilon(1e-13));
    CHECK(data[1].beta.imag() == doctest::Approx(ref::kImBeta2).epsilon(1e-13));
}

TEST_CASE("jump_phase inverts the one-sided ratio") {
    CHECK(jump_phase(cplx{0.7, 0.0}, cplx{0.7, 0.0}) == cplx{0.0, 0.0});
    CHECK_THROWS_AS(jump_phase(cplx{}, cplx{1.0, 0.0}), numeric_error);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const cplx l{u(rng) + 1.5, u(rng)};
        const cplx r{u(rng) + 1.5, u(rng)};
        const cplx beta = jump_phase(l, r);
        const cplx recon = std::exp(cplx{0.0, 2.0 * kPi} * beta);
        CHECK(std::abs(recon - l / r) <= 1e-13 * std::abs(l / r));
        // principal determination keeps the real part in (-1/2, 1/2]
        CHECK(beta.real() <= 0.5);
        CHECK(beta.real() > -0.5);
    }
}

TEST_CASE("pure jump symbol carries a single jump of the stated ratio") {
    CHECK(pure_jump_symbol(cplx{}, 0.0, 1.3) == cplx{1.0, 0.0});

    const cplx beta{0.1, 0.2};
    for (double k0 : {0.0, kPi, -1.1}) {
        const cplx left = pure_jump_symbol(beta, k0, k0 - 1e-12);
        const cplx right = pure_jump_symbol(beta, k0, k0 + 1e-12);
        CHECK(std::abs(left - std::exp(cplx{0.0, kPi} * beta)) <= 1e-10);
        CHECK(std::abs(right - std::exp(cplx{0.0, -kPi} * beta)) <= 1e-10);
    }
}

TEST_CASE("pure jump symbols reduce to occupation-ratio powers") {
    const auto data = jump_data(kBench);
    const double r1 = ref::kTauR1 / ref::kTauL1;
    const double r2 = ref::kTauL2 / ref::kTauR2;
    for (int i = 0; i < 256; ++i) {
        const double k = -kPi + 2 * kPi * (i + 0.5) / 256;
        const cplx phi1 = pure_jump_symbol(data[0].beta, 0.0, k);
        const cplx expect1 = std::pow(r1, (k + sign_plus(-k) * kPi) / (2 * kPi));
        CHECK(std::abs(phi1 - expect1) <= 1e-13);
        const cplx phi2 = pure_jump_symbol(data[1].beta, kPi, k);
        const cplx expect2 = std::pow(r2, k / (2 * kPi));
        CHECK(std::abs(phi2 - expect2) <= 1e-13);
    }
}

TEST_CASE("regularized symbol values at the former jump angles") {
    CHECK(regularized_symbol(kBench, 0.0) == doctest::Approx(ref::kBpAtZero).epsilon(1e-14));
    CHECK(regularized_symbol(kBench, kPi) == doctest::Approx(ref::kBpAtPi).epsilon(1e-14));
    // continuity across the seam
    CHECK(regularized_symbol(kBench, -kPi + 1e-9) == doctest::Approx(ref::kBpAtPi).epsilon(1e-8));
    for (int i = 0; i < 512; ++i) {
        const double k = -kPi + 2 * kPi * (i + 0.5) / 512;
        CHECK(regularized_symbol(kBench, k) > 0.0);
    }
}

TEST_CASE("equilibrium regularized symbol equals the density") {
    const NessParams eq = make_params(1.5, 1.5, 0.1);
    for (int i = 0; i < 256; ++i) {
        const double k = -kPi + 2 * kPi * (i + 0.5) / 256;
        CHECK(std::abs(regularized_symbol(eq, k) - s_hat(eq, Branch::minus, k)) <= 1e-15);
    }
}

TEST_CASE("factorization identity holds pointwise off the jumps") {
    CHECK(factorization_residual(kBench, 1.0) <= 1e-12);
    const NessParams eq = make_params(1.5, 1.5, 0.1);
    CHECK(factorization_residual(eq, 0.37) <= 1e-15);
    double worst = 0.0;
    for (int i = 0; i < 4096; ++i) {
        const double k = kPi * std::cos(kPi * (i + 0.5) / 4096);
        if (std::abs(k) < kJumpExclusionRadius) continue;
        if (std::abs(std::abs(k) - kPi) < kJumpExclusionRadius) continue;
        worst = std::max(worst, factorization_residual(kBench, k));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("factorization rejects angles inside the exclusion radius") {
    CHECK_THROWS_AS(factorization_residual(kBench, 1e-9), validation_error);
    CHECK_THROWS_AS(factorization_residual(kBench, kPi - 1e-9), validation_error);
}

TEST_CASE("closed-form derivative matches central differences") {
    CHECK(regularized_symbol_derivative(kBench, 0.0) ==
          doctest::Approx(ref::kBpSlopeAtJumps).epsilon(1e-13));
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-kPi + 1e-3, kPi - 1e-3);
    const double h = 1e-5;
    for (int trial = 0; trial < 200; ++trial) {
        double k = u(rng);
        if (std::abs(k) < 1e-3) k += 2e-3;
        const double fd =
            (regularized_symbol(kBench, k + h) - regularized_symbol(kBench, k - h)) / (2 * h);
        const double exact = regularized_symbol_derivative(kBench, k);
        CHECK(std::abs(fd - exact) <= 1e-6 * std::abs(exact));
    }
}

TEST_CASE("equilibrium derivative reduces to the density derivative") {
    const NessParams eq = make_params(1.5, 1.5, 0.1);
    const double h = 1e-6;
    for (double k : {0.4, -2.2, 1.9}) {
        const double fd =
            (s_hat(eq, Branch::minus, k + h) - s_hat(eq, Branch::minus, k - h)) / (2 * h);
        CHECK(regularized_symbol_derivative(eq, k) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("one-sided curvature limits and their jump") {
    const auto d1 = second_derivative_jump(kBench, 1);
    CHECK(d1.d_plus == doctest::Approx(ref::kDPlusBppT1).epsilon(1e-13));
    CHECK(d1.d_minus == doctest::Approx(ref::kDMinusBppT1).epsilon(1e-13));
    CHECK(d1.jump == doctest::Approx(ref::kCurvatureJumpT1).epsilon(1e-13));
    CHECK(d1.jump > 0.0);

    const auto d2 = second_derivative_jump(kBench, 2);
    CHECK(d2.d_plus == doctest::Approx(ref::kDPlusBppT2).epsilon(1e-13));
    CHECK(d2.d_minus == doctest::Approx(ref::kDMinusBppT2).epsilon(1e-13));
    CHECK(d2.jump == doctest::Approx(ref::kCurvatureJumpT2).epsilon(1e-13));

    CHECK_THROWS_AS(second_derivative_jump(kBench, 3), validation_error);
}

TEST_CASE("curvature limits agree with one-sided second differences") {
    const double h = 1e-4;
    const auto onesided = [&](double a, double dir) {
        const double f0 = regularized_symbol(kBench, a);
        const double f1 = regularized_symbol(kBench, a + dir * h);
        const double f2 = regularized_symbol(kBench, a + dir * 2 * h);
        const double f3 = regularized_symbol(kBench, a + dir * 3 * h);
        return (2 * f0 - 5 * f1 + 4 * f2 - f3) / (h * h);
    };
    const auto d1 = second_derivative_jump(kBench, 1);
    CHECK(onesided(0.0, +1.0) == doctest::Approx(d1.d_plus).epsilon(1e-4));
    CHECK(onesided(0.0, -1.0) == doctest::Approx(d1.d_minus).epsilon(1e-4));
    const auto d2 = second_derivative_jump(kBench, 2);
    CHECK(onesided(-kPi, +1.0) == doctest::Approx(d2.d_plus).epsilon(1e-4));
    CHECK(onesided(kPi, -1.0) == doctest::Approx(d2.d_minus).epsilon(1e-4));
}

TEST_CASE("identical reservoirs have no curvature jump") {
    const NessParams eq = make_params(1.0, 1.0, 0.0);
    CHECK(std::abs(second_derivative_jump(eq, 1).jump) <= 1e-15);
    CHECK(std::abs(second_derivative_jump(eq, 2).jump) <= 1e-15);
}

TEST_CASE("wrap_angle lands in the half-open interval") {
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(2 * kPi + 0.3) == doctest::Approx(0.3));
}
