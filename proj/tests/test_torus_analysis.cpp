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

#include "core/torus_analysis.hpp"
#include "reference_values.hpp"

using namespace efp;
namespace ref = efp_ref;

namespace {
constexpr double kPi = std::numbers::pi;
const NessParams kBench = make_params(0.5, 2.5, 0.1);

TorusSymbol unit_power(int m) {
    TorusSymbol s;
    s.eval = [m](double k) { return std::exp(cplx{0.0, 1.0} * (static_cast<double>(m) * k)); };
    return s;
}
}

TEST_CASE("coefficients of the constant symbol") {
    const TorusSymbol one = constant_symbol(cplx{1.0, 0.0});
    CHECK(std::abs(fourier_coefficient(one, 0) - cplx{1.0, 0.0}) <= 1e-14);
    for (int x : {1, -1, 5, -17}) {
        CHECK(std::abs(fourier_coefficient(one, x)) <= 1e-14);
    }
}

TEST_CASE("coefficients of pure oscillations pick out the matching index") {
    // with a_x = int a(e^{ik}) e^{-ikx} dk/2pi, the symbol e^{imk} has a_m = 1
    for (int m : {1, -1, 3}) {
        const TorusSymbol s = unit_power(m);
        CHECK(std::abs(fourier_coefficient(s, m) - cplx{1.0, 0.0}) <= 1e-14);
        for (int x : {0, m + 1, m - 1, -m}) {
            if (x == m) continue;
            CHECK(std::abs(fourier_coefficient(s, x)) <= 1e-14);
        }
    }
}

TEST_CASE("density coefficients match the high-precision references") {
    const TorusSymbol s = s_hat_symbol(kBench, Branch::minus);
    CHECK(std::abs(fourier_coefficient(s, 0) - cplx{ref::kS0, 0.0}) <= 1e-13);
    CHECK(std::abs(fourier_coefficient(s, 1) - cplx{ref::kS1Re, ref::kS1Im}) <= 1e-13);
    CHECK(std::abs(fourier_coefficient(s, 2) - cplx{ref::kS2Re, ref::kS2Im}) <= 1e-13);
    CHECK(std::abs(fourier_coefficient(s, 3) - cplx{ref::kS3Re, ref::kS3Im}) <= 1e-13);
}

TEST_CASE("hermitian symmetry of real-symbol coefficients") {
    const TorusSymbol s = s_hat_symbol(kBench, Branch::minus);
    for (int x : {1, 2, 9, 33}) {
        const cplx plus = fourier_coefficient(s, x);
        const cplx minus = fourier_coefficient(s, -x);
        CHECK(std::abs(minus - std::conj(plus)) <= 1e-13);
    }
}

TEST_CASE("coefficient quadrature is stable under panel doubling") {
    const TorusSymbol s = s_hat_symbol(kBench, Branch::minus);
    QuadratureOptions doubled;
    doubled.panel_scale = 2;
    for (int x : {0, 1, 13, 64, 128}) {
        CHECK(std::abs(fourier_coefficient(s, x) - fourier_coefficient(s, x, doubled)) <= 1e-12);
    }
}

TEST_CASE("window populates every index and mirrors real symbols") {
    const FourierWindow w = fourier_window(s_hat_symbol(kBench, Branch::minus), 32);
    CHECK(w.radius == 32);
    CHECK(w.coeffs.size() == 65);
    for (int x = 0; x <= 32; ++x) {
        CHECK(w.at(-x) == std::conj(w.at(x)));
    }
    CHECK_THROWS_AS(w.at(33), validation_error);
}

TEST_CASE("block-arity symbols are rejected by the scalar quadrature") {
    TorusSymbol block;
    block.eval_block = [](double) {
        return std::array<cplx, 4>{cplx{}, cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{}};
    };
    CHECK_THROWS_AS(fourier_coefficient(block, 0), validation_error);
    CHECK_THROWS_AS(fourier_window(block, 4), validation_error);
}

TEST_CASE("coefficient index limit is enforced") {
    const TorusSymbol one = constant_symbol(cplx{1.0, 0.0});
    CHECK_THROWS_AS(fourier_coefficient(one, 5000), validation_error);
    QuadratureOptions opts;
    opts.max_index = 64;
    CHECK_THROWS_AS(fourier_coefficient(one, 65, opts), validation_error);
}

TEST_CASE("log series of a positive constant") {
    const LogSymbolSeries logs = log_symbol_series(constant_symbol(cplx{2.5, 0.0}), 8);
    CHECK(std::abs(logs.at(0) - std::log(2.5)) <= 1e-14);
    for (int l = 1; l <= 8; ++l) {
        CHECK(std::abs(logs.at(l)) <= 1e-14);
        CHECK(std::abs(logs.at(-l)) <= 1e-14);
    }
}

TEST_CASE("log series zeroth coefficient gives the decay base") {
    const LogSymbolSeries logs = log_symbol_series(regularized_symbol_fn(kBench), 64);
    CHECK(logs.at(0).real() == doctest::Approx(ref::kLogG).epsilon(1e-12));
    CHECK(std::abs(logs.at(0).imag()) <= 1e-14);
}

TEST_CASE("log series coefficients decay cubically") {
    const LogSymbolSeries logs = log_symbol_series(regularized_symbol_fn(kBench), 256);
    double bound = 0.0;
    for (int l = 8; l <= 256; ++l) {
        bound = std::max(bound, std::abs(logs.at(l)) * std::pow(static_cast<double>(l), 3));
    }
    CHECK(bound < 1.0);  // bounded l^3 |c_l| over the scanned range
    CHECK(bound > 0.0);
}

TEST_CASE("log series is invariant under grid refinement") {
    QuadratureOptions doubled;
    doubled.panel_scale = 2;
    const LogSymbolSeries a = log_symbol_series(regularized_symbol_fn(kBench), 48);
    const LogSymbolSeries b = log_symbol_series(regularized_symbol_fn(kBench), 48, doubled);
    for (int l = -48; l <= 48; ++l) {
        CHECK(std::abs(a.at(l) - b.at(l)) <= 1e-12);
    }
}

TEST_CASE("log series rejects vanishing symbols and nonzero winding") {
    TorusSymbol vanishing;
    vanishing.eval = [](double k) { return cplx{1.0 + std::cos(k), 0.0}; };  // zero at k = pi
    CHECK_THROWS_AS(log_symbol_series(vanishing, 8), numeric_error);
    CHECK_THROWS_AS(log_symbol_series(unit_power(1), 8), numeric_error);
}

TEST_CASE("winding numbers of elementary symbols") {
    CHECK(winding_number(constant_symbol(cplx{5.0, 0.0})) == 0);
    CHECK(winding_number(unit_power(1)) == 1);
    CHECK(winding_number(unit_power(-2)) == -2);
    CHECK(winding_number(regularized_symbol_fn(kBench)) == 0);
}

TEST_CASE("winding rejects symbols passing through zero") {
    TorusSymbol vanishing;
    vanishing.eval = [](double k) { return cplx{std::cos(k), 0.0} + cplx{1.0, 0.0}; };
    CHECK_THROWS_AS(winding_number(vanishing), numeric_error);
}

TEST_CASE("besov check: constant symbol integrates to zero") {
    const BesovCheck b = besov_b11_check(constant_symbol(cplx{1.0, 0.0}), 1e-3);
    CHECK(b.integral_estimate == doctest::Approx(0.0));
    CHECK(b.holds);
}

TEST_CASE("besov check holds for the regularized symbol") {
    const BesovCheck b = besov_b11_check(regularized_symbol_fn(kBench), 1e-4);
    CHECK(b.holds);
    CHECK(b.integral_estimate > 0.0);
    CHECK(b.bound > b.integral_estimate);
}

TEST_CASE("besov integral grows monotonically as the cutoff shrinks") {
    const TorusSymbol b = regularized_symbol_fn(kBench);
    double prev = 0.0;
    for (double floor : {1e-2, 1e-3, 1e-4}) {
        const BesovCheck check = besov_b11_check(b, floor);
        CHECK(check.integral_estimate >= prev);
        prev = check.integral_estimate;
    }
    // convergence: the last refinement adds little
    const double at3 = besov_b11_check(b, 1e-3).integral_estimate;
    CHECK(prev - at3 <= 0.05 * prev);
    CHECK_THROWS_AS(besov_b11_check(b, 0.0), validation_error);
}

TEST_CASE("parseval partial sums approach the squared norm from below") {
    const TorusSymbol s = s_hat_symbol(kBench, Branch::minus);
    TorusSymbol squared;
    squared.eval = [](double) { return cplx{}; };
    const NessParams p = kBench;
    squared.eval = [p](double k) {
        const double v = s_hat(p, Branch::minus, k);
        return cplx{v * v, 0.0};
    };
    squared.jumps = s.jumps;
    squared.splits = s.splits;
    squared.real_valued = true;
    squared.min_panels_hint = s.min_panels_hint;
    const double norm2 = fourier_coefficient(squared, 0).real();
    const FourierWindow w = fourier_window(s, 128);
    double prev_gap = std::numeric_limits<double>::infinity();
    for (int m : {8, 32, 128}) {
        double sum = 0.0;
        for (int x = -m; x <= m; ++x) sum += std::norm(w.at(x));
        const double gap = norm2 - sum;
        CHECK(gap >= -1e-12);
        CHECK(gap <= prev_gap + 1e-14);
        prev_gap = gap;
    }
    CHECK(prev_gap <= 1e-3);
}
