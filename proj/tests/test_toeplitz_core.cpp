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

#include "core/toeplitz_core.hpp"
#include "reference_values.hpp"

using namespace efp;
namespace ref = efp_ref;

namespace {
constexpr double kPi = std::numbers::pi;
const NessParams kBench = make_params(0.5, 2.5, 0.1);

SkewMatrix random_skew(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SkewMatrix s;
    s.m = CMatrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx v{u(rng), u(rng)};
            s.m(i, j) = v;
            s.m(j, i) = -v;
        }
    }
    return s;
}
}

TEST_CASE("signed log values accumulate factors") {
    SignedLogValue v = SignedLogValue::one();
    v.multiply(cplx{-2.0, 0.0});
    v.multiply(cplx{0.5, 0.0});
    CHECK(v.real_value() == doctest::Approx(-1.0).epsilon(1e-15));
    v.multiply(cplx{});
    CHECK(v.is_zero());
    CHECK(v.complex_value() == cplx{});
    CHECK(SignedLogValue::zero().is_zero());
}

TEST_CASE("sections of the constant symbol are identity matrices") {
    const FourierWindow w = fourier_window(constant_symbol(cplx{1.0, 0.0}), 4);
    const ToeplitzSection s = toeplitz_section(w, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(s.entries(i, j) - (i == j ? cplx{1.0, 0.0} : cplx{})) <= 1e-14);
        }
    }
    const ToeplitzSection one = toeplitz_section(w, 1);
    CHECK(one.n == 1);
}

TEST_CASE("sections require a wide enough window") {
    const FourierWindow w = fourier_window(s_hat_symbol(kBench, Branch::minus), 3);
    CHECK_THROWS_AS(toeplitz_section(w, 5), validation_error);
    CHECK_THROWS_AS(toeplitz_section(w, 0), validation_error);
}

TEST_CASE("density sections are hermitian with the mean on the diagonal") {
    const FourierWindow w = fourier_window(s_hat_symbol(kBench, Branch::minus), 1);
    const ToeplitzSection s = toeplitz_section(w, 2);
    CHECK(s.entries(0, 0).real() == doctest::Approx(ref::kS0).epsilon(1e-13));
    CHECK(s.entries(1, 1) == s.entries(0, 0));
    CHECK(std::abs(s.entries(0, 1) - std::conj(s.entries(1, 0))) <= 1e-15);
}

TEST_CASE("log determinant of identity and scaled identity") {
    const FourierWindow w1 = fourier_window(constant_symbol(cplx{1.0, 0.0}), 8);
    CHECK(log_det_posdef(toeplitz_section(w1, 6)).log_magnitude ==
          doctest::Approx(0.0).epsilon(1e-13));
    const FourierWindow wc = fourier_window(constant_symbol(cplx{0.37, 0.0}), 8);
    CHECK(log_det_posdef(toeplitz_section(wc, 5)).log_magnitude ==
          doctest::Approx(5 * std::log(0.37)).epsilon(1e-13));
}

TEST_CASE("log determinant rejects non-hermitian and indefinite input") {
    ToeplitzSection bad;
    bad.n = 2;
    bad.entries = CMatrix(2, 2);
    bad.entries(0, 0) = 1.0;
    bad.entries(1, 1) = 1.0;
    bad.entries(0, 1) = cplx{0.5, 0.0};
    bad.entries(1, 0) = cplx{0.1, 0.0};
    CHECK_THROWS_AS(log_det_posdef(bad), numeric_error);

    const FourierWindow w = fourier_window(constant_symbol(cplx{-1.0, 0.0}), 4);
    CHECK_THROWS_AS(log_det_posdef(toeplitz_section(w, 2)), numeric_error);
}

TEST_CASE("cholesky pivots stay within the symbol range") {
    const FourierWindow w = fourier_window(s_hat_symbol(kBench, Branch::minus), 63);
    std::vector<double> pivots;
    log_det_posdef(toeplitz_section(w, 64), &pivots);
    REQUIRE(pivots.size() == 64);
    for (double d : pivots) {
        CHECK(d > 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("pfaffian of the elementary blocks") {
    SkewMatrix two;
    two.m = CMatrix(2, 2);
    two.m(0, 1) = cplx{3.5, -1.0};
    two.m(1, 0) = cplx{-3.5, 1.0};
    CHECK(std::abs(pfaffian(two).complex_value() - cplx{3.5, -1.0}) <= 1e-14);
    CHECK(std::abs(pfaffian_bruteforce(two) - cplx{3.5, -1.0}) <= 1e-14);

    std::mt19937_64 rng(5);
    const SkewMatrix four = random_skew(rng, 4);
    const cplx expect = four.m(0, 1) * four.m(2, 3) - four.m(0, 2) * four.m(1, 3) +
                        four.m(0, 3) * four.m(1, 2);
    CHECK(std::abs(pfaffian(four).complex_value() - expect) <= 1e-13);
    CHECK(std::abs(pfaffian_bruteforce(four) - expect) <= 1e-13);
}

TEST_CASE("pairing signs follow the crossing count") {
    SkewMatrix s;
    s.m = CMatrix(6, 6);
    // (12)(34)(56): no crossings, +1
    s.m(0, 1) = 1.0; s.m(1, 0) = -1.0;
    s.m(2, 3) = 1.0; s.m(3, 2) = -1.0;
    s.m(4, 5) = 1.0; s.m(5, 4) = -1.0;
    CHECK(std::abs(pfaffian_bruteforce(s) - cplx{1.0, 0.0}) <= 1e-15);

    SkewMatrix c;
    c.m = CMatrix(6, 6);
    // (12)(35)(46): pairs 3-5 and 4-6 cross once, -1
    c.m(0, 1) = 1.0; c.m(1, 0) = -1.0;
    c.m(2, 4) = 1.0; c.m(4, 2) = -1.0;
    c.m(3, 5) = 1.0; c.m(5, 3) = -1.0;
    CHECK(std::abs(pfaffian_bruteforce(c) - cplx{-1.0, 0.0}) <= 1e-15);
}

TEST_CASE("elimination pfaffian matches the combinatorial oracle") {
    std::mt19937_64 rng(23);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 * (1 + static_cast<std::size_t>(trial % 4));
        const SkewMatrix s = random_skew(rng, dim);
        const cplx fast = pfaffian(s).complex_value();
        const cplx slow = pfaffian_bruteforce(s);
        worst = std::max(worst, std::abs(fast - slow) / std::abs(slow));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("pfaffian squared equals the determinant") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 2 * (1 + static_cast<std::size_t>(trial % 4));
        const SkewMatrix s = random_skew(rng, dim);
        const cplx pf = pfaffian(s).complex_value();
        const cplx det = lu_det(s.m);
        CHECK(std::abs(pf * pf - det) <= 1e-10 * std::abs(det));
    }
}

TEST_CASE("pfaffian rejects malformed input") {
    SkewMatrix odd;
    odd.m = CMatrix(3, 3);
    CHECK_THROWS_AS(pfaffian(odd), validation_error);
    CHECK_THROWS_AS(pfaffian_bruteforce(odd), validation_error);

    SkewMatrix nonskew;
    nonskew.m = CMatrix(2, 2);
    nonskew.m(0, 1) = 1.0;
    nonskew.m(1, 0) = -0.5;
    CHECK_THROWS_AS(pfaffian(nonskew), numeric_error);

    SkewMatrix big;
    big.m = CMatrix(12, 12);
    CHECK_THROWS_AS(pfaffian_bruteforce(big), validation_error);
}

TEST_CASE("zero column short-circuits to a zero pfaffian") {
    SkewMatrix s;
    s.m = CMatrix(4, 4);
    s.m(2, 3) = 1.0;
    s.m(3, 2) = -1.0;
    CHECK(pfaffian(s).is_zero());
    CHECK(std::abs(pfaffian_bruteforce(s)) == 0.0);
}

TEST_CASE("block density symbol has the antidiagonal form") {
    for (double k : {0.3, -2.0, kPi / 2}) {
        const Mat2 m = block_symbol_aP(kBench, k);
        CHECK(m.a00 == cplx{});
        CHECK(m.a11 == cplx{});
        CHECK(m.a01.real() == doctest::Approx(s_hat(kBench, Branch::minus, k)).epsilon(1e-15));
        CHECK(m.a10.real() ==
              doctest::Approx(s_hat(kBench, Branch::plus, k) - 1.0).epsilon(1e-15));
        // trace 0 and det = -s_-(s_+ - 1) by construction
        const cplx det = m.a00 * m.a11 - m.a01 * m.a10;
        CHECK(det.real() == doctest::Approx(-m.a01.real() * m.a10.real()).epsilon(1e-15));
    }
    const Mat2 at_half_pi = block_symbol_aP(kBench, kPi / 2);
    CHECK(at_half_pi.a01.real() == doctest::Approx(ref::kSMinusAtHalfPi).epsilon(1e-14));
}

TEST_CASE("n = 1 correlation matrix reflects the mean coefficient") {
    CorrelationDiagnostics diag;
    const SkewMatrix omega = efp_correlation_matrix(kBench, 1, &diag);
    REQUIRE(omega.dimension() == 2);
    CHECK(omega.m(0, 1).real() == doctest::Approx(ref::kS0).epsilon(1e-13));
    CHECK(omega.m(1, 0).real() == doctest::Approx(-ref::kS0).epsilon(1e-13));
    CHECK(diag.skew_defect <= 1e-13);
    CHECK(std::abs(pfaffian(omega).real_value() - std::exp(ref::kLogP1)) <= 1e-13);
}

TEST_CASE("correlation matrices are skew by construction") {
    for (int n : {2, 5, 8}) {
        const SkewMatrix omega = efp_correlation_matrix(kBench, n);
        double worst = 0.0;
        for (std::size_t i = 0; i < omega.dimension(); ++i) {
            for (std::size_t j = 0; j < omega.dimension(); ++j) {
                worst = std::max(worst, std::abs(omega.m(i, j) + omega.m(j, i)));
            }
        }
        CHECK(worst <= 1e-13);
    }
}

TEST_CASE("pfaffian and determinant routes to the probability agree") {
    const FourierWindow w = fourier_window(s_hat_symbol(kBench, Branch::minus), 7);
    for (int n = 1; n <= 8; ++n) {
        const cplx pf = pfaffian(efp_correlation_matrix(kBench, n)).complex_value();
        const double det = std::exp(log_det_posdef(toeplitz_section(w, n)).log_magnitude);
        CHECK(std::abs(pf - det) <= 1e-10 * det);
    }
}

TEST_CASE("exact log probabilities at the benchmark point") {
    CHECK(efp_log_probability(kBench, 1).log_magnitude ==
          doctest::Approx(ref::kLogP1).epsilon(1e-12));
    CHECK(efp_log_probability(kBench, 2).log_magnitude ==
          doctest::Approx(ref::kLogP2).epsilon(1e-12));
    CHECK(efp_log_probability(kBench, 4).log_magnitude ==
          doctest::Approx(ref::kLogP4).epsilon(1e-12));
    CHECK_THROWS_AS(efp_log_probability(kBench, 0), validation_error);
}

TEST_CASE("probabilities decrease with the string length") {
    double prev = 0.0;
    for (int n = 1; n <= 24; ++n) {
        const double cur = efp_log_probability(kBench, n).log_magnitude;
        CHECK(cur < prev);
        prev = cur;
    }
}
