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

#include "verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace efp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void add(VerifyReport& r, const std::string& name, bool passed, const std::string& detail) {
    r.checks.push_back(VerifyCheck{name, passed, detail});
}

double rand_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

NessParams random_params(std::mt19937_64& rng) {
    const double bl = std::exp(rand_uniform(rng, -1.2, 1.0));
    const double br = bl * (1.0 + rand_uniform(rng, 0.05, 3.0));
    const double lam = rand_uniform(rng, -1.8, 1.8);
    return make_params(bl, br, lam);
}

double random_off_jump_angle(std::mt19937_64& rng, const std::vector<double>& jumps,
                             double clearance) {
    for (;;) {
        const double k = rand_uniform(rng, -kPi + 1e-6, kPi);
        bool ok = true;
        for (double kj : jumps) {
            if (std::abs(wrap_angle(k - kj)) < clearance) ok = false;
        }
        if (ok) return k;
    }
}

SkewMatrix random_skew(std::mt19937_64& rng, std::size_t dim) {
    SkewMatrix s;
    s.m = CMatrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx v{rand_uniform(rng, -1.0, 1.0), rand_uniform(rng, -1.0, 1.0)};
            s.m(i, j) = v;
            s.m(j, i) = -v;
        }
    }
    return s;
}

CMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = cplx{rand_uniform(rng, -1.0, 1.0), rand_uniform(rng, -1.0, 1.0)};
        }
    }
    return m;
}

void suite_symbol(const NessParams& p, VerifyReport& r) {
    std::mt19937_64 rng(0x5eed0001ULL);
    const auto jumps = jump_set(p);

    {  // pointwise factorization on a Chebyshev-spaced sweep
        double worst = 0.0;
        const int samples = 4096;
        for (int i = 0; i < samples; ++i) {
            const double k = kPi * std::cos(kPi * (i + 0.5) / samples);
            bool excluded = false;
            for (double kj : jumps) {
                if (std::abs(wrap_angle(k - kj)) < kJumpExclusionRadius) excluded = true;
            }
            if (excluded) continue;
            worst = std::max(worst, factorization_residual(p, k));
        }
        add(r, "symbol.factorization_sweep", worst <= 1e-12, "max residual " + fmt(worst));
    }

    {  // jump phases are purely imaginary and match the tau-ratio logs
        double worst_re = 0.0, worst_im = 0.0;
        for (const auto& d : jump_data(p)) {
            worst_re = std::max(worst_re, std::abs(d.beta.real()));
            const double expect =
                d.angle == 0.0
                    ? std::log(tau(p, Side::left, 0.0) / tau(p, Side::right, 0.0)) / kTwoPi
                    : std::log(tau(p, Side::right, kPi) / tau(p, Side::left, kPi)) / kTwoPi;
            worst_im = std::max(worst_im, std::abs(d.beta.imag() - expect));
        }
        add(r, "symbol.jump_purity", worst_re <= 1e-15 && worst_im <= 1e-13,
            "max |Re beta| " + fmt(worst_re) + ", formula gap " + fmt(worst_im));
    }

    {  // range of the densities
        bool ok = true;
        for (int i = 0; i < 4096; ++i) {
            const double k = -kPi + kTwoPi * (i + 0.5) / 4096;
            const double s = s_hat(p, Branch::minus, k);
            const double tl = tau(p, Side::left, k);
            const double tr = tau(p, Side::right, k);
            ok = ok && s > 0.0 && s < 1.0 && tl > 0.0 && tl < 1.0 && tr > 0.0 && tr < 1.0;
        }
        add(r, "symbol.density_range", ok, "s_-, tau_L, tau_R in (0,1) on 4096-point grid");
    }

    {  // continuity of b_P across the seam, first order in h
        const double slope = std::abs(regularized_symbol_derivative(p, kPi)) + 1.0;
        bool ok = true;
        double worst = 0.0;
        for (double h : {1e-4, 1e-6}) {
            const double gap = std::abs(regularized_symbol(p, kPi) - regularized_symbol(p, -kPi + h));
            worst = std::max(worst, gap / h);
            if (gap > 2.0 * slope * h) ok = false;
        }
        add(r, "symbol.seam_continuity", ok, "max gap/h " + fmt(worst));
    }

    {  // closed-form derivative against central differences
        const double h = 1e-5;
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double k = random_off_jump_angle(rng, jumps, 1e-3);
            const double fd =
                (regularized_symbol(p, k + h) - regularized_symbol(p, k - h)) / (2.0 * h);
            const double exact = regularized_symbol_derivative(p, k);
            worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
        }
        add(r, "symbol.derivative_consistency", worst <= 1e-6, "max relative gap " + fmt(worst));
    }

    {  // one-sided curvature limits against one-sided second differences
        const double h = 1e-4;
        double worst = 0.0;
        const auto onesided = [&](double a, double dir) {
            // 4-point one-sided second difference, O(h^2)
            const double f0 = regularized_symbol(p, a);
            const double f1 = regularized_symbol(p, a + dir * h);
            const double f2 = regularized_symbol(p, a + dir * 2 * h);
            const double f3 = regularized_symbol(p, a + dir * 3 * h);
            return (2 * f0 - 5 * f1 + 4 * f2 - f3) / (h * h);
        };
        for (int j : {1, 2}) {
            const auto dd = second_derivative_jump(p, j);
            const double a_plus = j == 1 ? 0.0 : -kPi;   // approached increasing k
            const double a_minus = j == 1 ? 0.0 : kPi;   // approached decreasing k
            const double fd_plus = onesided(a_plus, +1.0);
            const double fd_minus = onesided(a_minus, -1.0);
            worst = std::max(worst, std::abs(fd_plus - dd.d_plus) / std::abs(dd.d_plus));
            worst = std::max(worst, std::abs(fd_minus - dd.d_minus) / std::abs(dd.d_minus));
        }
        add(r, "symbol.curvature_onesided", worst <= 1e-4, "max relative gap " + fmt(worst));

        const NessParams eq = make_params(p.beta, p.beta, p.lambda);
        const double j1 = std::abs(second_derivative_jump(eq, 1).jump);
        const double j2 = std::abs(second_derivative_jump(eq, 2).jump);
        add(r, "symbol.curvature_jump_equilibrium", j1 <= 1e-10 && j2 <= 1e-10,
            "jumps " + fmt(j1) + ", " + fmt(j2) + " at delta=0");
    }

    {  // coefficient reflection (s_+ - 1)_x = -(s_-)_{-x}
        const auto w_minus = fourier_window(s_hat_symbol(p, Branch::minus), 64);
        const auto w_plus = fourier_window(s_hat_plus_shifted_symbol(p), 64);
        double worst = 0.0;
        for (int x = -64; x <= 64; ++x) {
            worst = std::max(worst, std::abs(w_plus.at(x) + w_minus.at(-x)));
        }
        add(r, "symbol.coefficient_reflection", worst <= 1e-12, "max gap " + fmt(worst));
    }

    {  // equilibrium collapse
        const NessParams eq = make_params(p.beta, p.beta, p.lambda);
        const bool empty = jump_set(eq).empty();
        double worst = 0.0;
        for (int i = 0; i < 1024; ++i) {
            const double k = -kPi + kTwoPi * (i + 0.5) / 1024;
            worst = std::max(worst,
                             std::abs(regularized_symbol(eq, k) - s_hat(eq, Branch::minus, k)));
        }
        add(r, "symbol.equilibrium_collapse", empty && worst <= 1e-15,
            "jump set empty=" + std::string(empty ? "yes" : "no") + ", max |b_P - s_-| " +
                fmt(worst));
    }

    {  // quadrature self-consistency under panel doubling
        const TorusSymbol s = s_hat_symbol(p, Branch::minus);
        QuadratureOptions doubled;
        doubled.panel_scale = 2;
        double worst = 0.0;
        for (int x : {0, 1, 7, 32, 64}) {
            worst = std::max(worst,
                             std::abs(fourier_coefficient(s, x) - fourier_coefficient(s, x, doubled)));
        }
        add(r, "torus.quadrature_doubling", worst <= 1e-12, "max shift " + fmt(worst));
    }

    {  // Parseval: partial sums below the L2 norm, gap shrinking
        const TorusSymbol s = s_hat_symbol(p, Branch::minus);
        TorusSymbol s2;
        const NessParams pc = p;
        s2.eval = [pc](double k) {
            const double v = s_hat(pc, Branch::minus, k);
            return cplx{v * v, 0.0};
        };
        s2.jumps = s.jumps;
        s2.splits = s.splits;
        s2.real_valued = true;
        const double l2 = fourier_coefficient(s2, 0).real();
        const auto w = fourier_window(s, 128);
        double prev_gap = 0.0;
        bool ok = true;
        bool first = true;
        for (int m : {16, 64, 128}) {
            double sum = 0.0;
            for (int x = -m; x <= m; ++x) sum += std::norm(w.at(x));
            const double gap = l2 - sum;
            if (gap < -1e-12) ok = false;
            if (!first && gap > prev_gap + 1e-14) ok = false;
            prev_gap = gap;
            first = false;
        }
        add(r, "torus.parseval", ok, "final gap " + fmt(prev_gap));
    }

    {  // branch stability of the log series under refinement
        const TorusSymbol b = regularized_symbol_fn(p);
        QuadratureOptions doubled;
        doubled.panel_scale = 2;
        const auto l1 = log_symbol_series(b, 64);
        const auto l2 = log_symbol_series(b, 64, doubled);
        double worst = 0.0;
        for (int l = -64; l <= 64; ++l) worst = std::max(worst, std::abs(l1.at(l) - l2.at(l)));
        add(r, "torus.log_branch_stability", worst <= 1e-12, "max shift " + fmt(worst));
    }

    {  // hermitian coefficient symmetry for the real symbol
        const TorusSymbol s = s_hat_symbol(p, Branch::minus);
        double worst = 0.0;
        for (int x : {1, 3, 17, 40}) {
            worst = std::max(worst, std::abs(fourier_coefficient(s, -x) -
                                             std::conj(fourier_coefficient(s, x))));
        }
        add(r, "torus.hermitian_symmetry", worst <= 1e-13, "max gap " + fmt(worst));
    }
}

void suite_toeplitz(const NessParams& p, VerifyReport& r) {
    std::mt19937_64 rng(0x5eed0002ULL);

    {  // elimination vs combinatorial oracle
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t dim = 2 * (1 + static_cast<std::size_t>(trial % 4));
            const SkewMatrix s = random_skew(rng, dim);
            const cplx fast = pfaffian(s).complex_value();
            const cplx slow = pfaffian_bruteforce(s);
            worst = std::max(worst, std::abs(fast - slow) / std::max(1e-300, std::abs(slow)));
        }
        add(r, "toeplitz.pfaffian_oracle", worst <= 1e-12, "max relative gap " + fmt(worst));
    }

    {  // pf(X Y X^t) = det(X) pf(Y)
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t dim = 2 * (1 + static_cast<std::size_t>(trial % 4));
            const CMatrix x = random_matrix(rng, dim);
            const SkewMatrix y = random_skew(rng, dim);
            SkewMatrix xyxt;
            xyxt.m = matmul(matmul(x, y.m), x.transpose());
            // clean roundoff asymmetry before the strict skew check
            for (std::size_t i = 0; i < dim; ++i) {
                xyxt.m(i, i) = cplx{};
                for (std::size_t j = i + 1; j < dim; ++j) {
                    const cplx v = 0.5 * (xyxt.m(i, j) - xyxt.m(j, i));
                    xyxt.m(i, j) = v;
                    xyxt.m(j, i) = -v;
                }
            }
            const cplx lhs = pfaffian(xyxt).complex_value();
            const cplx rhs = lu_det(x) * pfaffian(y).complex_value();
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)));
        }
        add(r, "toeplitz.pfaffian_congruence", worst <= 1e-10, "max relative gap " + fmt(worst));
    }

    {  // pf([[0, X], [-X^t, 0]]) = (-1)^{n(n-1)/2} det(X)
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
            const CMatrix x = random_matrix(rng, n);
            SkewMatrix block;
            block.m = CMatrix(2 * n, 2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    block.m(i, n + j) = x(i, j);
                    block.m(n + j, i) = -x(i, j);
                }
            }
            const double sign = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
            const cplx lhs = pfaffian(block).complex_value();
            const cplx rhs = sign * lu_det(x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)));
        }
        add(r, "toeplitz.pfaffian_block_det", worst <= 1e-10, "max relative gap " + fmt(worst));
    }

    {  // pf(A)^2 = det(A)
        double worst = 0.0;
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t dim = 2 * (1 + static_cast<std::size_t>(trial % 4));
            const SkewMatrix s = random_skew(rng, dim);
            const cplx pf = pfaffian(s).complex_value();
            const cplx det = lu_det(s.m);
            worst = std::max(worst, std::abs(pf * pf - det) / std::max(1e-300, std::abs(det)));
        }
        add(r, "toeplitz.pfaffian_squared", worst <= 1e-10, "max relative gap " + fmt(worst));
    }

    {  // pivots of T_n[s_-] confined to the symbol range
        const auto w = fourier_window(s_hat_symbol(p, Branch::minus), 255);
        std::vector<double> pivots;
        log_det_posdef(toeplitz_section(w, 256), &pivots);
        bool ok = true;
        for (double d : pivots) ok = ok && d > 0.0 && d < 1.0;
        add(r, "toeplitz.pivot_confinement", ok, "256 pivots in (0,1)");
    }

    {  // determinant and Pfaffian routes agree
        const auto w = fourier_window(s_hat_symbol(p, Branch::minus), 15);
        double worst = 0.0;
        double worst_imag = 0.0;
        for (int n = 1; n <= 16; ++n) {
            CorrelationDiagnostics diag;
            const SkewMatrix omega = efp_correlation_matrix(p, n, &diag);
            worst_imag = std::max(worst_imag, diag.max_imag);
            const cplx pf = pfaffian(omega).complex_value();
            const double det = std::exp(log_det_posdef(toeplitz_section(w, n)).log_magnitude);
            worst = std::max(worst, std::abs(pf - det) / det);
        }
        add(r, "toeplitz.det_pfaffian_equality", worst <= 1e-8,
            "max relative gap " + fmt(worst) + ", max block imag " + fmt(worst_imag));
    }

    {  // P(n) decreasing
        NessModel model(p);
        bool ok = true;
        double prev = model.log_probability(1);
        for (int n = 2; n <= 64; ++n) {
            const double cur = model.log_probability(n);
            if (cur > prev + 1e-12) ok = false;
            prev = cur;
        }
        add(r, "toeplitz.efp_monotone", ok, "log P decreasing up to n=64");
    }

    {  // reflection identity feeding T_n[s_+ - 1] = -T_n[s_-]^t
        const auto w_minus = fourier_window(s_hat_symbol(p, Branch::minus), 64);
        const auto w_plus = fourier_window(s_hat_plus_shifted_symbol(p), 64);
        double worst = 0.0;
        for (int x = -64; x <= 64; ++x) {
            worst = std::max(worst, std::abs(w_plus.at(x) + w_minus.at(-x)));
        }
        add(r, "toeplitz.coefficient_reflection", worst <= 1e-12, "max gap " + fmt(worst));
    }
}

void suite_fh(const NessParams& p, VerifyReport& r) {
    std::mt19937_64 rng(0x5eed0003ULL);

    {  // random-parameter sweep: two-path F, realness, G range, Q sign
        ModelOptions fast;
        fast.log_radius = 128;
        double worst_gap = 0.0, worst_imag = 0.0, worst_ggap = 0.0;
        bool range_ok = true, q_ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            NessModel model(random_params(rng), fast);
            const NessConstants& c = model.constants();
            if (c.fh.two_path_gap >= 0.0) worst_gap = std::max(worst_gap, c.fh.two_path_gap);
            worst_imag = std::max(worst_imag, std::abs(c.log_f_imag));
            worst_ggap = std::max(worst_ggap, std::abs(c.log_g - c.log_g_integral));
            const double g = std::exp(c.log_g);
            range_ok = range_ok && g > 0.0 && g < 1.0;
            q_ok = q_ok && c.q >= 0.0 && std::abs(c.q - c.q_direct) <= 1e-12;
        }
        add(r, "fh.two_path_constant", worst_gap <= 1e-10, "max relative gap " + fmt(worst_gap));
        add(r, "fh.f_real_positive", worst_imag <= 1e-10, "max |Im log F| " + fmt(worst_imag));
        add(r, "fh.szego_base_routes", worst_ggap <= 1e-10 && range_ok,
            "max route gap " + fmt(worst_ggap) + ", G in (0,1)");
        add(r, "fh.power_exponent_routes", q_ok, "Q >= 0 and both routes agree");
    }

    {  // Q dichotomy in delta
        bool ok = true;
        for (double d : {0.0, 1e-3, 0.1, 1.0}) {
            const NessParams q = make_params(1.5 - d, 1.5 + d, p.lambda);
            std::vector<SingularPoint> pts;
            for (const auto& jd : jump_data(q)) pts.push_back({jd.point, cplx{}, jd.beta});
            const double qp = power_exponent(pts).real();
            if (d == 0.0 && std::abs(qp) > 1e-15) ok = false;
            if (d > 0.0 && !(qp > 1e-12)) ok = false;
        }
        add(r, "fh.q_dichotomy", ok, "Q_P > 0 iff delta > 0 over delta sweep");
    }

    {  // Barnes reflection on the imaginary axis
        double worst = 0.0;
        for (double y : {0.05, 0.2875, 0.45}) {
            const cplx v = barnes_g(cplx{1.0, y}) * barnes_g(cplx{1.0, -y});
            worst = std::max(worst, std::abs(v.imag()) / std::abs(v));
            if (v.real() <= 0.0) worst = 1.0;
        }
        add(r, "fh.barnes_reflection", worst <= 1e-10, "max imag residue " + fmt(worst));
    }

    {  // equilibrium reduction to the smooth-symbol law
        const NessParams eq = make_params(p.beta, p.beta, p.lambda);
        NessModel model(eq);
        const NessConstants& c = model.constants();
        const double f_gap = std::abs(std::exp(c.log_f) - c.fh.e_b.real());
        const double asym_gap =
            std::abs(model.log_asymptote(64) - (64 * c.log_g + std::log(c.fh.e_b.real())));
        add(r, "fh.equilibrium_reduction", f_gap <= 1e-12 && asym_gap <= 1e-12,
            "F - E gap " + fmt(f_gap) + ", asymptote gap " + fmt(asym_gap));
    }

    {  // regularized symbol is positive with zero winding
        const TorusSymbol b = regularized_symbol_fn(p);
        const int wind = winding_number(b);
        bool positive = true;
        const int grid = 1 << 14;
        for (int i = 0; i < grid; ++i) {
            const double k = -kPi + kTwoPi * (i + 0.5) / grid;
            if (!(b.eval(k).real() > 0.0)) positive = false;
        }
        add(r, "fh.regular_part_index", wind == 0 && positive,
            "winding " + fmt(wind) + ", positivity on 2^14 grid");
    }

    {  // Besov corroboration
        const BesovCheck besov = besov_b11_check(regularized_symbol_fn(p), 1e-4);
        add(r, "fh.besov_bound", besov.holds,
            "integral " + fmt(besov.integral_estimate) + " <= bound " + fmt(besov.bound));
    }
}

}  // namespace

VerifyReport run_verify_suite(const NessParams& params, std::string_view suite) {
    VerifyReport report;
    report.suite = std::string(suite);
    if (suite == "symbol") {
        suite_symbol(params, report);
    } else if (suite == "toeplitz") {
        suite_toeplitz(params, report);
    } else if (suite == "fh") {
        suite_fh(params, report);
    } else if (suite == "all") {
        suite_symbol(params, report);
        suite_toeplitz(params, report);
        suite_fh(params, report);
    } else {
        throw validation_error("run_verify_suite: unknown suite '" + std::string(suite) +
                               "' (expected all|symbol|toeplitz|fh)");
    }
    return report;
}

}  // namespace efp
