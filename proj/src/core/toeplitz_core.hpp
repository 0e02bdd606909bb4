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
#include <vector>

#include "dense.hpp"
#include "torus_analysis.hpp"

namespace efp {

/// Underflow-safe carrier: value = phase * exp(log_magnitude) with |phase| = 1.
/// P(n) ~ G^n drops below the double range near n ~ 700 for typical G, so
/// determinants and Pfaffians accumulate in log space.
struct SignedLogValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    cplx phase{1.0, 0.0};

    static SignedLogValue one() { return {0.0, cplx{1.0, 0.0}}; }
    static SignedLogValue zero() { return {}; }

    bool is_zero() const { return std::isinf(log_magnitude) && log_magnitude < 0.0; }

    void multiply(cplx factor) {
        const double m = std::abs(factor);
        if (m == 0.0) {
            log_magnitude = -std::numeric_limits<double>::infinity();
            phase = cplx{1.0, 0.0};
            return;
        }
        log_magnitude += std::log(m);
        phase *= factor / m;
    }

    cplx complex_value() const { return is_zero() ? cplx{} : phase * std::exp(log_magnitude); }
    double real_value() const { return complex_value().real(); }
};

/// n x n section with entries a_{i-j} taken from a coefficient window.
struct ToeplitzSection {
    int n = 0;
    CMatrix entries;
};

ToeplitzSection toeplitz_section(const FourierWindow& window, int n);

/// log det of a Hermitian positive definite section via LDL^H with
/// log-accumulated pivots. Pivots are the successive Schur-complement
/// diagonals; callers can collect them to check spectral confinement.
SignedLogValue log_det_posdef(const ToeplitzSection& section,
                              std::vector<double>* pivots = nullptr);

/// 2n x 2n complex skew-symmetric matrix.
struct SkewMatrix {
    CMatrix m;
    std::size_t dimension() const { return m.rows(); }
};

/// Parlett-Reid elimination with column-magnitude pivoting and an explicit
/// transposition sign ledger.
SignedLogValue pfaffian(const SkewMatrix& a);

/// Combinatorial pairing sum with crossing-count signs; dimension <= 10.
cplx pfaffian_bruteforce(const SkewMatrix& a);

struct Mat2 {
    cplx a00, a01, a10, a11;
};

/// Block density symbol [[0, s_-], [s_+ - 1, 0]].
Mat2 block_symbol_aP(const NessParams& p, double k);

struct CorrelationDiagnostics {
    double skew_defect = 0.0;  // max |M + M^t| entry before symmetrization
    double max_imag = 0.0;     // largest imaginary part observed in the blocks
};

/// 2n x 2n block-Toeplitz section of the block density symbol,
/// skew-symmetrized by construction with zero diagonal.
SkewMatrix efp_correlation_matrix(const NessParams& p, int n,
                                  CorrelationDiagnostics* diag = nullptr,
                                  const QuadratureOptions& opts = {});

/// log P(n) = log det T_n[s_-].
SignedLogValue efp_log_probability(const NessParams& p, int n,
                                   const QuadratureOptions& opts = {});

}  // namespace efp
