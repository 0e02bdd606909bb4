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

#include "toeplitz_core.hpp"

#include <cmath>
#include <sstream>

namespace efp {

namespace {

constexpr double kSkewTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-12;

// recursive pairing sum; pairs hold 0-based (a, b) with a < b
cplx pairing_sum(const CMatrix& a, std::vector<int>& unused, std::vector<std::pair<int, int>>& pairs) {
    if (unused.empty()) {
        int crossings = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                const auto [p, q] = pairs[i];
                const auto [r, s] = pairs[j];
                // (p,q) and (r,s) cross iff one endpoint of the later pair
                // lies strictly inside the earlier one
                if ((p < r && r < q && q < s) || (r < p && p < s && s < q)) ++crossings;
            }
        }
        cplx prod = (crossings % 2 == 0) ? cplx{1.0, 0.0} : cplx{-1.0, 0.0};
        for (const auto& [p, q] : pairs) prod *= a(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
        return prod;
    }
    const int first = unused.front();
    cplx total{};
    for (std::size_t i = 1; i < unused.size(); ++i) {
        const int partner = unused[i];
        std::vector<int> rest;
        rest.reserve(unused.size() - 2);
        for (std::size_t j = 1; j < unused.size(); ++j) {
            if (j != i) rest.push_back(unused[j]);
        }
        pairs.emplace_back(first, partner);
        total += pairing_sum(a, rest, pairs);
        pairs.pop_back();
    }
    return total;
}

void require_skew(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols()) throw validation_error(std::string(who) + ": matrix must be square");
    if (m.rows() % 2 != 0) {
        throw validation_error(std::string(who) + ": dimension must be even");
    }
    const double scale = std::max(1.0, m.max_abs());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) + m(j, i)) > kSkewTolerance * scale) {
                std::ostringstream os;
                os << who << ": skew-symmetry violated at (" << i << "," << j << ")";
                throw numeric_error(os.str());
            }
        }
    }
}

}  // namespace

ToeplitzSection toeplitz_section(const FourierWindow& window, int n) {
    if (n < 1) throw validation_error("toeplitz_section: n must be >= 1");
    if (window.radius < n - 1) {
        std::ostringstream os;
        os << "toeplitz_section: window radius " << window.radius << " insufficient, need M >= "
           << n - 1;
        throw validation_error(os.str());
    }
    ToeplitzSection s;
    s.n = n;
    s.entries = CMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = window.at(i - j);
        }
    }
    return s;
}

SignedLogValue log_det_posdef(const ToeplitzSection& section, std::vector<double>* pivots) {
    const std::size_t n = static_cast<std::size_t>(section.n);
    const CMatrix& a = section.entries;
    const double scale = std::max(1.0, a.max_abs());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > kHermitianTolerance * scale) {
                std::ostringstream os;
                os << "log_det_posdef: input is not Hermitian at (" << i << "," << j
                   << "); relative asymmetry exceeds " << kHermitianTolerance;
                throw numeric_error(os.str());
            }
        }
    }

    // LDL^H, lower triangular, in place on a working copy
    CMatrix w = a;
    std::vector<double> d(n, 0.0);
    SignedLogValue out = SignedLogValue::one();
    for (std::size_t j = 0; j < n; ++j) {
        double dj = w(j, j).real();
        for (std::size_t k = 0; k < j; ++k) dj -= d[k] * std::norm(w(j, k));
        if (!(dj > 0.0)) {
            std::ostringstream os;
            os << "log_det_posdef: pivot " << j << " is " << dj
               << " <= 0; matrix is not positive definite";
            throw numeric_error(os.str());
        }
        d[j] = dj;
        out.log_magnitude += std::log(dj);
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx v = w(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= w(i, k) * d[k] * std::conj(w(j, k));
            w(i, j) = v / dj;
        }
    }
    if (pivots) *pivots = std::move(d);
    return out;
}

SignedLogValue pfaffian(const SkewMatrix& skew) {
    require_skew(skew.m, "pfaffian");
    const std::size_t n = skew.dimension();
    if (n == 0) return SignedLogValue::one();
    CMatrix a = skew.m;
    SignedLogValue out = SignedLogValue::one();
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        // pivot: largest magnitude in column k below the diagonal
        std::size_t kp = k + 1;
        for (std::size_t i = k + 2; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(kp, k))) kp = i;
        }
        if (kp != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(kp, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, kp));
            out.multiply(cplx{-1.0, 0.0});
        }
        const cplx pivot = a(k, k + 1);
        if (std::abs(pivot) == 0.0) return SignedLogValue::zero();
        out.multiply(pivot);
        if (k + 2 >= n) break;
        std::vector<cplx> tau(n - (k + 2));
        for (std::size_t i = k + 2; i < n; ++i) tau[i - (k + 2)] = a(k, i) / pivot;
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = k + 2; j < n; ++j) {
                a(i, j) += tau[i - (k + 2)] * a(j, k + 1) - tau[j - (k + 2)] * a(i, k + 1);
            }
        }
    }
    return out;
}

cplx pfaffian_bruteforce(const SkewMatrix& skew) {
    require_skew(skew.m, "pfaffian_bruteforce");
    const std::size_t n = skew.dimension();
    if (n > 10) {
        throw validation_error("pfaffian_bruteforce: dimension > 10 (oracle only)");
    }
    if (n == 0) return cplx{1.0, 0.0};
    std::vector<int> indices(n);
    for (std::size_t i = 0; i < n; ++i) indices[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    return pairing_sum(skew.m, indices, pairs);
}

Mat2 block_symbol_aP(const NessParams& p, double k) {
    Mat2 m;
    m.a00 = cplx{};
    m.a01 = cplx{s_hat(p, Branch::minus, k), 0.0};
    m.a10 = cplx{s_hat(p, Branch::plus, k) - 1.0, 0.0};
    m.a11 = cplx{};
    return m;
}

SkewMatrix efp_correlation_matrix(const NessParams& p, int n, CorrelationDiagnostics* diag,
                                  const QuadratureOptions& opts) {
    if (n < 1) throw validation_error("efp_correlation_matrix: n must be >= 1");
    const FourierWindow upper = fourier_window(s_hat_symbol(p, Branch::minus), n - 1, opts);
    const FourierWindow lower = fourier_window(s_hat_plus_shifted_symbol(p), n - 1, opts);

    const std::size_t dim = 2 * static_cast<std::size_t>(n);
    CMatrix m(dim, dim);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int d = i - j;
            m(2 * static_cast<std::size_t>(i), 2 * static_cast<std::size_t>(j) + 1) = upper.at(d);
            m(2 * static_cast<std::size_t>(i) + 1, 2 * static_cast<std::size_t>(j)) = lower.at(d);
        }
    }

    if (diag) {
        diag->skew_defect = 0.0;
        diag->max_imag = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                diag->skew_defect = std::max(diag->skew_defect, std::abs(m(i, j) + m(j, i)));
                diag->max_imag = std::max(diag->max_imag, std::abs(m(i, j).imag()));
            }
        }
    }

    SkewMatrix out;
    out.m = CMatrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out.m(i, j) = i == j ? cplx{} : 0.5 * (m(i, j) - m(j, i));
        }
    }
    return out;
}

SignedLogValue efp_log_probability(const NessParams& p, int n, const QuadratureOptions& opts) {
    if (n < 1) throw validation_error("efp_log_probability: n must be >= 1");
    const FourierWindow w = fourier_window(s_hat_symbol(p, Branch::minus), n - 1, opts);
    return log_det_posdef(toeplitz_section(w, n));
}

}  // namespace efp
