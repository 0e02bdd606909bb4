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

#include "efp/efp.h"

#include <cstring>
#include <string>

#include "../core/model.hpp"
#include "../core/verify.hpp"

struct efp_model {
    efp::NessModel impl;
};

struct efp_verify_report {
    efp::VerifyReport impl;
};

namespace {

thread_local std::string g_last_error;

efp_status capture(const std::exception& e, efp_status code) {
    g_last_error = e.what();
    return code;
}

template <typename Fn>
efp_status guarded(Fn&& fn) {
    try {
        fn();
        return EFP_OK;
    } catch (const efp::validation_error& e) {
        return capture(e, EFP_ERR_VALIDATION);
    } catch (const efp::numeric_error& e) {
        return capture(e, EFP_ERR_NUMERIC);
    } catch (const std::exception& e) {
        return capture(e, EFP_ERR_INTERNAL);
    }
}

efp_status require(bool ok, const char* message) {
    if (ok) return EFP_OK;
    g_last_error = message;
    return EFP_ERR_VALIDATION;
}

void fill_complex(double& re, double& im, efp::cplx v) {
    re = v.real();
    im = v.imag();
}

}  // namespace

extern "C" {

const char* efp_version(void) { return "1.0.0"; }

const char* efp_strerror(int status) {
    switch (status) {
        case EFP_OK: return "ok";
        case EFP_ERR_VALIDATION: return "validation error";
        case EFP_ERR_NUMERIC: return "numeric failure";
        case EFP_ERR_VERIFICATION: return "verification failure";
        case EFP_ERR_INTERNAL: return "internal error";
        default: return "unknown status";
    }
}

const char* efp_last_error(void) { return g_last_error.c_str(); }

void efp_model_options_init(efp_model_options* opts) {
    if (!opts) return;
    opts->log_radius = 512;
    opts->min_panels = 4;
    opts->coeff_err_target = 1e-12;
}

efp_status efp_model_create(double beta_l, double beta_r, double lambda,
                            const efp_model_options* opts, efp_model** out) {
    if (const efp_status s = require(out != nullptr, "efp_model_create: out is NULL"); s != EFP_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        efp::ModelOptions mo;
        if (opts) {
            mo.log_radius = opts->log_radius;
            mo.quad.min_panels = opts->min_panels;
            mo.quad.err_target = opts->coeff_err_target;
        }
        auto* model = new efp_model{efp::NessModel(efp::make_params(beta_l, beta_r, lambda), mo)};
        *out = model;
    });
}

void efp_model_destroy(efp_model* model) { delete model; }

efp_status efp_model_constants(efp_model* model, efp_constants* out) {
    if (const efp_status s =
            require(model != nullptr && out != nullptr, "efp_model_constants: NULL argument");
        s != EFP_OK)
        return s;
    return guarded([&] {
        const efp::NessConstants& c = model->impl.constants();
        std::memset(out, 0, sizeof(*out));
        out->log_g = c.log_g;
        out->log_g_integral = c.log_g_integral;
        out->q = c.q;
        out->q_direct = c.q_direct;
        out->log_f = c.log_f;
        out->log_f_imag = c.log_f_imag;
        fill_complex(out->beta1_re, out->beta1_im, c.beta1);
        fill_complex(out->beta2_re, out->beta2_im, c.beta2);
        fill_complex(out->e_b_re, out->e_b_im, c.fh.e_b);
        out->e_b_tail_bound = c.fh.e_b_tail_bound;
        fill_complex(out->cross_re, out->cross_im, c.fh.cross_factor);
        out->two_path_gap = c.fh.two_path_gap;
        out->jump_count = static_cast<int>(c.fh.singular.size());
        out->b_plus1_re = out->b_minus1_re = out->b_plus2_re = out->b_minus2_re = 1.0;
        out->barnes1_re = out->barnes2_re = 1.0;
        for (std::size_t i = 0; i < c.fh.singular.size(); ++i) {
            const bool at_one = std::abs(c.fh.singular[i].t - efp::cplx{1.0, 0.0}) < 1e-12;
            if (at_one) {
                fill_complex(out->b_plus1_re, out->b_plus1_im, c.fh.b_plus[i]);
                fill_complex(out->b_minus1_re, out->b_minus1_im, c.fh.b_minus[i]);
                fill_complex(out->barnes1_re, out->barnes1_im, c.fh.barnes_factors[i]);
            } else {
                fill_complex(out->b_plus2_re, out->b_plus2_im, c.fh.b_plus[i]);
                fill_complex(out->b_minus2_re, out->b_minus2_im, c.fh.b_minus[i]);
                fill_complex(out->barnes2_re, out->barnes2_im, c.fh.barnes_factors[i]);
            }
        }
    });
}

efp_status efp_model_log_probability(efp_model* model, int n, double* out) {
    if (const efp_status s = require(model != nullptr && out != nullptr,
                                     "efp_model_log_probability: NULL argument");
        s != EFP_OK)
        return s;
    return guarded([&] { *out = model->impl.log_probability(n); });
}

efp_status efp_model_log_asymptote(efp_model* model, int n, double* out) {
    if (const efp_status s = require(model != nullptr && out != nullptr,
                                     "efp_model_log_asymptote: NULL argument");
        s != EFP_OK)
        return s;
    return guarded([&] { *out = model->impl.log_asymptote(n); });
}

efp_status efp_model_table_row(efp_model* model, int n, efp_table_row* out) {
    if (const efp_status s =
            require(model != nullptr && out != nullptr, "efp_model_table_row: NULL argument");
        s != EFP_OK)
        return s;
    return guarded([&] {
        const efp::EfpTableRow row = model->impl.table_row(n);
        out->n = row.n;
        out->log_det = row.log_det;
        out->log_asymptote = row.log_asymptote;
        out->residual_y = row.residual_y;
        out->ratio = row.ratio;
    });
}

efp_status efp_model_fit(efp_model* model, const int* ns, size_t count, efp_fit_report* out) {
    if (const efp_status s =
            require(model != nullptr && ns != nullptr && out != nullptr && count > 0,
                    "efp_model_fit: NULL argument or empty schedule");
        s != EFP_OK)
        return s;
    return guarded([&] {
        const efp::FitReport report = model->impl.fit(std::span<const int>(ns, count));
        out->q_hat = report.q_hat;
        out->log_f_hat = report.log_f_hat;
        out->q_reference = report.q_reference;
        out->log_f_reference = report.log_f_reference;
        out->q_gap_rel = report.q_gap_rel;
        out->log_f_gap_abs = report.log_f_gap_abs;
        out->rows_used = report.window.size();
    });
}

efp_status efp_model_figure(efp_model* model, const char* which, size_t samples, double* k_out,
                            double* value_out) {
    if (const efp_status s = require(model != nullptr && which != nullptr && k_out != nullptr &&
                                         value_out != nullptr,
                                     "efp_model_figure: NULL argument");
        s != EFP_OK)
        return s;
    return guarded([&] {
        efp::FigureKind kind;
        const std::string name(which);
        if (name == "symbol") {
            kind = efp::FigureKind::symbol;
        } else if (name == "regularized") {
            kind = efp::FigureKind::regularized;
        } else {
            throw efp::validation_error("efp_model_figure: unknown figure '" + name +
                                        "' (expected symbol|regularized)");
        }
        const auto points = model->impl.figure(kind, static_cast<int>(samples));
        for (std::size_t i = 0; i < points.size(); ++i) {
            k_out[i] = points[i].k;
            value_out[i] = points[i].value;
        }
    });
}

efp_status efp_verify_run(efp_model* model, const char* suite, efp_verify_report** out) {
    if (const efp_status s = require(model != nullptr && suite != nullptr && out != nullptr,
                                     "efp_verify_run: NULL argument");
        s != EFP_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        auto* report = new efp_verify_report{efp::run_verify_suite(model->impl.params(), suite)};
        *out = report;
    });
}

size_t efp_verify_check_count(const efp_verify_report* report) {
    return report ? report->impl.checks.size() : 0;
}

int efp_verify_all_passed(const efp_verify_report* report) {
    return report && report->impl.all_passed() ? 1 : 0;
}

int efp_verify_check_passed(const efp_verify_report* report, size_t index) {
    if (!report || index >= report->impl.checks.size()) return 0;
    return report->impl.checks[index].passed ? 1 : 0;
}

const char* efp_verify_check_name(const efp_verify_report* report, size_t index) {
    if (!report || index >= report->impl.checks.size()) return "";
    return report->impl.checks[index].name.c_str();
}

const char* efp_verify_check_detail(const efp_verify_report* report, size_t index) {
    if (!report || index >= report->impl.checks.size()) return "";
    return report->impl.checks[index].detail.c_str();
}

void efp_verify_report_destroy(efp_verify_report* report) { delete report; }

}  // extern "C"
