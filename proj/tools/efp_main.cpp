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

// Command-line front end. Talks to the core exclusively through the C API
// of the efp shared library; everything here is argument handling and
// CSV/JSON serialization.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "efp/efp.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerification = 3;

int exit_code_for(efp_status status) {
    switch (status) {
        case EFP_OK: return kExitOk;
        case EFP_ERR_VALIDATION: return kExitValidation;
        case EFP_ERR_VERIFICATION: return kExitVerification;
        default: return kExitNumeric;
    }
}

[[noreturn]] void fail(efp_status status) {
    std::cerr << "efp: " << efp_strerror(status) << ": " << efp_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(efp_status status) {
    if (status != EFP_OK) fail(status);
}

// 17 significant digits round-trip doubles exactly
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonConfig {
    double beta_l = 0.5;
    double beta_r = 2.5;
    double lambda = 0.1;
    int n_max = 256;
    std::string schedule = "geometric";
    std::string out = "-";
    std::string format = "csv";
    std::string suite = "all";
    std::string which = "symbol";
    int samples = 1024;
    int log_radius = 512;
    int quad_min_panels = 4;
};

void add_common_options(CLI::App* cmd, CommonConfig& cfg) {
    cmd->add_option("--beta-l", cfg.beta_l, "left inverse temperature")->capture_default_str();
    cmd->add_option("--beta-r", cfg.beta_r, "right inverse temperature")->capture_default_str();
    cmd->add_option("--lambda", cfg.lambda, "magnetic field")->capture_default_str();
    cmd->add_option("--n-max", cfg.n_max, "largest string length n")->capture_default_str();
    cmd->add_option("--schedule", cfg.schedule, "n schedule: geometric|linear")
        ->check(CLI::IsMember({"geometric", "linear"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--format", cfg.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--log-radius", cfg.log_radius, "log-symbol series radius")
        ->capture_default_str();
    cmd->add_option("--quad-min-panels", cfg.quad_min_panels,
                    "minimum quadrature panels per smooth arc")
        ->capture_default_str();
    cmd->set_config("--config", "", "key-value file mirroring the flag names; flags win");
}

using ModelPtr = std::unique_ptr<efp_model, decltype(&efp_model_destroy)>;

ModelPtr make_model(const CommonConfig& cfg) {
    efp_model_options opts;
    efp_model_options_init(&opts);
    opts.log_radius = cfg.log_radius;
    opts.min_panels = cfg.quad_min_panels;
    efp_model* raw = nullptr;
    check(efp_model_create(cfg.beta_l, cfg.beta_r, cfg.lambda, &opts, &raw));
    return ModelPtr(raw, &efp_model_destroy);
}

std::vector<int> make_schedule(const std::string& kind, int n_max) {
    std::vector<int> out;
    if (n_max < 1) {
        std::cerr << "efp: validation error: --n-max must be >= 1\n";
        std::exit(kExitValidation);
    }
    if (kind == "linear") {
        const int step = std::max(1, (n_max + 255) / 256);
        for (int n = 1; n <= n_max; n += step) out.push_back(n);
        return out;
    }
    if (1 <= n_max) out.push_back(1);
    if (2 <= n_max) out.push_back(2);
    for (long p = 4;; p *= 2) {
        if (3 * p / 4 <= n_max) out.push_back(static_cast<int>(3 * p / 4));
        if (p <= n_max) out.push_back(static_cast<int>(p));
        if (p > n_max) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void emit(const CommonConfig& cfg, const std::string& text) {
    if (cfg.out == "-" || cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "efp: validation error: cannot open output path " << cfg.out << "\n";
        std::exit(kExitValidation);
    }
    f << text;
}

ordered_json constants_json(const efp_constants& c) {
    ordered_json j;
    j["log_g"] = c.log_g;
    j["log_g_integral"] = c.log_g_integral;
    j["q"] = c.q;
    j["q_direct"] = c.q_direct;
    j["log_f"] = c.log_f;
    j["log_f_imag"] = c.log_f_imag;
    j["beta1"] = {{"re", c.beta1_re}, {"im", c.beta1_im}};
    j["beta2"] = {{"re", c.beta2_re}, {"im", c.beta2_im}};
    j["e_b"] = {{"re", c.e_b_re}, {"im", c.e_b_im}};
    j["e_b_tail_bound"] = c.e_b_tail_bound;
    j["b_plus1"] = {{"re", c.b_plus1_re}, {"im", c.b_plus1_im}};
    j["b_minus1"] = {{"re", c.b_minus1_re}, {"im", c.b_minus1_im}};
    j["b_plus2"] = {{"re", c.b_plus2_re}, {"im", c.b_plus2_im}};
    j["b_minus2"] = {{"re", c.b_minus2_re}, {"im", c.b_minus2_im}};
    j["barnes1"] = {{"re", c.barnes1_re}, {"im", c.barnes1_im}};
    j["barnes2"] = {{"re", c.barnes2_re}, {"im", c.barnes2_im}};
    j["cross"] = {{"re", c.cross_re}, {"im", c.cross_im}};
    j["two_path_gap"] = c.two_path_gap;
    j["jump_count"] = c.jump_count;
    return j;
}

int cmd_constants(const CommonConfig& cfg) {
    ModelPtr model = make_model(cfg);
    efp_constants c;
    check(efp_model_constants(model.get(), &c));
    if (cfg.format == "json") {
        emit(cfg, constants_json(c).dump(2) + "\n");
        return kExitOk;
    }
    std::string text = "key,value\n";
    const auto j = constants_json(c);
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            text += key + "_re," + num(value["re"].get<double>()) + "\n";
            text += key + "_im," + num(value["im"].get<double>()) + "\n";
        } else if (value.is_number_integer()) {
            text += key + "," + std::to_string(value.get<long>()) + "\n";
        } else {
            text += key + "," + num(value.get<double>()) + "\n";
        }
    }
    emit(cfg, text);
    return kExitOk;
}

int cmd_table(const CommonConfig& cfg) {
    if (cfg.n_max > 1024) {
        std::cerr << "efp: validation error: --n-max must be <= 1024 for table\n";
        return kExitValidation;
    }
    ModelPtr model = make_model(cfg);
    const std::vector<int> schedule = make_schedule(cfg.schedule, cfg.n_max);
    std::vector<efp_table_row> rows;
    rows.reserve(schedule.size());
    for (int n : schedule) {
        efp_table_row row;
        check(efp_model_table_row(model.get(), n, &row));
        rows.push_back(row);
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"n", r.n},
                                 {"log_det", r.log_det},
                                 {"log_asymptote", r.log_asymptote},
                                 {"residual_y", r.residual_y},
                                 {"ratio", r.ratio}});
        }
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::string text = "n,log_det,log_asymptote,residual_y,ratio\n";
    for (const auto& r : rows) {
        text += std::to_string(r.n) + "," + num(r.log_det) + "," + num(r.log_asymptote) + "," +
                num(r.residual_y) + "," + num(r.ratio) + "\n";
    }
    emit(cfg, text);
    return kExitOk;
}

int cmd_fit(const CommonConfig& cfg) {
    ModelPtr model = make_model(cfg);
    const std::vector<int> schedule = make_schedule(cfg.schedule, cfg.n_max);
    efp_fit_report report;
    check(efp_model_fit(model.get(), schedule.data(), schedule.size(), &report));
    ordered_json j;
    j["q_hat"] = report.q_hat;
    j["log_f_hat"] = report.log_f_hat;
    j["q_reference"] = report.q_reference;
    j["log_f_reference"] = report.log_f_reference;
    j["q_gap_rel"] = report.q_gap_rel;
    j["log_f_gap_abs"] = report.log_f_gap_abs;
    j["rows_used"] = report.rows_used;
    // the references carry no error bars; the gaps are convergence
    // diagnostics, not certified bounds
    j["note"] = "gaps are convergence diagnostics over the fitted window";
    if (cfg.format == "json") {
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::string text = "key,value\n";
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) {
            text += key + "," + value.get<std::string>() + "\n";
        } else if (value.is_number_unsigned()) {
            text += key + "," + std::to_string(value.get<std::size_t>()) + "\n";
        } else {
            text += key + "," + num(value.get<double>()) + "\n";
        }
    }
    emit(cfg, text);
    return kExitOk;
}

int cmd_verify(const CommonConfig& cfg) {
    ModelPtr model = make_model(cfg);
    efp_verify_report* raw = nullptr;
    check(efp_verify_run(model.get(), cfg.suite.c_str(), &raw));
    std::unique_ptr<efp_verify_report, decltype(&efp_verify_report_destroy)> report(
        raw, &efp_verify_report_destroy);
    const size_t count = efp_verify_check_count(report.get());
    const bool all = efp_verify_all_passed(report.get()) != 0;
    if (cfg.format == "json") {
        ordered_json j;
        j["suite"] = cfg.suite;
        j["passed"] = all;
        j["checks"] = ordered_json::array();
        for (size_t i = 0; i < count; ++i) {
            j["checks"].push_back({{"name", efp_verify_check_name(report.get(), i)},
                                   {"passed", efp_verify_check_passed(report.get(), i) != 0},
                                   {"detail", efp_verify_check_detail(report.get(), i)}});
        }
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::string text = "name,passed,detail\n";
        for (size_t i = 0; i < count; ++i) {
            const std::string detail = efp_verify_check_detail(report.get(), i);
            std::string quoted = "\"";
            for (char ch : detail) {
                if (ch == '"') quoted += "\"\"";
                else quoted += ch;
            }
            quoted += "\"";
            text += std::string(efp_verify_check_name(report.get(), i)) + "," +
                    (efp_verify_check_passed(report.get(), i) ? "true" : "false") + "," + quoted +
                    "\n";
        }
        emit(cfg, text);
    }
    return all ? kExitOk : kExitVerification;
}

int cmd_figure(const CommonConfig& cfg) {
    if (cfg.samples < 2) {
        std::cerr << "efp: validation error: --samples must be >= 2\n";
        return kExitValidation;
    }
    ModelPtr model = make_model(cfg);
    std::vector<double> ks(static_cast<size_t>(cfg.samples));
    std::vector<double> vs(static_cast<size_t>(cfg.samples));
    check(efp_model_figure(model.get(), cfg.which.c_str(), ks.size(), ks.data(), vs.data()));
    if (cfg.format == "json") {
        ordered_json j;
        j["which"] = cfg.which;
        j["samples"] = ordered_json::array();
        for (size_t i = 0; i < ks.size(); ++i) {
            j["samples"].push_back({{"k", ks[i]}, {"value", vs[i]}});
        }
        emit(cfg, j.dump(2) + "\n");
        return kExitOk;
    }
    std::string text = "k,value\n";
    for (size_t i = 0; i < ks.size(); ++i) {
        text += num(ks[i]) + "," + num(vs[i]) + "\n";
    }
    emit(cfg, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"emptiness formation probability: exact Toeplitz determinants "
                 "and their decay-law constants"};
    app.require_subcommand(1);

    CommonConfig cfg;
    auto* constants = app.add_subcommand("constants", "decay-law constants and sub-factors");
    add_common_options(constants, cfg);
    auto* table = app.add_subcommand("table", "determinant vs asymptote over an n schedule");
    add_common_options(table, cfg);
    auto* fit = app.add_subcommand("fit", "fit the power-law exponent from the exact side");
    add_common_options(fit, cfg);
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    add_common_options(verify, cfg);
    verify->add_option("--suite", cfg.suite, "all|symbol|toeplitz|fh")->capture_default_str();
    auto* figure = app.add_subcommand("figure", "sample a symbol for plotting");
    add_common_options(figure, cfg);
    figure->add_option("--which", cfg.which, "symbol|regularized")
        ->check(CLI::IsMember({"symbol", "regularized"}))
        ->capture_default_str();
    figure->add_option("--samples", cfg.samples, "number of k samples")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitValidation;
    }

    if (constants->parsed()) return cmd_constants(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (fit->parsed()) return cmd_fit(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (figure->parsed()) return cmd_figure(cfg);
    return kExitValidation;
}
