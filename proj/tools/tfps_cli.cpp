// Copyright 2026 The tfps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfps/classical.hpp"
#include "tfps/cumulants.hpp"
#include "tfps/errors.hpp"
#include "tfps/generators.hpp"
#include "tfps/json_io.hpp"
#include "tfps/limits.hpp"
#include "tfps/special.hpp"
#include "tfps/tconv.hpp"

namespace {

using namespace tfps;

struct CommonOpts {
    std::string t_text;
    int order = -1;          // -1: not given
    std::string format = "json";
    std::string out_path;    // empty: stdout
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_t) {
    if (with_t)
        cmd->add_option("--t", opts.t_text, "deformation parameter: rational like -1 or 7/3, or d:N");
    cmd->add_option("--order", opts.order, "truncation order (override re-truncates inputs)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out_path, "output path (default: stdout)");
}

/// Operands are file paths or inline JSON (anything starting with '{' or '[').
std::string read_operand(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw ParseError("cannot read input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file '" + out_path + "'");
    out << text;
}

TParam parse_t(const CommonOpts& opts) {
    if (opts.t_text.empty()) throw ParseError("--t is required for this subcommand");
    return TParam::parse(opts.t_text);
}

int resolve_order(const CommonOpts& opts) {
    if (opts.order >= 0) return opts.order;
    if (const char* env = std::getenv("TFPS_DEFAULT_ORDER")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw ParseError("TFPS_DEFAULT_ORDER is not an integer");
        }
    }
    throw ParseError("--order is required (or set TFPS_DEFAULT_ORDER)");
}

TruncatedSeries load_series(const std::string& arg, const CommonOpts& opts) {
    TruncatedSeries a = series_from_json(read_operand(arg));
    if (opts.order >= 0 && opts.order != a.order()) {
        if (opts.order > a.order())
            throw TruncationMismatch("--order may only lower a stored order (have " +
                                     std::to_string(a.order()) + ", asked " +
                                     std::to_string(opts.order) + ")");
        a = truncate(a, opts.order);
    }
    return a;
}

void emit_series(const TruncatedSeries& a, const CommonOpts& opts) {
    write_output(opts.format == "csv" ? series_to_csv(a) : to_json(a), opts.out_path);
}

void emit_vector(const std::vector<Rational>& v, int first_index, const CommonOpts& opts) {
    if (opts.format == "csv") {
        write_output(vector_to_csv(v, first_index), opts.out_path);
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& r : v) arr.push_back(r.str());
    write_output(arr.dump(), opts.out_path);
}

void emit_poly(const std::vector<Rational>& poly, const CommonOpts& opts) {
    if (opts.format == "csv") {
        write_output(vector_to_csv(poly, 0), opts.out_path);
        return;
    }
    write_output(poly_to_json(poly), opts.out_path);
}

void emit_rows(const std::vector<ConvergenceRow>& rows, const CommonOpts& opts) {
    if (opts.format == "csv") {
        write_output(table_to_csv(rows), opts.out_path);
        return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json errors = nlohmann::json::array();
        for (const Rational& e : row.coeff_errors) errors.push_back(e.str());
        arr.push_back({{"m", row.m}, {"first_index", row.first_index}, {"errors", errors}});
    }
    write_output(arr.dump(), opts.out_path);
}

struct FamilyOpts {
    std::string family;
    std::string lambda_text;
    std::string s_text;
    std::string triplet_arg;
    std::string spec_arg;
};

void add_family(CLI::App* cmd, FamilyOpts& fam, const std::vector<std::string>& allowed) {
    cmd->add_option("--family", fam.family, "series family")
        ->required()
        ->check(CLI::IsMember(allowed));
    cmd->add_option("--lambda", fam.lambda_text, "rate parameter (binomial, laguerre)");
    cmd->add_option("--s", fam.s_text, "flow time (hermite flow)");
    cmd->add_option("--triplet", fam.triplet_arg, "characteristic triplet JSON or path (levy)");
    cmd->add_option("--spec", fam.spec_arg, "hypergeometric spec JSON or path");
}

Rational required_rational(const std::string& text, const char* what) {
    if (text.empty()) throw ParseError(std::string("missing --") + what);
    return Rational::parse(text);
}

SeriesSemigroup make_family(const FamilyOpts& fam, const TParam& t) {
    if (fam.family == "hermite") return SeriesSemigroup::hermite(t);
    if (fam.family == "laguerre") return SeriesSemigroup::laguerre(t);
    if (fam.family == "binomial")
        return SeriesSemigroup::binomial(required_rational(fam.lambda_text, "lambda"), t);
    if (fam.family == "levy") {
        if (fam.triplet_arg.empty()) throw ParseError("missing --triplet");
        return SeriesSemigroup::levy(levy_from_json(read_operand(fam.triplet_arg)), t);
    }
    throw ParseError("unknown family '" + fam.family + "'");
}

EtaSeries resolve_eta(const std::string& eta_arg, const FamilyOpts& fam, const TParam& t,
                      int order) {
    if (!eta_arg.empty() && !fam.family.empty())
        throw ParseError("give either --eta or --family, not both");
    if (!eta_arg.empty()) return EtaSeries(series_from_json(read_operand(eta_arg)));
    if (!fam.family.empty()) return eta_closed_form(make_family(fam, t), order);
    throw ParseError("one of --eta or --family is required");
}

struct ErrorJson {
    const char* type;
    int exit_code;
};

ErrorJson classify(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return {"parse", 2};
    if (dynamic_cast<const ParameterError*>(&e)) return {"parameter", 1};
    if (dynamic_cast<const TruncationMismatch*>(&e)) return {"truncation", 1};
    if (dynamic_cast<const DiagnosticError*>(&e)) return {"diagnostic", 1};
    return {"domain", 1};
}

int report(const Error& e) {
    const ErrorJson info = classify(e);
    nlohmann::json j{{"error", {{"type", info.type}, {"message", e.what()}}}};
    std::cerr << j.dump() << "\n";
    return info.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for t-deformed convolution of truncated power series"};
    app.require_subcommand(1);

    // conv / dconv ----------------------------------------------------------
    CommonOpts conv_opts;
    std::vector<std::string> conv_args;
    CLI::App* conv = app.add_subcommand("conv", "t-deformed convolution of two series");
    add_common(conv, conv_opts, true);
    conv->add_option("A", conv_args, "two series operands (path or inline JSON)")
        ->required()
        ->expected(2);
    conv->callback([&] {
        const TParam t = parse_t(conv_opts);
        const TruncatedSeries a = load_series(conv_args[0], conv_opts);
        const TruncatedSeries b = load_series(conv_args[1], conv_opts);
        emit_series(tconv(a, b, t), conv_opts);
    });

    CommonOpts dconv_opts;
    std::vector<std::string> dconv_args;
    int dconv_d = 0;
    CLI::App* dconv = app.add_subcommand("dconv", "finite-mode convolution of two series");
    add_common(dconv, dconv_opts, false);
    dconv->add_option("--d", dconv_d, "finite mode degree")->required();
    dconv->add_option("A", dconv_args, "two series operands")->required()->expected(2);
    dconv->callback([&] {
        const TParam t = TParam::finite(dconv_d);
        const TruncatedSeries a = load_series(dconv_args[0], dconv_opts);
        const TruncatedSeries b = load_series(dconv_args[1], dconv_opts);
        emit_series(tconv(a, b, t), dconv_opts);
    });

    // cumulants / from-cumulants / powersums ---------------------------------
    CommonOpts cum_opts;
    std::string cum_arg;
    CLI::App* cum = app.add_subcommand("cumulants", "t-deformed cumulants of a series");
    add_common(cum, cum_opts, true);
    cum->add_option("A", cum_arg, "series operand")->required();
    cum->callback([&] {
        const TParam t = parse_t(cum_opts);
        const CumulantVector k = c_transform(load_series(cum_arg, cum_opts), t);
        if (cum_opts.format == "csv")
            write_output(vector_to_csv(k.kappas, 1), cum_opts.out_path);
        else
            write_output(to_json(k), cum_opts.out_path);
    });

    CommonOpts fromc_opts;
    std::string fromc_arg;
    CLI::App* fromc = app.add_subcommand("from-cumulants", "series with the given cumulants");
    add_common(fromc, fromc_opts, false);
    fromc->add_option("K", fromc_arg, "cumulant vector operand")->required();
    fromc->callback([&] {
        const CumulantVector k = cumulants_from_json(read_operand(fromc_arg));
        const int order = fromc_opts.order >= 0 ? fromc_opts.order : k.size();
        emit_series(from_cumulants(k, order), fromc_opts);
    });

    CommonOpts psum_opts;
    std::string psum_arg;
    CLI::App* psum = app.add_subcommand("powersums", "power sums of a principal unit");
    add_common(psum, psum_opts, false);
    psum->add_option("A", psum_arg, "series operand")->required();
    psum->callback([&] {
        emit_vector(power_sums(load_series(psum_arg, psum_opts)), 1, psum_opts);
    });

    // series constructors ----------------------------------------------------
    CommonOpts series_opts;
    FamilyOpts series_fam;
    CLI::App* series = app.add_subcommand("series", "construct a named series family");
    add_common(series, series_opts, true);
    add_family(series, series_fam, {"binomial", "hermite", "laguerre", "hypergeometric"});
    series->callback([&] {
        const int order = resolve_order(series_opts);
        if (series_fam.family == "hypergeometric") {
            if (series_fam.spec_arg.empty()) throw ParseError("missing --spec");
            if (!series_opts.t_text.empty())
                throw ParseError("hypergeometric specs carry their own t; drop --t");
            emit_series(hypergeometric_series(hgspec_from_json(read_operand(series_fam.spec_arg)),
                                              order),
                        series_opts);
            return;
        }
        const TParam t = parse_t(series_opts);
        if (series_fam.family == "binomial") {
            emit_series(binomial_series(required_rational(series_fam.lambda_text, "lambda"), t, order),
                        series_opts);
        } else if (series_fam.family == "laguerre") {
            emit_series(laguerre_series(required_rational(series_fam.lambda_text, "lambda"), t, order),
                        series_opts);
        } else {
            if (series_fam.s_text.empty())
                emit_series(hermite_series(t, order), series_opts);
            else
                emit_series(hermite_semigroup(Rational::parse(series_fam.s_text), t, order),
                            series_opts);
        }
    });

    // limit tables ------------------------------------------------------------
    CommonOpts lln_opts;
    std::string lln_arg;
    std::vector<long> lln_ms;
    CLI::App* lln = app.add_subcommand("lln", "law-of-large-numbers deviation table");
    add_common(lln, lln_opts, true);
    lln->add_option("--ms", lln_ms, "sample sizes")->required()->delimiter(',');
    lln->add_option("A", lln_arg, "series operand")->required();
    lln->callback([&] {
        const TParam t = parse_t(lln_opts);
        emit_rows(lln_table(load_series(lln_arg, lln_opts), t, lln_ms), lln_opts);
    });

    CommonOpts clt_opts;
    std::string clt_arg;
    std::vector<long> clt_ms;
    CLI::App* clt = app.add_subcommand("clt", "central-limit deviation table");
    add_common(clt, clt_opts, true);
    clt->add_option("--ms", clt_ms, "sample sizes")->required()->delimiter(',');
    clt->add_option("A", clt_arg, "series operand")->required();
    clt->callback([&] {
        const TParam t = parse_t(clt_opts);
        emit_rows(clt_table(load_series(clt_arg, clt_opts), t, clt_ms), clt_opts);
    });

    // classical bridge ---------------------------------------------------------
    CommonOpts cc_opts;
    std::vector<std::string> cc_args;
    CLI::App* cc = app.add_subcommand("classical-conv", "moment series of an independent sum");
    add_common(cc, cc_opts, false);
    cc->add_option("M", cc_args, "two moment series operands")->required()->expected(2);
    cc->callback([&] {
        emit_series(classical_conv(load_series(cc_args[0], cc_opts), load_series(cc_args[1], cc_opts)),
                    cc_opts);
    });

    CommonOpts mix_opts;
    std::string mix_arg;
    CLI::App* mix = app.add_subcommand("mixture", "moments of a beta/gamma product mixture");
    add_common(mix, mix_opts, false);
    mix->add_option("SPEC", mix_arg, "mixture spec operand")->required();
    mix->callback([&] {
        emit_series(mixture_moments(mixture_from_json(read_operand(mix_arg)), resolve_order(mix_opts)),
                    mix_opts);
    });

    // generators -----------------------------------------------------------------
    CommonOpts eta_opts;
    FamilyOpts eta_fam;
    CLI::App* eta = app.add_subcommand("eta", "generator symbol of a closed-form family");
    add_common(eta, eta_opts, true);
    add_family(eta, eta_fam, {"hermite", "laguerre", "binomial", "levy"});
    eta->callback([&] {
        const TParam t = parse_t(eta_opts);
        const int order = resolve_order(eta_opts);
        emit_series(eta_closed_form(make_family(eta_fam, t), order).series(), eta_opts);
    });

    CommonOpts apply_opts;
    FamilyOpts apply_fam;
    std::string apply_eta_arg, apply_series_arg;
    CLI::App* apply = app.add_subcommand("apply-generator", "apply a generator symbol to a series");
    add_common(apply, apply_opts, true);
    apply->add_option("--eta", apply_eta_arg, "symbol series (path or inline JSON)");
    apply->add_option("--family", apply_fam.family, "closed-form family instead of --eta")
        ->check(CLI::IsMember({"hermite", "laguerre", "binomial", "levy"}));
    apply->add_option("--lambda", apply_fam.lambda_text, "rate (binomial)");
    apply->add_option("--triplet", apply_fam.triplet_arg, "triplet JSON or path (levy)");
    apply->add_option("A", apply_series_arg, "series operand")->required();
    apply->callback([&] {
        const TParam t = parse_t(apply_opts);
        const TruncatedSeries a = load_series(apply_series_arg, apply_opts);
        const EtaSeries symbol = resolve_eta(apply_eta_arg, apply_fam, t, a.order());
        emit_series(generator_apply(symbol, a, t), apply_opts);
    });

    CommonOpts evolve_opts;
    FamilyOpts evolve_fam;
    std::string evolve_eta_arg, evolve_series_arg, evolve_s;
    CLI::App* evolve_cmd = app.add_subcommand("evolve", "run the semigroup flow for time s");
    add_common(evolve_cmd, evolve_opts, true);
    evolve_cmd->add_option("--eta", evolve_eta_arg, "symbol series (path or inline JSON)");
    evolve_cmd->add_option("--family", evolve_fam.family, "closed-form family instead of --eta")
        ->check(CLI::IsMember({"hermite", "laguerre", "binomial", "levy"}));
    evolve_cmd->add_option("--lambda", evolve_fam.lambda_text, "rate (binomial)");
    evolve_cmd->add_option("--triplet", evolve_fam.triplet_arg, "triplet JSON or path (levy)");
    evolve_cmd->add_option("--s", evolve_s, "flow time (rational)")->required();
    evolve_cmd->add_option("A", evolve_series_arg, "series operand")->required();
    evolve_cmd->callback([&] {
        const TParam t = parse_t(evolve_opts);
        const TruncatedSeries a = load_series(evolve_series_arg, evolve_opts);
        const EtaSeries symbol = resolve_eta(evolve_eta_arg, evolve_fam, t, a.order());
        emit_series(evolve(a, symbol, Rational::parse(evolve_s), t), evolve_opts);
    });

    CommonOpts fw_opts;
    FamilyOpts fw_fam;
    std::string fw_eta_arg, fw_series_arg, fw_s;
    double fw_h = 1e-4;
    CLI::App* fw = app.add_subcommand("forward-check", "forward-equation residuals of the flow");
    add_common(fw, fw_opts, true);
    fw->add_option("--eta", fw_eta_arg, "symbol series (path or inline JSON)");
    fw->add_option("--family", fw_fam.family, "closed-form family instead of --eta")
        ->check(CLI::IsMember({"hermite", "laguerre", "binomial", "levy"}));
    fw->add_option("--lambda", fw_fam.lambda_text, "rate (binomial)");
    fw->add_option("--triplet", fw_fam.triplet_arg, "triplet JSON or path (levy)");
    fw->add_option("--s", fw_s, "flow time (rational)")->required();
    fw->add_option("--step", fw_h, "finite-difference step");
    fw->add_option("A", fw_series_arg, "series operand")->required();
    fw->callback([&] {
        if (fw_opts.format == "csv") throw ParseError("forward-check only supports json output");
        const TParam t = parse_t(fw_opts);
        const TruncatedSeries a = load_series(fw_series_arg, fw_opts);
        const EtaSeries symbol = resolve_eta(fw_eta_arg, fw_fam, t, a.order());
        const ForwardCheck check = forward_residual(a, symbol, Rational::parse(fw_s), fw_h, t);
        nlohmann::json j{{"fd_residual", check.fd_residual},
                         {"exact_residual", check.exact_residual.str()}};
        write_output(j.dump(), fw_opts.out_path);
    });

    // polynomial bridge -------------------------------------------------------
    CommonOpts ffc_opts;
    std::vector<std::string> ffc_args;
    int ffc_d = 0;
    CLI::App* ffc = app.add_subcommand("finfree-conv", "additive convolution of monic polynomials");
    add_common(ffc, ffc_opts, false);
    ffc->add_option("--d", ffc_d, "degree")->required();
    ffc->add_option("F", ffc_args, "two polynomial operands")->required()->expected(2);
    ffc->callback([&] {
        const std::vector<Rational> f = poly_from_json(read_operand(ffc_args[0]));
        const std::vector<Rational> g = poly_from_json(read_operand(ffc_args[1]));
        emit_poly(finite_free_conv(f, g, ffc_d), ffc_opts);
    });

    CommonOpts ffg_opts;
    FamilyOpts ffg_fam;
    std::string ffg_arg;
    int ffg_d = 0;
    CLI::App* ffg = app.add_subcommand("finfree-generator", "polynomial generator action");
    add_common(ffg, ffg_opts, false);
    ffg->add_option("--d", ffg_d, "degree")->required();
    ffg->add_option("--family", ffg_fam.family, "closed-form family")
        ->default_val(std::string("hermite"))
        ->check(CLI::IsMember({"hermite", "laguerre", "binomial", "levy"}));
    ffg->add_option("--lambda", ffg_fam.lambda_text, "rate (binomial)");
    ffg->add_option("--triplet", ffg_fam.triplet_arg, "triplet JSON or path (levy)");
    ffg->add_option("F", ffg_arg, "polynomial operand")->required();
    ffg->callback([&] {
        const SeriesSemigroup family = make_family(ffg_fam, TParam::finite(ffg_d));
        emit_poly(finite_free_generator_apply(poly_from_json(read_operand(ffg_arg)), family, ffg_d),
                  ffg_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::json j{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n" << app.help() << std::flush;
        return 2;
    } catch (const Error& e) {
        return report(e);
    } catch (const std::exception& e) {
        nlohmann::json j{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 0;
}
