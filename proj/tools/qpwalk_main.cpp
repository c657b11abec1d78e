#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpwalk/asymptotics.hpp"
#include "qpwalk/criteria.hpp"
#include "qpwalk/genfun.hpp"
#include "qpwalk/io.hpp"
#include "qpwalk/voter.hpp"
#include "qpwalk/walk_dp.hpp"

namespace {

using qpwalk::format_double;

std::string fmt_cplx(std::complex<double> v) {
    if (v.imag() == 0.0) return format_double(v.real());
    return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
           format_double(std::abs(v.imag())) + "i";
}

qpwalk::BlockConfig parse_config(const std::string& text) {
    qpwalk::BlockConfig cfg;
    std::string cur;
    std::vector<long long> vals;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) vals.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (vals.size() % 2 != 0)
        throw CLI::ValidationError("--config", "needs n,m pairs");
    for (long long v : vals)
        if (v < 1) throw CLI::ValidationError("--config", "block sizes must be >= 1");
    cfg.sizes = vals;
    return cfg;
}

int cmd_dp(int x0, int y0, int kmax, bool exact, bool sites,
           const std::string& out, const std::string& sites_out) {
    const auto mode = exact ? qpwalk::DpMode::exact : qpwalk::DpMode::floating;
    const auto table = qpwalk::dp_absorption(x0, y0, kmax, mode, sites);
    qpwalk::emit_csv(out, {"k", "p_S", "p_T", "p_tau", "survival"},
                     qpwalk::table_rows(table));
    if (sites)
        qpwalk::emit_csv(sites_out, {"k", "axis", "index", "prob"},
                         qpwalk::site_rows(table));
    return 0;
}

int cmd_simulate(const std::string& config, long long trials,
                 std::uint64_t seed, long long cap, int kmax,
                 const std::string& out, const std::string& format) {
    const auto cfg = parse_config(config);
    const auto s = qpwalk::estimate_distribution(cfg, trials, seed, kmax, cap);
    if (format == "json") {
        qpwalk::emit_text(out, qpwalk::mc_summary_json(s));
    } else {
        std::vector<std::vector<std::string>> rows;
        for (int k = 0; k <= s.kmax; ++k)
            rows.push_back({std::to_string(k), format_double(s.pmf[k])});
        qpwalk::emit_csv(out, {"k", "prob"}, rows);
    }
    return 0;
}

int cmd_eval(const std::vector<double>& xs, double x_imag,
             const std::vector<double>& zs, double z_imag, int x0, int y0,
             int quad_order, const std::string& out) {
    std::vector<std::vector<std::string>> rows;
    for (double xr : xs) {
        for (double zr : zs) {
            const std::complex<double> x(xr, x_imag), z(zr, z_imag);
            std::array<qpwalk::HEvaluation, 3> parts;
            double err = 0.0;
            if (quad_order > 0) {
                const qpwalk::QuadratureRule rule(quad_order);
                parts = qpwalk::h_parts(x, z, x0, y0, rule);
                err = parts[1].error_estimate + parts[2].error_estimate;
            } else {
                const auto total = qpwalk::h_total(x, z, x0, y0);
                const qpwalk::QuadratureRule rule(1023);
                parts = qpwalk::h_parts(x, z, x0, y0, rule);
                err = total.error_estimate;
            }
            const auto h = parts[0].value + parts[1].value + parts[2].value;
            rows.push_back({fmt_cplx(x), fmt_cplx(z), fmt_cplx(parts[0].value),
                            fmt_cplx(parts[1].value), fmt_cplx(parts[2].value),
                            fmt_cplx(h), format_double(err)});
        }
    }
    qpwalk::emit_csv(out, {"x", "z", "h1", "h2", "h3", "h", "error_estimate"},
                     rows);
    return 0;
}

int cmd_coeffs(int x0, int y0, double r, int M, int kmax,
               const std::string& out) {
    const auto cs = qpwalk::extract_coefficients(x0, y0, r, M);
    const auto table =
        qpwalk::dp_absorption(x0, y0, kmax, qpwalk::DpMode::floating);
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= kmax && k < M; ++k) {
        const double pd = table.p_S[k];
        const double pe = cs.coefficients[k];
        const double rel = pd != 0.0 ? std::abs(pe - pd) / pd : std::abs(pe);
        rows.push_back({std::to_string(k), format_double(pd), format_double(pe),
                        format_double(rel)});
    }
    qpwalk::emit_csv(out, {"k", "p_dp", "p_extracted", "rel_err"}, rows);
    return 0;
}

int cmd_asympt(int x0, int y0, int kmax, const std::string& out) {
    const auto table =
        qpwalk::dp_absorption(x0, y0, kmax, qpwalk::DpMode::floating);
    const int kmin = std::max(10, kmax / 4);
    const auto sfit = qpwalk::tail_fit(table.p_S, kmin, kmax);
    const auto tail = qpwalk::survival_tail(table);
    const auto tfit = qpwalk::tail_fit(
        std::span<const double>(tail.data(), tail.size()), kmin, kmax);
    nlohmann::ordered_json j;
    j["x0"] = x0;
    j["y0"] = y0;
    j["kmax"] = kmax;
    j["window"] = {kmin, kmax};
    j["s_density_fit"] = {{"exponent", sfit.exponent},
                          {"constant", sfit.constant},
                          {"residual", sfit.residual}};
    j["tau_survival_fit"] = {{"exponent", tfit.exponent},
                             {"constant", tfit.constant},
                             {"residual", tfit.residual}};
    j["s_density_constant_formula"] = qpwalk::asymptotic_constant(x0, y0);
    j["tau_tail_constant_formula"] = qpwalk::tau_tail_constant(x0, y0);
    j["s_ratio_at_kmax"] = table.p_S[kmax] * std::pow(kmax, 2.5) /
                           qpwalk::asymptotic_constant(x0, y0);
    const auto sing = qpwalk::singular_coefficient_fit(x0, y0);
    j["singular_fit"] = {{"basis", qpwalk::SingularFit::basis_names()},
                         {"h1", sing.part_coefficients[0]},
                         {"h2", sing.part_coefficients[1]},
                         {"h3", sing.part_coefficients[2]},
                         {"total", sing.total_coefficients},
                         {"condition", sing.condition},
                         {"residual", sing.fit_residuals[3]}};
    qpwalk::emit_text(out, j.dump(2) + "\n");
    return 0;
}

int cmd_validate(const std::string& suite) {
    bool all_pass = true;
    for (int id : qpwalk::suite_criteria(suite)) {
        const auto res = qpwalk::run_criterion(id);
        std::printf("[%s] criterion %2d: %s (%s)\n", res.pass ? "PASS" : "FAIL",
                    res.id, res.name.c_str(), res.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && res.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"absorbed quarter-plane walk: absorption laws by dynamic "
                 "programming, contour integrals, and Monte Carlo"};
    app.require_subcommand(1);

    int x0 = 1, y0 = 1, kmax = 100;
    bool exact = false, sites = false;
    std::string out = "-", sites_out = "sites.csv", format = "json";

    auto* dp = app.add_subcommand("dp", "absorption table by dynamic programming");
    dp->add_option("--x0", x0, "start x0 >= 1")->required();
    dp->add_option("--y0", y0, "start y0 >= 1")->required();
    dp->add_option("--kmax", kmax, "horizon K")->required();
    dp->add_flag("--exact", exact, "exact rational arithmetic (K <= 200)");
    dp->add_flag("--sites", sites, "retain site-resolved hits");
    dp->add_option("--out", out, "output path or - for stdout");
    dp->add_option("--sites-out", sites_out, "site CSV path");

    std::string config;
    long long trials = 100000, cap = 1000000;
    std::uint64_t seed = 1;
    int mc_kmax = 64;
    auto* sim = app.add_subcommand("simulate", "voter block-dynamics Monte Carlo");
    sim->add_option("--config", config, "blocks n1,m1[,n2,m2...]")->required();
    sim->add_option("--trials", trials)->required();
    sim->add_option("--seed", seed)->required();
    sim->add_option("--cap", cap, "per-trial step cap");
    sim->add_option("--kmax", mc_kmax, "largest reported pmf index");
    sim->add_option("--out", out);
    sim->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    std::vector<double> xs{1.0}, zs;
    double x_imag = 0.0, z_imag = 0.0;
    int quad_order = 0;
    auto* ev = app.add_subcommand("eval", "generating function h by contour integrals");
    ev->add_option("--x", xs, "evaluation x (repeatable)");
    ev->add_option("--x-imag", x_imag, "imaginary part added to each x");
    ev->add_option("--z", zs, "evaluation z (repeatable)")->required();
    ev->add_option("--z-imag", z_imag, "imaginary part added to each z");
    ev->add_option("--x0", x0);
    ev->add_option("--y0", y0);
    ev->add_option("--quad-order", quad_order, "fixed quadrature order (0 = adaptive)");
    ev->add_option("--out", out);

    double radius = 0.9;
    int M = 4096, coeff_kmax = 64;
    auto* co = app.add_subcommand("coeffs", "coefficient extraction vs dynamic programming");
    co->add_option("--x0", x0)->required();
    co->add_option("--y0", y0)->required();
    co->add_option("--r", radius, "extraction radius");
    co->add_option("--M", M, "sample count (power of two)");
    co->add_option("--kmax", coeff_kmax, "largest compared index");
    co->add_option("--out", out);

    auto* as = app.add_subcommand("asympt", "tail fits against the k^-5/2 law");
    as->add_option("--x0", x0)->required();
    as->add_option("--y0", y0)->required();
    as->add_option("--kmax", kmax, "horizon for the fit")->required();
    as->add_option("--out", out);

    std::string suite = "all";
    auto* va = app.add_subcommand("validate", "run the verification suites");
    va->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "analytic", "oracle", "mc"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (dp->parsed()) return cmd_dp(x0, y0, kmax, exact, sites, out, sites_out);
        if (sim->parsed())
            return cmd_simulate(config, trials, seed, cap, mc_kmax, out, format);
        if (ev->parsed())
            return cmd_eval(xs, x_imag, zs, z_imag, x0, y0, quad_order, out);
        if (co->parsed()) return cmd_coeffs(x0, y0, radius, M, coeff_kmax, out);
        if (as->parsed()) return cmd_asympt(x0, y0, kmax, out);
        if (va->parsed()) return cmd_validate(suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
