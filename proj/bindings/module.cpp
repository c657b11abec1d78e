#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpwalk/asymptotics.hpp"
#include "qpwalk/criteria.hpp"
#include "qpwalk/genfun.hpp"
#include "qpwalk/gluing.hpp"
#include "qpwalk/kernel.hpp"
#include "qpwalk/voter.hpp"
#include "qpwalk/walk_dp.hpp"

namespace py = pybind11;
using namespace qpwalk;

namespace {

py::dict table_to_dict(const AbsorptionTable& t) {
    py::dict d;
    d["x0"] = t.x0;
    d["y0"] = t.y0;
    d["horizon"] = t.horizon;
    d["exact"] = (t.mode == DpMode::exact);
    d["p_S"] = t.p_S;
    d["p_T"] = t.p_T;
    d["p_tau"] = t.p_tau;
    d["survival"] = t.survival;
    if (t.has_sites) {
        d["site_hits_x"] = t.site_hits_x;
        d["site_hits_y"] = t.site_hits_y;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_qpwalk, m) {
    m.doc() = "Absorption law of the zero-drift quarter-plane walk: dynamic "
              "programming, contour-integral generating functions, and voter "
              "block-dynamics Monte Carlo.";

    m.def(
        "dp_absorption",
        [](int x0, int y0, int K, bool exact, bool sites) {
            return table_to_dict(dp_absorption(
                x0, y0, K, exact ? DpMode::exact : DpMode::floating, sites));
        },
        py::arg("x0"), py::arg("y0"), py::arg("K"), py::arg("exact") = false,
        py::arg("sites") = false);

    m.def(
        "survival_tail",
        [](int x0, int y0, int K) {
            return survival_tail(dp_absorption(x0, y0, K, DpMode::floating));
        },
        py::arg("x0"), py::arg("y0"), py::arg("K"));

    m.def("swap_symmetry_check",
          [](int x0, int y0, int K) { return swap_symmetry_check(x0, y0, K); },
          py::arg("x0"), py::arg("y0"), py::arg("K"));

    m.def(
        "estimate_distribution",
        [](std::vector<long long> sizes, long long trials, std::uint64_t seed,
           int kmax, long long cap) {
            const McSummary s =
                estimate_distribution(BlockConfig{std::move(sizes)}, trials,
                                      seed, kmax, cap);
            py::dict d;
            d["trials"] = s.trials;
            d["seed"] = s.seed;
            d["cap"] = s.cap;
            d["truncated"] = s.truncated;
            d["beyond_kmax"] = s.beyond_kmax;
            d["pmf"] = s.pmf;
            d["mean"] = s.mean;
            return d;
        },
        py::arg("blocks"), py::arg("trials"), py::arg("seed"),
        py::arg("kmax") = 64, py::arg("cap") = 1000000);

    m.def("interfaces",
          [](std::vector<long long> sizes) {
              return interfaces(BlockConfig{std::move(sizes)});
          },
          py::arg("blocks"));

    m.def("branch_points", [](double z) {
        const BranchPoints b = branch_points(z);
        return py::make_tuple(b.x1, b.x2, b.x3, b.x4);
    });
    m.def("Y_branch", &Y_branch, py::arg("x"), py::arg("z"), py::arg("branch"));
    m.def("cgf", &cgf, py::arg("t"), py::arg("z"));
    m.def("mu", &mu, py::arg("t"), py::arg("z"), py::arg("y0"));
    m.def("t_root", &t_root, py::arg("u"), py::arg("z"), py::arg("index"));
    m.def("chebyshev_U",
          [](int n, cplx u) { return chebyshev_U(n, u); }, py::arg("n"),
          py::arg("u"));
    m.def("group_order_check", &group_order_check, py::arg("samples") = 100);
    m.def("curve_sample", [](double z, int n) {
        const CurveSample cs = curve_sample(z, n);
        return py::make_tuple(cs.abscissae, cs.points);
    });

    m.def(
        "h_parts",
        [](cplx x, cplx z, int x0, int y0, int order) {
            const QuadratureRule rule(order);
            const auto p = h_parts(x, z, x0, y0, rule);
            return py::make_tuple(p[0].value, p[1].value, p[2].value);
        },
        py::arg("x"), py::arg("z"), py::arg("x0"), py::arg("y0"),
        py::arg("order") = 511);
    m.def(
        "h_total",
        [](cplx x, cplx z, int x0, int y0) {
            const HEvaluation h = h_total(x, z, x0, y0);
            return py::make_tuple(h.value, h.error_estimate, h.converged);
        },
        py::arg("x"), py::arg("z"), py::arg("x0"), py::arg("y0"));
    m.def("G_truncated", &G_truncated, py::arg("x"), py::arg("y"), py::arg("z"),
          py::arg("x0"), py::arg("y0"), py::arg("K"));
    m.def("functional_eq_residual", &functional_eq_residual, py::arg("x"),
          py::arg("y"), py::arg("z"), py::arg("x0"), py::arg("y0"),
          py::arg("K") = 300);
    m.def("boundary_residual", &boundary_residual, py::arg("z"), py::arg("x0"),
          py::arg("y0"), py::arg("samples") = 64, py::arg("K") = 300);

    m.def(
        "extract_coefficients",
        [](int x0, int y0, double r, int M) {
            const CoefficientSeries cs = extract_coefficients(x0, y0, r, M);
            py::dict d;
            d["radius"] = cs.radius;
            d["M"] = cs.M;
            d["coefficients"] = cs.coefficients;
            d["max_imag_residue"] = cs.max_imag_residue;
            d["aliasing_bound"] = cs.aliasing_bound;
            return d;
        },
        py::arg("x0"), py::arg("y0"), py::arg("r") = 0.9, py::arg("M") = 4096);
    m.def("asymptotic_constant", &asymptotic_constant);
    m.def("tau_tail_constant", &tau_tail_constant);
    m.def(
        "pringsheim_transfer",
        [](double theta, double c) {
            const PowerAsymptote a = pringsheim_transfer(theta, c);
            return py::make_tuple(a.amplitude, a.exponent);
        },
        py::arg("theta"), py::arg("c"));
    m.def(
        "tail_fit",
        [](std::vector<double> series, int kmin, int kmax) {
            const TailFit f = tail_fit(series, kmin, kmax);
            py::dict d;
            d["exponent"] = f.exponent;
            d["constant"] = f.constant;
            d["residual"] = f.residual;
            return d;
        },
        py::arg("series"), py::arg("k_min"), py::arg("k_max"));
    m.def("singular_coefficient_fit", [](int x0, int y0) {
        const SingularFit f = singular_coefficient_fit(x0, y0);
        py::dict d;
        d["basis"] = SingularFit::basis_names();
        d["h1"] = f.part_coefficients[0];
        d["h2"] = f.part_coefficients[1];
        d["h3"] = f.part_coefficients[2];
        d["total"] = f.total_coefficients;
        d["condition"] = f.condition;
        return d;
    });
    m.def("slit_integral_identity", [](int k, double z) {
        const SlitIntegralIdentity l = slit_integral_identity(k, z);
        return py::make_tuple(l.lhs, l.rhs, l.diff);
    });
    m.def("log_singularity_fit", [](double exponent, int k) {
        const LogFit f = log_singularity_fit(exponent, k);
        return py::make_tuple(f.coefficient, f.condition, f.residual);
    });

    m.def("run_criterion", [](int id) {
        const CriterionResult r = run_criterion(id);
        return py::make_tuple(r.id, r.name, r.pass, r.detail);
    });
}
