#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "polymaass/connection.hpp"
#include "polymaass/diffops.hpp"
#include "polymaass/eisenstein.hpp"
#include "polymaass/rational.hpp"
#include "polymaass/spaces.hpp"
#include "polymaass/specialfn.hpp"
#include "polymaass/taylor.hpp"

#include <memory>

namespace py = pybind11;
using namespace polymaass;

namespace {

UpperHalfPoint to_point(cplx z) { return {z.real(), z.imag()}; }

Completion completion_from(const std::string& name) {
    if (name == "raw") return Completion::Raw;
    if (name == "hat") return Completion::Completed;
    if (name == "hathat") return Completion::DoublyCompleted;
    throw DomainError("completion must be raw|hat|hathat");
}

Boundary boundary_from(const std::string& name) {
    if (name == "zero") return Boundary::Zero;
    if (name == "binomial") return Boundary::Binomial;
    throw DomainError("boundary must be zero|binomial");
}

// rows of (numerator, denominator) decimal strings; exact, converted to
// Fraction on the python side
std::vector<std::vector<std::pair<std::string, std::string>>> table_rows(
    const ConnectionTable& t) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    for (int n = 0; n <= t.n_max(); ++n) {
        std::vector<std::pair<std::string, std::string>> row;
        for (int l = 0; l <= n + 1; ++l)
            row.emplace_back(t.at(n, l).numerator(), t.at(n, l).denominator());
        rows.push_back(std::move(row));
    }
    return rows;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["identity"] = r.identity;
    d["weights"] = r.weights;
    d["params"] = r.params;
    py::list pts;
    for (const auto& p : r.points) {
        py::dict pd;
        pd["z"] = cplx{p.z.x, p.z.y};
        pd["residual"] = p.residual;
        pts.append(pd);
    }
    d["points"] = pts;
    d["tolerance"] = r.tolerance;
    d["max_residual"] = r.max_residual;
    d["pass"] = r.pass;
    d["notes"] = r.notes;
    return d;
}

} // namespace

PYBIND11_MODULE(_polymaass, m) {
    m.doc() = "real-analytic Eisenstein series, Taylor-coefficient bases, exact "
              "connection tables, and operator-identity verification";

    py::register_exception<Error>(m, "PolymaassError", PyExc_ValueError);

    m.def("gamma", &gamma_complex, py::arg("s"));
    m.def("zeta", &zeta_complex, py::arg("s"));
    m.def("zeta_hat", &zeta_hat, py::arg("s"));
    m.def("divisor_sum", &divisor_sum, py::arg("exponent"), py::arg("n"));
    m.def("incomplete_gamma_upper", &incomplete_gamma_upper, py::arg("a"), py::arg("x"));
    m.def(
        "whittaker_w",
        [](int kappa, cplx mu, double x) { return whittaker_w(kappa, mu, x); },
        py::arg("kappa"), py::arg("mu"), py::arg("x"));
    m.def("bernoulli", [](int n) {
        Rational b = bernoulli(n);
        return std::make_pair(b.numerator(), b.denominator());
    });

    m.def(
        "eval",
        [](int weight, cplx z, cplx s, const std::string& completion, long fourier_terms) {
            Evaluator ev(fourier_terms);
            return ev.eval(Weight(weight), to_point(z), s, completion_from(completion));
        },
        py::arg("weight"), py::arg("z"), py::arg("s"), py::arg("completion") = "hathat",
        py::arg("fourier_terms") = 24);

    m.def(
        "eval_lattice",
        [](int weight, cplx z, cplx s, long cutoff) {
            LatticeSum r = eval_lattice_sum(Weight(weight), to_point(z), s, cutoff);
            return std::make_pair(r.value, r.tail_bound);
        },
        py::arg("weight"), py::arg("z"), py::arg("s"), py::arg("cutoff") = 400);

    m.def(
        "reduce",
        [](cplx z) {
            auto [w, g] = reduce_to_fundamental_domain(to_point(z));
            return std::make_pair(cplx{w.x, w.y}, std::make_tuple(g.a, g.b, g.c, g.d));
        },
        py::arg("z"));

    m.def(
        "taylor_coefficient",
        [](int weight, int order, cplx z, const std::string& family,
           const std::string& boundary, double radius, int nodes, long fourier_terms) {
            Evaluator ev(fourier_terms);
            TaylorBasis tb(ev);
            TaylorCoefficientRequest req;
            req.weight = Weight(weight);
            req.order = order;
            req.point = to_point(z);
            req.contour = {radius, nodes};
            req.boundary = boundary_from(boundary);
            if (family == "plain") req.family = TaylorFamily::Plain;
            else if (family == "symmetrized") req.family = TaylorFamily::Symmetrized;
            else if (family == "modified") req.family = TaylorFamily::Modified;
            else throw DomainError("family must be plain|symmetrized|modified");
            return tb.dispatch(req);
        },
        py::arg("weight"), py::arg("order"), py::arg("z"), py::arg("family") = "plain",
        py::arg("boundary") = "binomial", py::arg("radius") = 0.375, py::arg("nodes") = 64,
        py::arg("fourier_terms") = 24);

    m.def("kronecker_limit_value", [](cplx z) { return kronecker_limit_value(to_point(z)); });
    m.def(
        "explicit_g1_series",
        [](cplx z, long n) { return explicit_g1_series(to_point(z), n); }, py::arg("z"),
        py::arg("terms") = 40);
    m.def("holomorphic_eisenstein", [](int k, cplx z, long n) {
        return holomorphic_eisenstein(Weight(k), to_point(z), n);
    });
    m.def("discriminant_delta", [](cplx z) {
        UpperHalfPoint p = to_point(z);
        return discriminant_delta(p, delta_terms_for(p.y));
    });

    m.def(
        "solve_table",
        [](int weight, const std::string& boundary, int n_max) {
            return table_rows(solve_table(weight, boundary_from(boundary), n_max));
        },
        py::arg("weight"), py::arg("boundary"), py::arg("n_max"));
    m.def("closed_form_binomial", [](int n, int k, int l) {
        Rational r = closed_form_binomial(n, k, l);
        return std::make_pair(r.numerator(), r.denominator());
    });

    m.def("dim_holomorphic", &dim_holomorphic, py::arg("k"));
    m.def("dim_cusp", &dim_cusp, py::arg("k"));
    m.def(
        "dim_polyharmonic",
        [](int k, int twice_depth) { return dim_polyharmonic(k, HarmonicDepth(twice_depth)); },
        py::arg("k"), py::arg("twice_depth"));

    m.def("identity_registry", [] { return identity_registry(); });
    m.def(
        "verify_identity",
        [](const std::string& name, const std::string& grid, double fd_step,
           long fourier_terms) {
            Evaluator ev(fourier_terms);
            VerifyOptions opt;
            opt.grid = grid == "dense" ? dense_grid() : default_grid();
            opt.stencil.h = fd_step;
            return report_dict(verify_identity(name, ev, opt));
        },
        py::arg("name"), py::arg("grid") = "default", py::arg("fd_step") = 0.01,
        py::arg("fourier_terms") = 24);
}
