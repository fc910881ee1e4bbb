// polymaass: evaluation, Taylor coefficients, connection tables, dimension
// tables, and the operator-identity verification suite, with machine-readable
// output.  Exit codes: 0 success / all-pass, 1 verification failure, 2 usage
// or domain error.

#include <CLI11.hpp>

#include "polymaass/config.hpp"
#include "polymaass/connection.hpp"
#include "polymaass/diffops.hpp"
#include "polymaass/eisenstein.hpp"
#include "polymaass/spaces.hpp"
#include "polymaass/specialfn.hpp"
#include "polymaass/taylor.hpp"
#include "jsonout.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace polymaass;
using namespace polymaass::cli;

namespace {

cplx parse_pair(const std::string& text, const char* what) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ConfigError(std::string(what) + ": expected \"a,b\", got '" + text + "'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ConfigError(std::string(what) + ": bad number in '" + text + "'");
    }
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file '" + out_path + "'");
    os << payload;
}

Completion parse_completion(const std::string& name) {
    if (name == "raw") return Completion::Raw;
    if (name == "hat") return Completion::Completed;
    if (name == "hathat") return Completion::DoublyCompleted;
    throw ConfigError("completion must be raw|hat|hathat");
}

std::string run_eval(const RunConfig& cfg, int k, const std::string& zs, const std::string& ss,
                     const std::string& completion, const std::string& path) {
    cplx zc = parse_pair(zs, "--z");
    cplx s = parse_pair(ss, "--s");
    UpperHalfPoint z{zc.real(), zc.imag()};
    Completion comp = parse_completion(completion);
    Weight w(k);

    Evaluator ev(cfg.fourier_terms);
    std::optional<EvalResult> fourier;
    std::optional<cplx> lattice;
    double lattice_tail = 0.0;
    if (path == "fourier" || path == "both") fourier = ev.eval_detailed(w, z, s, comp);
    if (path == "lattice" || path == "both") {
        LatticeSum raw = eval_lattice_sum(w, z, s, cfg.lattice_cutoff);
        cplx scale = 1.0;
        if (comp != Completion::Raw) {
            double h = std::abs(k) / 2.0;
            scale = std::pow(M_PI, -(s + k / 2.0)) * gamma_complex(s + k / 2.0 + h);
            if (comp == Completion::DoublyCompleted)
                scale *= (s + k / 2.0) * (s + k / 2.0 - 1.0);
        }
        lattice = scale * raw.value;
        lattice_tail = std::abs(scale) * raw.tail_bound;
    }

    cplx value = fourier ? fourier->value : *lattice;
    double tail = fourier ? fourier->tail_bound : lattice_tail;

    std::ostringstream os;
    os << "{\"weight\": " << k << ", \"z\": " << jcomplex(zc) << ", \"s\": " << jcomplex(s)
       << ", \"completion\": " << jstr(completion) << ", \"value\": " << jcomplex(value)
       << ", \"paths\": {";
    bool first = true;
    if (fourier) {
        os << "\"fourier\": " << jcomplex(fourier->value);
        first = false;
    }
    if (lattice) {
        if (!first) os << ", ";
        os << "\"lattice\": " << jcomplex(*lattice);
    }
    os << "}";
    if (fourier && lattice)
        os << ", \"discrepancy\": " << jnum(std::abs(fourier->value - *lattice));
    os << ", \"tail_bound\": " << jnum(tail) << "}\n";
    return os.str();
}

std::string run_taylor(const RunConfig& cfg, int k, int order, const std::string& zs,
                       const std::string& family, const std::string& boundary) {
    cplx zc = parse_pair(zs, "--z");
    TaylorCoefficientRequest req;
    req.weight = Weight(k);
    req.order = order;
    req.point = {zc.real(), zc.imag()};
    req.contour.radius = cfg.contour_radius;
    req.contour.nodes = cfg.contour_nodes;
    if (family == "plain") req.family = TaylorFamily::Plain;
    else if (family == "symmetrized") req.family = TaylorFamily::Symmetrized;
    else if (family == "modified") req.family = TaylorFamily::Modified;
    else throw ConfigError("family must be plain|symmetrized|modified");
    if (boundary == "zero") req.boundary = Boundary::Zero;
    else if (boundary == "binomial") req.boundary = Boundary::Binomial;
    else throw ConfigError("boundary must be zero|binomial");

    Evaluator ev(cfg.fourier_terms);
    TaylorBasis tb(ev);
    cplx value = tb.dispatch(req);

    std::ostringstream os;
    os << "{\"name\": " << jstr(k >= 2 ? "G" : "F") << ", \"weight\": " << k
       << ", \"order\": " << order << ", \"family\": " << jstr(family) << ", \"z\": "
       << jcomplex(zc) << ", \"value\": " << jcomplex(value) << ", \"contour\": {\"radius\": "
       << jnum(cfg.contour_radius) << ", \"nodes\": " << cfg.contour_nodes << "}}\n";
    return os.str();
}

std::string run_ctable(int k, const std::string& boundary, int nmax) {
    Boundary b;
    if (boundary == "zero") b = Boundary::Zero;
    else if (boundary == "binomial") b = Boundary::Binomial;
    else throw ConfigError("boundary must be zero|binomial");
    ConnectionTable t = solve_table(k, b, nmax);
    std::ostringstream os;
    write_table_csv(t, os);
    return os.str();
}

std::string run_dims(int kmin, int kmax, int max_depth) {
    std::ostringstream os;
    write_dim_table_csv(kmin, kmax, max_depth, os);
    return os.str();
}

std::string report_json(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"identity\": " << jstr(r.identity) << ", \"weights\": [";
    for (size_t i = 0; i < r.weights.size(); ++i) {
        if (i) os << ", ";
        os << r.weights[i];
    }
    os << "], \"params\": " << jstr(r.params) << ", \"points\": [";
    for (size_t i = 0; i < r.points.size(); ++i) {
        if (i) os << ", ";
        os << "{\"z\": {\"re\": " << jnum(r.points[i].z.x) << ", \"im\": "
           << jnum(r.points[i].z.y) << "}, \"residual\": " << jnum(r.points[i].residual) << "}";
    }
    os << "], \"tolerance\": " << jnum(r.tolerance) << ", \"max_residual\": "
       << jnum(r.max_residual) << ", \"pass\": " << jbool(r.pass) << ", \"notes\": [";
    for (size_t i = 0; i < r.notes.size(); ++i) {
        if (i) os << ", ";
        os << jstr(r.notes[i]);
    }
    os << "]}";
    return os.str();
}

int run_verify(const RunConfig& cfg, const std::string& only, const std::string& grid,
               std::string& payload) {
    VerifyOptions opt;
    if (grid == "default") opt.grid = default_grid();
    else if (grid == "dense") opt.grid = dense_grid();
    else throw ConfigError("grid must be default|dense");
    opt.stencil.h = cfg.fd_step;
    opt.contour.radius = cfg.contour_radius;
    opt.contour.nodes = cfg.contour_nodes;
    opt.tolerance_overrides = cfg.tolerance_overrides;

    Evaluator ev(cfg.fourier_terms);
    std::vector<VerificationReport> reports;
    if (only.empty()) {
        reports = verify_all(ev, opt);
    } else {
        reports.push_back(verify_identity(only, ev, opt));
    }
    bool all = true;
    std::ostringstream os;
    os << "{\"reports\": [";
    for (size_t i = 0; i < reports.size(); ++i) {
        if (i) os << ", ";
        os << report_json(reports[i]);
        all = all && reports[i].pass;
    }
    os << "], \"all_pass\": " << jbool(all) << "}\n";
    payload = os.str();
    return all ? 0 : 1;
}

RunConfig load_config(int argc, char** argv) {
    RunConfig cfg;
    std::string path;
    if (const char* env = std::getenv("POLYMAASS_CONFIG")) path = env;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    }
    if (!path.empty()) cfg = parse_config_file(path);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-holomorphic Eisenstein series, Taylor-coefficient bases, "
                 "connection tables, and operator-identity verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        cfg = load_config(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string config_path;
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--fourier-terms", cfg.fourier_terms, "Fourier truncation N");
    app.add_option("--lattice-cutoff", cfg.lattice_cutoff, "lattice square cutoff M");
    app.add_option("--contour-nodes", cfg.contour_nodes, "contour node count (even)");
    app.add_option("--contour-radius", cfg.contour_radius, "contour radius");
    app.add_option("--fd-step", cfg.fd_step, "finite-difference step h");

    int weight = 0, order = 0, nmax = 7, kmin = 0, kmax = 26, max_depth = 8;
    std::string zs = "0,1", ss = "0,0", completion = "hathat", path = "fourier";
    std::string family = "plain", boundary = "binomial", out, only, grid = "default";

    auto* eval = app.add_subcommand("eval", "evaluate the series at (z, s)");
    eval->add_option("--weight", weight)->required();
    eval->add_option("--z", zs, "point x,y")->required();
    eval->add_option("--s", ss, "spectral parameter re,im")->required();
    eval->add_option("--completion", completion, "raw|hat|hathat");
    eval->add_option("--path", path, "fourier|lattice|both");
    eval->add_option("--out", out);

    auto* taylor = app.add_subcommand("taylor", "Taylor coefficient at s = 0");
    taylor->add_option("--weight", weight)->required();
    taylor->add_option("--order", order)->required();
    taylor->add_option("--z", zs, "point x,y")->required();
    taylor->add_option("--family", family, "plain|symmetrized|modified");
    taylor->add_option("--boundary", boundary, "zero|binomial (modified family)");
    taylor->add_option("--out", out);

    auto* ctable = app.add_subcommand("ctable", "exact connection-coefficient table (CSV)");
    ctable->add_option("--weight", weight)->required();
    ctable->add_option("--boundary", boundary, "zero|binomial")->required();
    ctable->add_option("--nmax", nmax)->required();
    ctable->add_option("--out", out);

    auto* dims = app.add_subcommand("dims", "dimension table (CSV)");
    dims->add_option("--kmin", kmin);
    dims->add_option("--kmax", kmax);
    dims->add_option("--max-depth", max_depth, "maximum 2m (half-integer depths)");
    dims->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run the identity registry");
    verify->add_option("--only", only, "single identity name");
    verify->add_option("--grid", grid, "default|dense");
    verify->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        cfg.validate();
        if (eval->parsed()) {
            if (path != "fourier" && path != "lattice" && path != "both")
                throw ConfigError("path must be fourier|lattice|both");
            emit(run_eval(cfg, weight, zs, ss, completion, path), out);
        } else if (taylor->parsed()) {
            emit(run_taylor(cfg, weight, order, zs, family, boundary), out);
        } else if (ctable->parsed()) {
            emit(run_ctable(weight, boundary, nmax), out);
        } else if (dims->parsed()) {
            emit(run_dims(kmin, kmax, max_depth), out);
        } else if (verify->parsed()) {
            std::string payload;
            int rc = run_verify(cfg, only, grid, payload);
            emit(payload, out);
            return rc;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
