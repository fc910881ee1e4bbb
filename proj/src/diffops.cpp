#include "polymaass/diffops.hpp"
#include "polymaass/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace polymaass {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

struct Derivs {
    cplx fx, fy, fxx, fyy;
};

Derivs derivs_at_h(const SmoothField& f, const UpperHalfPoint& z, double h, bool second) {
    const cplx f0 = second ? f(z) : cplx(0.0);
    const cplx xp1 = f({z.x + h, z.y}), xm1 = f({z.x - h, z.y});
    const cplx xp2 = f({z.x + 2 * h, z.y}), xm2 = f({z.x - 2 * h, z.y});
    const cplx yp1 = f({z.x, z.y + h}), ym1 = f({z.x, z.y - h});
    const cplx yp2 = f({z.x, z.y + 2 * h}), ym2 = f({z.x, z.y - 2 * h});
    Derivs d;
    d.fx = (-xp2 + 8.0 * xp1 - 8.0 * xm1 + xm2) / (12.0 * h);
    d.fy = (-yp2 + 8.0 * yp1 - 8.0 * ym1 + ym2) / (12.0 * h);
    if (second) {
        d.fxx = (-xp2 + 16.0 * xp1 - 30.0 * f0 + 16.0 * xm1 - xm2) / (12.0 * h * h);
        d.fyy = (-yp2 + 16.0 * yp1 - 30.0 * f0 + 16.0 * ym1 - ym2) / (12.0 * h * h);
    }
    return d;
}

Derivs derivs(const SmoothField& f, const UpperHalfPoint& z, const Stencil& st, bool second) {
    if (z.y - 2.0 * st.h <= 0.1)
        throw DomainError("stencil footprint exits y > 0.1");
    Derivs c = derivs_at_h(f, z, st.h, second);
    if (!st.richardson) return c;
    Derivs fhalf = derivs_at_h(f, z, st.h / 2.0, second);
    Derivs r;
    r.fx = (16.0 * fhalf.fx - c.fx) / 15.0;
    r.fy = (16.0 * fhalf.fy - c.fy) / 15.0;
    r.fxx = (16.0 * fhalf.fxx - c.fxx) / 15.0;
    r.fyy = (16.0 * fhalf.fyy - c.fyy) / 15.0;
    return r;
}

} // namespace

cplx laplacian(const SmoothField& f, Weight k, const UpperHalfPoint& z, const Stencil& st) {
    Derivs d = derivs(f, z, st, true);
    const double y = z.y;
    return y * y * (d.fxx + d.fyy) -
           cplx(0.0, double(int(k))) * y * (d.fx + cplx(0.0, 1.0) * d.fy);
}

cplx xi(const SmoothField& f, Weight k, const UpperHalfPoint& z, const Stencil& st) {
    Derivs d = derivs(f, z, st, false);
    return cplx(0.0, 1.0) * std::pow(z.y, double(int(k))) * std::conj(d.fx + cplx(0.0, 1.0) * d.fy);
}

cplx fourier_term_profile(Weight k, long n, cplx s, double y) {
    if (n == 0) throw DomainError("fourier_term_profile: n != 0 required");
    double arg = 4.0 * kPi * std::labs(n) * y;
    int kap = (n > 0 ? 1 : -1) * (int(k) / 2);
    return std::pow(y, -int(k) / 2.0) * whittaker_w(kap, s + (int(k) - 1) / 2.0, arg);
}

cplx xi_on_fourier_terms(Weight k, long n, cplx s, double y) {
    if (n == 0) throw DomainError("xi_on_fourier_terms: n != 0 required");
    double arg = 4.0 * kPi * std::labs(n) * y;
    cplx sb = std::conj(s);
    cplx mu = -sb + (1.0 - int(k)) / 2.0;
    double ypow = std::pow(y, -(2.0 - int(k)) / 2.0);
    if (n < 0) return -ypow * whittaker_w((2 - int(k)) / 2, mu, arg);
    return sb * (1.0 - int(k) - sb) * ypow * whittaker_w(-(2 - int(k)) / 2, mu, arg);
}

// ---------------------------------------------------------------------------
// identity registry
// ---------------------------------------------------------------------------

std::vector<UpperHalfPoint> default_grid() {
    return {{0.0, 1.0}, {0.3, 0.9}, {-0.25, 1.4}};
}

std::vector<UpperHalfPoint> dense_grid() {
    return {{0.0, 1.0},  {0.3, 0.9},  {-0.25, 1.4},
            {0.12, 0.83}, {-0.4, 1.1}, {0.05, 2.0}};
}

VerifyOptions::VerifyOptions() : grid(default_grid()) {}

namespace {

const std::vector<int> kWeights = {-4, -2, 0, 2, 4, 6};
const cplx kS0{0.3, 0.2};       // generic spectral parameter for field checks
const cplx kSEigen{2.3, 0.35};  // e-value parameter for the eigenfunction check

struct Case {
    double residual;
    std::string label;
};

double rel_residual(cplx lhs, cplx rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

struct Ctx {
    const Evaluator& ev;
    const VerifyOptions& opt;
    TaylorBasis tb;

    Ctx(const Evaluator& e, const VerifyOptions& o) : ev(e), opt(o), tb(e) {}

    SmoothField field(int k, cplx s, Completion c) const {
        const Evaluator& e = ev;
        Weight w(k);
        return [&e, w, s, c](const UpperHalfPoint& z) { return e.eval(w, z, s, c); };
    }
};

using CaseFn = std::function<std::vector<Case>(Ctx&, const UpperHalfPoint&)>;

std::vector<Case> cases_eigenfunction(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    for (int k : kWeights) {
        auto f = c.field(k, kSEigen, Completion::Raw);
        cplx lhs = laplacian(f, Weight(k), z, c.opt.stencil);
        cplx rhs = kSEigen * (kSEigen + double(k - 1)) * f(z);
        out.push_back({rel_residual(lhs, rhs), "k=" + std::to_string(k)});
    }
    return out;
}

std::vector<Case> cases_factorization(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    for (int k : kWeights) {
        auto f = c.field(k, kS0, Completion::Completed);
        const Stencil& st = c.opt.stencil;
        SmoothField inner = [&, k](const UpperHalfPoint& w) {
            return xi(f, Weight(k), w, st);
        };
        cplx lhs = xi(inner, Weight(2 - k), z, st);
        cplx rhs = laplacian(f, Weight(k), z, st);
        out.push_back({rel_residual(lhs, rhs), "k=" + std::to_string(k)});
    }
    return out;
}

std::vector<Case> cases_slash_commutation(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    const UnimodularMatrix g = UnimodularMatrix::inversion();  // S
    for (int k : kWeights) {
        auto f = c.field(k, kS0, Completion::Completed);
        const Stencil& st = c.opt.stencil;
        SmoothField pulled = [&, k](const UpperHalfPoint& w) {
            return apply_slash(f(g.apply(w)), Weight(k), g, w);
        };
        cplx lhs = xi(pulled, Weight(k), z, st);
        cplx rhs = ipow(g.multiplier(z), k - 2) * xi(f, Weight(k), g.apply(z), st);
        out.push_back({rel_residual(lhs, rhs), "k=" + std::to_string(k)});
    }
    return out;
}

std::vector<Case> cases_xi_on_E_raw(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    for (int k : kWeights) {
        auto f = c.field(k, kS0, Completion::Raw);
        cplx lhs = xi(f, Weight(k), z, c.opt.stencil);
        cplx sb = std::conj(kS0);
        cplx rhs = sb * c.ev.eval(Weight(2 - k), z, sb + double(k - 1), Completion::Raw);
        out.push_back({rel_residual(lhs, rhs), "k=" + std::to_string(k)});
    }
    return out;
}

std::vector<Case> cases_xi_on_E_completed(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    for (int k : kWeights) {
        auto f = c.field(k, kS0, Completion::DoublyCompleted);
        cplx lhs = xi(f, Weight(k), z, c.opt.stencil);
        cplx sb = std::conj(kS0);
        cplx rhs = c.ev.eval(Weight(2 - k), z, -sb, Completion::DoublyCompleted);
        if (k >= 2) rhs *= sb * (sb + double(k - 1));
        out.push_back({rel_residual(lhs, rhs), "k=" + std::to_string(k)});
    }
    return out;
}

std::vector<Case> cases_double_completion(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    for (int k : kWeights) {
        auto f = c.field(k, kS0, Completion::Completed);
        cplx lap = laplacian(f, Weight(k), z, c.opt.stencil);
        cplx fe = f(z);
        cplx rhs = c.ev.eval(Weight(k), z, kS0, Completion::DoublyCompleted);
        double kk = double(k);
        cplx lhs = lap + (kk * kk / 4.0 - kk / 2.0) * fe;
        out.push_back({rel_residual(lhs, rhs), "k=" + std::to_string(k)});
        // shifted-constant variant, reported but not asserted
        cplx alt = lap + (kk * kk / 4.0) * fe;
        out.push_back({-rel_residual(alt, rhs), "k=" + std::to_string(k) + " (k^2/4 variant)"});
    }
    return out;
}

// Two-tolerance families below mark xi relations by scaling: each Case keeps
// its raw residual; pass logic compares against the per-operator tolerance.
struct OpCase {
    double residual;
    bool is_xi;
    std::string label;
};

std::vector<OpCase> ladder_cases(Ctx& c, const UpperHalfPoint& z, bool general) {
    std::vector<OpCase> out;
    const Stencil& st = c.opt.stencil;
    const ContourSpec& ct = c.opt.contour;
    if (!general) {
        // weight 0/2 symmetrized ladder
        for (int n = 1; n <= 3; ++n) {
            SmoothField Ft = [&, n](const UpperHalfPoint& w) {
                return c.tb.symmetrized(Weight(0), n, w, ct);
            };
            SmoothField Gt = [&, n](const UpperHalfPoint& w) {
                return c.tb.symmetrized(Weight(2), n, w, ct);
            };
            cplx Ftm1 = c.tb.symmetrized(Weight(0), n - 1, z, ct);
            cplx Gtm1 = c.tb.symmetrized(Weight(2), n - 1, z, ct);
            cplx Gtn = c.tb.symmetrized(Weight(2), n, z, ct);
            out.push_back({rel_residual(laplacian(Ft, Weight(0), z, st), Ftm1), false,
                           "D0 Ft_" + std::to_string(n)});
            out.push_back({rel_residual(xi(Ft, Weight(0), z, st), Gtn), true,
                           "xi0 Ft_" + std::to_string(n)});
            out.push_back({rel_residual(laplacian(Gt, Weight(2), z, st), Gtm1), false,
                           "D2 Gt_" + std::to_string(n)});
            out.push_back({rel_residual(xi(Gt, Weight(2), z, st), Ftm1), true,
                           "xi2 Gt_" + std::to_string(n)});
        }
        return out;
    }
    for (int k : {4, 6}) {
        ConnectionTable table = solve_table(k, Boundary::Binomial, 4);
        // single-weight combinations, so the field stencils do not drag the
        // dual-weight contour along
        auto gt_at = [&, k](int n, const UpperHalfPoint& w) {
            cplx acc = 0.0;
            for (int l = 0; l <= n; ++l) {
                double cc = table.at(n, l).to_double();
                acc += ((l & 1) ? -cc : cc) * c.tb.coefficient(Weight(k), n - l, w, ct);
            }
            return acc;
        };
        auto ft_at = [&, k](int n, const UpperHalfPoint& w) {
            cplx acc = 0.0;
            for (int l = 0; l <= n; ++l)
                acc += table.at(n, l).to_double() * c.tb.coefficient(Weight(2 - k), n - l, w, ct);
            return (n & 1) ? -acc : acc;
        };
        for (int n = 1; n <= 3; ++n) {
            SmoothField Gt = [&, n](const UpperHalfPoint& w) { return gt_at(n, w); };
            SmoothField Ft = [&, n](const UpperHalfPoint& w) { return ft_at(n, w); };
            std::pair<cplx, cplx> prev{gt_at(n - 1, z), ft_at(n - 1, z)};
            cplx Gtn = gt_at(n, z);
            double km1 = double(k - 1);
            std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            out.push_back({rel_residual(xi(Gt, Weight(k), z, st), km1 * prev.second), true,
                           "xi_k Gt" + tag});
            out.push_back({rel_residual(xi(Ft, Weight(2 - k), z, st), Gtn), true,
                           "xi_{2-k} Ft" + tag});
            out.push_back({rel_residual(laplacian(Gt, Weight(k), z, st), km1 * prev.first),
                           false, "D_k Gt" + tag});
            out.push_back({rel_residual(laplacian(Ft, Weight(2 - k), z, st), km1 * prev.second),
                           false, "D_{2-k} Ft" + tag});
        }
    }
    return out;
}

std::vector<Case> cases_taylor_recursion(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    const Stencil& st = c.opt.stencil;
    const ContourSpec& ct = c.opt.contour;
    for (int k : kWeights) {
        double sgn = k >= 2 ? 1.0 : -1.0;  // F^- = (-1)^n F below, G plain above
        for (int n = 1; n <= 3; ++n) {
            auto coeff = [&](int m) -> cplx {
                if (m < 0) return 0.0;
                cplx v = c.tb.coefficient(Weight(k), m, z, ct);
                if (k <= 0 && (m & 1)) v = -v;
                return v;
            };
            SmoothField fn = [&, k, n](const UpperHalfPoint& w) {
                cplx v = c.tb.coefficient(Weight(k), n, w, ct);
                if (k <= 0 && (n & 1)) v = -v;
                return v;
            };
            double a = k >= 2 ? double(k - 1) : double(1 - k);
            cplx rhs = a * coeff(n - 1) + coeff(n - 2);
            cplx lhs = laplacian(fn, Weight(k), z, st);
            (void)sgn;
            out.push_back({rel_residual(lhs, rhs),
                           "k=" + std::to_string(k) + " n=" + std::to_string(n)});
        }
    }
    return out;
}

// closed-form anchors for the first Taylor coefficients; the residual of the
// alternate sign/constant variant found in parts of the literature is
// reported in the notes, never asserted
std::vector<Case> cases_kronecker_limit(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    cplx contour = c.tb.coefficient(Weight(0), 1, z, c.opt.contour);
    out.push_back({std::abs(contour - kronecker_limit_value(z)), "closed form"});
    out.push_back({-std::abs(contour - kronecker_limit_value_alternate(z)),
                   "log(4 pi) constant variant"});
    return out;
}

std::vector<Case> cases_g1_series(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    cplx contour = c.tb.coefficient(Weight(2), 1, z, c.opt.contour);
    out.push_back({std::abs(contour - explicit_g1_series(z, 60)), "closed form"});
    out.push_back({-std::abs(contour - explicit_g1_series_alternate(z, 60)),
                   "flipped-sign variant"});
    return out;
}

std::vector<Case> cases_xi_fourier_term(Ctx& c, const UpperHalfPoint& z) {
    std::vector<Case> out;
    std::mt19937 rng(20240811u + std::hash<double>{}(z.y));
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int draw = 0; draw < 7; ++draw) {
        int k = kWeights[rng() % kWeights.size()];
        long n = static_cast<long>(rng() % 2 + 1) * (rng() % 2 ? 1 : -1);
        cplx s{u(rng), u(rng)};
        SmoothField f = [&, k, n, s](const UpperHalfPoint& w) {
            return fourier_term_profile(Weight(k), n, s, w.y) *
                   std::exp(cplx(0.0, 2.0 * kPi * double(n) * w.x));
        };
        cplx lhs = xi(f, Weight(k), z, c.opt.stencil);
        cplx rhs = xi_on_fourier_terms(Weight(k), n, s, z.y) *
                   std::exp(cplx(0.0, -2.0 * kPi * double(n) * z.x));
        std::ostringstream lbl;
        lbl << "k=" << k << " n=" << n << " s=" << s.real() << "+" << s.imag() << "i";
        out.push_back({std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), lbl.str()});
    }
    return out;
}

struct IdentitySpec {
    std::string name;
    double tol;
    double tol_xi;  // 0 when single-tolerance
};

const std::vector<IdentitySpec>& registry_specs() {
    static const std::vector<IdentitySpec> specs = {
        {"eigenfunction", 1e-5, 0},
        {"factorization", 1e-5, 0},
        {"slash_commutation", 1e-6, 0},
        {"xi_on_E_raw", 1e-6, 0},
        {"xi_on_E_completed", 1e-6, 0},
        {"double_completion", 1e-5, 0},
        {"ladder_02", 1e-5, 1e-6},
        {"ramp_tower_general", 1e-5, 1e-6},
        {"taylor_recursion", 1e-5, 0},
        {"xi_fourier_term", 1e-7, 0},
        {"kronecker_limit", 1e-8, 0},
        {"g1_series", 1e-9, 0},
    };
    return specs;
}

} // namespace

const std::vector<std::string>& identity_registry() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : registry_specs()) v.push_back(s.name);
        return v;
    }();
    return names;
}

VerificationReport verify_identity(const std::string& name, const Evaluator& ev,
                                   const VerifyOptions& opt) {
    const IdentitySpec* spec = nullptr;
    for (const auto& s : registry_specs())
        if (s.name == name) spec = &s;
    if (!spec) throw UnknownIdentityError("unknown identity: " + name);

    Ctx ctx(ev, opt);
    VerificationReport rep;
    rep.identity = name;
    if (name == "ramp_tower_general") rep.weights = {4, 6};
    else if (name == "kronecker_limit") rep.weights = {0};
    else if (name == "g1_series") rep.weights = {2};
    else rep.weights = kWeights;
    rep.tolerance = spec->tol;
    if (auto it = opt.tolerance_overrides.find(name); it != opt.tolerance_overrides.end())
        rep.tolerance = it->second;
    double tol_xi = spec->tol_xi > 0 ? std::min(spec->tol_xi, rep.tolerance) : rep.tolerance;

    bool pass = true;
    double worst = 0.0, worst_xi = 0.0;
    for (const auto& z : opt.grid) {
        double zworst = 0.0;
        if (name == "ladder_02" || name == "ramp_tower_general") {
            auto cases = ladder_cases(ctx, z, name == "ramp_tower_general");
            for (const auto& c : cases) {
                double lim = c.is_xi ? tol_xi : rep.tolerance;
                if (c.residual > lim) {
                    pass = false;
                    rep.notes.push_back("over tolerance: " + c.label);
                }
                zworst = std::max(zworst, c.residual);
                (c.is_xi ? worst_xi : worst) = std::max(c.is_xi ? worst_xi : worst, c.residual);
            }
        } else {
            std::vector<Case> cases;
            if (name == "eigenfunction") cases = cases_eigenfunction(ctx, z);
            else if (name == "factorization") cases = cases_factorization(ctx, z);
            else if (name == "slash_commutation") cases = cases_slash_commutation(ctx, z);
            else if (name == "xi_on_E_raw") cases = cases_xi_on_E_raw(ctx, z);
            else if (name == "xi_on_E_completed") cases = cases_xi_on_E_completed(ctx, z);
            else if (name == "double_completion") cases = cases_double_completion(ctx, z);
            else if (name == "taylor_recursion") cases = cases_taylor_recursion(ctx, z);
            else if (name == "kronecker_limit") cases = cases_kronecker_limit(ctx, z);
            else if (name == "g1_series") cases = cases_g1_series(ctx, z);
            else cases = cases_xi_fourier_term(ctx, z);
            for (const auto& c : cases) {
                if (c.residual < 0) {  // informational variant, reported only
                    rep.notes.push_back("variant residual " + std::to_string(-c.residual) +
                                        " [" + c.label + "]");
                    continue;
                }
                if (c.residual > rep.tolerance) {
                    pass = false;
                    rep.notes.push_back("over tolerance: " + c.label);
                }
                zworst = std::max(zworst, c.residual);
                worst = std::max(worst, c.residual);
            }
        }
        rep.points.push_back({z, zworst});
    }
    if (spec->tol_xi > 0) {
        std::ostringstream n1;
        n1 << "xi relations checked at " << tol_xi << " (max " << worst_xi
           << "); Laplacian relations at " << rep.tolerance << " (max " << worst << ")";
        rep.notes.push_back(n1.str());
    }
    rep.max_residual = std::max(worst, worst_xi);
    rep.pass = pass;
    std::ostringstream p;
    p << "s0=" << kS0.real() << "+" << kS0.imag() << "i, h=" << opt.stencil.h
      << ", contour r=" << opt.contour.radius << " nodes=" << opt.contour.nodes;
    rep.params = p.str();
    return rep;
}

std::vector<VerificationReport> verify_all(const Evaluator& ev, const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    for (const auto& name : identity_registry()) out.push_back(verify_identity(name, ev, opt));
    return out;
}

} // namespace polymaass
