#include "polymaass/eisenstein.hpp"
#include "polymaass/specialfn.hpp"
#include "polymaass/rational.hpp"

#include <cmath>
#include <cstring>

namespace polymaass {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

int sign_of_half(int k) { return (k / 2) % 2 ? -1 : 1; }  // (-1)^{k/2}

// 1 / (pi^{-(s+k/2)} Gamma(s+k/2+|k|/2)); finite everywhere
cplx inverse_completion_factor(int k, cplx s) {
    double h = std::abs(k) / 2.0;
    return std::pow(kPi, s + k / 2.0) * reciprocal_gamma(s + k / 2.0 + h);
}

cplx mode_coefficient(int k, cplx s, long n) {
    // (-1)^{k/2} (2pi)^{k/2} Gamma(s+k/2+|k|/2) sigma_{2s+k-1}(|n|) |n|^{-s}
    //   / Gamma(s + (k/2)(1+sgn n))
    double h = std::abs(k) / 2.0;
    long an = std::labs(n);
    cplx num = double(sign_of_half(k)) * std::pow(kTwoPi, k / 2.0) *
               gamma_complex(s + k / 2.0 + h) * divisor_sum(2.0 * s + double(k - 1), an) *
               std::exp(-s * std::log(double(an)));
    return num * reciprocal_gamma(s + (k / 2.0) * (1.0 + (n > 0 ? 1.0 : -1.0)));
}

cplx whittaker_term(int k, cplx s, long n, double y) {
    double arg = 4.0 * kPi * std::labs(n) * y;
    if (arg > 1400.0) return 0.0;  // underflow of e^{-arg/2}; term is numerically zero
    int kap = (n > 0 ? 1 : -1) * (k / 2);
    cplx w = whittaker_w(kap, s + (k - 1) / 2.0, arg);
    return std::pow(kTwoPi * std::labs(n) * y, -k / 2.0) * w;
}

} // namespace

bool fourier_formula_singular(int k, cplx s, double tol) {
    auto near = [&](double w) { return std::abs(s - cplx(w)) < tol; };
    if (near(-k / 2.0) || near((1.0 - k) / 2.0) || near((2.0 - k) / 2.0)) return true;
    double h = std::abs(k) / 2.0;
    if (near_nonpositive_integer(s + k / 2.0 + h, tol)) return true;
    if (near_nonpositive_integer(s + k / 2.0, tol)) return true;
    return false;
}

FourierExpansion build_fourier_expansion(Weight k, cplx s, long N) {
    if (N < 1) throw DomainError("build_fourier_expansion: N >= 1 required");
    if (fourier_formula_singular(k, s, 1e-6))
        throw PoleError("build_fourier_expansion: s within 1e-6 of a formula pole");

    FourierExpansion fe;
    fe.weight = k;
    fe.s = s;
    fe.truncation = N;
    double h = std::abs(int(k)) / 2.0;
    fe.constant_plus = gamma_complex(s + k / 2.0 + h) * reciprocal_gamma(s + k / 2.0) *
                       zeta_hat(2.0 * s + double(int(k)));
    fe.constant_minus = double(sign_of_half(k)) * gamma_complex(s + k / 2.0) *
                        gamma_complex(s + k / 2.0 + h) * reciprocal_gamma(s + double(int(k))) *
                        reciprocal_gamma(s) * zeta_hat(2.0 - 2.0 * s - double(int(k)));
    fe.terms.reserve(2 * N);
    for (long n = 1; n <= N; ++n) {
        fe.terms.emplace_back(n, mode_coefficient(k, s, n));
        fe.terms.emplace_back(-n, mode_coefficient(k, s, -n));
    }
    return fe;
}

cplx FourierExpansion::eval(const UpperHalfPoint& z) const {
    cplx acc = constant_plus * std::exp(s * std::log(z.y)) +
               constant_minus * std::exp((1.0 - s - double(weight)) * std::log(z.y));
    for (const auto& [n, c] : terms) {
        if (c == cplx(0.0)) continue;
        cplx t = whittaker_term(weight, s, n, z.y);
        acc += c * t * std::exp(cplx(0.0, kTwoPi * double(n) * z.x));
    }
    return acc;
}

double FourierExpansion::tail_bound(double y) const {
    // first two dropped modes plus a geometric majorant for the rest
    double head = 0.0;
    for (long n = truncation + 1; n <= truncation + 2; ++n) {
        for (long sn : {n, -n}) {
            cplx c = mode_coefficient(weight, s, sn);
            head += std::abs(c) * std::abs(whittaker_term(weight, s, sn, y));
        }
    }
    double rho = std::exp(-kTwoPi * y) * 1.5;
    rho = std::min(rho, 0.9);
    return head / (1.0 - rho);
}

LatticeSum eval_lattice_sum(Weight k, const UpperHalfPoint& z, cplx s, long M) {
    double alpha = 2.0 * s.real() + double(int(k));
    if (alpha <= 2.5)
        throw ConvergenceError("eval_lattice_sum: Re(2s+k) > 2.5 required");
    if (M < 50) throw ConvergenceError("eval_lattice_sum: M >= 50 required");

    const cplx zc = z.z();
    const cplx ys = std::exp(s * std::log(z.y));
    cplx acc = 0.0;
    for (long r = 1; r <= M; ++r) {
        // boundary of the square max(|m|,|n|) = r
        auto add = [&](long m, long n) {
            cplx w = double(m) * zc + double(n);
            acc += ipow(w, -int(k)) * std::exp(-s * std::log(std::norm(w)));
        };
        for (long n = -r; n <= r; ++n) {
            add(r, n);
            add(-r, n);
        }
        for (long m = -r + 1; m <= r - 1; ++m) {
            add(m, r);
            add(m, -r);
        }
    }
    acc = 0.5 * ys * acc;

    double zz = std::norm(zc);
    double lam = 0.5 * ((zz + 1.0) - std::sqrt((zz - 1.0) * (zz - 1.0) + 4.0 * z.x * z.x));
    double tail = 4.0 * std::pow(z.y, s.real()) * std::pow(lam, -alpha / 2.0) *
                  std::pow(double(M), 2.0 - alpha) / (alpha - 2.0);
    return {acc, tail};
}

cplx eval_lattice_sum_checked(Weight k, const UpperHalfPoint& z, cplx s, long M, double tol) {
    LatticeSum r = eval_lattice_sum(k, z, s, M);
    if (r.tail_bound > tol)
        throw TailError("eval_lattice_sum: tail bound exceeds requested tolerance");
    return r.value;
}

std::pair<UpperHalfPoint, UnimodularMatrix> reduce_to_fundamental_domain(const UpperHalfPoint& z) {
    if (!(z.y > 0.0)) throw DomainError("reduce: y > 0 required");
    UpperHalfPoint w = z;
    UnimodularMatrix g = UnimodularMatrix::identity();
    for (int iter = 0; iter < 10000; ++iter) {
        double n = std::round(w.x);
        if (n != 0.0) {
            w.x -= n;
            g = UnimodularMatrix::translation(-(std::int64_t)n) * g;
        }
        double norm = w.x * w.x + w.y * w.y;
        if (norm < 1.0 - 1e-12) {
            double inv = 1.0 / norm;
            w = UpperHalfPoint(-w.x * inv, w.y * inv);
            g = UnimodularMatrix::inversion() * g;
            continue;
        }
        if (std::abs(w.x) <= 0.5 + 1e-12) return {w, g};
    }
    throw IterationError("reduce: no convergence after 10^4 steps");
}

cplx apply_slash(cplx value_at_gamma_z, Weight k, const UnimodularMatrix& gamma,
                 const UpperHalfPoint& z) {
    return ipow(gamma.multiplier(z), -int(k)) * value_at_gamma_z;
}

cplx holomorphic_eisenstein(Weight k, const UpperHalfPoint& z, long N) {
    if (int(k) < 4) throw WeightError("holomorphic_eisenstein: k >= 4 required");
    cplx q = std::exp(cplx(0.0, kTwoPi) * z.z());
    cplx acc = 0.0;
    cplx qn = 1.0;
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        acc += divisor_sum(double(int(k) - 1), n) * qn;
    }
    double bk = bernoulli(int(k)).to_double();
    return 1.0 - (2.0 * int(k) / bk) * acc;
}

cplx holomorphic_eisenstein_at_s0(Weight k, const UpperHalfPoint& z, long N) {
    // (1/2) sum' (mz+n)^{-k} = zeta(k) * (1/2) sum_{coprime} (cz+d)^{-k}
    return zeta_complex(double(int(k))) * holomorphic_eisenstein(k, z, N);
}

cplx discriminant_delta(const UpperHalfPoint& z, long N) {
    cplx q = std::exp(cplx(0.0, kTwoPi) * z.z());
    cplx acc = q;
    cplx qn = 1.0;
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        acc *= ipow(1.0 - qn, 24);
    }
    return acc;
}

long delta_terms_for(double y) {
    return static_cast<long>(std::ceil(16.0 * std::log(10.0) / (kTwoPi * y))) + 4;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t wkey(int kap, cplx mu, double x) {
    auto mix = [](std::uint64_t h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    };
    std::uint64_t h = static_cast<std::uint64_t>(kap + 64);
    std::uint64_t b;
    double d = mu.real();
    std::memcpy(&b, &d, 8);
    h = mix(h, b);
    d = mu.imag();
    std::memcpy(&b, &d, 8);
    h = mix(h, b);
    std::memcpy(&b, &x, 8);
    h = mix(h, b);
    return h;
}

} // namespace

const FourierExpansion& Evaluator::expansion(Weight k, cplx s) const {
    auto key = std::make_tuple(int(k), s.real(), s.imag());
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, build_fourier_expansion(k, s, fourier_terms_)).first;
    return it->second;
}

cplx Evaluator::term_sum(const FourierExpansion& fe, const UpperHalfPoint& z) const {
    cplx acc = fe.constant_plus * std::exp(fe.s * std::log(z.y)) +
               fe.constant_minus * std::exp((1.0 - fe.s - double(fe.weight)) * std::log(z.y));
    const double floor = 1e-18 * std::max(1.0, std::abs(acc));
    for (const auto& [n, c] : fe.terms) {
        if (c == cplx(0.0)) continue;
        double arg = 4.0 * kPi * std::labs(n) * z.y;
        if (arg > 1400.0) continue;
        // cheap envelope skip: |W| <~ e^{-arg/2} arg^{|kap|+1}
        int kap = (n > 0 ? 1 : -1) * (fe.weight / 2);
        double env = std::exp(-arg / 2.0 + (std::abs(kap) + 1.0) * std::log(arg));
        if (std::abs(c) * env < floor) continue;
        std::uint64_t key = wkey(kap, fe.s + (fe.weight - 1) / 2.0, arg);
        auto it = wcache_.find(key);
        cplx w;
        if (it != wcache_.end()) {
            w = it->second;
        } else {
            w = whittaker_w(kap, fe.s + (fe.weight - 1) / 2.0, arg);
            wcache_.emplace(key, w);
        }
        acc += c * std::pow(kTwoPi * std::labs(n) * z.y, -fe.weight / 2.0) * w *
               std::exp(cplx(0.0, kTwoPi * double(n) * z.x));
    }
    return acc;
}

cplx Evaluator::eval_formula(Weight k, const UpperHalfPoint& z, cplx s, Completion c) const {
    cplx completed = term_sum(expansion(k, s), z);
    switch (c) {
        case Completion::Completed:
            return completed;
        case Completion::Raw:
            return completed * inverse_completion_factor(k, s);
        case Completion::DoublyCompleted:
            return (s + int(k) / 2.0) * (s + int(k) / 2.0 - 1.0) * completed;
    }
    return completed;
}

cplx Evaluator::eval_reduced(Weight k, const UpperHalfPoint& z, cplx s, Completion c) const {
    if (int(k) == 0 && c != Completion::DoublyCompleted &&
        (std::abs(s) < 1e-9 || std::abs(s - cplx(1.0)) < 1e-9))
        throw PoleError("eval: weight-0 Raw/Completed pole at s in {0,1}");
    if (!fourier_formula_singular(int(k), s, 2.5e-4))
        return eval_formula(k, z, s, c);
    // removable singularity of the formula: average on a small circle
    const int M = 16;
    const double r = 1e-3;
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = kPi * (2 * j + 1) / M;
        acc += eval_formula(k, z, s + cplx(r * std::cos(th), r * std::sin(th)), c);
    }
    return acc / double(M);
}

EvalResult Evaluator::eval_detailed(Weight k, const UpperHalfPoint& z, cplx s,
                                    Completion c) const {
    auto [zr, g] = reduce_to_fundamental_domain(z);
    if (zr.y < 0.3) throw ReductionError("eval: reduced point below y = 0.3");
    cplx v = eval_reduced(k, zr, s, c);
    cplx out = apply_slash(v, k, g, z);

    double scale = std::abs(ipow(g.multiplier(z), -int(k)));
    if (c == Completion::DoublyCompleted)
        scale *= std::abs((s + int(k) / 2.0) * (s + int(k) / 2.0 - 1.0));
    else if (c == Completion::Raw)
        scale *= std::abs(inverse_completion_factor(k, s));
    double tb = 0.0;
    if (!fourier_formula_singular(int(k), s, 2.5e-4))
        tb = expansion(k, s).tail_bound(zr.y) * scale;
    return {out, tb};
}

cplx Evaluator::residue_at(Weight k, const UpperHalfPoint& z, cplx s0, double radius,
                           int nodes) const {
    auto [zr, g] = reduce_to_fundamental_domain(z);
    cplx acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        double th = kPi * (2 * j + 1) / nodes;
        cplx ds(radius * std::cos(th), radius * std::sin(th));
        acc += eval_formula(k, zr, s0 + ds, Completion::Completed) * ds;
    }
    return apply_slash(acc / double(nodes), k, g, z);
}

} // namespace polymaass
