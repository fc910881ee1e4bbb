#include "polymaass/taylor.hpp"
#include "polymaass/specialfn.hpp"

#include <cmath>

namespace polymaass {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

void ContourSpec::validate(int weight, int order) const {
    if (nodes < 4 || nodes % 2 != 0)
        throw DomainError("contour: nodes must be even and >= 4");
    if (!(radius > 0.0)) throw DomainError("contour: radius > 0 required");
    const double absc[3] = {0.5, std::abs((1.0 - weight) / 2.0), std::abs(1.0 - weight)};
    for (double a : absc)
        if (std::abs(radius - a) < 1e-3)
            throw DomainError("contour: radius too close to a singular abscissa");
    if (order > nodes / 4) throw AliasError("contour: order exceeds nodes/4");
}

cplx TaylorBasis::coefficient(Weight k, int n, const UpperHalfPoint& z,
                              const ContourSpec& contour) const {
    if (n < 0) throw DomainError("taylor coefficient: order >= 0 required");
    contour.validate(k, n);
    auto key = std::make_tuple(int(k), n, z.x, z.y, contour.radius, contour.nodes);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int M = contour.nodes;
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = kPi * (2 * j + 1) / M;
        cplx sj = contour.radius * cplx(std::cos(th), std::sin(th));
        acc += ev_.eval(k, z, sj, Completion::DoublyCompleted) * ipow(sj, -n);
    }
    acc /= double(M);
    memo_.emplace(key, acc);
    return acc;
}

cplx TaylorBasis::symmetrized(Weight k, int n, const UpperHalfPoint& z,
                              const ContourSpec& contour) const {
    if (int(k) != 0 && int(k) != 2)
        throw DomainError("symmetrized coefficients exist for weights 0 and 2 only");
    cplx acc = coefficient(k, n, z, contour);
    for (int l = 1; l <= n; ++l) {
        double w = binomial(n + l, n).to_double();
        if (int(k) == 2 && (l & 1)) w = -w;
        acc += w * coefficient(k, n - l, z, contour);
    }
    if (int(k) == 0 && (n & 1)) acc = -acc;
    return acc;
}

std::pair<cplx, cplx> TaylorBasis::modified(Weight k, int n, const UpperHalfPoint& z,
                                            const ConnectionTable& table,
                                            const ContourSpec& contour) const {
    if (int(k) < 2) throw DomainError("modified coefficients: k >= 2 required");
    if (table.weight != int(k))
        throw TableMismatchError("modified coefficients: table weight mismatch");
    if (table.n_max() < n)
        throw TableMismatchError("modified coefficients: table has too few rows");

    const Weight dual(2 - int(k));
    cplx g = 0.0, f = 0.0;
    for (int l = 0; l <= n; ++l) {
        double c = table.at(n, l).to_double();
        g += ((l & 1) ? -c : c) * coefficient(k, n - l, z, contour);
        f += c * coefficient(dual, n - l, z, contour);
    }
    if (n & 1) f = -f;
    return {g, f};
}

cplx TaylorBasis::dispatch(const TaylorCoefficientRequest& req) const {
    switch (req.family) {
        case TaylorFamily::Plain:
            return coefficient(req.weight, req.order, req.point, req.contour);
        case TaylorFamily::Symmetrized:
            return symmetrized(req.weight, req.order, req.point, req.contour);
        case TaylorFamily::Modified: {
            int k = req.weight;
            if (std::abs(k) < 2)
                throw DomainError("modified family needs |k| >= 2");
            int tw = k >= 2 ? k : 2 - k;
            ConnectionTable t = solve_table(tw, req.boundary, std::max(req.order, 0));
            auto pair = modified(Weight(tw), req.order, req.point, t, req.contour);
            return k >= 2 ? pair.first : pair.second;
        }
    }
    throw DomainError("unknown taylor family");
}

cplx explicit_g1_series(const UpperHalfPoint& z, long N) {
    if (z.y < 0.3) throw DomainError("explicit_g1_series: y >= 0.3 required");
    cplx q = std::exp(cplx(0.0, 2.0 * kPi) * z.z());
    cplx qn = 1.0, acc = 0.0;
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        acc += divisor_sum(1.0, n) * qn;
    }
    return kPi / 6.0 - 1.0 / (2.0 * z.y) - 4.0 * kPi * acc;
}

cplx explicit_g1_series_alternate(const UpperHalfPoint& z, long N) {
    cplx cross = explicit_g1_series(z, N);
    // flips the constant and the series but keeps the 1/(2y) term
    return -(cross + 1.0 / (2.0 * z.y)) - 1.0 / (2.0 * z.y);
}

cplx kronecker_limit_value(const UpperHalfPoint& z) {
    if (z.y < 0.3) throw DomainError("kronecker_limit_value: y >= 0.3 required");
    cplx delta = discriminant_delta(z, delta_terms_for(z.y));
    double logd = std::log(std::abs(delta)) / 12.0;
    return -euler_gamma / 2.0 - 0.5 + std::log(2.0 * std::sqrt(kPi)) +
           0.5 * std::log(z.y) + logd;
}

cplx kronecker_limit_value_alternate(const UpperHalfPoint& z) {
    return kronecker_limit_value(z) + 0.5 + std::log(4.0 * kPi) -
           std::log(2.0 * std::sqrt(kPi));
}

} // namespace polymaass
