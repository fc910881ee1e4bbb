#include "polymaass/connection.hpp"

#include <ostream>

namespace polymaass {

const Rational& ConnectionTable::at(int n, int l) const {
    if (n < 0 || n > n_max() || l < 0 || l > n + 1)
        throw RangeError("ConnectionTable::at: index out of range");
    return rows[n][l];
}

ConnectionTable solve_table(int k, Boundary boundary, int n_max,
                            const std::vector<Rational>* custom) {
    if (k < 2 || k % 2 != 0) throw RangeError("solve_table: k >= 2 even required");
    if (n_max < 0 || n_max > 64) throw RangeError("solve_table: 0 <= n_max <= 64 required");
    if (boundary == Boundary::Custom &&
        (!custom || static_cast<int>(custom->size()) < n_max + 1))
        throw BoundaryLengthError("solve_table: custom boundary list shorter than n_max + 1");

    const Rational inv_km1(1, k - 1);
    ConnectionTable t;
    t.weight = k;
    t.boundary = boundary;
    t.rows.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = t.rows[n];
        row.resize(n + 2);
        row[0] = Rational(1);
        for (int l = 1; l <= n; ++l)
            row[l] = inv_km1 * row[l - 1] + t.rows[n - 1][l];
        switch (boundary) {
            case Boundary::Zero: row[n + 1] = Rational(0); break;
            case Boundary::Binomial: {
                // (k-1)^{-(n+1)} C(2n+1, n+1): the scale is what makes the
                // closed form (k-1)^{-l} C(n+l, l) solve the recurrence for
                // every weight; at k = 2 it is the plain binomial boundary
                Rational scale(1);
                for (int i = 0; i <= n; ++i) scale = scale * inv_km1;
                row[n + 1] = scale * binomial(2 * n + 1, n + 1);
                break;
            }
            case Boundary::Custom: row[n + 1] = (*custom)[n]; break;
        }
    }
    return t;
}

Rational closed_form_binomial(int n, int k, int l) {
    if (k < 2 || k % 2 != 0) throw RangeError("closed_form_binomial: k >= 2 even required");
    if (l < 0 || l > n + 1) throw RangeError("closed_form_binomial: 0 <= l <= n+1 required");
    Rational p(1);
    const Rational inv(1, k - 1);
    for (int i = 0; i < l; ++i) p = p * inv;
    return p * binomial(n + l, l);
}

std::vector<Rational> catalan_diagonal(const ConnectionTable& table) {
    if (table.weight != 2 || table.boundary != Boundary::Zero)
        throw TableMismatchError("catalan_diagonal: needs the weight-2 zero-boundary table");
    std::vector<Rational> d;
    d.reserve(table.n_max() + 1);
    for (int n = 0; n <= table.n_max(); ++n) d.push_back(table.at(n, n));
    return d;
}

void write_table_csv(const ConnectionTable& table, std::ostream& os) {
    os << "n,l,numerator,denominator\n";
    for (int n = 0; n <= table.n_max(); ++n)
        for (int l = 0; l <= n + 1; ++l)
            os << n << ',' << l << ',' << table.at(n, l).numerator() << ','
               << table.at(n, l).denominator() << '\n';
}

} // namespace polymaass
