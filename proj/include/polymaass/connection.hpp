#pragma once

#include "polymaass/rational.hpp"
#include "polymaass/errors.hpp"

#include <iosfwd>
#include <vector>

namespace polymaass {

enum class Boundary { Zero, Binomial, Custom };

/// Triangular table of exact rationals c_{n,k,l}, 0 <= l <= n+1, solving
///   c_{n,k,l} = (1/(k-1)) c_{n,k,l-1} + c_{n-1,k,l}   (0 <= l <= n)
/// with c_{n,k,0} = 1, c_{n,k,-1} = 0, and the l = n+1 column supplied by the
/// boundary rule.
struct ConnectionTable {
    int weight = 2;
    Boundary boundary = Boundary::Zero;
    std::vector<std::vector<Rational>> rows;  // rows[n] has n+2 entries, l = 0..n+1

    int n_max() const { return static_cast<int>(rows.size()) - 1; }
    const Rational& at(int n, int l) const;
};

/// Fill the table row by row, boundary entry written last per row.
/// k >= 2 even, n_max <= 64.  Custom boundaries are read from `custom`
/// (entries c_{n,k,n+1} for n = 0..n_max; BoundaryLengthError if too short).
ConnectionTable solve_table(int k, Boundary boundary, int n_max,
                            const std::vector<Rational>* custom = nullptr);

/// Closed form (k-1)^{-l} C(n+l, l) on 0 <= l <= n+1.
Rational closed_form_binomial(int n, int k, int l);

/// Diagonal c_{n,2,n} of the zero-boundary weight-2 table: Catalan numbers.
/// TableMismatchError unless weight == 2 and boundary == Zero.
std::vector<Rational> catalan_diagonal(const ConnectionTable& table);

/// CSV export, header `n,l,numerator,denominator`.
void write_table_csv(const ConnectionTable& table, std::ostream& os);

} // namespace polymaass
