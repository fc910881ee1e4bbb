#pragma once

#include <gmpxx.h>

#include <string>
#include <iosfwd>

namespace polymaass {

/// Exact rational, value semantics over GMP. Always kept in canonical form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    static Rational from_integer(const mpz_class& n) { return Rational(mpq_class(n)); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; v_.canonicalize(); return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    bool is_zero() const { return v_ == 0; }
    double to_double() const { return v_.get_d(); }
    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact binomial coefficient C(n, k), zero for k < 0 or k > n.
Rational binomial(long n, long k);

/// Exact Bernoulli number B_n from sum_{j<=n} C(n+1,j) B_j = 0, B_0 = 1. Cached.
Rational bernoulli(int n);

} // namespace polymaass
