#include "polymaass/rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>
#include <stdexcept>

namespace polymaass {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational::from_integer(r);
}

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: n >= 0 required");
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    static std::vector<Rational> cache = {Rational(1)};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j)
            acc += binomial(m + 1, j) * cache[j];
        cache.push_back(-acc / binomial(m + 1, m));
    }
    return cache[n];
}

} // namespace polymaass
