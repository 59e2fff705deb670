#include "qcong/numutil.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcong {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer rational_floor(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("prime_divisors: n must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_squarefree(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("is_squarefree: n must be positive");
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t phi = n;
    for (std::int64_t p : prime_divisors(n)) phi = phi / p * (p - 1);
    return phi;
}

std::int64_t index_gamma0(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("index_gamma0: N must be positive");
    std::int64_t index = n;
    for (std::int64_t p : prime_divisors(n)) index = index / p * (p + 1);
    return index;
}

std::vector<std::int64_t> square_classes(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("square_classes: n must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < n; ++x) {
        if (std::gcd(x, n) != 1) continue;
        std::int64_t s = mod_canonical(x * x, n);
        if (!std::binary_search(out.begin(), out.end(), s)) {
            out.insert(std::upper_bound(out.begin(), out.end(), s), s);
        }
    }
    return out;
}

int kronecker(const Integer& a, const Integer& d)
{
    return mpz_kronecker(a.get_mpz_t(), d.get_mpz_t());
}

int kronecker(std::int64_t a, std::int64_t d)
{
    return kronecker(Integer(a), Integer(d));
}

std::int64_t mod_canonical(std::int64_t a, std::int64_t m)
{
    if (m < 1) throw std::invalid_argument("mod_canonical: modulus must be positive");
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Integer gcd_abs(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace qcong
