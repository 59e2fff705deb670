#include "qcong/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcong {

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t u)
{
    std::uint64_t s = a + b;  // both < u < 2^32, no overflow
    return s >= u ? s - u : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t u)
{
    return a >= b ? a - b : a + u - b;
}

std::uint64_t canonical64(std::int64_t v, std::uint64_t u)
{
    std::int64_t r = v % static_cast<std::int64_t>(u);
    if (r < 0) r += static_cast<std::int64_t>(u);
    return static_cast<std::uint64_t>(r);
}

/* Modular inverse by extended Euclid; a must be coprime to u. */
std::uint64_t invmod(std::uint64_t a, std::uint64_t u)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(u), new_r = static_cast<std::int64_t>(a % u);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("inverse: leading coefficient is not a unit");
    return canonical64(t, u);
}

void require_same_domain(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!(a.domain() == b.domain()))
        throw std::invalid_argument("series domain mismatch");
}

/* One term of a sparse series whose coefficients are all +-1. */
struct SignedTerm {
    std::size_t index;
    int sign;
};

/* Support of (q^delta; q^delta)_inf = sum_{k in Z} (-1)^k q^{delta k(3k-1)/2},
 * indices <= T, ascending. */
std::vector<SignedTerm> pentagonal_support(std::int64_t delta, std::size_t T)
{
    std::vector<SignedTerm> terms;
    terms.push_back({0, +1});
    for (std::int64_t k = 1;; ++k) {
        std::int64_t lo = delta * (k * (3 * k - 1) / 2);
        std::int64_t hi = delta * (k * (3 * k + 1) / 2);
        int sign = (k % 2 == 0) ? +1 : -1;
        if (static_cast<std::size_t>(lo) > T) break;
        terms.push_back({static_cast<std::size_t>(lo), sign});
        if (static_cast<std::size_t>(hi) <= T) terms.push_back({static_cast<std::size_t>(hi), sign});
    }
    std::sort(terms.begin(), terms.end(),
              [](const SignedTerm& x, const SignedTerm& y) { return x.index < y.index; });
    return terms;
}

/* res = src * sum sign_k q^{i_k}, all vectors of length T+1. */
void sign_mul_mod(std::vector<std::uint64_t>& res, const std::vector<std::uint64_t>& src,
                  const std::vector<SignedTerm>& terms, std::uint64_t u)
{
    const std::size_t n = src.size();
    std::fill(res.begin(), res.end(), 0);
    for (const auto& [idx, sign] : terms) {
        if (idx >= n) break;
        const std::size_t len = n - idx;
        if (sign > 0) {
            for (std::size_t j = 0; j < len; ++j) res[idx + j] = addmod(res[idx + j], src[j], u);
        } else {
            for (std::size_t j = 0; j < len; ++j) res[idx + j] = submod(res[idx + j], src[j], u);
        }
    }
}

void sign_mul_exact(std::vector<Integer>& res, const std::vector<Integer>& src,
                    const std::vector<SignedTerm>& terms)
{
    const std::size_t n = src.size();
    for (auto& c : res) c = 0;
    for (const auto& [idx, sign] : terms) {
        if (idx >= n) break;
        const std::size_t len = n - idx;
        if (sign > 0) {
            for (std::size_t j = 0; j < len; ++j)
                mpz_add(res[idx + j].get_mpz_t(), res[idx + j].get_mpz_t(), src[j].get_mpz_t());
        } else {
            for (std::size_t j = 0; j < len; ++j)
                mpz_sub(res[idx + j].get_mpz_t(), res[idx + j].get_mpz_t(), src[j].get_mpz_t());
        }
    }
}

/* In-place division by a unit series with +-1 coefficients and constant
 * term +1: s_n = a_n - sum_{k >= 1} sign_k s_{n - i_k}. */
void sign_div_mod(std::vector<std::uint64_t>& a, const std::vector<SignedTerm>& terms,
                  std::uint64_t u)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t acc = static_cast<std::int64_t>(a[i]);
        for (std::size_t k = 1; k < terms.size(); ++k) {
            const auto& [idx, sign] = terms[k];
            if (idx > i) break;
            if (sign > 0)
                acc -= static_cast<std::int64_t>(a[i - idx]);
            else
                acc += static_cast<std::int64_t>(a[i - idx]);
        }
        a[i] = canonical64(acc, u);
    }
}

void sign_div_exact(std::vector<Integer>& a, const std::vector<SignedTerm>& terms)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 1; k < terms.size(); ++k) {
            const auto& [idx, sign] = terms[k];
            if (idx > i) break;
            if (sign > 0)
                mpz_sub(a[i].get_mpz_t(), a[i].get_mpz_t(), a[i - idx].get_mpz_t());
            else
                mpz_add(a[i].get_mpz_t(), a[i].get_mpz_t(), a[i - idx].get_mpz_t());
        }
    }
}

std::size_t sparse_threshold(std::size_t T)
{
    std::size_t root = 1;
    while ((root + 1) * (root + 1) <= T) ++root;
    return 4 * root + 1;
}

TruncatedSeries mul_dense(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t T)
{
    TruncatedSeries out(a.domain(), T);
    if (a.domain().is_exact()) {
        const auto& da = a.exact_data();
        const auto& db = b.exact_data();
        auto& dr = out.exact_data();
        for (std::size_t i = 0; i <= T; ++i) {
            if (mpz_sgn(da[i].get_mpz_t()) == 0) continue;
            for (std::size_t j = 0; j + i <= T; ++j) {
                if (mpz_sgn(db[j].get_mpz_t()) == 0) continue;
                mpz_addmul(dr[i + j].get_mpz_t(), da[i].get_mpz_t(), db[j].get_mpz_t());
            }
        }
    } else {
        const std::uint64_t u = a.domain().modulus;
        const auto& da = a.mod_data();
        const auto& db = b.mod_data();
        auto& dr = out.mod_data();
        for (std::size_t i = 0; i <= T; ++i) {
            if (da[i] == 0) continue;
            for (std::size_t j = 0; j + i <= T; ++j) {
                if (db[j] == 0) continue;
                dr[i + j] = (dr[i + j] + da[i] * db[j]) % u;
            }
        }
    }
    return out;
}

/* sparse operand folded over the dense one; general coefficients. */
TruncatedSeries mul_sparse(const TruncatedSeries& dense, const TruncatedSeries& sparse,
                           std::size_t T)
{
    TruncatedSeries out(dense.domain(), T);
    if (dense.domain().is_exact()) {
        const auto& dd = dense.exact_data();
        const auto& ds = sparse.exact_data();
        auto& dr = out.exact_data();
        for (std::size_t i = 0; i <= T; ++i) {
            int sg = mpz_sgn(ds[i].get_mpz_t());
            if (sg == 0) continue;
            if (ds[i] == 1) {
                for (std::size_t j = 0; j + i <= T; ++j)
                    mpz_add(dr[i + j].get_mpz_t(), dr[i + j].get_mpz_t(), dd[j].get_mpz_t());
            } else if (ds[i] == -1) {
                for (std::size_t j = 0; j + i <= T; ++j)
                    mpz_sub(dr[i + j].get_mpz_t(), dr[i + j].get_mpz_t(), dd[j].get_mpz_t());
            } else {
                for (std::size_t j = 0; j + i <= T; ++j)
                    mpz_addmul(dr[i + j].get_mpz_t(), ds[i].get_mpz_t(), dd[j].get_mpz_t());
            }
        }
    } else {
        const std::uint64_t u = dense.domain().modulus;
        const auto& dd = dense.mod_data();
        const auto& ds = sparse.mod_data();
        auto& dr = out.mod_data();
        for (std::size_t i = 0; i <= T; ++i) {
            const std::uint64_t c = ds[i];
            if (c == 0) continue;
            if (c == 1) {
                for (std::size_t j = 0; j + i <= T; ++j)
                    dr[i + j] = addmod(dr[i + j], dd[j], u);
            } else if (c == u - 1) {
                for (std::size_t j = 0; j + i <= T; ++j)
                    dr[i + j] = submod(dr[i + j], dd[j], u);
            } else {
                for (std::size_t j = 0; j + i <= T; ++j)
                    dr[i + j] = (dr[i + j] + c * dd[j]) % u;
            }
        }
    }
    return out;
}

}  // namespace

CoefficientDomain CoefficientDomain::modular(std::uint64_t u)
{
    if (u < 2) throw std::invalid_argument("CoefficientDomain: modulus must be >= 2");
    if (u > 0xffffffffULL) throw std::invalid_argument("CoefficientDomain: modulus must fit 32 bits");
    return {Kind::modular, u};
}

std::string CoefficientDomain::label() const
{
    return is_exact() ? "exact" : "mod" + std::to_string(modulus);
}

EtaExponents::EtaExponents(std::int64_t level, std::vector<std::int64_t> exponents)
    : level_(level)
{
    const auto divs = divisors(level);
    if (divs.size() != exponents.size())
        throw std::invalid_argument("EtaExponents: expected one exponent per divisor of the level");
    entries_.reserve(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) entries_.emplace_back(divs[i], exponents[i]);
}

EtaExponents EtaExponents::from_map(std::int64_t level,
                                    const std::map<std::int64_t, std::int64_t>& nonzero)
{
    const auto divs = divisors(level);
    std::vector<std::int64_t> exps(divs.size(), 0);
    for (const auto& [delta, e] : nonzero) {
        auto it = std::lower_bound(divs.begin(), divs.end(), delta);
        if (it == divs.end() || *it != delta)
            throw std::invalid_argument("EtaExponents: index is not a divisor of the level");
        exps[static_cast<std::size_t>(it - divs.begin())] = e;
    }
    return EtaExponents(level, std::move(exps));
}

std::int64_t EtaExponents::exponent(std::int64_t delta) const
{
    for (const auto& [d, e] : entries_)
        if (d == delta) return e;
    throw std::invalid_argument("EtaExponents: index is not a divisor of the level");
}

std::int64_t EtaExponents::exponent_sum() const
{
    std::int64_t s = 0;
    for (const auto& [d, e] : entries_) s += e;
    return s;
}

std::int64_t EtaExponents::weighted_sum() const
{
    std::int64_t s = 0;
    for (const auto& [d, e] : entries_) s += d * e;
    return s;
}

std::vector<std::int64_t> EtaExponents::exponent_list() const
{
    std::vector<std::int64_t> out;
    out.reserve(entries_.size());
    for (const auto& [d, e] : entries_) out.push_back(e);
    return out;
}

EtaExponents EtaExponents::lifted(std::int64_t new_level) const
{
    if (new_level % level_ != 0)
        throw std::invalid_argument("EtaExponents: lift target must be a multiple of the level");
    std::map<std::int64_t, std::int64_t> nz;
    for (const auto& [d, e] : entries_)
        if (e != 0) nz[d] = e;
    return from_map(new_level, nz);
}

TruncatedSeries::TruncatedSeries(CoefficientDomain dom, std::size_t truncation)
    : domain_(dom), truncation_(truncation)
{
    if (truncation > kMaxTruncation)
        throw std::length_error("TruncatedSeries: truncation exceeds the configured maximum");
    if (domain_.is_exact())
        exact_.assign(truncation + 1, Integer(0));
    else
        modular_.assign(truncation + 1, 0);
}

TruncatedSeries TruncatedSeries::constant_one(CoefficientDomain dom, std::size_t truncation)
{
    TruncatedSeries s(dom, truncation);
    s.set_coefficient(0, 1);
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(CoefficientDomain dom,
                                                   const std::vector<Integer>& coeffs)
{
    if (coeffs.empty()) throw std::invalid_argument("from_coefficients: need at least c_0");
    TruncatedSeries s(dom, coeffs.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.set_coefficient(i, coeffs[i]);
    return s;
}

Integer TruncatedSeries::coefficient(std::size_t n) const
{
    if (n > truncation_) throw std::out_of_range("coefficient: index beyond truncation");
    if (domain_.is_exact()) return exact_[n];
    return Integer(static_cast<unsigned long>(modular_[n]));
}

std::uint64_t TruncatedSeries::coefficient_mod(std::size_t n, std::uint64_t u) const
{
    if (n > truncation_) throw std::out_of_range("coefficient_mod: index beyond truncation");
    if (u < 1) throw std::invalid_argument("coefficient_mod: modulus must be positive");
    if (domain_.is_exact())
        return mpz_fdiv_ui(exact_[n].get_mpz_t(), static_cast<unsigned long>(u));
    if (domain_.modulus % u != 0)
        throw std::invalid_argument("coefficient_mod: requested modulus does not divide the series modulus");
    return modular_[n] % u;
}

std::size_t TruncatedSeries::nonzero_count() const
{
    std::size_t n = 0;
    if (domain_.is_exact()) {
        for (const auto& c : exact_)
            if (mpz_sgn(c.get_mpz_t()) != 0) ++n;
    } else {
        for (auto c : modular_)
            if (c != 0) ++n;
    }
    return n;
}

void TruncatedSeries::set_coefficient(std::size_t n, const Integer& value)
{
    if (n > truncation_) throw std::out_of_range("set_coefficient: index beyond truncation");
    if (domain_.is_exact()) {
        exact_[n] = value;
    } else {
        modular_[n] = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(domain_.modulus));
    }
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    TruncatedSeries out(a.domain(), T);
    if (a.domain().is_exact()) {
        for (std::size_t i = 0; i <= T; ++i) out.exact_data()[i] = a.exact_data()[i] + b.exact_data()[i];
    } else {
        const std::uint64_t u = a.domain().modulus;
        for (std::size_t i = 0; i <= T; ++i)
            out.mod_data()[i] = addmod(a.mod_data()[i], b.mod_data()[i], u);
    }
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    TruncatedSeries out(a.domain(), T);
    if (a.domain().is_exact()) {
        for (std::size_t i = 0; i <= T; ++i) out.exact_data()[i] = a.exact_data()[i] - b.exact_data()[i];
    } else {
        const std::uint64_t u = a.domain().modulus;
        for (std::size_t i = 0; i <= T; ++i)
            out.mod_data()[i] = submod(a.mod_data()[i], b.mod_data()[i], u);
    }
    return out;
}

TruncatedSeries scale(const TruncatedSeries& a, const Integer& c)
{
    TruncatedSeries out(a.domain(), a.truncation());
    if (a.domain().is_exact()) {
        for (std::size_t i = 0; i <= a.truncation(); ++i) out.exact_data()[i] = c * a.exact_data()[i];
    } else {
        const std::uint64_t u = a.domain().modulus;
        const std::uint64_t cu = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(u));
        for (std::size_t i = 0; i <= a.truncation(); ++i)
            out.mod_data()[i] = (cu * a.mod_data()[i]) % u;
    }
    return out;
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k)
{
    TruncatedSeries out(a.domain(), a.truncation() + k);
    if (a.domain().is_exact()) {
        for (std::size_t i = 0; i <= a.truncation(); ++i) out.exact_data()[i + k] = a.exact_data()[i];
    } else {
        for (std::size_t i = 0; i <= a.truncation(); ++i) out.mod_data()[i + k] = a.mod_data()[i];
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    const std::size_t threshold = sparse_threshold(T);
    const std::size_t na = a.nonzero_count();
    const std::size_t nb = b.nonzero_count();
    if (na <= nb && na <= threshold) return mul_sparse(b, a, T);
    if (nb <= threshold) return mul_sparse(a, b, T);
    return mul_dense(a, b, T);
}

TruncatedSeries inverse(const TruncatedSeries& a)
{
    const std::size_t T = a.truncation();
    TruncatedSeries out(a.domain(), T);
    if (a.domain().is_exact()) {
        const auto& da = a.exact_data();
        if (da[0] != 1 && da[0] != -1)
            throw std::invalid_argument("inverse: leading coefficient is not a unit");
        const bool neg = (da[0] == -1);
        std::vector<std::pair<std::size_t, const Integer*>> terms;
        for (std::size_t j = 1; j <= T; ++j)
            if (mpz_sgn(da[j].get_mpz_t()) != 0) terms.emplace_back(j, &da[j]);
        auto& db = out.exact_data();
        db[0] = da[0];
        Integer acc;
        for (std::size_t n = 1; n <= T; ++n) {
            acc = 0;
            for (const auto& [j, c] : terms) {
                if (j > n) break;
                mpz_addmul(acc.get_mpz_t(), c->get_mpz_t(), db[n - j].get_mpz_t());
            }
            db[n] = neg ? acc : -acc;
        }
    } else {
        const std::uint64_t u = a.domain().modulus;
        const auto& da = a.mod_data();
        const std::uint64_t inv0 = invmod(da[0], u);
        std::vector<std::pair<std::size_t, std::uint64_t>> terms;
        for (std::size_t j = 1; j <= T; ++j)
            if (da[j] != 0) terms.emplace_back(j, da[j]);
        auto& db = out.mod_data();
        db[0] = inv0;
        for (std::size_t n = 1; n <= T; ++n) {
            std::uint64_t acc = 0;
            for (const auto& [j, c] : terms) {
                if (j > n) break;
                acc = (acc + c * db[n - j]) % u;
            }
            db[n] = (acc == 0) ? 0 : u - (inv0 * acc) % u;
        }
    }
    return out;
}

TruncatedSeries reduce(const TruncatedSeries& a, std::uint64_t u)
{
    TruncatedSeries out(CoefficientDomain::modular(u), a.truncation());
    for (std::size_t i = 0; i <= a.truncation(); ++i) out.mod_data()[i] = a.coefficient_mod(i, u);
    return out;
}

TruncatedSeries eta_power(std::int64_t delta, std::int64_t e, std::size_t truncation,
                          CoefficientDomain dom)
{
    if (delta < 1) throw std::invalid_argument("eta_power: step must be positive");
    if (e < 0) return inverse(eta_power(delta, -e, truncation, dom));

    TruncatedSeries result = TruncatedSeries::constant_one(dom, truncation);
    if (e == 0) return result;

    TruncatedSeries base(dom, truncation);
    for (const auto& [idx, sign] : pentagonal_support(delta, truncation))
        base.set_coefficient(idx, sign);

    std::int64_t exp = e;
    TruncatedSeries power = base;
    for (;;) {
        if (exp & 1) result = mul(result, power);
        exp >>= 1;
        if (exp == 0) break;
        power = mul(power, power);
    }
    return result;
}

TruncatedSeries eta_product(std::int64_t M, const EtaExponents& r, std::size_t truncation,
                            CoefficientDomain dom)
{
    if (r.level() != M)
        throw std::invalid_argument("eta_product: exponents are not indexed by the divisors of M");
    TruncatedSeries acc = TruncatedSeries::constant_one(dom, truncation);
    for (const auto& [delta, e] : r.entries()) {
        if (e == 0) continue;
        const auto terms = pentagonal_support(delta, truncation);
        for (std::int64_t i = 0; i < (e > 0 ? e : -e); ++i) {
            if (dom.is_exact()) {
                if (e > 0) {
                    std::vector<Integer> next(truncation + 1, Integer(0));
                    sign_mul_exact(next, acc.exact_data(), terms);
                    acc.exact_data().swap(next);
                } else {
                    sign_div_exact(acc.exact_data(), terms);
                }
            } else {
                if (e > 0) {
                    std::vector<std::uint64_t> next(truncation + 1, 0);
                    sign_mul_mod(next, acc.mod_data(), terms, dom.modulus);
                    acc.mod_data().swap(next);
                } else {
                    sign_div_mod(acc.mod_data(), terms, dom.modulus);
                }
            }
        }
    }
    return acc;
}

TruncatedSeries extract_ap(const TruncatedSeries& a, std::int64_t m, std::int64_t t)
{
    if (m < 1 || t < 0 || t >= m) throw std::invalid_argument("extract_ap: need 0 <= t < m");
    if (static_cast<std::size_t>(t) > a.truncation())
        throw std::invalid_argument("extract_ap: residue beyond truncation");
    const std::size_t T = (a.truncation() - static_cast<std::size_t>(t)) / static_cast<std::size_t>(m);
    TruncatedSeries out(a.domain(), T);
    for (std::size_t n = 0; n <= T; ++n) {
        const std::size_t src = static_cast<std::size_t>(m) * n + static_cast<std::size_t>(t);
        if (a.domain().is_exact())
            out.exact_data()[n] = a.exact_data()[src];
        else
            out.mod_data()[n] = a.mod_data()[src];
    }
    return out;
}

TruncatedSeries substitute(const TruncatedSeries& a, std::int64_t d)
{
    if (d < 1) throw std::invalid_argument("substitute: dilation must be positive");
    const std::size_t T = a.truncation() * static_cast<std::size_t>(d);
    if (T > kMaxTruncation)
        throw std::length_error("substitute: dilated truncation exceeds the configured maximum");
    TruncatedSeries out(a.domain(), T);
    for (std::size_t n = 0; n <= a.truncation(); ++n) {
        if (a.domain().is_exact())
            out.exact_data()[n * d] = a.exact_data()[n];
        else
            out.mod_data()[n * d] = a.mod_data()[n];
    }
    return out;
}

CongruenceReport congruent(const TruncatedSeries& a, const TruncatedSeries& b, std::uint64_t u)
{
    if (u < 1) throw std::invalid_argument("congruent: modulus must be positive");
    const std::size_t T = std::min(a.truncation(), b.truncation());
    for (std::size_t n = 0; n <= T; ++n) {
        if (a.coefficient_mod(n, u) != b.coefficient_mod(n, u)) return {false, n};
    }
    return {true, std::nullopt};
}

std::optional<std::size_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_domain(a, b);
    const std::size_t T = std::min(a.truncation(), b.truncation());
    for (std::size_t n = 0; n <= T; ++n) {
        if (a.domain().is_exact()) {
            if (a.exact_data()[n] != b.exact_data()[n]) return n;
        } else {
            if (a.mod_data()[n] != b.mod_data()[n]) return n;
        }
    }
    return std::nullopt;
}

}  // namespace qcong
