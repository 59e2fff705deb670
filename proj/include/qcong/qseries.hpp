#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/numutil.hpp"

namespace qcong {

/* Hard ceiling on series truncation; guards substitute() and the scan
 * entry points from accidental blow-up. */
inline constexpr std::size_t kMaxTruncation = 2'000'000;

/* Coefficients live either in Z (arbitrary precision) or in Z/uZ with all
 * stored residues canonical in [0, u). */
struct CoefficientDomain {
    enum class Kind { exact, modular };

    Kind kind = Kind::exact;
    std::uint64_t modulus = 0;  // >= 2 iff modular

    static CoefficientDomain exact() { return {Kind::exact, 0}; }
    static CoefficientDomain modular(std::uint64_t u);

    bool is_exact() const { return kind == Kind::exact; }
    bool is_modular() const { return kind == Kind::modular; }
    std::string label() const;  // "exact" or "mod<u>"

    bool operator==(const CoefficientDomain&) const = default;
};

/* Integer exponent vector r = (r_delta) indexed by the divisors of a level;
 * zero exponents are stored explicitly so the key set is always exactly the
 * divisor list. */
class EtaExponents {
public:
    /* exponents in divisor order: level 14 takes four values for 1,2,7,14. */
    EtaExponents(std::int64_t level, std::vector<std::int64_t> exponents_in_divisor_order);

    /* nonzero entries by divisor; missing divisors get exponent 0. */
    static EtaExponents from_map(std::int64_t level, const std::map<std::int64_t, std::int64_t>& nonzero);

    std::int64_t level() const { return level_; }
    std::int64_t exponent(std::int64_t delta) const;
    const std::vector<std::pair<std::int64_t, std::int64_t>>& entries() const { return entries_; }

    std::int64_t exponent_sum() const;         // sum r_delta
    std::int64_t weighted_sum() const;         // sum delta * r_delta
    std::vector<std::int64_t> exponent_list() const;

    /* Same exponents re-indexed over a multiple of the level. */
    EtaExponents lifted(std::int64_t new_level) const;

    bool operator==(const EtaExponents&) const = default;

private:
    std::int64_t level_;
    std::vector<std::pair<std::int64_t, std::int64_t>> entries_;  // (divisor, exponent), ascending
};

/* Formal power series truncated at order T: coefficients c_0..c_T. Values
 * are immutable once built; every operation returns a fresh series. */
class TruncatedSeries {
public:
    TruncatedSeries(CoefficientDomain dom, std::size_t truncation);  // zero series

    static TruncatedSeries constant_one(CoefficientDomain dom, std::size_t truncation);
    static TruncatedSeries from_coefficients(CoefficientDomain dom, const std::vector<Integer>& coeffs);

    const CoefficientDomain& domain() const { return domain_; }
    std::size_t truncation() const { return truncation_; }

    Integer coefficient(std::size_t n) const;
    /* Residue of c_n modulo u; in the modular domain u must divide the
     * series modulus. */
    std::uint64_t coefficient_mod(std::size_t n, std::uint64_t u) const;

    std::size_t nonzero_count() const;
    void set_coefficient(std::size_t n, const Integer& value);

    /* Raw storage, used by the arithmetic kernels. Exactly one of the two
     * vectors is populated, matching the domain. */
    std::vector<Integer>& exact_data() { return exact_; }
    const std::vector<Integer>& exact_data() const { return exact_; }
    std::vector<std::uint64_t>& mod_data() { return modular_; }
    const std::vector<std::uint64_t>& mod_data() const { return modular_; }

private:
    CoefficientDomain domain_;
    std::size_t truncation_;
    std::vector<Integer> exact_;
    std::vector<std::uint64_t> modular_;
};

/* Pointwise ring operations; truncation of the result is the minimum of the
 * operands (no silent zero-extension). */
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const Integer& c);

/* a * q^k; truncation grows by k. */
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);

/* Cauchy product truncated to min(T_a, T_b). When one operand has at most
 * 4*sqrt(T) nonzero terms a sparse convolution path is taken. */
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/* Multiplicative inverse to order T. The constant term must be a unit:
 * +-1 in the exact domain, coprime to the modulus otherwise. Runs in
 * O(T * nnz(a)). */
TruncatedSeries inverse(const TruncatedSeries& a);

/* Exact-domain series reduced into Z/uZ; a modular series may be reduced
 * further when u divides its modulus. */
TruncatedSeries reduce(const TruncatedSeries& a, std::uint64_t u);

/* (q^delta; q^delta)_inf^e to order T. Nonnegative powers are built by
 * binary powering from the pentagonal-number expansion of the base (about
 * 2*sqrt(2T/(3 delta)) terms, all +-1); negative powers invert the positive
 * one. */
TruncatedSeries eta_power(std::int64_t delta, std::int64_t e, std::size_t truncation,
                          CoefficientDomain dom);

/* prod_{delta | M} (q^delta; q^delta)_inf^{r_delta} to order T. Assembled
 * one sparse base factor at a time, so large exponent vectors stay within
 * the O(|r| * T * sqrt(T)) budget the scans rely on. */
TruncatedSeries eta_product(std::int64_t M, const EtaExponents& r, std::size_t truncation,
                            CoefficientDomain dom);

/* Coefficients on the arithmetic progression m*n + t: result c'_n = c(mn+t),
 * truncation floor((T - t)/m). Requires 0 <= t < m and t <= T. */
TruncatedSeries extract_ap(const TruncatedSeries& a, std::int64_t m, std::int64_t t);

/* q -> q^d: coefficient c_n moves to index d*n. Result truncation T*d,
 * which must stay within kMaxTruncation. */
TruncatedSeries substitute(const TruncatedSeries& a, std::int64_t d);

struct CongruenceReport {
    bool holds = false;
    std::optional<std::size_t> first_mismatch;
};

/* c_a(n) == c_b(n) (mod u) for all n <= min(T_a, T_b); on failure reports
 * the smallest counterexample index. */
CongruenceReport congruent(const TruncatedSeries& a, const TruncatedSeries& b, std::uint64_t u);

/* Exact comparison; returns the first index where the series differ, or
 * nothing when they agree to the shared truncation. */
std::optional<std::size_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace qcong
