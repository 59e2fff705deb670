#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcong/qseries.hpp"

namespace qcong {

/* f(z) = prod_{delta | N} eta(delta z)^{r_delta} on Gamma_0(N). */
class EtaQuotient {
public:
    EtaQuotient(std::int64_t level, EtaExponents exponents);

    std::int64_t level() const { return level_; }
    const EtaExponents& exponents() const { return exponents_; }

    Rational weight() const;            // (1/2) sum r_delta
    Rational leading_exponent() const;  // (1/24) sum delta r_delta

private:
    std::int64_t level_;
    EtaExponents exponents_;
};

/* Product of two quotients on the same level: exponents add. */
EtaQuotient mul(const EtaQuotient& f, const EtaQuotient& g);

/* Same quotient regarded on a multiple of its level. */
EtaQuotient lifted(const EtaQuotient& f, std::int64_t new_level);

struct TransformationCheck {
    bool weighted_sum_divisible_24 = false;   // sum delta r_delta == 0 mod 24
    bool dual_sum_divisible_24 = false;       // sum (N/delta) r_delta == 0 mod 24
    bool integral_weight = false;

    bool all() const
    {
        return weighted_sum_divisible_24 && dual_sum_divisible_24 && integral_weight;
    }
};

TransformationCheck check_transformation_conditions(const EtaQuotient& f);

/* Order of vanishing at the cusp c/d (independent of c for gcd(c,d)=1):
 * (N/24) sum_{delta|N} gcd(d,delta)^2 r_delta / (gcd(d, N/d) d delta). */
Rational cusp_order(const EtaQuotient& f, std::int64_t d);

struct HolomorphyReport {
    bool holomorphic = false;
    std::vector<std::pair<std::int64_t, Rational>> orders;  // (d, order) for every d | N
    std::optional<std::int64_t> offending_divisor;          // first d with negative order
};

HolomorphyReport is_holomorphic(const EtaQuotient& f);

/* Squarefree core of (-1)^l prod delta^{r_delta}; the product may be a
 * non-integer rational, but only its square class matters. */
Integer character_core(const EtaQuotient& f);

/* chi(d) = kronecker((-1)^l prod delta^{r_delta}, d) for gcd(d, N) = 1;
 * requires integral weight. */
int character(const EtaQuotient& f, const Integer& d);

/* Families on levels 384 and 768 used by the divisibility analysis:
 *
 *   overcubic_pair_form     eta(96z)^2 / (eta(24z)^4 eta(48z)^2), whose
 *                           expansion carries the overcubic-pair numbers at
 *                           the indices 24n;
 *   overcubic_form          eta(96z) / (eta(24z)^2 eta(48z)), likewise for
 *                           the overcubic numbers;
 *   unit_congruence_factor  eta(48z)^{2^k} / eta(96z)^{2^{k-1}}, congruent
 *                           to 1 mod 2^k;
 *   overcubic_pair_companion / overcubic_companion: the products of the
 *   form above with the unit factor, holomorphic for large enough k.
 */
EtaQuotient overcubic_pair_form();                 // level 384
EtaQuotient overcubic_form();                      // level 768
EtaQuotient unit_congruence_factor(int k);         // level 384, k >= 1
EtaQuotient overcubic_pair_companion(int k);       // level 384, k >= 2
EtaQuotient overcubic_companion(int k);            // level 768, k >= 2

/* Fourier expansion sum a(n) q^n to order T; indices are true q-exponents.
 * The leading exponent (1/24) sum delta r_delta must be a non-negative
 * integer. Internally computed in the variable q^g, g = gcd of the active
 * delta, to cut the working truncation. */
TruncatedSeries q_expansion(const EtaQuotient& f, std::size_t truncation,
                            CoefficientDomain dom = CoefficientDomain::exact());

/* Expansion of the unit factor is congruent to 1 mod 2^k up to q-order T. */
bool check_fk_congruence(int k, std::size_t truncation);

}  // namespace qcong
