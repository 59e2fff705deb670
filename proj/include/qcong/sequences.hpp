#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qcong/qseries.hpp"

namespace qcong {

enum class SequenceName { cubic, cubic_pair, overcubic, overcubic_pair, custom };

/* A named partition generating function, normalized to pure eta-exponent
 * form at construction via (-q^d; q^d)_inf = (q^{2d}; q^{2d})_inf / (q^d; q^d)_inf:
 *
 *   cubic           1 / ((q;q)(q^2;q^2))              level 2, (-1,-1)
 *   cubic-pair      1 / ((q;q)^2 (q^2;q^2)^2)         level 2, (-2,-2)
 *   overcubic       (q^4;q^4) / ((q;q)^2 (q^2;q^2))   level 4, (-2,-1,1)
 *   overcubic-pair  (q^4;q^4)^2 / ((q;q)^4 (q^2;q^2)^2)  level 4, (-4,-2,2)
 */
class SequenceSpec {
public:
    static SequenceSpec cubic();
    static SequenceSpec cubic_pair();
    static SequenceSpec overcubic();
    static SequenceSpec overcubic_pair();
    static SequenceSpec custom(EtaExponents exponents);

    /* Parses the hyphenated names above; empty on anything else. */
    static std::optional<SequenceSpec> from_name(std::string_view name);

    SequenceName name() const { return name_; }
    const EtaExponents& exponents() const { return exponents_; }

    std::string label() const;
    /* Canonical string identifying the expanded product; used as the
     * coefficient-cache key. */
    std::string cache_key() const;

private:
    SequenceSpec(SequenceName name, EtaExponents exponents);

    SequenceName name_;
    EtaExponents exponents_;
};

/* First T+1 coefficients of the sequence. */
TruncatedSeries coefficients(const SequenceSpec& spec, std::size_t truncation, CoefficientDomain dom);

struct FamilyReport {
    bool holds = false;
    std::optional<std::size_t> first_failure;  // smallest failing n
};

/* coefficient(m*n + t) == 0 (mod u) for all n <= n_max, computed in the
 * modular domain. */
FamilyReport check_congruence_family(const SequenceSpec& spec, std::int64_t m, std::int64_t t,
                                     std::uint64_t u, std::size_t n_max);

struct LinReport {
    /* sum b(81n+7) q^n == 9 (q^2;q^2)(q^3;q^3)^2/(q^6;q^6) (mod 81) to order T */
    CongruenceReport progression7;
    /* sum b(81n+34) q^n == 36 (q;q)(q^6;q^6)^2/(q^3;q^3) (mod 81) to order T */
    CongruenceReport progression34;
    /* b(81n+61) == 0 (mod 243) for n <= T */
    FamilyReport progression61;

    bool all_hold() const
    {
        return progression7.holds && progression34.holds && progression61.holds;
    }
};

LinReport check_lin_identities(std::size_t truncation);

}  // namespace qcong
