#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/qseries.hpp"

namespace qcong {

/* An element of SL2(Z); the double-coset representatives used here are the
 * lower-triangular matrices [[1,0],[delta,1]] for delta | N. */
struct CosetRep {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    bool operator==(const CosetRep&) const = default;
};

CosetRep make_coset_rep(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/* Candidate tuple (m, M, N, r, t) for the admissibility set, with the
 * derived quantities k = gcd(m^2 - 1, 24) and the 2-adic split
 * prod delta^{|r_delta|} = 2^s * j, j odd. */
class CongruenceTuple {
public:
    CongruenceTuple(std::int64_t m, std::int64_t M, std::int64_t N, EtaExponents r, std::int64_t t);

    std::int64_t m() const { return m_; }
    std::int64_t level_M() const { return M_; }
    std::int64_t level_N() const { return N_; }
    std::int64_t t() const { return t_; }
    const EtaExponents& exponents() const { return r_; }

    std::int64_t k() const { return k_; }
    std::int64_t two_adic_exponent() const { return s_; }  // s
    const Integer& odd_part() const { return j_; }         // j

private:
    std::int64_t m_, M_, N_, t_;
    EtaExponents r_;
    std::int64_t k_;
    std::int64_t s_;
    Integer j_;
};

/* The six admissibility conditions, evaluated independently. */
struct DeltaStarResult {
    bool primes_of_m_divide_N = false;        // (1)
    bool active_deltas_divide_mN = false;     // (2)
    bool weighted_sum_divisible_24 = false;   // (3) kN sum r_d (mN/d) == 0 mod 24
    bool exponent_sum_divisible_8 = false;    // (4) kN sum r_d == 0 mod 8
    bool progression_gcd_divides_N = false;   // (5) 24m / gcd(-24kt - k sum d r_d, 24m) | N
    bool even_m_condition = false;            // (6)

    bool all() const
    {
        return primes_of_m_divide_N && active_deltas_divide_mN && weighted_sum_divisible_24 &&
               exponent_sum_divisible_8 && progression_gcd_divides_N && even_m_condition;
    }
};

DeltaStarResult delta_star_check(const CongruenceTuple& tuple);

/* Orbit of t under the square classes of Z_{24m}:
 * P = { t' : exists s in S_{24m}, t' == t s + (s-1)/24 * sum delta r_delta mod m },
 * canonical residues, increasing. Always contains t. */
std::vector<std::int64_t> p_set(std::int64_t m, const EtaExponents& r, std::int64_t t);

/* Thrown when N fails the squarefree precondition and the representative
 * set below is not guaranteed complete. */
class CosetRepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* [[1,0],[delta,1]] for delta | N: a complete double-coset representative
 * set when N or N/2 is squarefree; hard error otherwise. */
std::vector<CosetRep> coset_reps(std::int64_t N);

/* min over lambda in {0..m-1} of (1/24) sum_{d|M} r_d gcd^2(d a + d k lambda c, m c)/(d m).
 * Requires c != 0; the c = 0 gcd convention is deliberately not chosen here. */
Rational p_mr(const CosetRep& gamma, std::int64_t m, const EtaExponents& r);

/* (1/24) sum_{d|N} r'_d gcd^2(d, c)/d. */
Rational p_star(const CosetRep& gamma, const EtaExponents& rprime);

/* The finite verification bound: nu and its floor, with t_min taken from
 * the computed P-set (an explicit-t_min overload is exposed for the
 * monotonicity property). */
std::pair<Rational, std::int64_t> nu_bound(const CongruenceTuple& tuple, const EtaExponents& rprime);
std::pair<Rational, std::int64_t> nu_bound(const CongruenceTuple& tuple, const EtaExponents& rprime,
                                           std::int64_t t_min);

enum class Verdict { proven, hypothesis_failed, counterexample };

std::string to_string(Verdict v);

struct CosetCheck {
    CosetRep gamma;
    Rational lower_order;       // p_{m,r}(gamma)
    Rational correction_order;  // p*_{r'}(gamma)
    Rational sum;
    bool nonnegative = false;
};

struct CoefficientCheck {
    std::int64_t t_prime = 0;
    std::int64_t n = 0;
    std::int64_t index = 0;  // m*n + t'
    std::uint64_t residue = 0;
};

/* Machine-checkable record of one verification run: every hypothesis and
 * every examined coefficient, so the result can be re-derived without
 * rerunning. */
struct VerificationCertificate {
    VerificationCertificate(CongruenceTuple tuple_, EtaExponents rprime_, std::uint64_t modulus_)
        : tuple(std::move(tuple_)), rprime(std::move(rprime_)), modulus(modulus_)
    {
    }

    CongruenceTuple tuple;
    EtaExponents rprime;
    std::uint64_t modulus = 0;

    DeltaStarResult delta_star;
    bool coset_reps_complete = false;
    std::string coset_reps_note;

    std::vector<std::int64_t> target_residues;  // t plus any extra residues
    std::vector<std::int64_t> progression_set;  // union of the orbits of the targets
    std::int64_t t_min = 0;
    std::vector<CosetCheck> coset_checks;
    Rational nu;
    std::int64_t nu_floor = 0;

    std::vector<CoefficientCheck> coefficient_checks;
    std::optional<CoefficientCheck> witness;  // first nonzero residue, if any

    Verdict verdict = Verdict::hypothesis_failed;
};

/* Full verification: admissibility, representative completeness, the
 * order inequalities, the nu bound, then the finitely many coefficients
 * c_r(m n + t') mod u for t' in P and n <= floor(nu).
 *
 * extra_residues lets one run certify several progressions at once: P is
 * the union of the orbits of t and of each extra residue, and t_min is the
 * minimum over the union, so the resulting nu dominates the bound each
 * orbit would need on its own. */
VerificationCertificate verify(const CongruenceTuple& tuple, const EtaExponents& rprime,
                               std::uint64_t u,
                               const std::vector<std::int64_t>& extra_residues = {});

/* Certificate <-> JSON; integers are decimal strings, rationals are
 * {"num","den"} pairs, verdict a lowercase string. Round-trips exactly. */
std::string certificate_to_json(const VerificationCertificate& cert);
VerificationCertificate certificate_from_json(const std::string& text);

/* Built-in reproduction presets for the two flagship congruences. */
struct VerificationPreset {
    std::string name;
    CongruenceTuple tuple;
    EtaExponents rprime;
    std::uint64_t modulus;
    std::vector<std::int64_t> extra_residues;
};

/* Known preset names: "thm1" (m=49 cubic-pair tuple, u=49) and "thm2"
 * (m=9 tuple behind the mod-256 overcubic-pair congruences, u=16). */
std::optional<VerificationPreset> verification_preset(std::string_view name);

}  // namespace qcong
