#include "qcong/raduveri.hpp"

#include <algorithm>
#include <numeric>

namespace qcong {

CosetRep make_coset_rep(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    if (a * d - b * c != 1) throw std::invalid_argument("CosetRep: determinant must be 1");
    return {a, b, c, d};
}

CongruenceTuple::CongruenceTuple(std::int64_t m, std::int64_t M, std::int64_t N, EtaExponents r,
                                 std::int64_t t)
    : m_(m), M_(M), N_(N), t_(t), r_(std::move(r)), j_(1)
{
    if (m < 1 || M < 1 || N < 1) throw std::invalid_argument("CongruenceTuple: levels must be positive");
    if (t < 0 || t >= m) throw std::invalid_argument("CongruenceTuple: need 0 <= t < m");
    if (r_.level() != M)
        throw std::invalid_argument("CongruenceTuple: exponents must be indexed by the divisors of M");

    k_ = std::gcd(m * m - 1, std::int64_t(24));

    /* prod delta^{|r_delta|} = 2^s * j with j odd: s collects the 2-adic
     * valuations, j the product of the odd parts. */
    s_ = 0;
    for (const auto& [delta, e] : r_.entries()) {
        if (e == 0) continue;
        const std::int64_t count = e > 0 ? e : -e;
        std::int64_t odd = delta;
        while (odd % 2 == 0) {
            odd /= 2;
            s_ += count;
        }
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(odd),
                      static_cast<unsigned long>(count));
        j_ *= power;
    }
}

DeltaStarResult delta_star_check(const CongruenceTuple& tuple)
{
    DeltaStarResult res;
    const std::int64_t m = tuple.m();
    const std::int64_t N = tuple.level_N();
    const std::int64_t k = tuple.k();
    const EtaExponents& r = tuple.exponents();

    res.primes_of_m_divide_N = true;
    for (std::int64_t p : prime_divisors(m))
        if (N % p != 0) res.primes_of_m_divide_N = false;

    res.active_deltas_divide_mN = true;
    for (const auto& [delta, e] : r.entries())
        if (e != 0 && (m * N) % delta != 0) res.active_deltas_divide_mN = false;

    /* (3): kN * sum_d r_d * mN/d == 0 (mod 24), evaluated exactly. */
    Rational weighted(0);
    for (const auto& [delta, e] : r.entries())
        weighted += Rational(Integer(e) * Integer(m) * Integer(N), Integer(delta));
    weighted.canonicalize();
    Rational lhs3 = Rational(Integer(k) * Integer(N)) * weighted;
    lhs3.canonicalize();
    res.weighted_sum_divisible_24 =
        lhs3.get_den() == 1 && mpz_divisible_ui_p(lhs3.get_num_mpz_t(), 24) != 0;

    const std::int64_t lhs4 = k * N * r.exponent_sum();
    res.exponent_sum_divisible_8 = mod_canonical(lhs4, 8) == 0;

    /* (5): 24m / gcd(-24kt - k sum d r_d, 24m) divides N. */
    const Integer arg = Integer(-24) * k * tuple.t() - Integer(k) * r.weighted_sum();
    const Integer g = gcd_abs(arg, Integer(24) * m);
    const Integer quotient = Integer(24) * m / g;
    res.progression_gcd_divides_N = mpz_divisible_p(Integer(N).get_mpz_t(), quotient.get_mpz_t()) != 0;

    if (m % 2 != 0) {
        res.even_m_condition = true;
    } else {
        const std::int64_t s = tuple.two_adic_exponent();
        const bool first = mod_canonical(k * N, 4) == 0 && mod_canonical(s * N, 8) == 0;
        Integer one_minus_j_times_N = (Integer(1) - tuple.odd_part()) * N;
        const bool second = s % 2 == 0 && mpz_divisible_ui_p(one_minus_j_times_N.get_mpz_t(), 8) != 0;
        res.even_m_condition = first || second;
    }

    return res;
}

std::vector<std::int64_t> p_set(std::int64_t m, const EtaExponents& r, std::int64_t t)
{
    if (m < 1 || t < 0 || t >= m) throw std::invalid_argument("p_set: need 0 <= t < m");
    const std::int64_t weighted = r.weighted_sum();
    std::vector<std::int64_t> out;
    for (std::int64_t s : square_classes(24 * m)) {
        /* every square of a unit mod 24m is 1 mod 24, so (s-1)/24 is integral */
        const std::int64_t tp = mod_canonical(t * s + (s - 1) / 24 * weighted, m);
        if (!std::binary_search(out.begin(), out.end(), tp))
            out.insert(std::upper_bound(out.begin(), out.end(), tp), tp);
    }
    return out;
}

std::vector<CosetRep> coset_reps(std::int64_t N)
{
    if (N < 1) throw std::invalid_argument("coset_reps: N must be positive");
    const bool ok = is_squarefree(N) || (N % 2 == 0 && is_squarefree(N / 2));
    if (!ok)
        throw CosetRepError("coset_reps: neither N nor N/2 is squarefree; "
                            "representative set not guaranteed complete");
    std::vector<CosetRep> reps;
    for (std::int64_t delta : divisors(N)) reps.push_back({1, 0, delta, 1});
    return reps;
}

Rational p_mr(const CosetRep& gamma, std::int64_t m, const EtaExponents& r)
{
    if (gamma.c == 0)
        throw std::invalid_argument("p_mr: c = 0 representatives are not supported");
    if (m < 1) throw std::invalid_argument("p_mr: m must be positive");
    const std::int64_t k = std::gcd(m * m - 1, std::int64_t(24));

    std::optional<Rational> best;
    for (std::int64_t lambda = 0; lambda < m; ++lambda) {
        Rational value(0);
        for (const auto& [delta, e] : r.entries()) {
            if (e == 0) continue;
            const Integer arg = Integer(delta) * gamma.a + Integer(delta) * k * lambda * gamma.c;
            const Integer g = gcd_abs(arg, Integer(m) * gamma.c);
            value += Rational(Integer(e) * g * g, Integer(24) * delta * m);
        }
        value.canonicalize();
        if (!best || value < *best) best = value;
    }
    return *best;
}

Rational p_star(const CosetRep& gamma, const EtaExponents& rprime)
{
    Rational value(0);
    for (const auto& [delta, e] : rprime.entries()) {
        if (e == 0) continue;
        const Integer g = gcd_abs(Integer(delta), Integer(gamma.c));
        value += Rational(Integer(e) * g * g, Integer(24) * delta);
    }
    value.canonicalize();
    return value;
}

std::pair<Rational, std::int64_t> nu_bound(const CongruenceTuple& tuple, const EtaExponents& rprime,
                                           std::int64_t t_min)
{
    const std::int64_t N = tuple.level_N();
    const std::int64_t m = tuple.m();
    const Integer index(index_gamma0(N));

    Rational nu = Rational((Integer(tuple.exponents().exponent_sum()) + rprime.exponent_sum()) * index -
                               Integer(rprime.weighted_sum()),
                           Integer(24));
    nu -= Rational(Integer(tuple.exponents().weighted_sum()), Integer(24) * m);
    nu -= Rational(Integer(t_min), Integer(m));
    nu.canonicalize();

    const Integer floor = rational_floor(nu);
    return {nu, floor.get_si()};
}

std::pair<Rational, std::int64_t> nu_bound(const CongruenceTuple& tuple, const EtaExponents& rprime)
{
    const auto orbit = p_set(tuple.m(), tuple.exponents(), tuple.t());
    return nu_bound(tuple, rprime, orbit.front());
}

std::string to_string(Verdict v)
{
    switch (v) {
        case Verdict::proven: return "proven";
        case Verdict::hypothesis_failed: return "hypothesis-failed";
        case Verdict::counterexample: return "counterexample";
    }
    return "hypothesis-failed";
}

VerificationCertificate verify(const CongruenceTuple& tuple, const EtaExponents& rprime,
                               std::uint64_t u, const std::vector<std::int64_t>& extra_residues)
{
    if (rprime.level() != tuple.level_N())
        throw std::invalid_argument("verify: r' must be indexed by the divisors of N");

    VerificationCertificate cert{tuple, rprime, u};

    cert.delta_star = delta_star_check(tuple);

    std::vector<CosetRep> reps;
    try {
        reps = coset_reps(tuple.level_N());
        cert.coset_reps_complete = true;
    } catch (const CosetRepError& e) {
        cert.coset_reps_complete = false;
        cert.coset_reps_note = e.what();
    }

    bool orders_ok = cert.coset_reps_complete;
    for (const auto& gamma : reps) {
        CosetCheck check;
        check.gamma = gamma;
        check.lower_order = p_mr(gamma, tuple.m(), tuple.exponents());
        check.correction_order = p_star(gamma, rprime);
        check.sum = check.lower_order + check.correction_order;
        check.sum.canonicalize();
        check.nonnegative = check.sum >= 0;
        if (!check.nonnegative) orders_ok = false;
        cert.coset_checks.push_back(std::move(check));
    }

    cert.target_residues.push_back(tuple.t());
    for (std::int64_t extra : extra_residues)
        if (!std::count(cert.target_residues.begin(), cert.target_residues.end(), extra))
            cert.target_residues.push_back(extra);
    std::sort(cert.target_residues.begin(), cert.target_residues.end());

    cert.progression_set = p_set(tuple.m(), tuple.exponents(), tuple.t());
    for (std::int64_t extra : extra_residues) {
        for (std::int64_t tp : p_set(tuple.m(), tuple.exponents(), extra)) {
            if (!std::binary_search(cert.progression_set.begin(), cert.progression_set.end(), tp))
                cert.progression_set.insert(
                    std::upper_bound(cert.progression_set.begin(), cert.progression_set.end(), tp),
                    tp);
        }
    }
    cert.t_min = cert.progression_set.front();
    std::tie(cert.nu, cert.nu_floor) = nu_bound(tuple, rprime, cert.t_min);

    if (!cert.delta_star.all() || !orders_ok) {
        cert.verdict = Verdict::hypothesis_failed;
        return cert;
    }

    /* One modular series covers every (t', n) pair to be checked. */
    if (cert.nu_floor >= 0) {
        const std::size_t T = static_cast<std::size_t>(tuple.m()) *
                                  static_cast<std::size_t>(cert.nu_floor) +
                              static_cast<std::size_t>(cert.progression_set.back());
        const TruncatedSeries series = eta_product(tuple.level_M(), tuple.exponents(), T,
                                                   CoefficientDomain::modular(u));
        for (std::int64_t tp : cert.progression_set) {
            for (std::int64_t n = 0; n <= cert.nu_floor; ++n) {
                CoefficientCheck check;
                check.t_prime = tp;
                check.n = n;
                check.index = tuple.m() * n + tp;
                check.residue = series.mod_data()[static_cast<std::size_t>(check.index)];
                if (check.residue != 0 && !cert.witness) cert.witness = check;
                cert.coefficient_checks.push_back(check);
            }
        }
    }

    cert.verdict = cert.witness ? Verdict::counterexample : Verdict::proven;
    return cert;
}

std::optional<VerificationPreset> verification_preset(std::string_view name)
{
    if (name == "thm1") {
        /* c_r for the mod-49 reduced cubic-pair generating function */
        CongruenceTuple tuple(49, 14, 14, EtaExponents(14, {47, -2, -7, 0}), 37);
        return VerificationPreset{"thm1", std::move(tuple), EtaExponents(14, {12, 0, 0, 0}), 49, {}};
    }
    if (name == "thm2") {
        /* c_r behind the overcubic-pair progression 8n+2; u = 16 because
         * the extracted series carries an outer factor 16 toward mod 256.
         * Residues 5 and 8 sit in separate square-class orbits; certifying
         * both in one run uses the union P = {5, 8}. */
        CongruenceTuple tuple(9, 8, 12, EtaExponents(8, {10, 6, -4, 0}), 5);
        return VerificationPreset{"thm2", std::move(tuple),
                                  EtaExponents(12, {0, 0, 0, 0, 0, 0}), 16, {8}};
    }
    return std::nullopt;
}

}  // namespace qcong
