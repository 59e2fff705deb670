/* Acceptance suite: every top-level claim the toolkit reproduces, one
 * pass/fail line per criterion. Exits nonzero if any criterion fails. */

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcong/denscan.hpp"
#include "qcong/etaquot.hpp"
#include "qcong/raduveri.hpp"
#include "qcong/sequences.hpp"

using namespace qcong;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool expect(bool condition, const std::string& what, std::string& detail)
{
    if (!condition && detail.empty()) detail = "failed: " + what;
    return condition;
}

const char* kCubicPairWitness =
    "2547081709226856352575091322454383557126791567591335"
    "339788372343399013917787449842071480";

/* the printed source drops the leading digit of this one; the value below
 * is confirmed by two independent computations (see tests/oracles.hpp) */
const char* kOvercubicPair834 =
    "57761203316486412630224281570704445214150462692805613719833344";
const char* kOvercubicPair858 =
    "519085767900724771159507478715308091342334377184238781729434112";

}  // namespace

int main()
{
    criterion(1, "verification certificate for b(49n+37) mod 49", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        const auto preset = verification_preset("thm1");
        bool ok = expect(preset.has_value(), "preset thm1 exists", detail);
        if (!ok) return false;
        const auto cert = verify(preset->tuple, preset->rprime, preset->modulus,
                                 preset->extra_residues);
        ok &= expect(cert.delta_star.all(), "six admissibility conditions", detail);
        ok &= expect(cert.progression_set == std::vector<std::int64_t>{37}, "P = {37}", detail);
        ok &= expect(cert.nu_floor == 48, "floor(nu) = 48", detail);
        ok &= expect(cert.verdict == Verdict::proven, "verdict proven", detail);
        ok &= expect(seconds_since(start) < 60.0, "runtime under 60 s", detail);

        const auto b = coefficients(SequenceSpec::cubic_pair(), 2389, CoefficientDomain::exact());
        ok &= expect(b.coefficient(37) == Integer("80832850"), "b(37)", detail);
        ok &= expect(b.coefficient(37) % 343 != 0, "343 does not divide b(37)", detail);
        ok &= expect(b.coefficient(2389) == Integer(kCubicPairWitness),
                     "b(49*48+37) digit-for-digit", detail);
        ok &= expect(b.coefficient(2389) % 49 == 0, "49 divides b(49*48+37)", detail);
        return ok;
    });

    criterion(2, "verification certificate for the mod-256 pair congruences", [](std::string& detail) {
        const auto preset = verification_preset("thm2");
        bool ok = expect(preset.has_value(), "preset thm2 exists", detail);
        if (!ok) return false;
        ok &= expect(preset->tuple.exponents() == EtaExponents(8, {10, 6, -4, 0}),
                     "r = (10,6,-4,0)", detail);
        ok &= expect(preset->modulus == 16, "u = 16", detail);
        const auto cert = verify(preset->tuple, preset->rprime, preset->modulus,
                                 preset->extra_residues);
        ok &= expect(cert.progression_set == std::vector<std::int64_t>{5, 8}, "P = {5,8}", detail);
        ok &= expect(cert.nu_floor == 11, "floor(nu) = 11", detail);
        ok &= expect(cert.verdict == Verdict::proven, "verdict proven", detail);

        const auto ocp =
            coefficients(SequenceSpec::overcubic_pair(), 900, CoefficientDomain::exact());
        ok &= expect(ocp.coefficient(72 * 11 + 42) == Integer(kOvercubicPair834),
                     "value at 72*11+42", detail);
        ok &= expect(ocp.coefficient(72 * 11 + 42) % 256 == 0, "256 | value at 72*11+42", detail);
        ok &= expect(ocp.coefficient(72 * 11 + 66) == Integer(kOvercubicPair858),
                     "value at 72*11+66 digit-for-digit", detail);
        ok &= expect(ocp.coefficient(72 * 11 + 66) % 256 == 0, "256 | value at 72*11+66", detail);
        ok &= expect(ocp.coefficient(66) % 512 != 0, "512 does not divide value at 66", detail);
        ok &= expect(ocp.coefficient(114) % 512 != 0, "512 does not divide value at 114", detail);
        return ok;
    });

    criterion(3, "extraction chain for the even overcubic-pair series mod 256", [](std::string& detail) {
        const std::size_t T = 300;
        const auto dom = CoefficientDomain::modular(256);
        const auto ocp = coefficients(SequenceSpec::overcubic_pair(), 8 * T + 2, dom);

        const auto even = extract_ap(ocp, 2, 0);
        const auto even_rhs = eta_product(4, EtaExponents(4, {-16, 16, -4}), 4 * T + 1, dom);
        bool ok = expect(congruent(even, even_rhs, 256).holds, "series at 2n", detail);

        const auto quarter = extract_ap(ocp, 4, 2);
        const auto quarter_rhs =
            scale(eta_product(4, EtaExponents(4, {-36, 40, -8}), 2 * T, dom), 16);
        ok &= expect(congruent(quarter, quarter_rhs, 256).holds, "series at 4n+2", detail);

        const auto eighth = extract_ap(ocp, 8, 2);
        const auto eighth_rhs = scale(eta_product(4, EtaExponents(4, {10, 6, -4}), T, dom), 16);
        ok &= expect(congruent(eighth, eighth_rhs, 256).holds, "series at 8n+2", detail);
        return ok;
    });

    criterion(4, "quartic 2-dissection exactly, and the 49th-power reduction mod 49", [](std::string& detail) {
        const std::size_t T = 500;
        const auto dom = CoefficientDomain::exact();
        const auto lhs = eta_power(1, -4, T, dom);
        const auto even = eta_product(8, EtaExponents(8, {0, -14, 14, -4}), T, dom);
        const auto odd = eta_product(8, EtaExponents(8, {0, -10, 2, 4}), T, dom);
        const auto rhs = add(even, shift(scale(odd, 4), 1));
        bool ok = expect(!first_difference(lhs, rhs).has_value(), "2-dissection to T=500", detail);

        const auto dom49 = CoefficientDomain::modular(49);
        ok &= expect(congruent(eta_power(1, 49, 300, dom49), eta_power(7, 7, 300, dom49), 49).holds,
                     "binomial reduction to T=300", detail);
        return ok;
    });

    criterion(5, "quoted congruence families to n = 300", [](std::string& detail) {
        const auto pair = SequenceSpec::cubic_pair();
        const auto ocp = SequenceSpec::overcubic_pair();
        bool ok = expect(check_congruence_family(pair, 5, 4, 5, 300).holds, "5n+4 mod 5", detail);
        for (std::int64_t i : {2, 3, 4, 6}) {
            std::ostringstream label;
            label << "7n+" << i << " mod 7";
            ok &= expect(check_congruence_family(pair, 7, i, 7, 300).holds, label.str(), detail);
        }
        ok &= expect(check_congruence_family(pair, 9, 7, 9, 300).holds, "9n+7 mod 9", detail);
        /* The quoted modulus 64 fails already at n = 0: the pair count at 7
         * is 1888 = 32 * 59 (confirmed by three independent computations),
         * so only the mod-32 form of this family is true. The check is kept
         * as quoted and reported honestly. */
        const auto mod64 = check_congruence_family(ocp, 8, 7, 64, 300);
        if (!mod64.holds && detail.empty()) {
            std::ostringstream why;
            why << "8n+7 mod 64 fails at n=" << *mod64.first_failure
                << " (value 1888 = 32*59; the mod-32 form holds to n=300: "
                << check_congruence_family(ocp, 8, 7, 32, 300).holds << ")";
            detail = why.str();
        }
        ok &= mod64.holds;
        ok &= expect(check_congruence_family(ocp, 9, 3, 3, 300).holds, "9n+3 mod 3", detail);
        ok &= expect(check_congruence_family(SequenceSpec::cubic(), 3, 2, 3, 300).holds,
                     "3n+2 mod 3", detail);
        return ok;
    });

    criterion(6, "mod-243 progression and the two mod-81 identities", [](std::string& detail) {
        const auto over30 = check_congruence_family(SequenceSpec::cubic_pair(), 81, 61, 243, 30);
        bool ok = expect(over30.holds, "81n+61 mod 243 to n=30", detail);
        const auto report = check_lin_identities(100);
        ok &= expect(report.progression7.holds, "81n+7 identity mod 81 to T=100", detail);
        ok &= expect(report.progression34.holds, "81n+34 identity mod 81 to T=100", detail);
        return ok;
    });

    criterion(7, "eta-quotient suite on levels 384 and 768", [](std::string& detail) {
        bool ok = true;
        for (int k = 4; k <= 8; ++k) {
            const auto companion = overcubic_pair_companion(k);
            std::ostringstream label;
            label << "pair companion k=" << k;
            ok &= expect(check_transformation_conditions(companion).all(),
                         label.str() + " transformation", detail);
            ok &= expect(is_holomorphic(companion).holomorphic, label.str() + " holomorphy", detail);
            ok &= expect(companion.weight() == (Integer(1) << (k - 2)) - 2,
                         label.str() + " weight", detail);
        }
        for (int k = 3; k <= 8; ++k) {
            const auto companion = overcubic_companion(k);
            std::ostringstream label;
            label << "companion k=" << k;
            ok &= expect(companion.level() == 768, label.str() + " level", detail);
            ok &= expect(check_transformation_conditions(companion).all(),
                         label.str() + " transformation", detail);
            ok &= expect(is_holomorphic(companion).holomorphic, label.str() + " holomorphy", detail);
            ok &= expect(companion.weight() == (Integer(1) << (k - 2)) - 1,
                         label.str() + " weight", detail);
        }
        for (int k = 1; k <= 8; ++k) {
            std::ostringstream label;
            label << "unit factor k=" << k;
            ok &= expect(check_fk_congruence(k, 2000), label.str(), detail);
        }
        const std::size_t T = 4800;
        const auto companion =
            q_expansion(overcubic_pair_companion(4), T, CoefficientDomain::modular(16));
        const auto base = q_expansion(overcubic_pair_form(), T, CoefficientDomain::modular(16));
        ok &= expect(congruent(companion, base, 16).holds,
                     "companion matches the pair form mod 16 to order 4800", detail);
        return ok;
    });

    criterion(8, "divisibility density tables are monotone and nested", [](std::string& detail) {
        const std::vector<std::size_t> checkpoints{1000, 10000, 100000};
        bool ok = true;
        for (const auto& spec : {SequenceSpec::overcubic_pair(), SequenceSpec::overcubic()}) {
            std::vector<DensityTable> tables;
            for (int k = 1; k <= 3; ++k) {
                const auto start = std::chrono::steady_clock::now();
                tables.push_back(
                    density_scan(spec, std::uint64_t(1) << k, 100000, checkpoints));
                ok &= expect(seconds_since(start) < 300.0, spec.label() + " scan under 5 min",
                             detail);
            }
            for (const auto& table : tables) {
                for (std::size_t i = 1; i < table.checkpoints.size(); ++i) {
                    ok &= expect(table.checkpoints[i].density >= table.checkpoints[i - 1].density,
                                 spec.label() + " density non-decreasing in X", detail);
                }
            }
            for (std::size_t i = 0; i < checkpoints.size(); ++i) {
                ok &= expect(tables[0].checkpoints[i].density >= tables[1].checkpoints[i].density,
                             spec.label() + " mod 2 dominates mod 4", detail);
                ok &= expect(tables[1].checkpoints[i].density >= tables[2].checkpoints[i].density,
                             spec.label() + " mod 4 dominates mod 8", detail);
            }
        }
        return ok;
    });

    criterion(9, "property suites: ring laws, orbits, beyond-bound checks", [](std::string& detail) {
        bool ok = true;

        /* ring axioms and reduction homomorphism on a fixed sample */
        const auto dom = CoefficientDomain::exact();
        const auto a = eta_product(2, EtaExponents(2, {-1, 1}), 64, dom);
        const auto b = eta_power(1, 3, 64, dom);
        const auto c = eta_power(2, -2, 64, dom);
        ok &= expect(!first_difference(mul(a, b), mul(b, a)).has_value(), "commutativity", detail);
        ok &= expect(!first_difference(mul(mul(a, b), c), mul(a, mul(b, c))).has_value(),
                     "associativity", detail);
        ok &= expect(!first_difference(mul(a, add(b, c)), add(mul(a, b), mul(a, c))).has_value(),
                     "distributivity", detail);
        for (std::uint64_t u : {5ULL, 49ULL, 256ULL}) {
            ok &= expect(!first_difference(reduce(mul(a, b), u),
                                           mul(reduce(a, u), reduce(b, u))).has_value(),
                         "reduction homomorphism", detail);
        }

        /* inverse round trip */
        ok &= expect(!first_difference(inverse(inverse(b)), b).has_value(), "inverse round-trip",
                     detail);
        const auto one = TruncatedSeries::constant_one(dom, 64);
        ok &= expect(!first_difference(mul(b, inverse(b)), one).has_value(), "inverse identity",
                     detail);

        /* dissection reconstruction */
        for (std::int64_t m : {2, 9}) {
            for (std::int64_t t = 0; t < m; ++t) {
                const auto part = extract_ap(a, m, t);
                for (std::size_t n = 0; n <= part.truncation(); ++n) {
                    ok &= part.coefficient(n) ==
                          a.coefficient(static_cast<std::size_t>(m * static_cast<std::int64_t>(n) + t));
                }
            }
        }
        ok = expect(ok, "dissection reconstruction", detail);

        /* orbit property for both flagship tuples */
        const auto preset1 = verification_preset("thm1");
        const auto preset2 = verification_preset("thm2");
        for (const auto& preset : {*preset1, *preset2}) {
            const auto& tuple = preset.tuple;
            const auto orbit = p_set(tuple.m(), tuple.exponents(), tuple.t());
            for (std::int64_t tp : orbit)
                ok &= expect(p_set(tuple.m(), tuple.exponents(), tp) == orbit, "orbit closure",
                             detail);
        }

        /* beyond-bound spot checks: 50 values past floor(nu) */
        {
            const auto& p = *preset1;
            const std::size_t T = static_cast<std::size_t>(49) * (48 + 200) + 37;
            const auto series = eta_product(p.tuple.level_M(), p.tuple.exponents(), T,
                                            CoefficientDomain::modular(49));
            for (std::int64_t n = 49; n < 49 + 200; n += 4) {
                ok &= expect(series.mod_data()[static_cast<std::size_t>(49 * n + 37)] == 0,
                             "beyond-bound residue", detail);
            }
        }
        {
            const auto& p = *preset2;
            const std::size_t T = static_cast<std::size_t>(9) * (11 + 200) + 8;
            const auto series = eta_product(p.tuple.level_M(), p.tuple.exponents(), T,
                                            CoefficientDomain::modular(16));
            for (std::int64_t n = 12; n < 12 + 200; n += 4) {
                for (std::int64_t tp : {5, 8}) {
                    ok &= expect(series.mod_data()[static_cast<std::size_t>(9 * n + tp)] == 0,
                                 "beyond-bound residue", detail);
                }
            }
        }
        return ok;
    });

    if (failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << failures << " acceptance criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
