#include <doctest.h>

#include <random>

#include "qcong/etaquot.hpp"
#include "qcong/sequences.hpp"

using namespace qcong;

TEST_CASE("weights of the parametric families")
{
    CHECK(overcubic_pair_companion(4).weight() == 2);
    for (int k = 3; k <= 10; ++k) {
        const Integer two_km2 = Integer(1) << (k - 2);
        CHECK(overcubic_pair_companion(k).weight() == two_km2 - 2);
        CHECK(overcubic_companion(k).weight() == two_km2 - 1);
        CHECK(unit_congruence_factor(k).weight() == two_km2);
    }
    CHECK(unit_congruence_factor(1).weight() == make_rational(Integer(1), Integer(2)));
    CHECK(EtaQuotient(6, EtaExponents(6, {0, 0, 0, 0})).weight() == 0);
}

TEST_CASE("builder exponents")
{
    const auto b4 = overcubic_pair_companion(4);
    CHECK(b4.level() == 384);
    CHECK(b4.exponents().exponent(24) == -4);
    CHECK(b4.exponents().exponent(48) == 14);
    CHECK(b4.exponents().exponent(96) == -6);
    CHECK(b4.exponents().exponent(1) == 0);

    const auto f1 = unit_congruence_factor(1);
    CHECK(f1.exponents().exponent(48) == 2);
    CHECK(f1.exponents().exponent(96) == -1);

    const auto a3 = overcubic_companion(3);
    CHECK(a3.level() == 768);
    CHECK(a3.exponents().exponent(24) == -2);
    CHECK(a3.exponents().exponent(48) == 7);
    CHECK(a3.exponents().exponent(96) == -3);

    CHECK_THROWS_AS(overcubic_pair_companion(1), std::invalid_argument);
    CHECK_THROWS_AS(unit_congruence_factor(0), std::invalid_argument);
}

TEST_CASE("transformation conditions")
{
    for (int k = 4; k <= 8; ++k) CHECK(check_transformation_conditions(overcubic_pair_companion(k)).all());
    for (int k = 3; k <= 8; ++k) CHECK(check_transformation_conditions(overcubic_companion(k)).all());

    const EtaQuotient eta1(1, EtaExponents(1, {1}));
    const auto check = check_transformation_conditions(eta1);
    CHECK(!check.weighted_sum_divisible_24);
    CHECK(!check.integral_weight);
    CHECK(!check.all());
}

TEST_CASE("cusp orders: closed forms and positivity")
{
    /* single eta(24z) at level 24, cusp 1: order 1/24 */
    const EtaQuotient single(24, EtaExponents::from_map(24, {{24, 1}}));
    CHECK(cusp_order(single, 1) == make_rational(Integer(1), Integer(24)));
    CHECK(cusp_order(single, 24) == 1);

    const auto b4 = overcubic_pair_companion(4);
    for (std::int64_t d : divisors(384)) CHECK(cusp_order(b4, d) >= 0);

    CHECK_THROWS_AS(cusp_order(b4, 5), std::invalid_argument);
}

TEST_CASE("cusp order at d = N equals the leading exponent")
{
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<std::int64_t> pick_e(-4, 4);
    for (std::int64_t level : {24, 96, 384}) {
        const auto divs = divisors(level);
        for (int i = 0; i < 10; ++i) {
            std::vector<std::int64_t> exps;
            for (std::size_t d = 0; d < divs.size(); ++d) exps.push_back(pick_e(rng));
            const EtaQuotient eq(level, EtaExponents(level, exps));
            CHECK(cusp_order(eq, level) == eq.leading_exponent());
        }
    }
}

TEST_CASE("first expansion index matches the leading exponent")
{
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<std::int64_t> pick_e(-3, 3);
    int produced = 0;
    while (produced < 30) {
        const std::int64_t level = std::vector<std::int64_t>{24, 96, 384}[produced % 3];
        const auto divs = divisors(level);
        std::vector<std::int64_t> exps;
        for (std::size_t d = 0; d < divs.size(); ++d) exps.push_back(pick_e(rng));
        const EtaQuotient eq(level, EtaExponents(level, exps));
        const Rational lead = eq.leading_exponent();
        if (lead.get_den() != 1 || lead < 0 || lead > 60) continue;
        ++produced;
        const auto expansion = q_expansion(eq, 200);
        const std::size_t h = static_cast<std::size_t>(lead.get_num().get_ui());
        for (std::size_t n = 0; n < h; ++n) CHECK(expansion.coefficient(n) == 0);
        CHECK(expansion.coefficient(h) == 1);
        CHECK(cusp_order(eq, level) == lead);
    }
}

TEST_CASE("holomorphy of the companion families; the bare form is not holomorphic")
{
    for (int k = 4; k <= 8; ++k) CHECK(is_holomorphic(overcubic_pair_companion(k)).holomorphic);
    for (int k = 3; k <= 8; ++k) CHECK(is_holomorphic(overcubic_companion(k)).holomorphic);

    const auto report = is_holomorphic(overcubic_pair_form());
    CHECK(!report.holomorphic);
    CHECK(report.offending_divisor.has_value());
    /* the reported divisor indeed carries a negative order */
    CHECK(cusp_order(overcubic_pair_form(), *report.offending_divisor) < 0);
}

TEST_CASE("character: squarefree core and multiplicativity")
{
    /* the k = 4 companion has a perfect-square product and even weight */
    const auto b4 = overcubic_pair_companion(4);
    CHECK(character_core(b4) == 1);
    CHECK(character(b4, Integer(1)) == 1);
    for (std::int64_t d : {5, 7, 11, 13, 25, 175}) CHECK(character(b4, Integer(d)) == 1);

    /* eta(z) eta(2z)^3: product 8, core 2, weight 2 */
    const EtaQuotient eq(6, EtaExponents(6, {1, 3, 0, 0}));
    CHECK(character_core(eq) == 2);
    CHECK(character(eq, Integer(7)) == 1);
    CHECK(character(eq, Integer(5)) == -1);

    std::mt19937_64 rng(919);
    std::uniform_int_distribution<std::int64_t> pick(1, 500);
    for (int i = 0; i < 100; ++i) {
        Integer d1(pick(rng)), d2(pick(rng));
        if (gcd_abs(d1, Integer(6)) != 1 || gcd_abs(d2, Integer(6)) != 1) continue;
        CHECK(character(eq, d1 * d2) == character(eq, d1) * character(eq, d2));
    }

    CHECK_THROWS_AS(character(eq, Integer(3)), std::invalid_argument);
    CHECK_THROWS_AS(character_core(EtaQuotient(1, EtaExponents(1, {1}))), std::invalid_argument);
}

TEST_CASE("exponent identities between the families")
{
    const auto pair_form = overcubic_pair_form();
    for (int k = 2; k <= 10; ++k) {
        CHECK(mul(pair_form, unit_congruence_factor(k)).exponents() ==
              overcubic_pair_companion(k).exponents());
        CHECK(mul(overcubic_form(), lifted(unit_congruence_factor(k), 768)).exponents() ==
              overcubic_companion(k).exponents());
    }
    CHECK_THROWS_AS(lifted(overcubic_form(), 384), std::invalid_argument);
}

TEST_CASE("expansion of the pair form carries the sequence at indices 24n")
{
    const std::size_t count = 60;
    const auto expansion = q_expansion(overcubic_pair_form(), 24 * count);
    const auto seq =
        coefficients(SequenceSpec::overcubic_pair(), count, CoefficientDomain::exact());
    for (std::size_t n = 0; n <= 24 * count; ++n) {
        if (n % 24 == 0)
            CHECK(expansion.coefficient(n) == seq.coefficient(n / 24));
        else
            CHECK(expansion.coefficient(n) == 0);
    }
}

TEST_CASE("expansion errors on fractional or negative leading exponents")
{
    CHECK_THROWS_AS(q_expansion(EtaQuotient(1, EtaExponents(1, {1})), 10), std::invalid_argument);
    const EtaQuotient negative(24, EtaExponents::from_map(24, {{24, -1}}));
    CHECK_THROWS_AS(q_expansion(negative, 10), std::invalid_argument);
}

TEST_CASE("expansion is multiplicative")
{
    const auto f = unit_congruence_factor(2);
    const auto g = overcubic_pair_form();
    const std::size_t T = 24 * 40;
    const auto lhs = q_expansion(mul(f, g), T);
    const auto rhs = mul(q_expansion(f, T), q_expansion(g, T));
    CHECK(!first_difference(lhs, rhs));
}

TEST_CASE("companion expansion matches the pair form modulo 16")
{
    const std::size_t T = 24 * 100;
    const auto companion = q_expansion(overcubic_pair_companion(4), T, CoefficientDomain::modular(16));
    const auto base = q_expansion(overcubic_pair_form(), T, CoefficientDomain::modular(16));
    CHECK(congruent(companion, base, 16).holds);
}

TEST_CASE("unit factor is congruent to one")
{
    CHECK(check_fk_congruence(1, 2000));
    CHECK(check_fk_congruence(4, 2000));

    /* independent route for k = 1: the rescaled factor (q;q)^2/(q^2;q^2)
     * must have every non-constant coefficient even */
    const auto rescaled = eta_product(2, EtaExponents(2, {2, -1}), 60, CoefficientDomain::exact());
    CHECK(rescaled.coefficient(0) == 1);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(rescaled.coefficient(n) % 2 == 0);

    /* independent route for k = 4: the binomial reduction (q;q)^16 == (q^2;q^2)^8 mod 16 */
    const auto dom16 = CoefficientDomain::modular(16);
    CHECK(congruent(eta_power(1, 16, 200, dom16), eta_power(2, 8, 200, dom16), 16).holds);

    /* perturbing the numerator exponent breaks the congruence */
    const EtaQuotient mutant(384, EtaExponents::from_map(384, {{48, 17}, {96, -8}}));
    const auto expansion = q_expansion(mutant, 500, dom16);
    const auto one = TruncatedSeries::constant_one(dom16, 500);
    CHECK(!congruent(expansion, one, 16).holds);
}

TEST_CASE("phi-weighted total cusp order is symmetric under exponent reversal")
{
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<std::int64_t> pick_e(-4, 4);
    const std::int64_t level = 24;
    const auto divs = divisors(level);
    for (int i = 0; i < 25; ++i) {
        std::vector<std::int64_t> exps(divs.size());
        for (auto& e : exps) e = pick_e(rng);
        std::vector<std::int64_t> reversed(exps.rbegin(), exps.rend());

        const EtaQuotient eq(level, EtaExponents(level, exps));
        const EtaQuotient dual(level, EtaExponents(level, reversed));

        const auto total = [&](const EtaQuotient& f) {
            Rational sum(0);
            for (std::int64_t d : divs)
                sum += Rational(Integer(euler_phi(std::gcd(d, level / d)))) * cusp_order(f, d);
            sum.canonicalize();
            return sum;
        };
        CHECK(total(eq) == total(dual));
    }
}
