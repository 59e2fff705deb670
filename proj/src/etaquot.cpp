#include "qcong/etaquot.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace qcong {

EtaQuotient::EtaQuotient(std::int64_t level, EtaExponents exponents)
    : level_(level), exponents_(std::move(exponents))
{
    if (exponents_.level() != level)
        throw std::invalid_argument("EtaQuotient: exponents must be indexed by the divisors of the level");
}

Rational EtaQuotient::weight() const
{
    return make_rational(Integer(exponents_.exponent_sum()), Integer(2));
}

Rational EtaQuotient::leading_exponent() const
{
    return make_rational(Integer(exponents_.weighted_sum()), Integer(24));
}

EtaQuotient mul(const EtaQuotient& f, const EtaQuotient& g)
{
    if (f.level() != g.level()) throw std::invalid_argument("mul: eta-quotient levels differ");
    std::vector<std::int64_t> exps;
    const auto& fe = f.exponents().entries();
    const auto& ge = g.exponents().entries();
    exps.reserve(fe.size());
    for (std::size_t i = 0; i < fe.size(); ++i) exps.push_back(fe[i].second + ge[i].second);
    return EtaQuotient(f.level(), EtaExponents(f.level(), std::move(exps)));
}

EtaQuotient lifted(const EtaQuotient& f, std::int64_t new_level)
{
    return EtaQuotient(new_level, f.exponents().lifted(new_level));
}

TransformationCheck check_transformation_conditions(const EtaQuotient& f)
{
    TransformationCheck check;
    check.weighted_sum_divisible_24 = mod_canonical(f.exponents().weighted_sum(), 24) == 0;

    std::int64_t dual = 0;
    for (const auto& [delta, e] : f.exponents().entries()) dual += (f.level() / delta) * e;
    check.dual_sum_divisible_24 = mod_canonical(dual, 24) == 0;

    check.integral_weight = f.exponents().exponent_sum() % 2 == 0;
    return check;
}

Rational cusp_order(const EtaQuotient& f, std::int64_t d)
{
    if (d < 1 || f.level() % d != 0)
        throw std::invalid_argument("cusp_order: d must divide the level");
    const std::int64_t N = f.level();
    const std::int64_t gd = std::gcd(d, N / d);
    Rational order(0);
    for (const auto& [delta, e] : f.exponents().entries()) {
        if (e == 0) continue;
        const std::int64_t g = std::gcd(d, delta);
        order += Rational(Integer(N) * g * g * e, Integer(24) * gd * d * delta);
    }
    order.canonicalize();
    return order;
}

HolomorphyReport is_holomorphic(const EtaQuotient& f)
{
    HolomorphyReport report;
    report.holomorphic = true;
    for (std::int64_t d : divisors(f.level())) {
        Rational order = cusp_order(f, d);
        if (order < 0 && report.holomorphic) {
            report.holomorphic = false;
            report.offending_divisor = d;
        }
        report.orders.emplace_back(d, std::move(order));
    }
    return report;
}

Integer character_core(const EtaQuotient& f)
{
    const Rational weight = f.weight();
    if (weight.get_den() != 1)
        throw std::invalid_argument("character: weight is not integral");

    /* v_p(prod delta^{r_delta}) = sum r_delta v_p(delta); only parities
     * survive in the square class. */
    Integer core(1);
    for (std::int64_t p : prime_divisors(f.level())) {
        std::int64_t vp = 0;
        for (const auto& [delta, e] : f.exponents().entries()) {
            std::int64_t rest = delta;
            while (rest % p == 0) {
                rest /= p;
                vp += e;
            }
        }
        if (mod_canonical(vp, 2) == 1) core *= p;
    }
    if (mpz_odd_p(weight.get_num_mpz_t())) core = -core;
    return core;
}

int character(const EtaQuotient& f, const Integer& d)
{
    if (gcd_abs(d, Integer(f.level())) != 1)
        throw std::invalid_argument("character: d must be coprime to the level");
    return kronecker(character_core(f), d);
}

EtaQuotient overcubic_pair_form()
{
    return EtaQuotient(384, EtaExponents::from_map(384, {{24, -4}, {48, -2}, {96, 2}}));
}

EtaQuotient overcubic_form()
{
    return EtaQuotient(768, EtaExponents::from_map(768, {{24, -2}, {48, -1}, {96, 1}}));
}

EtaQuotient unit_congruence_factor(int k)
{
    if (k < 1) throw std::invalid_argument("unit_congruence_factor: k must be >= 1");
    const std::int64_t two_k = std::int64_t(1) << k;
    return EtaQuotient(384, EtaExponents::from_map(384, {{48, two_k}, {96, -(two_k / 2)}}));
}

EtaQuotient overcubic_pair_companion(int k)
{
    if (k < 2) throw std::invalid_argument("overcubic_pair_companion: k must be >= 2");
    const std::int64_t two_k = std::int64_t(1) << k;
    return EtaQuotient(
        384, EtaExponents::from_map(384, {{24, -4}, {48, two_k - 2}, {96, -(two_k / 2 - 2)}}));
}

EtaQuotient overcubic_companion(int k)
{
    if (k < 2) throw std::invalid_argument("overcubic_companion: k must be >= 2");
    const std::int64_t two_k = std::int64_t(1) << k;
    return EtaQuotient(
        768, EtaExponents::from_map(768, {{24, -2}, {48, two_k - 1}, {96, -(two_k / 2 - 1)}}));
}

TruncatedSeries q_expansion(const EtaQuotient& f, std::size_t truncation, CoefficientDomain dom)
{
    const Rational lead = f.leading_exponent();
    if (lead.get_den() != 1 || lead < 0)
        throw std::invalid_argument("q_expansion: leading exponent is fractional or negative");
    const std::size_t h = static_cast<std::size_t>(lead.get_num().get_ui());

    std::int64_t g = 0;
    for (const auto& [delta, e] : f.exponents().entries())
        if (e != 0) g = std::gcd(g, delta);
    if (g == 0) {
        /* empty product: the constant function 1 */
        return TruncatedSeries::constant_one(dom, truncation);
    }

    TruncatedSeries out(dom, truncation);
    if (h > truncation) return out;

    /* Work in the variable q^g; indices map back as h + g*n. g divides
     * every active delta and hence the level. */
    std::map<std::int64_t, std::int64_t> rescaled;
    for (const auto& [delta, e] : f.exponents().entries())
        if (e != 0) rescaled[delta / g] = e;
    const EtaExponents exps = EtaExponents::from_map(f.level() / g, rescaled);

    const std::size_t inner_T = (truncation - h) / static_cast<std::size_t>(g);
    const TruncatedSeries inner = eta_product(exps.level(), exps, inner_T, dom);
    for (std::size_t n = 0; n <= inner_T; ++n) {
        const std::size_t idx = h + static_cast<std::size_t>(g) * n;
        if (dom.is_exact())
            out.exact_data()[idx] = inner.exact_data()[n];
        else
            out.mod_data()[idx] = inner.mod_data()[n];
    }
    return out;
}

bool check_fk_congruence(int k, std::size_t truncation)
{
    if (k < 1) throw std::invalid_argument("check_fk_congruence: k must be >= 1");
    const std::uint64_t u = std::uint64_t(1) << k;
    const TruncatedSeries expansion =
        q_expansion(unit_congruence_factor(k), truncation, CoefficientDomain::modular(u));
    const TruncatedSeries one = TruncatedSeries::constant_one(CoefficientDomain::modular(u), truncation);
    return congruent(expansion, one, u).holds;
}

}  // namespace qcong
