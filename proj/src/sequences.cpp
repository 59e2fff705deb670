#include "qcong/sequences.hpp"

#include <stdexcept>

namespace qcong {

SequenceSpec::SequenceSpec(SequenceName name, EtaExponents exponents)
    : name_(name), exponents_(std::move(exponents))
{
}

SequenceSpec SequenceSpec::cubic()
{
    return SequenceSpec(SequenceName::cubic, EtaExponents(2, {-1, -1}));
}

SequenceSpec SequenceSpec::cubic_pair()
{
    return SequenceSpec(SequenceName::cubic_pair, EtaExponents(2, {-2, -2}));
}

SequenceSpec SequenceSpec::overcubic()
{
    return SequenceSpec(SequenceName::overcubic, EtaExponents(4, {-2, -1, 1}));
}

SequenceSpec SequenceSpec::overcubic_pair()
{
    return SequenceSpec(SequenceName::overcubic_pair, EtaExponents(4, {-4, -2, 2}));
}

SequenceSpec SequenceSpec::custom(EtaExponents exponents)
{
    return SequenceSpec(SequenceName::custom, std::move(exponents));
}

std::optional<SequenceSpec> SequenceSpec::from_name(std::string_view name)
{
    if (name == "cubic") return cubic();
    if (name == "cubic-pair") return cubic_pair();
    if (name == "overcubic") return overcubic();
    if (name == "overcubic-pair") return overcubic_pair();
    return std::nullopt;
}

std::string SequenceSpec::label() const
{
    switch (name_) {
        case SequenceName::cubic: return "cubic";
        case SequenceName::cubic_pair: return "cubic-pair";
        case SequenceName::overcubic: return "overcubic";
        case SequenceName::overcubic_pair: return "overcubic-pair";
        case SequenceName::custom: break;
    }
    return "custom";
}

std::string SequenceSpec::cache_key() const
{
    std::string key = "eta:M=" + std::to_string(exponents_.level()) + ";r=";
    bool first = true;
    for (const auto& [delta, e] : exponents_.entries()) {
        if (!first) key += ',';
        key += std::to_string(e);
        first = false;
    }
    return key;
}

TruncatedSeries coefficients(const SequenceSpec& spec, std::size_t truncation, CoefficientDomain dom)
{
    return eta_product(spec.exponents().level(), spec.exponents(), truncation, dom);
}

FamilyReport check_congruence_family(const SequenceSpec& spec, std::int64_t m, std::int64_t t,
                                     std::uint64_t u, std::size_t n_max)
{
    if (m < 1 || t < 0 || t >= m) throw std::invalid_argument("check_congruence_family: need 0 <= t < m");
    if (u < 2) throw std::invalid_argument("check_congruence_family: modulus must be >= 2");
    const std::size_t T = static_cast<std::size_t>(m) * n_max + static_cast<std::size_t>(t);
    const TruncatedSeries series = coefficients(spec, T, CoefficientDomain::modular(u));
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (series.mod_data()[static_cast<std::size_t>(m) * n + static_cast<std::size_t>(t)] != 0)
            return {false, n};
    }
    return {true, std::nullopt};
}

LinReport check_lin_identities(std::size_t truncation)
{
    LinReport report;

    const SequenceSpec pair = SequenceSpec::cubic_pair();
    const CoefficientDomain mod81 = CoefficientDomain::modular(81);

    const std::size_t pair_order = 81 * truncation + 34;
    const TruncatedSeries b81 = coefficients(pair, pair_order, mod81);

    const TruncatedSeries lhs7 = extract_ap(b81, 81, 7);
    const TruncatedSeries rhs7 =
        scale(eta_product(6, EtaExponents(6, {0, 1, 2, -1}), truncation, mod81), 9);
    report.progression7 = congruent(lhs7, rhs7, 81);

    const TruncatedSeries lhs34 = extract_ap(b81, 81, 34);
    const TruncatedSeries rhs34 =
        scale(eta_product(6, EtaExponents(6, {1, 0, -1, 2}), truncation, mod81), 36);
    report.progression34 = congruent(lhs34, rhs34, 81);

    report.progression61 = check_congruence_family(pair, 81, 61, 243, truncation);

    return report;
}

}  // namespace qcong
