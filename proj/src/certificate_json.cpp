#include "qcong/raduveri.hpp"

#include <json.hpp>

namespace qcong {

namespace {

using nlohmann::json;

json int_str(const Integer& v) { return v.get_str(); }
json int_str(std::int64_t v) { return std::to_string(v); }
json int_str(std::uint64_t v) { return std::to_string(v); }

json rational_obj(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json exponents_obj(const EtaExponents& r)
{
    json entries = json::array();
    for (const auto& [delta, e] : r.entries())
        entries.push_back(json{{"delta", int_str(delta)}, {"exponent", int_str(e)}});
    return json{{"level", int_str(r.level())}, {"entries", entries}};
}

Integer parse_int(const json& j)
{
    return Integer(j.get<std::string>());
}

std::int64_t parse_i64(const json& j)
{
    return parse_int(j).get_si();
}

Rational parse_rational(const json& j)
{
    return make_rational(parse_int(j.at("num")), parse_int(j.at("den")));
}

EtaExponents parse_exponents(const json& j)
{
    const std::int64_t level = parse_i64(j.at("level"));
    std::vector<std::int64_t> exps;
    for (const auto& entry : j.at("entries")) exps.push_back(parse_i64(entry.at("exponent")));
    return EtaExponents(level, std::move(exps));
}

Verdict parse_verdict(const std::string& s)
{
    if (s == "proven") return Verdict::proven;
    if (s == "counterexample") return Verdict::counterexample;
    if (s == "hypothesis-failed") return Verdict::hypothesis_failed;
    throw std::invalid_argument("certificate: unknown verdict '" + s + "'");
}

json coefficient_check_obj(const CoefficientCheck& c)
{
    return json{{"t_prime", int_str(c.t_prime)},
                {"n", int_str(c.n)},
                {"index", int_str(c.index)},
                {"residue", int_str(c.residue)}};
}

CoefficientCheck parse_coefficient_check(const json& j)
{
    CoefficientCheck c;
    c.t_prime = parse_i64(j.at("t_prime"));
    c.n = parse_i64(j.at("n"));
    c.index = parse_i64(j.at("index"));
    c.residue = static_cast<std::uint64_t>(parse_int(j.at("residue")).get_ui());
    return c;
}

}  // namespace

std::string certificate_to_json(const VerificationCertificate& cert)
{
    json j;
    j["kind"] = "radu-certificate";
    j["tuple"] = json{{"m", int_str(cert.tuple.m())},
                      {"M", int_str(cert.tuple.level_M())},
                      {"N", int_str(cert.tuple.level_N())},
                      {"r", exponents_obj(cert.tuple.exponents())},
                      {"t", int_str(cert.tuple.t())},
                      {"k", int_str(cert.tuple.k())},
                      {"s", int_str(cert.tuple.two_adic_exponent())},
                      {"j", int_str(cert.tuple.odd_part())}};
    j["rprime"] = exponents_obj(cert.rprime);
    j["modulus"] = int_str(cert.modulus);

    j["delta_star"] = json{{"primes_of_m_divide_N", cert.delta_star.primes_of_m_divide_N},
                           {"active_deltas_divide_mN", cert.delta_star.active_deltas_divide_mN},
                           {"weighted_sum_divisible_24", cert.delta_star.weighted_sum_divisible_24},
                           {"exponent_sum_divisible_8", cert.delta_star.exponent_sum_divisible_8},
                           {"progression_gcd_divides_N", cert.delta_star.progression_gcd_divides_N},
                           {"even_m_condition", cert.delta_star.even_m_condition},
                           {"all", cert.delta_star.all()}};

    j["coset_reps_complete"] = cert.coset_reps_complete;
    if (!cert.coset_reps_note.empty()) j["coset_reps_note"] = cert.coset_reps_note;

    json targets = json::array();
    for (std::int64_t t : cert.target_residues) targets.push_back(int_str(t));
    j["target_residues"] = targets;

    json pset = json::array();
    for (std::int64_t tp : cert.progression_set) pset.push_back(int_str(tp));
    j["p_set"] = pset;
    j["t_min"] = int_str(cert.t_min);

    json checks = json::array();
    for (const auto& check : cert.coset_checks) {
        checks.push_back(json{{"gamma",
                               json{{"a", int_str(check.gamma.a)},
                                    {"b", int_str(check.gamma.b)},
                                    {"c", int_str(check.gamma.c)},
                                    {"d", int_str(check.gamma.d)}}},
                              {"p_mr", rational_obj(check.lower_order)},
                              {"p_star", rational_obj(check.correction_order)},
                              {"sum", rational_obj(check.sum)},
                              {"nonnegative", check.nonnegative}});
    }
    j["coset_checks"] = checks;

    j["nu"] = rational_obj(cert.nu);
    j["nu_floor"] = int_str(cert.nu_floor);

    json coeffs = json::array();
    for (const auto& check : cert.coefficient_checks) coeffs.push_back(coefficient_check_obj(check));
    j["coefficient_checks"] = coeffs;
    if (cert.witness) j["witness"] = coefficient_check_obj(*cert.witness);

    j["verdict"] = to_string(cert.verdict);
    return j.dump(2) + "\n";
}

VerificationCertificate certificate_from_json(const std::string& text)
{
    const json j = json::parse(text);
    if (j.at("kind").get<std::string>() != "radu-certificate")
        throw std::invalid_argument("certificate: unexpected document kind");

    const json& jt = j.at("tuple");
    CongruenceTuple tuple(parse_i64(jt.at("m")), parse_i64(jt.at("M")), parse_i64(jt.at("N")),
                          parse_exponents(jt.at("r")), parse_i64(jt.at("t")));

    VerificationCertificate cert{std::move(tuple), parse_exponents(j.at("rprime")),
                                 static_cast<std::uint64_t>(parse_int(j.at("modulus")).get_ui())};

    const json& ds = j.at("delta_star");
    cert.delta_star.primes_of_m_divide_N = ds.at("primes_of_m_divide_N").get<bool>();
    cert.delta_star.active_deltas_divide_mN = ds.at("active_deltas_divide_mN").get<bool>();
    cert.delta_star.weighted_sum_divisible_24 = ds.at("weighted_sum_divisible_24").get<bool>();
    cert.delta_star.exponent_sum_divisible_8 = ds.at("exponent_sum_divisible_8").get<bool>();
    cert.delta_star.progression_gcd_divides_N = ds.at("progression_gcd_divides_N").get<bool>();
    cert.delta_star.even_m_condition = ds.at("even_m_condition").get<bool>();

    cert.coset_reps_complete = j.at("coset_reps_complete").get<bool>();
    if (j.contains("coset_reps_note")) cert.coset_reps_note = j.at("coset_reps_note").get<std::string>();

    for (const auto& t : j.at("target_residues")) cert.target_residues.push_back(parse_i64(t));
    for (const auto& tp : j.at("p_set")) cert.progression_set.push_back(parse_i64(tp));
    cert.t_min = parse_i64(j.at("t_min"));

    for (const auto& check : j.at("coset_checks")) {
        CosetCheck c;
        const json& g = check.at("gamma");
        c.gamma = {parse_i64(g.at("a")), parse_i64(g.at("b")), parse_i64(g.at("c")),
                   parse_i64(g.at("d"))};
        c.lower_order = parse_rational(check.at("p_mr"));
        c.correction_order = parse_rational(check.at("p_star"));
        c.sum = parse_rational(check.at("sum"));
        c.nonnegative = check.at("nonnegative").get<bool>();
        cert.coset_checks.push_back(std::move(c));
    }

    cert.nu = parse_rational(j.at("nu"));
    cert.nu_floor = parse_i64(j.at("nu_floor"));

    for (const auto& check : j.at("coefficient_checks"))
        cert.coefficient_checks.push_back(parse_coefficient_check(check));
    if (j.contains("witness")) cert.witness = parse_coefficient_check(j.at("witness"));

    cert.verdict = parse_verdict(j.at("verdict").get<std::string>());
    return cert;
}

}  // namespace qcong
