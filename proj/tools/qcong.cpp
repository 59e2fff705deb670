/* qcong: command-line front end for the congruence toolkit.
 *
 * Subcommands mirror job-file kinds; a job file plus flag overrides is the
 * canonical invocation. Exit codes: 0 proven/holds, 1 counterexample/fails,
 * 2 hypothesis failure, 3 usage or schema error. */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcong/cache.hpp"
#include "qcong/denscan.hpp"
#include "qcong/etaquot.hpp"
#include "qcong/raduveri.hpp"
#include "qcong/sequences.hpp"

using nlohmann::json;
using namespace qcong;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitUsage = 3;

struct JobError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_job_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw JobError("cannot open job file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw JobError("job file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw JobError("job file must hold a JSON object");
    return j;
}

/* Strict schema gate: every key must be known, every required key present. */
void validate_keys(const json& job, const std::string& kind,
                   const std::vector<std::string>& required,
                   const std::vector<std::string>& optional)
{
    for (const auto& [key, value] : job.items()) {
        (void)value;
        if (key == "kind") continue;
        bool known = false;
        for (const auto& k : required)
            if (k == key) known = true;
        for (const auto& k : optional)
            if (k == key) known = true;
        if (!known) throw JobError("unknown field '" + key + "' in " + kind + " job");
    }
    for (const auto& k : required)
        if (!job.contains(k)) throw JobError("missing field '" + k + "' in " + kind + " job");
    if (job.contains("kind") && job.at("kind").get<std::string>() != kind)
        throw JobError("job kind mismatch: expected " + kind);
}

std::int64_t get_int(const json& job, const std::string& key)
{
    const auto& v = job.at(key);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>()).get_si();
        } catch (const std::invalid_argument&) {
        }
    }
    throw JobError("field '" + key + "' must be an integer");
}

std::vector<std::int64_t> get_int_list(const json& job, const std::string& key)
{
    const auto& v = job.at(key);
    if (!v.is_array()) throw JobError("field '" + key + "' must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& item : v) {
        if (item.is_number_integer())
            out.push_back(item.get<std::int64_t>());
        else if (item.is_string())
            out.push_back(Integer(item.get<std::string>()).get_si());
        else
            throw JobError("field '" + key + "' must be an array of integers");
    }
    return out;
}

std::vector<std::int64_t> parse_int_csv(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

json rational_obj(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

void emit(const json& report, const std::string& out_path)
{
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw JobError("cannot write report to " + out_path);
        out << text;
    }
}

void emit_raw(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw JobError("cannot write report to " + out_path);
        out << text;
    }
}

/* sequence selector shared by coeff/family/density jobs */
SequenceSpec sequence_from_job(const json& job)
{
    const std::string name = job.at("sequence").get<std::string>();
    if (name == "custom") {
        if (!job.contains("level") || !job.contains("exponents"))
            throw JobError("custom sequence needs 'level' and 'exponents'");
        return SequenceSpec::custom(
            EtaExponents(get_int(job, "level"), get_int_list(job, "exponents")));
    }
    auto spec = SequenceSpec::from_name(name);
    if (!spec) throw JobError("unknown sequence '" + name + "'");
    return *spec;
}

CoefficientDomain domain_from_job(const json& job)
{
    if (!job.contains("modulus")) return CoefficientDomain::exact();
    const std::int64_t u = get_int(job, "modulus");
    if (u == 0) return CoefficientDomain::exact();
    if (u < 2) throw JobError("modulus must be 0 (exact) or >= 2");
    return CoefficientDomain::modular(static_cast<std::uint64_t>(u));
}

json sequence_obj(const SequenceSpec& spec)
{
    json j;
    j["sequence"] = spec.label();
    j["level"] = std::to_string(spec.exponents().level());
    json exps = json::array();
    for (const auto& [delta, e] : spec.exponents().entries()) exps.push_back(std::to_string(e));
    j["exponents"] = exps;
    return j;
}

/* Coefficient series via the persistent cache. */
TruncatedSeries cached_coefficients(const SequenceSpec& spec, std::size_t T, CoefficientDomain dom)
{
    const SeriesCache cache = SeriesCache::from_environment();
    if (auto hit = cache.get(spec.cache_key(), dom, T)) return std::move(*hit);
    TruncatedSeries series = coefficients(spec, T, dom);
    cache.put(spec.cache_key(), series);
    return series;
}

int run_verify(const json& job, const std::string& out_path)
{
    validate_keys(job, "radu-verify", {"m", "M", "N", "r", "t", "rprime", "modulus"},
                  {"extra_residues"});

    const std::int64_t m = get_int(job, "m");
    const std::int64_t M = get_int(job, "M");
    const std::int64_t N = get_int(job, "N");
    const std::int64_t t = get_int(job, "t");
    const std::int64_t modulus = get_int(job, "modulus");
    if (modulus < 2) throw JobError("modulus must be >= 2");

    std::vector<std::int64_t> extra;
    if (job.contains("extra_residues")) extra = get_int_list(job, "extra_residues");

    VerificationCertificate cert = [&] {
        try {
            CongruenceTuple tuple(m, M, N, EtaExponents(M, get_int_list(job, "r")), t);
            return verify(tuple, EtaExponents(N, get_int_list(job, "rprime")),
                          static_cast<std::uint64_t>(modulus), extra);
        } catch (const std::invalid_argument& e) {
            throw JobError(e.what());
        }
    }();

    emit_raw(certificate_to_json(cert), out_path);
    switch (cert.verdict) {
        case Verdict::proven: return kExitHolds;
        case Verdict::counterexample: return kExitFails;
        case Verdict::hypothesis_failed: return kExitHypothesis;
    }
    return kExitHypothesis;
}

int run_coefficients(const json& job, const std::string& out_path)
{
    validate_keys(job, "coefficients", {"sequence"},
                  {"level", "exponents", "modulus", "truncation", "indices"});
    if (!job.contains("truncation") && !job.contains("indices"))
        throw JobError("coefficients job needs 'truncation' or 'indices'");

    const SequenceSpec spec = sequence_from_job(job);
    const CoefficientDomain dom = domain_from_job(job);

    std::vector<std::int64_t> indices;
    std::size_t T = 0;
    if (job.contains("indices")) {
        indices = get_int_list(job, "indices");
        for (std::int64_t n : indices) {
            if (n < 0) throw JobError("indices must be non-negative");
            T = std::max(T, static_cast<std::size_t>(n));
        }
    }
    if (job.contains("truncation")) {
        const std::int64_t raw = get_int(job, "truncation");
        if (raw < 0) throw JobError("truncation must be non-negative");
        T = std::max(T, static_cast<std::size_t>(raw));
        if (indices.empty())
            for (std::int64_t n = 0; n <= raw; ++n) indices.push_back(n);
    }

    const TruncatedSeries series = cached_coefficients(spec, T, dom);

    json report = sequence_obj(spec);
    report["kind"] = "coefficients";
    report["domain"] = dom.label();
    json values = json::array();
    for (std::int64_t n : indices)
        values.push_back(json{{"n", std::to_string(n)},
                              {"value", series.coefficient(static_cast<std::size_t>(n)).get_str()}});
    report["values"] = values;
    emit(report, out_path);
    return kExitHolds;
}

int run_family(const json& job, const std::string& out_path)
{
    validate_keys(job, "family-check", {"sequence", "progression", "residue", "modulus", "n_max"},
                  {"level", "exponents"});

    const SequenceSpec spec = sequence_from_job(job);
    const std::int64_t m = get_int(job, "progression");
    const std::int64_t t = get_int(job, "residue");
    const std::int64_t u = get_int(job, "modulus");
    const std::int64_t n_max = get_int(job, "n_max");
    if (u < 2) throw JobError("modulus must be >= 2");
    if (n_max < 0) throw JobError("n_max must be non-negative");
    if (m < 1 || t < 0 || t >= m) throw JobError("need 0 <= residue < progression");

    const FamilyReport result =
        check_congruence_family(spec, m, t, static_cast<std::uint64_t>(u),
                                static_cast<std::size_t>(n_max));

    json report = sequence_obj(spec);
    report["kind"] = "family-check";
    report["progression"] = std::to_string(m);
    report["residue"] = std::to_string(t);
    report["modulus"] = std::to_string(u);
    report["n_max"] = std::to_string(n_max);
    report["holds"] = result.holds;
    if (result.first_failure)
        report["first_failure"] = std::to_string(*result.first_failure);
    emit(report, out_path);
    return result.holds ? kExitHolds : kExitFails;
}

EtaQuotient quotient_from_job(const json& job)
{
    if (job.contains("form")) {
        const std::string form = job.at("form").get<std::string>();
        const int k = job.contains("k") ? static_cast<int>(get_int(job, "k")) : 0;
        if (form == "ocp") return overcubic_pair_form();
        if (form == "oc") return overcubic_form();
        if (form == "ocp-companion") return overcubic_pair_companion(k);
        if (form == "oc-companion") return overcubic_companion(k);
        if (form == "unit-factor") return unit_congruence_factor(k);
        throw JobError("unknown eta-quotient form '" + form + "'");
    }
    if (!job.contains("level") || !job.contains("exponents"))
        throw JobError("eta-analyze needs 'form' or 'level'+'exponents'");
    const std::int64_t level = get_int(job, "level");
    return EtaQuotient(level, EtaExponents(level, get_int_list(job, "exponents")));
}

int run_eta(const json& job, const std::string& out_path)
{
    validate_keys(job, "eta-analyze", {}, {"form", "k", "level", "exponents"});

    const EtaQuotient eq = [&] {
        try {
            return quotient_from_job(job);
        } catch (const std::invalid_argument& e) {
            throw JobError(e.what());
        }
    }();

    const TransformationCheck transform = check_transformation_conditions(eq);
    const HolomorphyReport holo = is_holomorphic(eq);

    json report;
    report["kind"] = "eta-analyze";
    report["level"] = std::to_string(eq.level());
    json exps = json::array();
    for (const auto& [delta, e] : eq.exponents().entries())
        exps.push_back(json{{"delta", std::to_string(delta)}, {"exponent", std::to_string(e)}});
    report["exponents"] = exps;
    report["weight"] = rational_obj(eq.weight());
    report["leading_exponent"] = rational_obj(eq.leading_exponent());
    report["transformation"] =
        json{{"weighted_sum_divisible_24", transform.weighted_sum_divisible_24},
             {"dual_sum_divisible_24", transform.dual_sum_divisible_24},
             {"integral_weight", transform.integral_weight},
             {"all", transform.all()}};
    json orders = json::array();
    for (const auto& [d, order] : holo.orders)
        orders.push_back(json{{"d", std::to_string(d)}, {"order", rational_obj(order)}});
    report["cusp_orders"] = orders;
    report["holomorphic"] = holo.holomorphic;
    if (holo.offending_divisor)
        report["offending_divisor"] = std::to_string(*holo.offending_divisor);
    if (transform.integral_weight) report["character_core"] = character_core(eq).get_str();

    emit(report, out_path);
    return (transform.all() && holo.holomorphic) ? kExitHolds : kExitFails;
}

/* the 2-dissection of 1/(q;q)^4 (quartic) and the mod-49 binomial
 * reduction (q;q)^49 == (q^7;q^7)^7 */
int run_dissect(const json& job, const std::string& out_path)
{
    validate_keys(job, "dissection-check", {"truncation"}, {"identity"});
    const std::int64_t raw_T = get_int(job, "truncation");
    if (raw_T < 0) throw JobError("truncation must be non-negative");
    const std::size_t T = static_cast<std::size_t>(raw_T);
    std::string which = job.contains("identity") ? job.at("identity").get<std::string>() : "all";

    json identities = json::array();
    bool all_hold = true;

    const auto record = [&](const std::string& name, bool holds,
                            std::optional<std::size_t> mismatch) {
        json entry{{"name", name}, {"holds", holds}};
        if (mismatch) entry["first_mismatch"] = std::to_string(*mismatch);
        identities.push_back(entry);
        all_hold = all_hold && holds;
    };

    if (which == "quartic-2-dissection" || which == "all") {
        const auto dom = CoefficientDomain::exact();
        const TruncatedSeries lhs = eta_power(1, -4, T, dom);
        const TruncatedSeries even = eta_product(8, EtaExponents(8, {0, -14, 14, -4}), T, dom);
        const TruncatedSeries odd = eta_product(8, EtaExponents(8, {0, -10, 2, 4}), T, dom);
        const TruncatedSeries rhs = add(even, shift(scale(odd, 4), 1));
        const auto mismatch = first_difference(lhs, rhs);
        record("quartic-2-dissection", !mismatch.has_value(), mismatch);
    }
    if (which == "binomial-mod-49" || which == "all") {
        const auto dom = CoefficientDomain::modular(49);
        const auto result = congruent(eta_power(1, 49, T, dom), eta_power(7, 7, T, dom), 49);
        record("binomial-mod-49", result.holds, result.first_mismatch);
    }
    if (identities.empty()) throw JobError("unknown identity '" + which + "'");

    json report;
    report["kind"] = "dissection-check";
    report["truncation"] = std::to_string(T);
    report["identities"] = identities;
    emit(report, out_path);
    return all_hold ? kExitHolds : kExitFails;
}

int run_lin(const json& job, const std::string& out_path)
{
    validate_keys(job, "lin-identities", {"truncation"}, {});
    const std::int64_t raw_T = get_int(job, "truncation");
    if (raw_T < 0) throw JobError("truncation must be non-negative");

    const LinReport result = check_lin_identities(static_cast<std::size_t>(raw_T));

    const auto congruence_obj = [](const CongruenceReport& r) {
        json j{{"holds", r.holds}};
        if (r.first_mismatch) j["first_mismatch"] = std::to_string(*r.first_mismatch);
        return j;
    };

    json report;
    report["kind"] = "lin-identities";
    report["truncation"] = std::to_string(raw_T);
    report["progression7_mod81"] = congruence_obj(result.progression7);
    report["progression34_mod81"] = congruence_obj(result.progression34);
    json p61{{"holds", result.progression61.holds}};
    if (result.progression61.first_failure)
        p61["first_failure"] = std::to_string(*result.progression61.first_failure);
    report["progression61_mod243"] = p61;
    emit(report, out_path);
    return result.all_hold() ? kExitHolds : kExitFails;
}

int run_density(const json& job, const std::string& out_path, const std::string& csv_path)
{
    validate_keys(job, "density", {"sequence", "modulus", "x_max", "checkpoints"},
                  {"level", "exponents", "csv"});

    const SequenceSpec spec = sequence_from_job(job);
    const std::int64_t u = get_int(job, "modulus");
    const std::int64_t x_max = get_int(job, "x_max");
    if (u < 1) throw JobError("modulus must be >= 1");
    if (x_max < 1 || static_cast<std::size_t>(x_max) > kMaxScanRange)
        throw JobError("x_max out of range");

    std::vector<std::size_t> checkpoints;
    for (std::int64_t x : get_int_list(job, "checkpoints")) {
        if (x < 1) throw JobError("checkpoints must be positive");
        checkpoints.push_back(static_cast<std::size_t>(x));
    }

    const DensityTable table = [&] {
        try {
            return density_scan(spec, static_cast<std::uint64_t>(u),
                                static_cast<std::size_t>(x_max), checkpoints);
        } catch (const std::invalid_argument& e) {
            throw JobError(e.what());
        }
    }();

    json report = sequence_obj(spec);
    report["kind"] = "density";
    report["modulus"] = std::to_string(u);
    report["x_max"] = std::to_string(x_max);
    json cps = json::array();
    for (const auto& cp : table.checkpoints)
        cps.push_back(json{{"X", std::to_string(cp.x)},
                           {"count", std::to_string(cp.count)},
                           {"density", rational_obj(cp.density)}});
    report["checkpoints"] = cps;
    emit(report, out_path);

    std::string csv_target = csv_path;
    if (csv_target.empty() && job.contains("csv")) csv_target = job.at("csv").get<std::string>();
    if (csv_target == "-")
        std::cout << to_csv(table);
    else if (!csv_target.empty()) {
        std::ofstream out(csv_target, std::ios::trunc);
        if (!out) throw JobError("cannot write CSV to " + csv_target);
        out << to_csv(table);
    }
    return kExitHolds;
}

int run_cache(const std::string& action)
{
    const SeriesCache cache = SeriesCache::from_environment();
    if (action == "dir") {
        std::cout << cache.directory().string() << "\n";
        return kExitHolds;
    }
    if (action == "list") {
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(cache.directory(), ec)) {
            if (entry.path().extension() == ".qsc")
                std::cout << entry.path().filename().string() << "\n";
        }
        return kExitHolds;
    }
    if (action == "clear") {
        std::error_code ec;
        std::size_t removed = 0;
        for (const auto& entry : std::filesystem::directory_iterator(cache.directory(), ec)) {
            if (entry.path().extension() == ".qsc" && std::filesystem::remove(entry.path(), ec))
                ++removed;
        }
        std::cout << "removed " << removed << " cache entries\n";
        return kExitHolds;
    }
    throw JobError("unknown cache action '" + action + "' (use dir, list, or clear)");
}

/* merge order: job file, then explicit flags on top */
void set_if(json& job, const std::string& key, const std::optional<std::int64_t>& v)
{
    if (v) job[key] = *v;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-series congruence toolkit: verification certificates, eta-quotient "
                 "analysis, congruence families, and divisibility density scans"};
    app.require_subcommand(1);

    std::string job_path, out_path, csv_path;

    /* ---- verify ---- */
    auto* verify_cmd = app.add_subcommand("verify", "run a congruence verification");
    std::string preset_name, r_csv, rprime_csv, extra_csv;
    std::optional<std::int64_t> opt_m, opt_M, opt_N, opt_t, opt_u;
    verify_cmd->add_option("--preset", preset_name, "built-in tuple: thm1 or thm2");
    verify_cmd->add_option("--job", job_path, "job file (kind radu-verify)");
    verify_cmd->add_option("--m", opt_m, "progression modulus m");
    verify_cmd->add_option("--M", opt_M, "eta-product level M");
    verify_cmd->add_option("--N", opt_N, "group level N");
    verify_cmd->add_option("--r", r_csv, "exponents over divisors of M, comma-separated");
    verify_cmd->add_option("--t", opt_t, "target residue t");
    verify_cmd->add_option("--rprime", rprime_csv, "exponents over divisors of N, comma-separated");
    verify_cmd->add_option("--modulus", opt_u, "congruence modulus u");
    verify_cmd->add_option("--extra", extra_csv, "additional target residues, comma-separated");
    verify_cmd->add_option("--out", out_path, "write the certificate to this file");

    /* ---- coeff ---- */
    auto* coeff_cmd = app.add_subcommand("coeff", "compute sequence coefficients");
    std::string seq_name;
    std::optional<std::int64_t> opt_level, opt_trunc, opt_modulus;
    std::string exps_csv, indices_csv;
    coeff_cmd->add_option("--sequence", seq_name, "cubic, cubic-pair, overcubic, overcubic-pair, custom");
    coeff_cmd->add_option("--level", opt_level, "custom sequence level");
    coeff_cmd->add_option("--exponents", exps_csv, "custom exponents, comma-separated");
    coeff_cmd->add_option("--modulus", opt_modulus, "0 for exact, else compute mod u");
    coeff_cmd->add_option("--truncation", opt_trunc, "report all coefficients to this order");
    coeff_cmd->add_option("--n", indices_csv, "report these indices only, comma-separated");
    coeff_cmd->add_option("--job", job_path, "job file (kind coefficients)");
    coeff_cmd->add_option("--out", out_path, "write the report to this file");

    /* ---- family ---- */
    auto* family_cmd = app.add_subcommand("family", "check a congruence family");
    std::optional<std::int64_t> opt_prog, opt_res, opt_nmax;
    family_cmd->add_option("--sequence", seq_name, "sequence name or custom");
    family_cmd->add_option("--level", opt_level, "custom sequence level");
    family_cmd->add_option("--exponents", exps_csv, "custom exponents, comma-separated");
    family_cmd->add_option("--progression", opt_prog, "progression modulus m");
    family_cmd->add_option("--residue", opt_res, "progression residue t");
    family_cmd->add_option("--modulus", opt_modulus, "congruence modulus u");
    family_cmd->add_option("--n-max", opt_nmax, "check n = 0..n_max");
    family_cmd->add_option("--job", job_path, "job file (kind family-check)");
    family_cmd->add_option("--out", out_path, "write the report to this file");

    /* ---- eta ---- */
    auto* eta_cmd = app.add_subcommand("eta", "analyze an eta-quotient");
    std::string form_name;
    std::optional<std::int64_t> opt_k;
    eta_cmd->add_option("--form", form_name, "ocp, oc, ocp-companion, oc-companion, unit-factor");
    eta_cmd->add_option("--k", opt_k, "parameter k for the parametric forms");
    eta_cmd->add_option("--level", opt_level, "explicit level N");
    eta_cmd->add_option("--exponents", exps_csv, "exponents over divisors of N, comma-separated");
    eta_cmd->add_option("--job", job_path, "job file (kind eta-analyze)");
    eta_cmd->add_option("--out", out_path, "write the report to this file");

    /* ---- dissect ---- */
    auto* dissect_cmd = app.add_subcommand("dissect", "check the built-in series identities");
    std::string identity_name;
    dissect_cmd->add_option("--identity", identity_name,
                            "quartic-2-dissection, binomial-mod-49, or all");
    dissect_cmd->add_option("--truncation", opt_trunc, "comparison order");
    dissect_cmd->add_option("--job", job_path, "job file (kind dissection-check)");
    dissect_cmd->add_option("--out", out_path, "write the report to this file");

    /* ---- lin ---- */
    auto* lin_cmd = app.add_subcommand("lin", "desk-check the mod-81/243 identities");
    lin_cmd->add_option("--truncation", opt_trunc, "comparison order");
    lin_cmd->add_option("--job", job_path, "job file (kind lin-identities)");
    lin_cmd->add_option("--out", out_path, "write the report to this file");

    /* ---- density ---- */
    auto* density_cmd = app.add_subcommand("density", "divisibility density scan");
    std::optional<std::int64_t> opt_xmax;
    std::string checkpoints_csv;
    density_cmd->add_option("--sequence", seq_name, "sequence name or custom");
    density_cmd->add_option("--level", opt_level, "custom sequence level");
    density_cmd->add_option("--exponents", exps_csv, "custom exponents, comma-separated");
    density_cmd->add_option("--modulus", opt_modulus, "divisor to test");
    density_cmd->add_option("--x-max", opt_xmax, "scan 1..x_max");
    density_cmd->add_option("--checkpoints", checkpoints_csv, "report points, comma-separated");
    density_cmd->add_option("--csv", csv_path, "write the CSV table here ('-' for stdout)");
    density_cmd->add_option("--job", job_path, "job file (kind density)");
    density_cmd->add_option("--out", out_path, "write the JSON report to this file");

    /* ---- cache ---- */
    auto* cache_cmd = app.add_subcommand("cache", "inspect the coefficient cache");
    std::string cache_action;
    cache_cmd->add_option("action", cache_action, "dir, list, or clear")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        json job;
        if (!job_path.empty()) job = load_job_file(job_path);

        if (app.got_subcommand(verify_cmd)) {
            if (!preset_name.empty()) {
                const auto preset = verification_preset(preset_name);
                if (!preset) throw JobError("unknown preset '" + preset_name + "'");
                job["kind"] = "radu-verify";
                job["m"] = preset->tuple.m();
                job["M"] = preset->tuple.level_M();
                job["N"] = preset->tuple.level_N();
                job["r"] = preset->tuple.exponents().exponent_list();
                job["t"] = preset->tuple.t();
                job["rprime"] = preset->rprime.exponent_list();
                job["modulus"] = static_cast<std::int64_t>(preset->modulus);
                if (!preset->extra_residues.empty()) job["extra_residues"] = preset->extra_residues;
            }
            set_if(job, "m", opt_m);
            set_if(job, "M", opt_M);
            set_if(job, "N", opt_N);
            set_if(job, "t", opt_t);
            set_if(job, "modulus", opt_u);
            if (!r_csv.empty()) job["r"] = parse_int_csv(r_csv);
            if (!rprime_csv.empty()) job["rprime"] = parse_int_csv(rprime_csv);
            if (!extra_csv.empty()) job["extra_residues"] = parse_int_csv(extra_csv);
            return run_verify(job, out_path);
        }
        if (app.got_subcommand(coeff_cmd)) {
            if (!seq_name.empty()) job["sequence"] = seq_name;
            set_if(job, "level", opt_level);
            set_if(job, "modulus", opt_modulus);
            set_if(job, "truncation", opt_trunc);
            if (!exps_csv.empty()) job["exponents"] = parse_int_csv(exps_csv);
            if (!indices_csv.empty()) job["indices"] = parse_int_csv(indices_csv);
            return run_coefficients(job, out_path);
        }
        if (app.got_subcommand(family_cmd)) {
            if (!seq_name.empty()) job["sequence"] = seq_name;
            set_if(job, "level", opt_level);
            set_if(job, "progression", opt_prog);
            set_if(job, "residue", opt_res);
            set_if(job, "modulus", opt_modulus);
            set_if(job, "n_max", opt_nmax);
            if (!exps_csv.empty()) job["exponents"] = parse_int_csv(exps_csv);
            return run_family(job, out_path);
        }
        if (app.got_subcommand(eta_cmd)) {
            if (!form_name.empty()) job["form"] = form_name;
            set_if(job, "k", opt_k);
            set_if(job, "level", opt_level);
            if (!exps_csv.empty()) job["exponents"] = parse_int_csv(exps_csv);
            return run_eta(job, out_path);
        }
        if (app.got_subcommand(dissect_cmd)) {
            if (!identity_name.empty()) job["identity"] = identity_name;
            set_if(job, "truncation", opt_trunc);
            return run_dissect(job, out_path);
        }
        if (app.got_subcommand(lin_cmd)) {
            set_if(job, "truncation", opt_trunc);
            return run_lin(job, out_path);
        }
        if (app.got_subcommand(density_cmd)) {
            if (!seq_name.empty()) job["sequence"] = seq_name;
            set_if(job, "level", opt_level);
            set_if(job, "modulus", opt_modulus);
            set_if(job, "x_max", opt_xmax);
            if (!exps_csv.empty()) job["exponents"] = parse_int_csv(exps_csv);
            if (!checkpoints_csv.empty()) job["checkpoints"] = parse_int_csv(checkpoints_csv);
            return run_density(job, out_path, csv_path);
        }
        if (app.got_subcommand(cache_cmd)) {
            return run_cache(cache_action);
        }
    } catch (const JobError& e) {
        std::cerr << "qcong: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "qcong: malformed job: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qcong: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
