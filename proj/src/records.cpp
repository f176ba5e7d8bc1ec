#include "optb/records.hpp"

#include "optb/errors.hpp"

namespace optb {

using nlohmann::json;

json to_json(const GofVerdict& v) {
    json j{{"count", v.count}, {"case", gof_case_name(v.case_tag)}};
    if (v.witness)
        j["witness"] = {{"p", v.witness->p}, {"q", v.witness->q}, {"beta", v.witness->beta}};
    return j;
}

json to_json(const SurgeryDescription& d) {
    return json{{"r", d.r}, {"s", d.s}, {"p", d.p}, {"q", d.q}};
}

json to_json(const AbelianGroup& g) {
    json j{{"group", g.str()}, {"free_rank", g.free_rank()}, {"torsion", g.torsion()}};
    if (auto o = g.order()) j["order"] = *o;
    else j["order"] = "inf";
    return j;
}

json to_json(const OptbVerdict& v) {
    json j{{"verdict", v.yes ? "YES" : "NO"},
           {"reason", reason_name(v.reason)},
           {"gof", to_json(v.gof)},
           {"outside_hypotheses", v.outside_hypotheses}};
    json surgeries = json::array();
    for (const auto& s : v.surgeries) surgeries.push_back(to_json(s));
    j["surgeries"] = surgeries;
    if (v.congruence_consistent) j["congruence_consistent"] = *v.congruence_consistent;
    return j;
}

json to_json(const ScanRecord& r) {
    json j = to_json(r.verdict);
    j["m"] = r.lens.m;
    j["n"] = r.lens.n;
    if (r.congruence_check) j["congruence_check"] = *r.congruence_check;
    if (r.bullets_check) j["bullets_check"] = *r.bullets_check;
    return j;
}

ScanRecord scan_record_from_json(const json& j) {
    ScanRecord r;
    r.lens = make_lens(j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>());
    r.verdict.yes = j.at("verdict").get<std::string>() == "YES";
    const json& gof = j.at("gof");
    r.verdict.gof.count = gof.at("count").get<int>();
    std::string case_name = gof.at("case").get<std::string>();
    for (auto c : {GofCase::B01, GofCase::Alpha1Special, GofCase::FourOne, GofCase::AlphaOneFamily,
                   GofCase::Diophantine1, GofCase::Diophantine2, GofCase::None})
        if (gof_case_name(c) == case_name) r.verdict.gof.case_tag = c;
    if (gof.contains("witness"))
        r.verdict.gof.witness = GofWitness{gof["witness"].at("p").get<std::int64_t>(),
                                           gof["witness"].at("q").get<std::int64_t>(),
                                           gof["witness"].at("beta").get<std::int64_t>()};
    std::string reason = j.at("reason").get<std::string>();
    for (auto rs : {OptbReason::HasGofKnot, OptbReason::TrefoilSurgery, OptbReason::NoCertificate})
        if (reason_name(rs) == reason) r.verdict.reason = rs;
    for (const json& s : j.at("surgeries"))
        r.verdict.surgeries.push_back({s.at("r").get<std::int64_t>(), s.at("s").get<std::int64_t>(),
                                       s.at("p").get<std::int64_t>(),
                                       s.at("q").get<std::int64_t>()});
    r.verdict.outside_hypotheses = j.at("outside_hypotheses").get<bool>();
    if (j.contains("congruence_consistent"))
        r.verdict.congruence_consistent = j["congruence_consistent"].get<bool>();
    if (j.contains("congruence_check")) r.congruence_check = j["congruence_check"].get<bool>();
    if (j.contains("bullets_check")) r.bullets_check = j["bullets_check"].get<bool>();
    return r;
}

} // namespace optb
