#include "chow/json_io.hpp"

namespace chow {

using nlohmann::json;

json context_to_json(const ContextPtr& ctx) {
    return {{"names", ctx->names()}, {"weights", ctx->weights()}};
}

ContextPtr context_from_json(const json& j) {
    return VariableContext::make(j.at("names").get<std::vector<std::string>>(),
                                 j.at("weights").get<std::vector<int>>());
}

Polynomial polynomial_from_json(const json& j) {
    ContextPtr ctx = context_from_json(j.at("context"));
    Polynomial p = Polynomial::zero(ctx);
    for (const auto& t : j.at("terms")) {
        Int c(t.at("coeff").get<std::string>());
        p.add_term(t.at("exps").get<Exps>(), c);
    }
    return p;
}

json certificate_to_json(const MembershipCertificate& cert) {
    json cofactors = json::array();
    for (const auto& c : cert.cofactors) cofactors.push_back(c.str());
    json j = {{"schema_version", kSchemaVersion},
              {"verdict", cert.verdict()},
              {"ring", cert.ring.name()},
              {"degree", cert.degree}};
    if (cert.member) {
        j["cofactors"] = std::move(cofactors);
    } else {
        j["rank"] = cert.rank;
        j["augmented_rank"] = cert.augmented_rank;
        j["failure"] = cert.failure == SolveFailure::divisibility ? "divisibility"
                                                                  : "rank_increase";
    }
    return j;
}

json presentation_to_json(const Presentation& pres) {
    json relations = json::array();
    for (std::size_t i = 0; i < pres.relations.size(); ++i)
        relations.push_back({{"name", pres.relation_names[i]},
                             {"text", pres.relations[i].str()},
                             {"poly", polynomial_to_json(pres.relations[i])}});
    return {{"schema_version", kSchemaVersion},
            {"n", pres.n},
            {"d", pres.d},
            {"generators", pres.generator_names},
            {"relations", std::move(relations)},
            {"provenance", pres.provenance}};
}

} // namespace chow
