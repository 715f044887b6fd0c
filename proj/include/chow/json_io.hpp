#pragma once

// JSON forms (schema_version 1) for polynomials, presentations, membership
// certificates and verification reports. These are the stable machine
// interfaces of the CLI; the field layout is documented in the README.

#include <json.hpp>

#include "chow/membership.hpp"
#include "chow/polynomial.hpp"
#include "chow/presentation.hpp"

namespace chow {

inline constexpr int kSchemaVersion = 1;

nlohmann::json context_to_json(const ContextPtr& ctx);
ContextPtr context_from_json(const nlohmann::json& j);

template <typename C>
nlohmann::json polynomial_to_json(const PolynomialT<C>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"coeff", coeff_str(c)}, {"exps", k.exps}});
    return {{"schema_version", kSchemaVersion},
            {"context", context_to_json(p.context())},
            {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const MembershipCertificate& cert);
nlohmann::json presentation_to_json(const Presentation& pres);

} // namespace chow
