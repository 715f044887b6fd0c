#include "chow/render.hpp"

#include <cctype>
#include <sstream>

namespace chow {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "latex") return Format::latex;
    throw Error("unknown format '" + s + "' (expected text, json or latex)");
}

namespace {

std::string latex_name(const std::string& name) {
    // split trailing digits into a subscript; map xi to the greek letter
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    std::string stem = name.substr(0, i), sub = name.substr(i);
    if (stem == "xi") stem = "\\xi";
    if (sub.empty()) return stem;
    return stem + "_{" + sub + "}";
}

} // namespace

std::string latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const auto& ctx = p.context();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        std::string cs = coeff_str(c);
        bool neg = coeff_is_negative(c);
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < ctx->arity(); ++i) {
            if (k.exps[i] == 0) continue;
            if (any) mono << " ";
            any = true;
            mono << latex_name(ctx->name(i));
            if (k.exps[i] > 1) mono << "^{" << k.exps[i] << "}";
        }
        if (!any) {
            os << cs;
        } else if (cs == "1") {
            os << mono.str();
        } else {
            os << cs << " " << mono.str();
        }
    }
    return os.str();
}

} // namespace chow
