#include "chow/context.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace chow {

VariableContext::VariableContext(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
        throw Error("context: names/weights size mismatch");
    std::unordered_set<std::string> seen;
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty()) throw Error("context: empty variable name");
        if (!seen.insert(names_[i]).second)
            throw Error("context: duplicate variable '" + names_[i] + "'");
        if (weights_[i] < 1)
            throw Error("context: weight of '" + names_[i] + "' must be >= 1");
        index_[names_[i]] = i;
    }
}

ContextPtr VariableContext::make(std::vector<std::string> names, std::vector<int> weights) {
    return ContextPtr(new VariableContext(std::move(names), std::move(weights)));
}

ContextPtr VariableContext::make(std::vector<std::string> names) {
    std::vector<int> weights;
    weights.reserve(names.size());
    for (const auto& n : names) weights.push_back(inferred_weight(n));
    return make(std::move(names), std::move(weights));
}

int VariableContext::inferred_weight(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'c') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) { digits = false; break; }
        if (digits) return std::stoi(name.substr(1));
    }
    return 1;
}

int VariableContext::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownVariable("unknown variable '" + name + "'");
    return it->second;
}

std::string VariableContext::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < arity(); ++i) {
        if (i) os << ", ";
        os << names_[i];
        if (weights_[i] != 1) os << ":" << weights_[i];
    }
    os << "]";
    return os.str();
}

ContextPtr make_context(std::vector<std::string> names) {
    return VariableContext::make(std::move(names));
}

ContextPtr l_context(int n, std::vector<std::string> front) {
    auto names = std::move(front);
    for (int i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
    return VariableContext::make(std::move(names));
}

ContextPtr c_context(int n, std::vector<std::string> front) {
    auto names = std::move(front);
    for (int i = 1; i <= n; ++i) names.push_back("c" + std::to_string(i));
    return VariableContext::make(std::move(names));
}

} // namespace chow
