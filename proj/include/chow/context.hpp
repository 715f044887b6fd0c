#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "chow/errors.hpp"

namespace chow {

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

/// An ordered list of named variables with positive grading weights.
/// Weights follow the naming convention of the ambient graded rings:
/// a variable named c<i> has weight i, everything else weight 1
/// (hyperplane classes h, t, x, y, z, torus roots l1..ln, factor classes
/// xi1..xis). Two polynomials may combine arithmetically only when their
/// contexts agree (same names, same weights, same order).
class VariableContext {
public:
    static ContextPtr make(std::vector<std::string> names);
    static ContextPtr make(std::vector<std::string> names, std::vector<int> weights);

    int arity() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::string& name(int i) const { return names_.at(i); }
    int weight(int i) const { return weights_.at(i); }

    bool has(const std::string& name) const { return index_.count(name) != 0; }
    /// Index of a variable; throws UnknownVariable if absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const VariableContext& a, const VariableContext& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }

    std::string to_string() const;

    /// Default weight for a variable name: c<i> has weight i, else 1.
    static int inferred_weight(const std::string& name);

private:
    VariableContext(std::vector<std::string> names, std::vector<int> weights);

    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::unordered_map<std::string, int> index_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Convenience builder with inferred weights.
ContextPtr make_context(std::vector<std::string> names);

/// [front..., l1..ln] with all weights 1.
ContextPtr l_context(int n, std::vector<std::string> front = {});
/// [front..., c1..cn] with weight(ci) = i.
ContextPtr c_context(int n, std::vector<std::string> front = {});

} // namespace chow
