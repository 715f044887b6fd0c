#pragma once

// Partitions of d, the exponent-vector sets N^n(mu) and N^n(q), product-map
// degrees and dim W_d. Enumeration orders are deterministic (lexicographic)
// so downstream sums and reports are reproducible bit for bit.

#include <map>
#include <string>
#include <vector>

#include "chow/numeric.hpp"

namespace chow {

using ExpVec = std::vector<int>;

/// Unordered partition of a positive integer, stored with parts ascending.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    /// Parse a comma-separated part list, e.g. "1,2".
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(parts_.size()); }  // s
    /// Frequency map q -> mu(q).
    std::map<int, int> frequencies() const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;  // ascending
    int d_;
};

/// All partitions of d, each exactly once, largest-part-first order
/// ({4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}). d must be >= 1.
std::vector<Partition> partitions_of(int d);

/// N^n(mu): vectors in N^n whose multiset of nonzero entries equals mu,
/// in lexicographic order. Empty (not an error) when mu has more parts than n.
std::vector<ExpVec> vectors_with_support(const Partition& mu, int n);

/// N^n(q): vectors in N^n with coordinate sum q, in lexicographic order.
std::vector<ExpVec> vectors_of_weight(int q, int n);

/// Degree of the product map for mu: product over q of mu(q)!.
Int product_map_degree(const Partition& mu);

/// dim W_d = binomial(n+d-1, d), the number of degree-d monomials in n variables.
Int dim_W(int n, int d);

Int binomial(int n, int k);

} // namespace chow
