#include "chow/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "chow/errors.hpp"

namespace chow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error("partition must have at least one part");
    for (int p : parts_)
        if (p < 1) throw Error("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end());
    d_ = 0;
    for (int p : parts_) d_ += p;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw Error("bad partition entry '" + item + "' in '" + text + "'");
        }
    }
    if (parts.empty()) throw Error("empty partition string");
    return Partition(std::move(parts));
}

std::map<int, int> Partition::frequencies() const {
    std::map<int, int> f;
    for (int p : parts_) ++f[p];
    return f;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "}";
    return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 1) throw Error("partitions_of requires d >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(d, d, acc, out);
    return out;
}

std::vector<ExpVec> vectors_with_support(const Partition& mu, int n) {
    std::vector<ExpVec> out;
    if (mu.size() > n) return out;  // nothing to place; callers decide meaning
    ExpVec v(n, 0);
    std::copy(mu.parts().begin(), mu.parts().end(), v.begin() + (n - mu.size()));
    // v starts lexicographically smallest (zeros first, parts ascending)
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<ExpVec> vectors_of_weight(int q, int n) {
    if (n < 1) throw Error("vectors_of_weight requires n >= 1");
    std::vector<ExpVec> out;
    ExpVec v(n, 0);
    // lexicographic enumeration of compositions of q into n parts
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            v[pos] = rest;
            out.push_back(v);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            v[pos] = e;
            self(self, pos + 1, rest - e);
        }
    };
    rec(rec, 0, q);
    return out;
}

Int product_map_degree(const Partition& mu) {
    Int deg = 1;
    for (const auto& [q, count] : mu.frequencies())
        for (int i = 2; i <= count; ++i) deg *= i;
    return deg;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= (n - k + i);
        den *= i;
    }
    return num / den;
}

Int dim_W(int n, int d) {
    if (n < 1 || d < 1) throw Error("dim_W requires n >= 1 and d >= 1");
    return binomial(n + d - 1, d);
}

} // namespace chow
