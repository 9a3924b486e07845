#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Integer partition with parts stored weakly decreasing. Part indices used
// throughout the library are 1-based and refer to this stored order; ties
// between equal parts are broken by index.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.rbegin(), parts_.rend());
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument("bad partition token: '" + tok + "'");
            parts.push_back(v);
        }
        if (parts.empty()) throw std::invalid_argument("empty partition");
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(int index_1based) const {
        if (index_1based < 1 || index_1based > length()) throw std::out_of_range("part index");
        return parts_[static_cast<size_t>(index_1based - 1)];
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  private:
    std::vector<int> parts_;
};

// |Aut| = product of factorials of part multiplicities.
inline Int aut_size(const Partition& p) {
    Int a = 1;
    int run = 1;
    const auto& v = p.parts();
    for (size_t i = 1; i <= v.size(); ++i) {
        if (i < v.size() && v[i] == v[i - 1]) {
            ++run;
        } else {
            a *= factorial(run);
            run = 1;
        }
    }
    return a;
}

// Sum of the parts selected by a set of 1-based indices; empty set gives 0.
inline long subset_sum(const Partition& p, const std::vector<int>& indices) {
    long s = 0;
    for (int i : indices) s += p.part(i);
    return s;
}

// Centralizer order z = prod k^{m_k} m_k!; conjugacy class size is d!/z.
inline Int centralizer_order(const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    Int z = 1;
    for (auto [k, m] : mult) z *= int_pow(Int(k), static_cast<unsigned long>(m)) * factorial(m);
    return z;
}

inline Int conjugacy_class_size(const std::vector<int>& parts) {
    int d = std::accumulate(parts.begin(), parts.end(), 0);
    return factorial(d) / centralizer_order(parts);
}

// Sign of any permutation of cycle type p: (-1)^(d - #cycles).
inline int permutation_sign(const Partition& p) {
    return (p.degree() - p.length()) % 2 == 0 ? 1 : -1;
}

// A pair of same-degree ramification profiles; r is the genus-0 count of
// simple branch points, m + n - 2.
struct HurwitzPair {
    Partition mu;
    Partition nu;
    int d = 0;
    int r = 0;

    HurwitzPair(Partition mu_, Partition nu_) : mu(std::move(mu_)), nu(std::move(nu_)) {
        d = mu.degree();
        if (nu.degree() != d) throw std::invalid_argument("profiles must share a degree");
        r = mu.length() + nu.length() - 2;
    }
};

// All partitions of d, in a fixed (reverse-lexicographic) order.
inline std::vector<std::vector<int>> partitions_of(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

}  // namespace hurwitz
