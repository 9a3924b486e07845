#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budgets {
    long long dfs_ops = 10'000'000;  // bound on binom(d,2)^r for brute force
    int max_mn = 8;                  // bound on m+n for chamber/tree enumeration
};

// Ground-truth counts of transposition factorizations in S_d. All public
// counts are exact rationals: tuple counts divided by d!, with the labelled
// convention applied only in double_hurwitz.
class FactorizationOracle {
  public:
    explicit FactorizationOracle(Budgets budgets = {}) : budgets_(budgets) {}

    // (1/d!) #{(s0, t_1..t_r) : s0 of type nu, product of type mu}, any orbit
    // structure. Zero whenever sign parity rules the count out.
    Rat disconnected_count(const Partition& mu, const Partition& nu, int r) {
        check_pair(mu, nu);
        return disconnected_raw(mu.parts(), nu.parts(), r);
    }

    // Same count restricted to tuples whose group acts transitively.
    Rat connected_count(const Partition& mu, const Partition& nu, int r) {
        check_pair(mu, nu);
        Rat weighted = connected_labelled(mu.parts(), nu.parts(), r);
        return weighted / Rat(aut_size(mu) * aut_size(nu));
    }

    // Labelled genus-0 double Hurwitz number: |Aut mu||Aut nu| times the
    // weighted transitive count at r = m + n - 2.
    Rat double_hurwitz(const HurwitzPair& pair) {
        return connected_labelled(pair.mu.parts(), pair.nu.parts(), pair.r);
    }

    // Independent brute force: fixes one representative of class nu, walks
    // every transposition sequence, filters on product class and transitivity.
    // Equals connected_count on every instance within budget.
    Rat dfs_count(const Partition& mu, const Partition& nu, int r) const {
        check_pair(mu, nu);
        int d = mu.degree();
        long long pairs = static_cast<long long>(d) * (d - 1) / 2;
        long long work = 1;
        for (int i = 0; i < r; ++i) {
            if (pairs != 0 && work > budgets_.dfs_ops / pairs)
                throw BudgetExceeded("dfs budget exceeded");
            work *= pairs == 0 ? 1 : pairs;
        }
        if (pairs == 0 && r > 0) return 0;  // S_1 has no transpositions

        std::vector<int> perm(static_cast<size_t>(d));  // running product, 0-based
        {
            int at = 0;
            for (int c : nu.parts()) {
                for (int i = 0; i < c; ++i) perm[static_cast<size_t>(at + i)] = at + (i + 1) % c;
                at += c;
            }
        }
        std::vector<std::pair<int, int>> transpositions;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) transpositions.emplace_back(i, j);

        std::vector<std::pair<int, int>> chosen(static_cast<size_t>(r));
        Int hits = 0;
        const std::vector<int> target = mu.parts();
        auto rec = [&](auto&& self, int slot) -> void {
            if (slot == r) {
                if (cycle_type_of(perm) == target && is_transitive(perm, nu, chosen)) ++hits;
                return;
            }
            for (auto [a, b] : transpositions) {
                std::swap(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
                chosen[static_cast<size_t>(slot)] = {a, b};
                self(self, slot + 1);
                std::swap(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
            }
        };
        rec(rec, 0);
        return Rat(conjugacy_class_size(nu.parts()) * hits, factorial(d));
    }

  private:
    static void check_pair(const Partition& mu, const Partition& nu) {
        if (mu.degree() != nu.degree()) throw std::invalid_argument("degree mismatch");
    }

    static std::vector<int> cycle_type_of(const std::vector<int>& perm) {
        std::vector<int> type;
        std::vector<bool> seen(perm.size(), false);
        for (size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
                seen[j] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    static bool is_transitive(const std::vector<int>& perm, const Partition& nu,
                              const std::vector<std::pair<int, int>>& chosen) {
        std::vector<int> parent(perm.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
        int at = 0;
        for (int c : nu.parts()) {
            for (int i = 1; i < c; ++i) unite(at, at + i);
            at += c;
        }
        for (auto [a, b] : chosen) unite(a, b);
        int root = find(0);
        for (int i = 1; i < static_cast<int>(perm.size()); ++i)
            if (find(i) != root) return false;
        return true;
    }

    // ---- class-algebra side ------------------------------------------------

    const ClassVector& evolved(const CycleType& start, int steps) {
        auto& track = evolutions_[start];
        if (track.empty()) {
            Partition p(start);
            track.push_back(class_indicator(p));
        }
        while (static_cast<int>(track.size()) <= steps) track.push_back(transposition_step(track.back()));
        return track[static_cast<size_t>(steps)];
    }

    Rat disconnected_raw(const CycleType& mu, const CycleType& nu, int r) {
        if (mu.empty() && nu.empty()) return r == 0 ? 1 : 0;
        if (mu.empty() || nu.empty()) return 0;
        int d = std::accumulate(mu.begin(), mu.end(), 0);
        const ClassVector& v = evolved(nu, r);
        auto it = v.counts.find(mu);
        if (it == v.counts.end()) return 0;
        return Rat(it->second, factorial(d));
    }

    // Aut-weighted count, the form in which the component split telescopes
    // exactly over index subsets containing the anchor part.
    Rat disconnected_labelled(const CycleType& mu, const CycleType& nu, int r) {
        Rat base = disconnected_raw(mu, nu, r);
        if (base == 0) return base;
        return base * Rat(aut_multiset(mu) * aut_multiset(nu));
    }

    Rat connected_labelled(CycleType mu, CycleType nu, int r) {
        std::sort(mu.rbegin(), mu.rend());
        std::sort(nu.rbegin(), nu.rend());
        auto key = std::make_tuple(mu, nu, r);
        if (auto it = conn_memo_.find(key); it != conn_memo_.end()) return it->second;

        int m = static_cast<int>(mu.size());
        int n = static_cast<int>(nu.size());
        Rat value = disconnected_labelled(mu, nu, r);
        // Subtract every split where the component holding part mu_1 is a
        // proper sub-pair; the remaining parts form an unconstrained tuple.
        for (int amask = 0; amask < (1 << (m - 1)); ++amask) {
            CycleType a = {mu[0]}, abar;
            long asum = mu[0];
            for (int i = 1; i < m; ++i)
                if (amask & (1 << (i - 1))) {
                    a.push_back(mu[static_cast<size_t>(i)]);
                    asum += mu[static_cast<size_t>(i)];
                } else {
                    abar.push_back(mu[static_cast<size_t>(i)]);
                }
            for (int bmask = 0; bmask < (1 << n); ++bmask) {
                if (amask == (1 << (m - 1)) - 1 && bmask == (1 << n) - 1) continue;
                CycleType b, bbar;
                long bsum = 0;
                for (int j = 0; j < n; ++j)
                    if (bmask & (1 << j)) {
                        b.push_back(nu[static_cast<size_t>(j)]);
                        bsum += nu[static_cast<size_t>(j)];
                    } else {
                        bbar.push_back(nu[static_cast<size_t>(j)]);
                    }
                if (bsum != asum) continue;
                for (int r1 = 0; r1 <= r; ++r1) {
                    Rat rest = disconnected_labelled(abar, bbar, r - r1);
                    if (rest == 0) continue;
                    Rat head = connected_labelled(a, b, r1);
                    if (head == 0) continue;
                    value -= Rat(binomial(r, r1)) * head * rest;
                }
            }
        }
        conn_memo_.emplace(std::move(key), value);
        return value;
    }

    static Int aut_multiset(const CycleType& t) {
        Int a = 1;
        int run = 1;
        for (size_t i = 1; i <= t.size(); ++i) {
            if (i < t.size() && t[i] == t[i - 1]) {
                ++run;
            } else {
                a *= factorial(run);
                run = 1;
            }
        }
        return a;
    }

    Budgets budgets_;
    std::map<CycleType, std::vector<ClassVector>> evolutions_;
    std::map<std::tuple<CycleType, CycleType, int>, Rat> conn_memo_;
};

}  // namespace hurwitz
