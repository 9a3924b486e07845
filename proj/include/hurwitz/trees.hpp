#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "hurwitz/closed_forms.hpp"
#include "hurwitz/oracle.hpp"  // Budgets, BudgetExceeded
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/set_partition.hpp"

namespace hurwitz {

// Weighted bipartite tree on blocks of mu- and nu-indices. Edge weights are
// forced by the flow conditions (incident weights sum to the block's part
// total) and must all be positive.
struct GeometricTree {
    Blocks mu_blocks;  // block 0 is always {1}
    Blocks nu_blocks;
    std::vector<std::tuple<int, int, long>> edges;  // (mu block, nu block, weight)

    friend bool operator==(const GeometricTree&, const GeometricTree&) = default;
    friend auto operator<=>(const GeometricTree&, const GeometricTree&) = default;
};

// prod of edge weights divided by mu_1.
inline Rat multiplicity_delta(const GeometricTree& t, const Partition& mu) {
    Int prod = 1;
    for (const auto& [i, j, w] : t.edges) prod *= w;
    return Rat(prod, mu.part(1));
}

namespace tree_detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

// Unique flow weights via leaf stripping; nullopt when any weight fails to be
// strictly positive.
inline std::optional<std::vector<long>> solve_weights(int k, int l,
                                                      const std::vector<std::pair<int, int>>& edges,
                                                      const std::vector<long>& mu_totals,
                                                      const std::vector<long>& nu_totals) {
    int v = k + l;
    std::vector<long> remaining(static_cast<size_t>(v));
    for (int i = 0; i < k; ++i) remaining[static_cast<size_t>(i)] = mu_totals[static_cast<size_t>(i)];
    for (int j = 0; j < l; ++j) remaining[static_cast<size_t>(k + j)] = nu_totals[static_cast<size_t>(j)];
    std::vector<std::vector<size_t>> incident(static_cast<size_t>(v));
    for (size_t e = 0; e < edges.size(); ++e) {
        incident[static_cast<size_t>(edges[e].first)].push_back(e);
        incident[static_cast<size_t>(k + edges[e].second)].push_back(e);
    }
    std::vector<int> degree(static_cast<size_t>(v));
    for (int u = 0; u < v; ++u) degree[static_cast<size_t>(u)] = static_cast<int>(incident[static_cast<size_t>(u)].size());
    std::vector<long> weight(edges.size(), -1);
    std::vector<int> leaves;
    for (int u = 0; u < v; ++u)
        if (degree[static_cast<size_t>(u)] == 1) leaves.push_back(u);
    size_t assigned = 0;
    while (!leaves.empty()) {
        int u = leaves.back();
        leaves.pop_back();
        if (degree[static_cast<size_t>(u)] != 1) continue;
        size_t e = SIZE_MAX;
        for (size_t cand : incident[static_cast<size_t>(u)])
            if (weight[cand] < 0) e = cand;
        if (e == SIZE_MAX) break;
        long w = remaining[static_cast<size_t>(u)];
        if (w <= 0) return std::nullopt;
        weight[e] = w;
        ++assigned;
        int other = u < k ? k + edges[e].second : edges[e].first;
        remaining[static_cast<size_t>(u)] = 0;
        degree[static_cast<size_t>(u)] = 0;
        remaining[static_cast<size_t>(other)] -= w;
        if (--degree[static_cast<size_t>(other)] == 1) leaves.push_back(other);
    }
    if (assigned != edges.size()) return std::nullopt;
    for (long w : weight)
        if (w <= 0) return std::nullopt;
    return weight;
}

}  // namespace tree_detail

// All geometric trees of the pair: for every anchored block partition of the
// mu indices and block partition of the nu indices, every spanning tree of the
// complete bipartite block graph whose induced weights are positive, whose
// anchor block {1} is a leaf, and whose mu-side components carry at least one
// simple branch point (k < m + l - 1). The last condition is what rules out
// the all-singleton star over a single nu block.
inline std::vector<GeometricTree> geometric_trees(const Partition& mu, const Partition& nu,
                                                  const Budgets& budgets = {}) {
    int m = mu.length(), n = nu.length();
    if (m + n > budgets.max_mn) throw BudgetExceeded("tree enumeration bound exceeded");
    std::vector<GeometricTree> out;
    std::vector<int> mu_idx(static_cast<size_t>(m)), nu_idx(static_cast<size_t>(n));
    std::iota(mu_idx.begin(), mu_idx.end(), 1);
    std::iota(nu_idx.begin(), nu_idx.end(), 1);

    using tree_detail::Dsu;
    for (const Blocks& mb : set_partitions(mu_idx, /*anchor_singleton=*/true)) {
        int k = static_cast<int>(mb.size());
        std::vector<long> mu_totals;
        for (const auto& b : mb) mu_totals.push_back(subset_sum(mu, b));
        for (const Blocks& nb : set_partitions(nu_idx)) {
            int l = static_cast<int>(nb.size());
            if (k >= m + l - 1) continue;  // no branch point on the mu side
            std::vector<long> nu_totals;
            for (const auto& b : nb) nu_totals.push_back(subset_sum(nu, b));

            // Grow edge sets block by block on the mu side: the anchor takes
            // exactly one edge, other blocks at least one, never forming a
            // cycle and never exceeding either endpoint's capacity for unit
            // weights.
            std::vector<std::pair<int, int>> edges;
            std::vector<long> jdeg(static_cast<size_t>(l), 0);
            Dsu dsu(k + l);
            auto add_tree = [&]() {
                if (static_cast<int>(edges.size()) != k + l - 1) return;
                Dsu check(k + l);
                int comps = k + l;
                for (auto [a, b] : edges)
                    if (check.unite(a, k + b)) --comps;
                if (comps != 1) return;
                auto weights = tree_detail::solve_weights(k, l, edges, mu_totals, nu_totals);
                if (!weights) return;
                GeometricTree t;
                t.mu_blocks = mb;
                t.nu_blocks = nb;
                for (size_t e = 0; e < edges.size(); ++e)
                    t.edges.emplace_back(edges[e].first, edges[e].second, (*weights)[e]);
                std::sort(t.edges.begin(), t.edges.end());
                out.push_back(std::move(t));
            };
            auto rec = [&](auto&& self, int block) -> void {
                if (block == k) {
                    add_tree();
                    return;
                }
                int max_edges = block == 0 ? 1 : static_cast<int>(
                                                     std::min<long>(mu_totals[static_cast<size_t>(block)], l));
                auto pick = [&](auto&& pick_self, int from, int count) -> void {
                    if (count >= 1) self(self, block + 1);
                    if (count == max_edges) return;
                    for (int j = from; j < l; ++j) {
                        if (jdeg[static_cast<size_t>(j)] >= nu_totals[static_cast<size_t>(j)]) continue;
                        Dsu saved = dsu;
                        if (!dsu.unite(block, k + j)) {
                            dsu = saved;
                            continue;
                        }
                        edges.emplace_back(block, j);
                        ++jdeg[static_cast<size_t>(j)];
                        pick_self(pick_self, j + 1, count + 1);
                        --jdeg[static_cast<size_t>(j)];
                        edges.pop_back();
                        dsu = saved;
                    }
                };
                pick(pick, 0, 0);
            };
            rec(rec, 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Depth-2 star parameterizing one term of the tree recursion: white circles
// are mu singletons on the center, black blocks pair mu indices with a
// (possibly empty) set of nu singletons hanging off them.
struct EssentialStar {
    struct BlackBlock {
        std::vector<int> I;  // subset of [2,m], nonempty
        std::vector<int> J;  // subset of [1,n], possibly empty

        friend bool operator==(const BlackBlock&, const BlackBlock&) = default;
        friend auto operator<=>(const BlackBlock&, const BlackBlock&) = default;
    };
    std::vector<int> white;  // subset of [2,m]
    std::vector<BlackBlock> black;
    int center_size = 0;  // |J_1|

    int center_degree() const { return 1 + static_cast<int>(white.size() + black.size()); }
    int u_exponent() const { return center_size + center_degree() - 3; }

    friend bool operator==(const EssentialStar&, const EssentialStar&) = default;
    friend auto operator<=>(const EssentialStar&, const EssentialStar&) = default;
};

// Every star of the extended set: black blocks need |I| + |J| >= 2 (a lone mu
// index with no nu squares is exactly a white circle) and a positive center
// edge weight mu_I - nu_J. The all-white star with no black blocks is the
// added element of the extended set.
inline std::vector<EssentialStar> essential_stars(const Partition& mu, const Partition& nu) {
    int m = mu.length(), n = nu.length();
    std::vector<EssentialStar> out;
    for (int smask = 0; smask < (1 << (m - 1)); ++smask) {
        std::vector<int> covered;
        for (int i = 0; i < m - 1; ++i)
            if (smask & (1 << i)) covered.push_back(i + 2);
        std::vector<int> white;
        for (int i = 2; i <= m; ++i)
            if (!(smask & (1 << (i - 2)))) white.push_back(i);

        for (const Blocks& blocks : set_partitions(covered)) {
            int bk = static_cast<int>(blocks.size());
            std::vector<long> mu_sums;
            for (const auto& b : blocks) mu_sums.push_back(subset_sum(mu, b));
            // Assign each nu index to the center (bk) or one of the blocks,
            // keeping every block's nu sum strictly under its mu sum.
            std::vector<std::vector<int>> assigned(static_cast<size_t>(bk));
            std::vector<long> nu_sums(static_cast<size_t>(bk), 0);
            int center_count = 0;
            auto rec = [&](auto&& self, int j) -> void {
                if (j > n) {
                    if (center_count == 0) return;
                    EssentialStar star;
                    star.white = white;
                    star.center_size = center_count;
                    for (int b = 0; b < bk; ++b) {
                        if (blocks[static_cast<size_t>(b)].size() + assigned[static_cast<size_t>(b)].size() < 2)
                            return;
                        star.black.push_back({blocks[static_cast<size_t>(b)], assigned[static_cast<size_t>(b)]});
                    }
                    out.push_back(std::move(star));
                    return;
                }
                ++center_count;
                self(self, j + 1);
                --center_count;
                for (int b = 0; b < bk; ++b) {
                    long next = nu_sums[static_cast<size_t>(b)] + nu.part(j);
                    if (next >= mu_sums[static_cast<size_t>(b)]) continue;  // weight must stay positive
                    nu_sums[static_cast<size_t>(b)] = next;
                    assigned[static_cast<size_t>(b)].push_back(j);
                    self(self, j + 1);
                    assigned[static_cast<size_t>(b)].pop_back();
                    nu_sums[static_cast<size_t>(b)] -= nu.part(j);
                }
            };
            rec(rec, 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Expansion of a star into the block tree it abbreviates: whites and blacks
// hang off the center block, each black additionally carries its nu
// singletons. The added all-white star expands to a tree with no branch point
// on the mu side, which is exactly the excluded shape.
inline GeometricTree expand_star(const EssentialStar& star, const Partition& mu, const Partition& nu) {
    GeometricTree t;
    t.mu_blocks.push_back({1});
    for (int w : star.white) t.mu_blocks.push_back({w});
    for (const auto& b : star.black) t.mu_blocks.push_back(b.I);
    std::sort(t.mu_blocks.begin() + 1, t.mu_blocks.end());

    std::vector<int> center;
    std::vector<bool> hung(static_cast<size_t>(nu.length() + 1), false);
    for (const auto& b : star.black)
        for (int j : b.J) hung[static_cast<size_t>(j)] = true;
    for (int j = 1; j <= nu.length(); ++j)
        if (!hung[static_cast<size_t>(j)]) center.push_back(j);
    t.nu_blocks.push_back(center);
    for (const auto& b : star.black)
        for (int j : b.J) t.nu_blocks.push_back({j});
    std::sort(t.nu_blocks.begin(), t.nu_blocks.end());

    auto mu_block_of = [&](const std::vector<int>& b) {
        return static_cast<int>(std::find(t.mu_blocks.begin(), t.mu_blocks.end(), b) - t.mu_blocks.begin());
    };
    auto nu_block_of = [&](const std::vector<int>& b) {
        return static_cast<int>(std::find(t.nu_blocks.begin(), t.nu_blocks.end(), b) - t.nu_blocks.begin());
    };
    int center_idx = nu_block_of(center);
    t.edges.emplace_back(0, center_idx, mu.part(1));
    for (int w : star.white) t.edges.emplace_back(mu_block_of({w}), center_idx, mu.part(w));
    for (const auto& b : star.black) {
        long w = subset_sum(mu, b.I) - subset_sum(nu, b.J);
        t.edges.emplace_back(mu_block_of(b.I), center_idx, w);
        for (int j : b.J) t.edges.emplace_back(mu_block_of(b.I), nu_block_of({j}), nu.part(j));
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

// Recursive evaluation over the extended star set:
//   (m+n-2)! sum_T mu_1^u prod_i (mu_I - nu_J) h(mu(I); nu*(J)) / (|I|+|J|-1)!
// where nu*(J) appends the part mu_I - nu_J. Sub-values recurse with strictly
// smaller mu length; the all-white star alone reproduces the one-part formula.
class StarRecursion {
  public:
    Rat value(const Partition& mu, const Partition& nu) {
        if (mu.degree() != nu.degree()) throw std::invalid_argument("degree mismatch");
        auto key = std::make_pair(mu.parts(), nu.parts());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Rat sum = 0;
        for (const EssentialStar& star : essential_stars(mu, nu)) {
            Rat term = rat_pow(Rat(mu.part(1)), star.u_exponent());
            for (const auto& b : star.black) {
                long w = subset_sum(mu, b.I) - subset_sum(nu, b.J);
                std::vector<int> sub_mu, sub_nu;
                for (int i : b.I) sub_mu.push_back(mu.part(i));
                for (int j : b.J) sub_nu.push_back(nu.part(j));
                sub_nu.push_back(static_cast<int>(w));
                term *= Rat(w) * value(Partition(sub_mu), Partition(sub_nu));
                term /= Rat(factorial(static_cast<long>(b.I.size() + b.J.size()) - 1));
            }
            sum += term;
        }
        Rat result = Rat(factorial(mu.length() + nu.length() - 2)) * sum;
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> memo_;
};

}  // namespace hurwitz
