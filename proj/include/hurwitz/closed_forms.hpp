#pragma once

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/set_partition.hpp"

namespace hurwitz {

// One-part value (n-1)! d^(n-2); rational when n = 1, d > 1.
inline Rat one_part_value(int d, const Partition& nu) {
    if (nu.degree() != d) throw std::invalid_argument("nu must partition d");
    int n = nu.length();
    return Rat(factorial(n - 1)) * rat_pow(Rat(d), n - 2);
}

namespace detail {
// Subset sums over bitmasks; shared by the closed forms.
inline std::vector<Rat> mask_sums(const std::vector<Rat>& vals) {
    int n = static_cast<int>(vals.size());
    std::vector<Rat> sums(static_cast<size_t>(1) << n, Rat(0));
    for (int mask = 1; mask < (1 << n); ++mask) {
        int j = std::countr_zero(static_cast<unsigned>(mask));
        sums[static_cast<size_t>(mask)] =
            sums[static_cast<size_t>(mask & (mask - 1))] + vals[static_cast<size_t>(j)];
    }
    return sums;
}

inline std::vector<Rat> as_rats(const Partition& p) {
    std::vector<Rat> v;
    for (int part : p.parts()) v.emplace_back(part);
    return v;
}
}  // namespace detail

// Two-part value: n! * sum over J subsets of [1,n] with nu_J < mu2 (J = empty
// included) of (mu2 - nu_J) mu1^(n-|J|-1) mu2^(|J|-1). The strict summation
// guards are decided at `select`, which defaults to nu itself; a point on a
// wall has no well-defined guard values, so callers evaluate there by passing
// a nearby off-wall selection point and keeping the magnitudes at nu.
inline Rat two_part_value(int mu1, int mu2, const Partition& nu,
                          const std::vector<Rat>* select = nullptr) {
    if (mu1 < mu2 || mu2 < 1) throw std::invalid_argument("need mu1 >= mu2 >= 1");
    if (mu1 + mu2 != nu.degree()) throw std::invalid_argument("degree mismatch");
    int n = nu.length();
    auto vals = detail::as_rats(nu);
    auto sums = detail::mask_sums(vals);
    auto guard = select ? detail::mask_sums(*select) : sums;
    Rat total = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (guard[static_cast<size_t>(mask)] >= mu2) continue;
        int size = std::popcount(static_cast<unsigned>(mask));
        total += (Rat(mu2) - sums[static_cast<size_t>(mask)]) * rat_pow(Rat(mu1), n - size - 1) *
                 rat_pow(Rat(mu2), size - 1);
    }
    return Rat(factorial(n)) * total;
}

// Three-part value. The first sum's per-subset weight is A_J with no extra
// (mu2 - nu_J) prefactor: the prefactor variant (kept behind `literal`)
// disagrees with the factorization count, e.g. (2,1,1);(3,1) gives 48 not 54.
// The third sum likewise carries no (mu3 - nu_K) prefactor: the two-part
// value it abbreviates expands to
//   (mu3 - nu_K) mu2 mu3^(|K|-1) + (nu_J - mu2 - nu_K) mu3^|K|
// per subset, which is mu3^(|K|-1) C_JK on the nose ((2,2,2);(3,3) separates
// the variants: 108 against 144).
inline Rat three_part_value(int mu1, int mu2, int mu3, const Partition& nu, bool literal = false,
                            const std::vector<Rat>* select = nullptr) {
    if (mu1 < mu2 || mu2 < mu3 || mu3 < 1) throw std::invalid_argument("parts must be sorted positive");
    long d = mu1 + mu2 + mu3;
    if (d != nu.degree()) throw std::invalid_argument("degree mismatch");
    int n = nu.length();
    auto vals = detail::as_rats(nu);
    auto sums = detail::mask_sums(vals);
    auto guard = select ? detail::mask_sums(*select) : sums;
    auto size_of = [](int mask) { return std::popcount(static_cast<unsigned>(mask)); };

    Rat term1 = 0;
    for (int j = 0; j < (1 << n); ++j) {
        if (guard[static_cast<size_t>(j)] >= mu2) continue;
        Rat nj = sums[static_cast<size_t>(j)];
        int js = size_of(j);
        Rat a = Rat(d) * mu2 - nj * (mu1 + mu2);
        Rat w = rat_pow(Rat(mu1), n - js - 1) * rat_pow(Rat(mu2), js - 1) * a;
        if (literal) w *= Rat(mu2) - nj;
        term1 += w;
    }

    Rat term2 = 0;
    for (int j = 1; j < (1 << n); ++j) {
        if (guard[static_cast<size_t>(j)] >= mu3) continue;
        Rat nj = sums[static_cast<size_t>(j)];
        int js = size_of(j);
        int jbar = ((1 << n) - 1) & ~j;
        Rat inner = 0;
        for (int k = jbar;; k = (k - 1) & jbar) {
            if (guard[static_cast<size_t>(k)] < mu2) {
                Rat nk = sums[static_cast<size_t>(k)];
                int ks = size_of(k);
                Rat b = Rat(d - nj) * mu2 - nk * (mu1 + mu2);
                inner += rat_pow(Rat(mu1), n - js - ks - 1) * rat_pow(Rat(mu2), ks - 1) * b;
            }
            if (k == 0) break;
        }
        term2 += (Rat(mu3) - nj) * rat_pow(Rat(mu3), js - 1) * inner;
    }

    Rat term3 = 0;
    for (int j = 1; j < (1 << n); ++j) {
        if (!(mu2 < guard[static_cast<size_t>(j)] && guard[static_cast<size_t>(j)] < mu2 + mu3))
            continue;
        Rat nj = sums[static_cast<size_t>(j)];
        int js = size_of(j);
        Rat inner = 0;
        for (int k = j;; k = (k - 1) & j) {
            if (guard[static_cast<size_t>(k)] < guard[static_cast<size_t>(j)] - mu2) {
                Rat nk = sums[static_cast<size_t>(k)];
                int ks = size_of(k);
                Rat c = nj * mu3 - nk * (mu2 + mu3);
                inner += rat_pow(Rat(mu2), js - ks - 1) * rat_pow(Rat(mu3), ks - 1) * c;
            }
            if (k == 0) break;
        }
        term3 += (Rat(mu2 + mu3) - nj) * rat_pow(Rat(mu1), n - js - 1) * inner;
    }

    return Rat(factorial(n + 1)) * (term1 + term2 + term3);
}

// Two-part value as a sum over splittings of nu into three sub-multisets
// (rho, sigma, tau) with |sigma| < mu1, |tau| < mu2. Enumerated over indexed
// assignments, which absorbs the per-multiset automorphism weights.
inline Rat two_part_partition_sum(int mu1, int mu2, const Partition& nu) {
    if (mu1 < mu2 || mu2 < 1) throw std::invalid_argument("need mu1 >= mu2 >= 1");
    long d = mu1 + mu2;
    if (d != nu.degree()) throw std::invalid_argument("degree mismatch");
    int n = nu.length();
    Rat total = 0;
    auto rec = [&](auto&& self, int i, long ssum, long tsum, int scount, int tcount, Int rprod,
                   int rcount) -> void {
        if (ssum >= mu1 || tsum >= mu2) return;
        if (i == n) {
            Rat term = Rat(factorial(rcount) * rprod);
            term *= Rat(mu1 - ssum) * Rat(mu2 - tsum);
            term *= rat_pow(Rat(mu1), scount - 1) * rat_pow(Rat(mu2), tcount - 1);
            total += term;
            return;
        }
        int v = nu.part(i + 1);
        self(self, i + 1, ssum, tsum, scount, tcount, rprod * v, rcount + 1);
        self(self, i + 1, ssum + v, tsum, scount + 1, tcount, rprod, rcount);
        self(self, i + 1, ssum, tsum + v, scount, tcount + 1, rprod, rcount);
    };
    rec(rec, 0, 0, 0, 0, 0, 1, 0);
    return Rat(factorial(n)) * total / d;
}

// Value of the family mu = nu = (3, 1^(d-3)) as a function of d >= 4.
inline Rat three_cycle_pair_value(int d) {
    if (d < 4) throw std::domain_error("family defined for d >= 4");
    Rat q = Rat(3, 4) * Rat(27L * d * d - 137L * d + 180);
    q *= rat_pow(Rat(d), d - 6);
    q *= Rat(factorial(2 * d - 6), factorial(d - 3));
    return q;
}

// Chamber polynomial of the totally negative chamber:
// (m+n-2)! x1^(n-1) (x1+...+xm)^(m-2). Degree m+n-3, so m+n >= 3 is required;
// the (1,1) shape has no polynomial (its value 1/d is not polynomial in d).
inline MultiPoly totally_negative_polynomial(int m, int n) {
    if (m < 1 || n < 1 || m + n < 3) throw std::domain_error("need m,n >= 1 and m+n >= 3");
    VarSpec vars{m, n};
    MultiPoly x1 = MultiPoly::variable(vars, 0);
    MultiPoly p = MultiPoly::constant(vars, Rat(factorial(m + n - 2)));
    if (m == 1) return p * x1.pow(n - 2);
    MultiPoly sx(vars);
    for (int i = 0; i < m; ++i) sx = sx + MultiPoly::variable(vars, i);
    return p * x1.pow(n - 1) * sx.pow(m - 2);
}

// Both sides of the rooted-forest expansion
//   sum_k x1^k sum_{partitions of [2,m] into k blocks} prod x_{I_i}^(|I_i|-1)
//     = x1 (x1+...+xm)^(m-2),
// returned for the caller to compare.
inline std::pair<MultiPoly, MultiPoly> rooted_tree_identity(int m) {
    if (m < 2) throw std::domain_error("need m >= 2");
    VarSpec vars{m, 0};
    MultiPoly lhs(vars);
    std::vector<int> rest;
    for (int i = 2; i <= m; ++i) rest.push_back(i);
    for_each_set_partition(rest, [&](const Blocks& blocks) {
        MultiPoly term = MultiPoly::variable(vars, 0).pow(static_cast<int>(blocks.size()));
        for (const auto& block : blocks)
            term = term * x_subset_form(vars, block).pow(static_cast<int>(block.size()) - 1);
        lhs = lhs + term;
    });
    MultiPoly sx(vars);
    for (int i = 0; i < m; ++i) sx = sx + MultiPoly::variable(vars, i);
    MultiPoly rhs = MultiPoly::variable(vars, 0) * sx.pow(m - 2);
    return {lhs, rhs};
}

}  // namespace hurwitz
