#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

using CycleType = std::vector<int>;  // sorted descending

// Element counts per conjugacy class of S_d. Totals are preserved up to the
// factor d(d-1)/2 by each transposition step.
struct ClassVector {
    int d = 0;
    std::map<CycleType, Int> counts;

    Int total() const {
        Int t = 0;
        for (const auto& [k, v] : counts) t += v;
        return t;
    }
};

inline ClassVector class_indicator(const Partition& p) {
    ClassVector v;
    v.d = p.degree();
    v.counts[p.parts()] = conjugacy_class_size(p.parts());
    return v;
}

namespace detail {
inline CycleType with_parts_replaced(const CycleType& t, std::initializer_list<int> remove,
                                     std::initializer_list<int> add) {
    CycleType r = t;
    for (int x : remove) r.erase(std::find(r.begin(), r.end(), x));
    for (int x : add) r.push_back(x);
    std::sort(r.rbegin(), r.rend());
    return r;
}
}  // namespace detail

// Multiplies every counted element by every transposition of S_d. A cycle of
// length c is cut into (a, c-a), c ways per unordered split (c/2 when a = c-a);
// cycles of lengths a and b join into a+b, one way per choice of a point in
// each. Per element the moves total d(d-1)/2.
inline ClassVector transposition_step(const ClassVector& v) {
    ClassVector out;
    out.d = v.d;
    for (const auto& [type, count] : v.counts) {
        std::map<int, int> mult;
        for (int c : type) ++mult[c];
        for (auto [c, mc] : mult) {
            // cuts
            for (int a = 1; 2 * a <= c; ++a) {
                int ways = (2 * a == c) ? c / 2 : c;
                out.counts[detail::with_parts_replaced(type, {c}, {a, c - a})] +=
                    count * mc * ways;
            }
            // joins of two same-length cycles
            if (mc >= 2) {
                Int ways = Int(mc) * (mc - 1) / 2 * c * c;
                out.counts[detail::with_parts_replaced(type, {c, c}, {2 * c})] += count * ways;
            }
        }
        // joins of two different lengths
        for (auto ia = mult.begin(); ia != mult.end(); ++ia)
            for (auto ib = std::next(ia); ib != mult.end(); ++ib) {
                Int ways = Int(ia->second) * ib->second * ia->first * ib->first;
                out.counts[detail::with_parts_replaced(type, {ia->first, ib->first},
                                                       {ia->first + ib->first})] += count * ways;
            }
    }
    return out;
}

}  // namespace hurwitz
