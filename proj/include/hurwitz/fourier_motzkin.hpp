#pragma once

#include <algorithm>
#include <bitset>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// An inequality a_0 z_0 + ... + a_{k-1} z_{k-1} + c >= 0 stored as the row
// (a_0, ..., a_{k-1}, c).
using FmRow = std::vector<Rat>;

namespace fm_detail {

constexpr size_t kMaxAncestors = 1024;

struct TrackedRow {
    FmRow coef;
    std::bitset<kMaxAncestors> ancestors;
};

// Scale so the first nonzero entry is +-1; keeps the duplicate filter sharp.
inline void normalize(FmRow& row) {
    for (const Rat& v : row)
        if (v != 0) {
            Rat s = Rat(abs(v));
            for (Rat& w : row) w /= s;
            return;
        }
}

}  // namespace fm_detail

// Exact Fourier-Motzkin elimination with the two standard accelerations:
// a greedy variable order (fewest pairings first) and Imbert's ancestor rule,
// which discards any derived row combining more than eliminated+1 original
// rows. The final variable is kept so it can serve as a maximized slack.
class FourierMotzkin {
  public:
    FourierMotzkin(std::vector<FmRow> rows, int nvars) : nvars_(nvars) {
        if (rows.size() > fm_detail::kMaxAncestors)
            throw std::invalid_argument("too many inequality rows");
        std::vector<fm_detail::TrackedRow> cur;
        std::set<FmRow> seen;
        for (size_t i = 0; i < rows.size(); ++i) {
            fm_detail::normalize(rows[i]);
            if (!seen.insert(rows[i]).second) continue;
            fm_detail::TrackedRow t;
            t.coef = std::move(rows[i]);
            t.ancestors.set(i);
            cur.push_back(std::move(t));
        }

        std::vector<bool> eliminated(static_cast<size_t>(nvars), false);
        eliminated[static_cast<size_t>(nvars - 1)] = true;  // the kept variable
        for (int step = 0; step + 1 < nvars; ++step) {
            int v = pick_variable(cur, eliminated);
            stages_.push_back({v, strip(cur)});
            cur = eliminate(cur, v, step + 1);
            eliminated[static_cast<size_t>(v)] = true;
        }
        final_ = strip(cur);
    }

    struct Interval {
        bool feasible = true;
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
    };

    // Feasible range of the kept (last) variable.
    Interval last_var_interval() const {
        Interval iv;
        size_t t = static_cast<size_t>(nvars_ - 1);
        for (const FmRow& row : final_) {
            const Rat& a = row[t];
            const Rat& c = row.back();
            if (a == 0) {
                if (c < 0) iv.feasible = false;
            } else if (a > 0) {
                Rat bound = -c / a;
                if (!iv.has_lo || bound > iv.lo) iv.lo = bound, iv.has_lo = true;
            } else {
                Rat bound = -c / a;
                if (!iv.has_hi || bound < iv.hi) iv.hi = bound, iv.has_hi = true;
            }
        }
        if (iv.has_lo && iv.has_hi && iv.lo > iv.hi) iv.feasible = false;
        return iv;
    }

    // Completes a witness once the kept variable is fixed; eliminated
    // variables are assigned interval midpoints in reverse elimination order.
    std::vector<Rat> back_substitute(const Rat& last_value) const {
        std::vector<Rat> z(static_cast<size_t>(nvars_));
        std::vector<bool> known(static_cast<size_t>(nvars_), false);
        z[static_cast<size_t>(nvars_ - 1)] = last_value;
        known[static_cast<size_t>(nvars_ - 1)] = true;
        for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
            int v = it->first;
            bool has_lo = false, has_hi = false;
            Rat lo, hi;
            for (const FmRow& row : it->second) {
                const Rat& a = row[static_cast<size_t>(v)];
                if (a == 0) continue;
                Rat rest = row.back();
                for (int u = 0; u < nvars_; ++u)
                    if (u != v && known[static_cast<size_t>(u)])
                        rest += row[static_cast<size_t>(u)] * z[static_cast<size_t>(u)];
                Rat bound = -rest / a;
                if (a > 0) {
                    if (!has_lo || bound > lo) lo = bound, has_lo = true;
                } else {
                    if (!has_hi || bound < hi) hi = bound, has_hi = true;
                }
            }
            Rat pick;
            if (has_lo && has_hi)
                pick = (lo + hi) / 2;
            else if (has_lo)
                pick = lo + 1;
            else if (has_hi)
                pick = hi - 1;
            z[static_cast<size_t>(v)] = pick;
            known[static_cast<size_t>(v)] = true;
        }
        return z;
    }

  private:
    static std::vector<FmRow> strip(const std::vector<fm_detail::TrackedRow>& rows) {
        std::vector<FmRow> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(r.coef);
        return out;
    }

    static int pick_variable(const std::vector<fm_detail::TrackedRow>& rows,
                             const std::vector<bool>& eliminated) {
        int best = -1;
        long best_cost = 0;
        for (int v = 0; v < static_cast<int>(eliminated.size()); ++v) {
            if (eliminated[static_cast<size_t>(v)]) continue;
            long pos = 0, neg = 0;
            for (const auto& r : rows) {
                const Rat& a = r.coef[static_cast<size_t>(v)];
                if (a > 0)
                    ++pos;
                else if (a < 0)
                    ++neg;
            }
            long cost = pos * neg - (pos + neg);
            if (best == -1 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        return best;
    }

    static std::vector<fm_detail::TrackedRow> eliminate(const std::vector<fm_detail::TrackedRow>& rows,
                                                        int v, int steps_done) {
        std::vector<const fm_detail::TrackedRow*> pos, neg;
        std::vector<fm_detail::TrackedRow> out;
        std::set<FmRow> seen;
        for (const auto& row : rows) {
            const Rat& a = row.coef[static_cast<size_t>(v)];
            if (a > 0)
                pos.push_back(&row);
            else if (a < 0)
                neg.push_back(&row);
            else if (seen.insert(row.coef).second)
                out.push_back(row);
        }
        size_t ancestor_cap = static_cast<size_t>(steps_done) + 1;
        for (const auto* p : pos)
            for (const auto* q : neg) {
                auto ancestors = p->ancestors | q->ancestors;
                if (ancestors.count() > ancestor_cap) continue;  // Imbert's rule
                const Rat& ap = p->coef[static_cast<size_t>(v)];
                const Rat& aq = q->coef[static_cast<size_t>(v)];
                FmRow comb(p->coef.size());
                for (size_t i = 0; i < comb.size(); ++i)
                    comb[i] = p->coef[i] * (-aq) + q->coef[i] * ap;
                comb[static_cast<size_t>(v)] = 0;
                fm_detail::normalize(comb);
                if (!seen.insert(comb).second) continue;
                out.push_back({std::move(comb), ancestors});
            }
        return out;
    }

    int nvars_;
    std::vector<std::pair<int, std::vector<FmRow>>> stages_;
    std::vector<FmRow> final_;
};

// Witness with the last variable (a slack) strictly positive and maximized up
// to the interior midpoint rule; nullopt when no interior exists.
inline std::optional<std::vector<Rat>> fm_interior_point(std::vector<FmRow> rows, int nvars) {
    FourierMotzkin fm(std::move(rows), nvars);
    auto iv = fm.last_var_interval();
    if (!iv.feasible || !iv.has_hi) return std::nullopt;  // callers bound the slack above
    if (iv.hi <= 0) return std::nullopt;
    Rat lo = iv.has_lo ? std::max(iv.lo, Rat(0)) : Rat(0);
    Rat pick = (lo + iv.hi) / 2;
    return fm.back_substitute(pick);
}

}  // namespace hurwitz
