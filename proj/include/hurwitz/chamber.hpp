#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/fourier_motzkin.hpp"
#include "hurwitz/oracle.hpp"  // Budgets, BudgetExceeded
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// The wall x_I = y_J. Canonical writing keeps index 1 out of I; J is a
// nonempty proper subset of [1,n].
struct Resonance {
    std::vector<int> I;  // 1-based mu indices, subset of [2,m]
    std::vector<int> J;  // 1-based nu indices

    friend bool operator==(const Resonance&, const Resonance&) = default;
};

inline std::vector<Resonance> list_resonances(int m, int n) {
    std::vector<Resonance> out;
    if (m < 2 || n < 2) return out;
    for (int imask = 1; imask < (1 << (m - 1)); ++imask)
        for (int jmask = 1; jmask < (1 << n) - 1; ++jmask) {
            Resonance r;
            for (int i = 0; i < m - 1; ++i)
                if (imask & (1 << i)) r.I.push_back(i + 2);
            for (int j = 0; j < n; ++j)
                if (jmask & (1 << j)) r.J.push_back(j + 1);
            out.push_back(std::move(r));
        }
    return out;
}

// A rational point of the parameter cone: coordinates weakly decreasing,
// strictly positive tails, equal coordinate sums.
struct ConePoint {
    std::vector<Rat> x, y;

    int m() const { return static_cast<int>(x.size()); }
    int n() const { return static_cast<int>(y.size()); }

    void validate() const {
        if (x.empty() || y.empty()) throw std::invalid_argument("empty cone point");
        for (size_t i = 1; i < x.size(); ++i)
            if (x[i - 1] < x[i]) throw std::invalid_argument("x not sorted");
        for (size_t j = 1; j < y.size(); ++j)
            if (y[j - 1] < y[j]) throw std::invalid_argument("y not sorted");
        if (x.back() <= 0 || y.back() <= 0) throw std::invalid_argument("coordinates must be positive");
        Rat sx = 0, sy = 0;
        for (const Rat& v : x) sx += v;
        for (const Rat& v : y) sy += v;
        if (sx != sy) throw std::invalid_argument("coordinate sums differ");
    }

    Rat wall_value(const Resonance& r) const {
        Rat s = 0;
        for (int i : r.I) s += x[static_cast<size_t>(i - 1)];
        for (int j : r.J) s -= y[static_cast<size_t>(j - 1)];
        return s;
    }

    std::vector<Rat> as_vector() const {
        std::vector<Rat> v = x;
        v.insert(v.end(), y.begin(), y.end());
        return v;
    }

    static ConePoint from_pair(const Partition& mu, const Partition& nu) {
        ConePoint p;
        for (int v : mu.parts()) p.x.emplace_back(v);
        for (int v : nu.parts()) p.y.emplace_back(v);
        return p;
    }
};

struct OnWallError : std::runtime_error {
    Resonance resonance;
    explicit OnWallError(Resonance r) : std::runtime_error("point lies on a wall"), resonance(std::move(r)) {}
};

// Sign vector over the canonical resonances; identifies a chamber.
struct ChamberSignature {
    int m = 0, n = 0;
    std::string signs;  // '+' / '-' aligned with list_resonances(m, n)

    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
    friend auto operator<=>(const ChamberSignature&, const ChamberSignature&) = default;
};

inline ChamberSignature totally_negative_signature(int m, int n) {
    ChamberSignature sig{m, n, {}};
    sig.signs.assign(list_resonances(m, n).size(), '-');
    return sig;
}

inline ChamberSignature signature_of(const ConePoint& p) {
    p.validate();
    ChamberSignature sig{p.m(), p.n(), {}};
    for (const Resonance& r : list_resonances(p.m(), p.n())) {
        Rat v = p.wall_value(r);
        if (v == 0) throw OnWallError(r);
        sig.signs += v > 0 ? '+' : '-';
    }
    return sig;
}

// Interior witness of the totally negative chamber: x_1 takes nearly the
// whole mass, the remaining x coordinates share less than min_J y_J.
inline ConePoint totally_negative_witness(int m, int n) {
    ConePoint p;
    p.y.assign(static_cast<size_t>(n), Rat(1, n));
    if (m == 1) {
        p.x = {Rat(1)};
    } else {
        Rat s(1, 2 * n);
        Rat used = 0;
        for (int i = 2; i <= m; ++i) {
            Rat xi = s * int_pow(Int(2), static_cast<unsigned long>(m - i)) /
                     Rat(int_pow(Int(2), static_cast<unsigned long>(m - 1)) - 1);
            p.x.push_back(xi);
            used += xi;
        }
        p.x.insert(p.x.begin(), Rat(1) - used);
    }
    p.validate();
    return p;
}

// Exact interior witness for a sign vector, or nullopt when the signs are
// infeasible. Encoded as a Fourier-Motzkin system over
// (x_2..x_m, y_1..y_{n-1}, t) with sum(x) = sum(y) = 1 substituted in and the
// slack t under every strict constraint.
inline std::optional<ConePoint> feasible_point(const ChamberSignature& sig) {
    int m = sig.m, n = sig.n;
    auto resonances = list_resonances(m, n);
    if (resonances.size() != sig.signs.size()) throw std::invalid_argument("signature arity");
    if (m == 1 || n == 1) return totally_negative_witness(m, n);

    int nvars = (m - 1) + (n - 1) + 1;
    int tvar = nvars - 1;
    auto xrow = [&](int i) {  // coefficient row of the coordinate x_i
        FmRow row(static_cast<size_t>(nvars + 1), Rat(0));
        if (i == 1) {
            row.back() = 1;
            for (int k = 0; k < m - 1; ++k) row[static_cast<size_t>(k)] = -1;
        } else {
            row[static_cast<size_t>(i - 2)] = 1;
        }
        return row;
    };
    auto yrow = [&](int j) {
        FmRow row(static_cast<size_t>(nvars + 1), Rat(0));
        if (j == n) {
            row.back() = 1;
            for (int k = 0; k < n - 1; ++k) row[static_cast<size_t>(m - 1 + k)] = -1;
        } else {
            row[static_cast<size_t>(m - 1 + j - 1)] = 1;
        }
        return row;
    };
    auto plus_into = [](FmRow& a, const FmRow& b, int sign) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
    };

    std::vector<FmRow> rows;
    for (int i = 1; i < m; ++i) {
        FmRow r = xrow(i);
        plus_into(r, xrow(i + 1), -1);
        rows.push_back(std::move(r));
    }
    for (int j = 1; j < n; ++j) {
        FmRow r = yrow(j);
        plus_into(r, yrow(j + 1), -1);
        rows.push_back(std::move(r));
    }
    {
        FmRow r = xrow(m);
        r[static_cast<size_t>(tvar)] -= 1;
        rows.push_back(std::move(r));
        r = yrow(n);
        r[static_cast<size_t>(tvar)] -= 1;
        rows.push_back(std::move(r));
        FmRow cap(static_cast<size_t>(nvars + 1), Rat(0));
        cap[static_cast<size_t>(tvar)] = -1;
        cap.back() = 1;  // t <= 1
        rows.push_back(std::move(cap));
    }
    for (size_t k = 0; k < resonances.size(); ++k) {
        FmRow form(static_cast<size_t>(nvars + 1), Rat(0));
        for (int i : resonances[k].I) plus_into(form, xrow(i), 1);
        for (int j : resonances[k].J) plus_into(form, yrow(j), -1);
        if (sig.signs[k] == '-')
            for (Rat& v : form) v = -v;
        form[static_cast<size_t>(tvar)] -= 1;
        rows.push_back(std::move(form));
    }

    auto z = fm_interior_point(std::move(rows), nvars);
    if (!z) return std::nullopt;

    ConePoint p;
    Rat used = 0;
    for (int i = 2; i <= m; ++i) {
        p.x.push_back((*z)[static_cast<size_t>(i - 2)]);
        used += p.x.back();
    }
    p.x.insert(p.x.begin(), Rat(1) - used);
    used = 0;
    for (int j = 1; j < n; ++j) {
        p.y.push_back((*z)[static_cast<size_t>(m - 1 + j - 1)]);
        used += p.y.back();
    }
    p.y.push_back(Rat(1) - used);
    if (!(signature_of(p) == sig)) throw std::logic_error("feasibility witness mismatch");
    return p;
}

// Breadth-first chamber walk from the totally negative signature, flipping one
// sign at a time and keeping the feasible ones. The arrangement lives in a
// convex cone, so single-sign flips reach every chamber.
inline std::vector<std::pair<ChamberSignature, ConePoint>> enumerate_chambers(
    int m, int n, const Budgets& budgets = {}) {
    if (m + n > budgets.max_mn) throw BudgetExceeded("chamber enumeration bound exceeded");
    std::vector<std::pair<ChamberSignature, ConePoint>> out;
    if (m == 1 || n == 1) {
        out.emplace_back(totally_negative_signature(m, n), totally_negative_witness(m, n));
        return out;
    }
    std::map<std::string, ConePoint> found;
    std::queue<ChamberSignature> frontier;
    ChamberSignature tn = totally_negative_signature(m, n);
    found.emplace(tn.signs, totally_negative_witness(m, n));
    frontier.push(tn);
    while (!frontier.empty()) {
        ChamberSignature sig = frontier.front();
        frontier.pop();
        for (size_t k = 0; k < sig.signs.size(); ++k) {
            ChamberSignature next = sig;
            next.signs[k] = next.signs[k] == '+' ? '-' : '+';
            if (found.contains(next.signs)) continue;
            if (auto w = feasible_point(next)) {
                found.emplace(next.signs, std::move(*w));
                frontier.push(next);
            }
        }
    }
    for (auto& [signs, witness] : found)
        out.emplace_back(ChamberSignature{m, n, signs}, witness);
    return out;
}

// One transversal wall crossing of a straight segment.
struct WallCrossing {
    Resonance resonance;
    Rat t_cross;
    char from_sign = '-', to_sign = '+';
    ConePoint point_before, point_after;
};

namespace chamber_detail {

// Deterministic in-chamber perturbation: distinct geometric offsets on the
// free coordinates, compensated on x_1 and y_n. Attempt k shrinks the step
// and rotates the offset base.
inline std::optional<ConePoint> dither(const ConePoint& p, int attempt) {
    ChamberSignature sig = signature_of(p);
    Rat margin;
    bool first = true;
    for (const Resonance& r : list_resonances(p.m(), p.n())) {
        Rat v = abs(p.wall_value(r));
        if (first || v < margin) margin = v, first = false;
    }
    if (first) return std::nullopt;  // no walls, nothing to separate
    margin = std::min(margin, std::min(p.x.back(), p.y.back()));
    int base = 2 + attempt;
    Rat eta = margin / ((p.m() + p.n()) * 4);
    for (int k = 0; k < attempt; ++k) eta /= 2;

    ConePoint q = p;
    Rat moved = 0;
    Rat scale = 1;
    for (size_t i = 1; i < q.x.size(); ++i) {
        scale /= base;
        Rat delta = eta * scale;
        q.x[i] += delta;
        moved += delta;
    }
    q.x[0] -= moved;
    moved = 0;
    for (size_t j = 0; j + 1 < q.y.size(); ++j) {
        scale /= base;
        Rat delta = eta * scale;
        q.y[j] += delta;
        moved += delta;
    }
    if (!q.y.empty()) q.y.back() -= moved;
    try {
        q.validate();
        if (!(signature_of(q) == sig)) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return q;
}

}  // namespace chamber_detail

// Crossings of the straight segment from -> to, ordered by path parameter,
// each through a single wall. Coincident crossing parameters are resolved by
// deterministically dithering the start point inside its chamber.
inline std::vector<WallCrossing> wall_path(const ConePoint& from, const ConePoint& to) {
    ChamberSignature s0 = signature_of(from);
    ChamberSignature s1 = signature_of(to);
    if (s0.m != s1.m || s0.n != s1.n) throw std::invalid_argument("endpoint shape mismatch");
    auto resonances = list_resonances(s0.m, s0.n);

    ConePoint start = from;
    for (int attempt = 0; attempt <= 64; ++attempt) {
        std::vector<std::pair<Rat, size_t>> hits;
        for (size_t k = 0; k < resonances.size(); ++k) {
            Rat f0 = start.wall_value(resonances[k]);
            Rat f1 = to.wall_value(resonances[k]);
            if ((f0 > 0) == (f1 > 0)) continue;
            hits.emplace_back(f0 / (f0 - f1), k);
        }
        std::sort(hits.begin(), hits.end());
        bool clean = true;
        for (size_t i = 1; i < hits.size(); ++i)
            if (hits[i].first == hits[i - 1].first) clean = false;
        if (!clean) {
            if (auto d = chamber_detail::dither(start, attempt + 1)) start = std::move(*d);
            continue;
        }

        auto at = [&](const Rat& t) {
            ConePoint p;
            p.x.resize(start.x.size());
            p.y.resize(start.y.size());
            for (size_t i = 0; i < p.x.size(); ++i)
                p.x[i] = start.x[i] + t * (to.x[i] - start.x[i]);
            for (size_t j = 0; j < p.y.size(); ++j)
                p.y[j] = start.y[j] + t * (to.y[j] - start.y[j]);
            return p;
        };
        std::vector<WallCrossing> out;
        for (size_t i = 0; i < hits.size(); ++i) {
            const auto& [t, k] = hits[i];
            WallCrossing c;
            c.resonance = resonances[k];
            c.t_cross = t;
            Rat f0 = start.wall_value(resonances[k]);
            c.from_sign = f0 > 0 ? '+' : '-';
            c.to_sign = f0 > 0 ? '-' : '+';
            Rat prev = i == 0 ? Rat(0) : hits[i - 1].first;
            Rat next = i + 1 == hits.size() ? Rat(1) : hits[i + 1].first;
            c.point_before = at((prev + t) / 2);
            c.point_after = at((t + next) / 2);
            out.push_back(std::move(c));
        }
        return out;
    }
    throw std::runtime_error("wall_path: dithering failed to separate crossings");
}

// Deterministic off-wall nudge for lattice points that sit on resonances: nu
// receives a sum-preserving tilt eps * (base^(n-j) - mean) whose subset sums
// miss every wall; mu is left untouched. Returns `to` unchanged when already
// off every wall.
inline ConePoint nudge_off_walls(const ConePoint& p) {
    p.validate();
    auto resonances = list_resonances(p.m(), p.n());
    std::vector<Rat> orig;
    bool on_wall = false;
    Rat margin;
    bool have_margin = false;
    for (const Resonance& r : resonances) {
        orig.push_back(p.wall_value(r));
        Rat v = abs(orig.back());
        if (v == 0)
            on_wall = true;
        else if (!have_margin || v < margin)
            margin = v, have_margin = true;
    }
    if (!on_wall) return p;
    int n = p.n();

    // Acceptance: every wall value nonzero, and walls the point was strictly
    // off keep their sign, so the perturbed chamber's closure contains p.
    auto acceptable = [&](const ConePoint& q) {
        for (size_t k = 0; k < resonances.size(); ++k) {
            Rat v = q.wall_value(resonances[k]);
            if (v == 0) return false;
            if (orig[k] != 0 && (v > 0) != (orig[k] > 0)) return false;
        }
        return true;
    };

    for (int base = 2; base <= 2 + 4 * static_cast<int>(resonances.size()); ++base) {
        std::vector<Rat> dir(static_cast<size_t>(n));
        Rat mean = 0;
        for (int j = 0; j < n; ++j) {
            dir[static_cast<size_t>(j)] = rat_pow(Rat(base), n - 1 - j);
            mean += dir[static_cast<size_t>(j)];
        }
        mean /= n;
        Rat width = 0;
        for (auto& v : dir) {
            v -= mean;
            width = std::max(width, Rat(abs(v)));
        }
        Rat eps = std::min(have_margin ? margin : Rat(1), p.y.back()) / (2 * (Rat(n) * width + 1));
        for (int shrink = 0; shrink < 8; ++shrink, eps /= 4) {
            ConePoint q = p;
            for (int j = 0; j < n; ++j) q.y[static_cast<size_t>(j)] += eps * dir[static_cast<size_t>(j)];
            try {
                q.validate();
            } catch (const std::exception&) {
                continue;
            }
            if (acceptable(q)) return q;
        }
    }
    throw std::runtime_error("nudge_off_walls: no perturbation direction worked");
}

}  // namespace hurwitz
