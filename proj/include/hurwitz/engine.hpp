#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "hurwitz/chamber.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/trees.hpp"

namespace hurwitz {

enum class Method { Auto, Oracle, Dfs, ClosedForm, ClosedFormLiteral, Trees, Chambers };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Oracle: return "oracle";
        case Method::Dfs: return "dfs";
        case Method::ClosedForm: return "closed_form";
        case Method::ClosedFormLiteral: return "closed_form_literal";
        case Method::Trees: return "trees";
        case Method::Chambers: return "chambers";
    }
    return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
    for (Method m : {Method::Auto, Method::Oracle, Method::Dfs, Method::ClosedForm,
                     Method::ClosedFormLiteral, Method::Trees, Method::Chambers})
        if (s == method_name(m)) return m;
    return std::nullopt;
}

struct MethodInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Synthesizes chamber polynomials by walking wall crossings out of the totally
// negative chamber, and dispatches every computation route for a pair.
class ChamberEngine {
  public:
    explicit ChamberEngine(Budgets budgets = {}) : budgets_(budgets), oracle_(budgets) {}

    FactorizationOracle& oracle() { return oracle_; }
    StarRecursion& stars() { return stars_; }
    const Budgets& budgets() const { return budgets_; }

    // P(sig) = totally negative polynomial plus signed wall-crossing deltas
    // along a path from the totally negative witness; every intermediate
    // chamber's polynomial is memoized on the way.
    MultiPoly chamber_polynomial(const ChamberSignature& sig, const ConePoint& witness) {
        auto key = std::make_tuple(sig.m, sig.n, sig.signs);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (sig.m + sig.n < 3) throw std::domain_error("no chamber polynomial for the (1,1) shape");

        ChamberSignature tn = totally_negative_signature(sig.m, sig.n);
        MultiPoly p = totally_negative_polynomial(sig.m, sig.n).canonicalized();
        memo_.try_emplace(std::make_tuple(sig.m, sig.n, tn.signs), p);
        if (sig == tn) return p;

        auto resonances = list_resonances(sig.m, sig.n);
        ChamberSignature cur = tn;
        for (const WallCrossing& c : wall_path(totally_negative_witness(sig.m, sig.n), witness)) {
            bool entering_positive = c.to_sign == '+';
            const ConePoint& positive_point = entering_positive ? c.point_after : c.point_before;
            size_t idx = static_cast<size_t>(
                std::find(resonances.begin(), resonances.end(), c.resonance) - resonances.begin());
            cur.signs[idx] = c.to_sign;
            auto cur_key = std::make_tuple(sig.m, sig.n, cur.signs);
            if (auto it = memo_.find(cur_key); it != memo_.end()) {
                p = it->second;
                continue;
            }
            MultiPoly delta = wall_crossing_delta(c.resonance, positive_point);
            p = (entering_positive ? p + delta : p - delta).canonicalized();
            memo_.emplace(std::move(cur_key), p);
        }
        if (!(cur == sig)) throw std::logic_error("wall path did not land in the requested chamber");
        return p;
    }

    // Difference of the polynomials of the chambers adjacent along x_I = y_J:
    //   binom(m+n-2, |I|+|J|-1) (x_I - y_J) P[mu(~I), mu_I - nu_J; nu(~J)]
    //                                       P[mu(I); nu(J), mu_I - nu_J],
    // with both factors taken in the sub-chambers that the positive-side point
    // selects and embedded back through the linear forms of their arguments.
    MultiPoly wall_crossing_delta(const Resonance& res, const ConePoint& p) {
        int m = p.m(), n = p.n();
        VarSpec vars{m, n};
        Rat wall_val = p.wall_value(res);
        if (wall_val == 0) throw OnWallError(res);
        if (wall_val < 0) throw std::invalid_argument("need the positive side of the wall");
        MultiPoly wall = x_subset_form(vars, res.I) - y_subset_form(vars, res.J);

        auto in = [](const std::vector<int>& set, int v) {
            return std::find(set.begin(), set.end(), v) != set.end();
        };

        std::vector<std::pair<Rat, MultiPoly>> xs, ys;
        for (int i = 1; i <= m; ++i)
            if (!in(res.I, i)) xs.emplace_back(p.x[static_cast<size_t>(i - 1)], MultiPoly::variable(vars, i - 1));
        xs.emplace_back(wall_val, wall);
        for (int j = 1; j <= n; ++j)
            if (!in(res.J, j)) ys.emplace_back(p.y[static_cast<size_t>(j - 1)], MultiPoly::variable(vars, m + j - 1));
        MultiPoly f1 = embedded_sub_polynomial(xs, ys);

        xs.clear();
        ys.clear();
        for (int i : res.I) xs.emplace_back(p.x[static_cast<size_t>(i - 1)], MultiPoly::variable(vars, i - 1));
        for (int j : res.J) ys.emplace_back(p.y[static_cast<size_t>(j - 1)], MultiPoly::variable(vars, m + j - 1));
        ys.emplace_back(wall_val, wall);
        MultiPoly f2 = embedded_sub_polynomial(xs, ys);

        Rat coef(binomial(m + n - 2, static_cast<long>(res.I.size() + res.J.size()) - 1));
        return (coef * (wall * f1 * f2)).canonicalized();
    }

    // Sub-chamber signatures selected by a point for the two delta factors;
    // exposed so invariance over witness choice can be checked directly.
    std::pair<ChamberSignature, ChamberSignature> delta_sub_signatures(const Resonance& res,
                                                                       const ConePoint& p) {
        int m = p.m(), n = p.n();
        Rat wall_val = p.wall_value(res);
        auto in = [](const std::vector<int>& set, int v) {
            return std::find(set.begin(), set.end(), v) != set.end();
        };
        std::vector<Rat> x1, y1, x2, y2;
        for (int i = 1; i <= m; ++i)
            (in(res.I, i) ? x2 : x1).push_back(p.x[static_cast<size_t>(i - 1)]);
        for (int j = 1; j <= n; ++j)
            (in(res.J, j) ? y2 : y1).push_back(p.y[static_cast<size_t>(j - 1)]);
        x1.push_back(wall_val);
        y2.push_back(wall_val);
        auto sort_desc = [](std::vector<Rat>& v) { std::stable_sort(v.begin(), v.end(), std::greater<>()); };
        sort_desc(x1), sort_desc(y1), sort_desc(x2), sort_desc(y2);
        ConePoint s1{x1, y1}, s2{x2, y2};
        return {signature_of(s1), signature_of(s2)};
    }

    Rat compute(const HurwitzPair& pair, Method method = Method::Auto) {
        switch (method) {
            case Method::Auto: {
                int m = pair.mu.length(), n = pair.nu.length();
                if (m <= 3 || n <= 3) return closed_form_value(pair, false);
                return stars_.value(pair.mu, pair.nu);
            }
            case Method::Oracle:
                return oracle_.double_hurwitz(pair);
            case Method::Dfs:
                return Rat(aut_size(pair.mu) * aut_size(pair.nu)) *
                       oracle_.dfs_count(pair.mu, pair.nu, pair.r);
            case Method::ClosedForm:
                return closed_form_value(pair, false);
            case Method::ClosedFormLiteral:
                return closed_form_value(pair, true);
            case Method::Trees:
                return stars_.value(pair.mu, pair.nu);
            case Method::Chambers:
                return chambers_value(pair);
        }
        throw std::logic_error("unreachable");
    }

  private:
    // Sorts the tagged sub-coordinates, resolves their chamber, and rewrites
    // the sub-chamber polynomial in the parent variables. Ties sort stably;
    // either order names the same chamber, whose polynomial is symmetric under
    // the tied swap, so the embedding is independent of the tie break.
    MultiPoly embedded_sub_polynomial(std::vector<std::pair<Rat, MultiPoly>> xs,
                                      std::vector<std::pair<Rat, MultiPoly>> ys) {
        auto desc = [](const auto& a, const auto& b) { return a.first > b.first; };
        std::stable_sort(xs.begin(), xs.end(), desc);
        std::stable_sort(ys.begin(), ys.end(), desc);
        ConePoint sub;
        for (const auto& [v, f] : xs) sub.x.push_back(v);
        for (const auto& [v, f] : ys) sub.y.push_back(v);
        MultiPoly sub_poly = chamber_polynomial(signature_of(sub), sub);
        std::vector<MultiPoly> forms;
        for (auto& [v, f] : xs) forms.push_back(std::move(f));
        for (auto& [v, f] : ys) forms.push_back(std::move(f));
        return sub_poly.substitute(forms);
    }

    Rat closed_form_value(const HurwitzPair& pair, bool literal) {
        int m = pair.mu.length(), n = pair.nu.length();
        if (m == 1) return one_part_value(pair.d, pair.nu);
        if (n == 1) return one_part_value(pair.d, pair.mu);
        // The literal flag only changes the three-part sum, so that variant
        // routes three-part shapes through it even when a two-part transpose
        // would do.
        bool transpose;
        if (literal && (m == 3 || n == 3))
            transpose = m != 3;
        else
            transpose = !(m == 2 || (m == 3 && n != 2));
        const Partition& a = transpose ? pair.nu : pair.mu;
        const Partition& b = transpose ? pair.mu : pair.nu;
        int am = a.length();
        if (am > 3) throw MethodInapplicable("closed forms cover one-, two- and three-part shapes");
        ConePoint sel = nudge_off_walls(ConePoint::from_pair(a, b));
        if (am == 2) return two_part_value(a.part(1), a.part(2), b, &sel.y);
        return three_part_value(a.part(1), a.part(2), a.part(3), b, literal, &sel.y);
    }

    Rat chambers_value(const HurwitzPair& pair) {
        int m = pair.mu.length(), n = pair.nu.length();
        if (m + n < 3) return one_part_value(pair.d, pair.nu);
        if (m + n > budgets_.max_mn) throw BudgetExceeded("chamber evaluation bound exceeded");
        ConePoint point = ConePoint::from_pair(pair.mu, pair.nu);
        ConePoint sel = nudge_off_walls(point);
        MultiPoly p = chamber_polynomial(signature_of(sel), sel);
        return p.eval(point.as_vector());
    }

    Budgets budgets_;
    FactorizationOracle oracle_;
    StarRecursion stars_;
    std::map<std::tuple<int, int, std::string>, MultiPoly> memo_;
};

// ---- cross-method verification ---------------------------------------------

struct VerifyEntry {
    Partition mu, nu;
    int d = 0, r = 0;
    std::vector<std::pair<Method, Rat>> values;
    bool disagree = false;
};

struct VerifyReport {
    int d_max = 0;
    std::vector<VerifyEntry> entries;
    std::vector<size_t> disagreements;
    bool ok() const { return disagreements.empty(); }
};

inline std::vector<Method> default_verify_methods() {
    return {Method::Oracle, Method::Dfs, Method::ClosedForm, Method::Trees, Method::Chambers};
}

// Runs every applicable method on every pair with degree <= d_max. Instances
// are fanned over a worker pool; each worker owns its engine, so reports are
// identical for any worker count.
inline VerifyReport verify_sweep(int d_max, std::vector<Method> methods = {}, int workers = 1,
                                 const Budgets& budgets = {}) {
    if (methods.empty()) methods = default_verify_methods();
    std::vector<std::pair<Partition, Partition>> instances;
    for (int d = 1; d <= d_max; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts) instances.emplace_back(Partition(mu), Partition(nu));
    }

    VerifyReport report;
    report.d_max = d_max;
    report.entries.resize(instances.size());
    workers = std::max(1, workers);

    auto run_range = [&](int offset, int stride) {
        ChamberEngine engine(budgets);
        for (size_t i = static_cast<size_t>(offset); i < instances.size(); i += static_cast<size_t>(stride)) {
            HurwitzPair pair{instances[i].first, instances[i].second};
            VerifyEntry entry;
            entry.mu = pair.mu;
            entry.nu = pair.nu;
            entry.d = pair.d;
            entry.r = pair.r;
            for (Method mth : methods) {
                if ((mth == Method::ClosedForm || mth == Method::ClosedFormLiteral) &&
                    pair.mu.length() > 3 && pair.nu.length() > 3)
                    continue;
                if (mth == Method::Chambers && pair.mu.length() + pair.nu.length() > budgets.max_mn)
                    continue;
                try {
                    entry.values.emplace_back(mth, engine.compute(pair, mth));
                } catch (const BudgetExceeded&) {
                }
            }
            for (size_t k = 1; k < entry.values.size(); ++k)
                if (entry.values[k].second != entry.values[0].second) entry.disagree = true;
            report.entries[i] = std::move(entry);
        }
    };

    if (workers == 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w, workers);
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < report.entries.size(); ++i)
        if (report.entries[i].disagree) report.disagreements.push_back(i);
    return report;
}

}  // namespace hurwitz
