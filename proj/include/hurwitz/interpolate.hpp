#pragma once

#include <stdexcept>
#include <vector>

#include "hurwitz/linear_solve.hpp"
#include "hurwitz/poly.hpp"

namespace hurwitz {

struct InterpolationError : std::runtime_error {
    enum Kind { Underdetermined, Inconsistent } kind;
    explicit InterpolationError(Kind k)
        : std::runtime_error(k == Underdetermined ? "interpolation system underdetermined"
                                                  : "interpolation samples inconsistent"),
          kind(k) {}
};

// Monomials of total degree `deg` in x_1..x_m, y_1..y_{n-1} (the canonical
// section leaves y_n out), listed in the canonical order.
inline std::vector<Monomial> homogeneous_basis(VarSpec vars, int deg) {
    std::vector<Monomial> basis;
    int nvars = vars.total() - 1;
    Monomial cur(static_cast<size_t>(vars.total()), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            cur[static_cast<size_t>(var)] = left;
            basis.push_back(cur);
            cur[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
        cur[static_cast<size_t>(var)] = 0;
    };
    if (nvars <= 0) {
        if (deg == 0) basis.push_back(cur);
        return basis;
    }
    rec(rec, 0, deg);
    return basis;
}

// Reconstructs the canonical-form homogeneous polynomial of the given degree
// from exact samples (point, value). Points must lie on the sum(x) = sum(y)
// hyperplane and inside a single chamber; a straddling sample set shows up as
// an inconsistent system.
inline MultiPoly interpolate_homogeneous(int m, int n, int deg,
                                         const std::vector<std::pair<std::vector<Rat>, Rat>>& samples) {
    VarSpec vars{m, n};
    auto basis = homogeneous_basis(vars, deg);
    if (samples.size() < basis.size()) throw InterpolationError(InterpolationError::Underdetermined);

    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    a.reserve(samples.size());
    for (const auto& [point, value] : samples) {
        if (static_cast<int>(point.size()) != vars.total())
            throw std::invalid_argument("sample point arity");
        std::vector<Rat> row;
        row.reserve(basis.size());
        for (const auto& mon : basis) {
            Rat t = 1;
            for (size_t i = 0; i < mon.size(); ++i)
                if (mon[i]) t *= rat_pow(point[i], mon[i]);
            row.push_back(t);
        }
        a.push_back(std::move(row));
        b.push_back(value);
    }

    auto sol = solve_exact(std::move(a), std::move(b));
    if (sol.status == SolveStatus::Underdetermined)
        throw InterpolationError(InterpolationError::Underdetermined);
    if (sol.status == SolveStatus::Inconsistent)
        throw InterpolationError(InterpolationError::Inconsistent);

    MultiPoly p(vars);
    for (size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], sol.values[i]);
    return p;
}

}  // namespace hurwitz
