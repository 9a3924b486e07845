#pragma once

#include <stdexcept>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct LinearSolution {
    SolveStatus status = SolveStatus::Unique;
    std::vector<Rat> values;
};

// Solves A c = b exactly for a (possibly overdetermined) rational system with
// full column rank expected. Denominators are cleared row-wise and the integer
// matrix is reduced by fraction-free (Bareiss) elimination, so no intermediate
// entry is ever rounded.
inline LinearSolution solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    size_t rows = a.size();
    size_t cols = rows ? a.front().size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_exact: rhs size");

    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (size_t j = 0; j < cols; ++j) lcm = boost::multiprecision::lcm(lcm, denominator(a[i][j]));
        lcm = boost::multiprecision::lcm(lcm, denominator(b[i]));
        for (size_t j = 0; j < cols; ++j) {
            Rat v = a[i][j] * lcm;
            m[i][j] = numerator(v);
        }
        Rat v = b[i] * lcm;
        m[i][cols] = numerator(v);
    }

    std::vector<size_t> pivot_row(cols, SIZE_MAX);
    Int prev_pivot = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = SIZE_MAX;
        for (size_t i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(m[rank], m[sel]);
        const Int p = m[rank][col];
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j <= cols; ++j) {
                Int v = p * m[i][j] - m[i][col] * m[rank][j];
                m[i][j] = v / prev_pivot;  // exact by the Bareiss identity
            }
            m[i][col] = 0;
        }
        prev_pivot = p;
        pivot_row[col] = rank;
        ++rank;
    }

    for (size_t i = rank; i < rows; ++i)
        if (m[i][cols] != 0) return {SolveStatus::Inconsistent, {}};
    for (size_t col = 0; col < cols; ++col)
        if (pivot_row[col] == SIZE_MAX) return {SolveStatus::Underdetermined, {}};

    std::vector<Rat> x(cols);
    for (size_t col = cols; col-- > 0;) {
        size_t i = pivot_row[col];
        Rat acc = Rat(m[i][cols]);
        for (size_t j = col + 1; j < cols; ++j) acc -= Rat(m[i][j]) * x[j];
        x[col] = acc / Rat(m[i][col]);
    }
    return {SolveStatus::Unique, std::move(x)};
}

}  // namespace hurwitz
