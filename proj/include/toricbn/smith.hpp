#pragma once

// Smith normal form over Z for small dense matrices.

#include <cstddef>
#include <utility>
#include <vector>

#include "toricbn/lattice.hpp"

namespace toricbn {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

/// left * input * right == diagonal, with left/right unimodular and the
/// non-zero diagonal entries positive and forming a divisibility chain.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix right;
    std::vector<Integer> invariants; // min(rows, cols) entries, zeros last
};

namespace detail {

inline void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

inline void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    for (auto& row : a)
        std::swap(row[i], row[j]);
}

// row_dst += k * row_src
inline void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < a[dst].size(); ++c)
        a[dst][c] += k * a[src][c];
}

inline void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& k) {
    for (auto& row : a)
        row[dst] += k * row[src];
}

} // namespace detail

inline SmithForm smith_normal_form(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMatrix u = identity_matrix(rows);
    IntMatrix v = identity_matrix(cols);

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // smallest non-zero pivot in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        detail::swap_rows(a, t, pi);
        detail::swap_rows(u, t, pi);
        detail::swap_cols(a, t, pj);
        detail::swap_cols(v, t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                Integer q = a[i][t] / a[t][t];
                detail::add_row(a, i, t, -q);
                detail::add_row(u, i, t, -q);
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                Integer q = a[t][j] / a[t][t];
                detail::add_col(a, j, t, -q);
                detail::add_col(v, j, t, -q);
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean) {
                // a smaller remainder exists in row t or column t; pivot on it
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                detail::swap_rows(a, t, bi);
                detail::swap_rows(u, t, bi);
                detail::swap_cols(a, t, bj);
                detail::swap_cols(v, t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            detail::add_row(a, t, bad, Integer(1));
            detail::add_row(u, t, bad, Integer(1));
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t])
                x = -x;
            for (auto& x : u[t])
                x = -x;
        }
    }

    SmithForm out;
    out.invariants.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t)
        out.invariants.push_back(a[t][t]);
    out.diagonal = std::move(a);
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    IntMatrix c(n, std::vector<Integer>(m, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] += a[i][l] * b[l][j];
    return c;
}

} // namespace toricbn
