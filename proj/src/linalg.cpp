#include "pencils/linalg.hpp"

#include <stdexcept>

namespace pencils {

std::size_t rref(const FieldRef& ctx, Matrix& m) {
    const Field& k = *ctx;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Fe s = k.inv(m[rank][col]);
        if (s != 1)
            for (std::size_t j = col; j < cols; ++j)
                m[rank][j] = k.mul(m[rank][j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Fe f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(const FieldRef& ctx, Matrix m) { return rref(ctx, m); }

std::vector<std::vector<Fe>> nullspace(const FieldRef& ctx, Matrix m) {
    const Field& k = *ctx;
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    std::size_t rank = rref(ctx, m);

    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t col = 0;
        while (col < cols && m[i][col] == 0) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = true;
    }

    std::vector<std::vector<Fe>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fe> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = k.neg(m[i][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pencils
