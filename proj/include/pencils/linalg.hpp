#pragma once

#include "pencils/gf.hpp"

#include <cstddef>
#include <vector>

namespace pencils {

/// Row-major matrix over one field.
using Matrix = std::vector<std::vector<Fe>>;

/// Reduced row echelon form in place; returns the rank. Pivot choice is
/// first nonzero in column order, so the result is deterministic.
std::size_t rref(const FieldRef& ctx, Matrix& m);

std::size_t matrix_rank(const FieldRef& ctx, Matrix m);

/// Basis of the right nullspace, one vector per free column in ascending
/// column order; the free coordinate of each vector is 1.
std::vector<std::vector<Fe>> nullspace(const FieldRef& ctx, Matrix m);

} // namespace pencils
