#pragma once

#include "pencils/linsys.hpp"

#include <vector>

namespace pencils {

/// Generators of an explicit pencil of quadrics in P^3 whose
/// F_q-members are all smooth, plus the shift element the construction
/// depends on.
struct QuadricPencilRecipe {
    FieldRef ctx;
    Fe c;
    HomForm f0;
    HomForm f1;
};

/// Odd q: c = 2b+1 for the smallest-code b with b^2+1 a non-square,
/// which makes c^2 - 2c + 5 = 4(b^2 + 1) a non-square as well. Such a b
/// exists for every odd q.
Fe find_shift_c_odd(const FieldRef& ctx);

/// Even q: the smallest-code c such that t^2 + t + c has no root, found
/// by scanning the image of u -> u^2 + u; cross-checked against the
/// trace criterion (rootless iff absolute trace 1).
Fe find_irreducible_shift_char2(const FieldRef& ctx);

/// x0^2+x1^2+x2^2+x3^2 and x0*x1+x1*x2+x2*x3+c*x3*x0, with c from
/// find_shift_c_odd.
QuadricPencilRecipe build_odd_pencil(const FieldRef& ctx);

/// x0^2+x1^2+x0*x1+x1*x2+c*x2*x3 and x0^2+x2^2+x1*x2+x0*x3, with c from
/// find_irreducible_shift_char2.
QuadricPencilRecipe build_even_pencil(const FieldRef& ctx);

LinearSystem pencil_of(const QuadricPencilRecipe& recipe);

/// Matrix of the pencil's partial-derivative coefficients: entry (i, j)
/// is s * [x_j](df0/dx_i) + t * [x_j](df1/dx_i), a degree-1 binary form.
/// Requires quadric generators over one field.
std::vector<std::vector<BiForm>> pencil_jacobian_matrix(const HomForm& f0,
                                                        const HomForm& f1);

/// Determinant of that matrix; the member for [s:t] is singular exactly
/// when this form vanishes at [s:t], so rootlessness certifies the whole
/// pencil at once for odd q.
BiForm pencil_determinant(const HomForm& f0, const HomForm& f1);

/// Whether the computed determinant equals the closed form
///   odd q:  ((1-c)t^2 + 2(c+1)st - 4s^2) * ((1-c)t^2 - 2(c+1)st - 4s^2)
///   even q: (t^2 + st + c s^2)^2
bool determinant_factorization_matches(const QuadricPencilRecipe& recipe);

/// The net of conics over GF(2) with all seven members smooth:
/// x^2+y^2+xz, xy+xz+z^2, x^2+yz.
LinearSystem conic_net_gf2();

} // namespace pencils
