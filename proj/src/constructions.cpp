#include "pencils/constructions.hpp"

#include <stdexcept>

namespace pencils {
namespace {

Mono unit2(std::uint32_t nvars, std::uint32_t i, std::uint32_t j) {
    Mono m(nvars, 0);
    ++m[i];
    ++m[j];
    return m;
}

void require_quadric_pair(const HomForm& f0, const HomForm& f1) {
    if (!f0.ctx()->same(*f1.ctx()))
        throw std::invalid_argument("pencil generators over different fields");
    if (f0.nvars() != f1.nvars())
        throw std::invalid_argument("pencil generators disagree in arity");
    if (f0.degree() != 2 || f1.degree() != 2)
        throw std::invalid_argument("pencil generators must be quadrics");
}

} // namespace

Fe find_shift_c_odd(const FieldRef& ctx) {
    const Field& k = *ctx;
    if (k.q() % 2 == 0)
        throw std::invalid_argument("find_shift_c_odd: q must be odd");
    for (std::uint64_t b = 0; b < k.q(); ++b) {
        Fe bb = static_cast<Fe>(b);
        Fe probe = k.add(k.mul(bb, bb), 1);
        if (k.is_square(probe)) continue;
        Fe c = k.add(k.add(bb, bb), 1);
        // c^2 - 2c + 5 = 4(b^2 + 1) must inherit the non-square
        Fe check = k.add(k.sub(k.mul(c, c), k.add(c, c)), k.from_int(5));
        if (k.is_square(check))
            throw std::logic_error("find_shift_c_odd: shift check failed");
        return c;
    }
    throw std::logic_error("find_shift_c_odd: no witness in the field");
}

Fe find_irreducible_shift_char2(const FieldRef& ctx) {
    const Field& k = *ctx;
    if (k.p() != 2)
        throw std::invalid_argument("find_irreducible_shift_char2: q must be even");
    std::vector<bool> attained(k.q(), false);
    for (std::uint64_t u = 0; u < k.q(); ++u) {
        Fe uu = static_cast<Fe>(u);
        attained[k.add(k.mul(uu, uu), uu)] = true;
    }
    for (std::uint64_t c = 0; c < k.q(); ++c) {
        if (attained[c]) continue;
        if (k.trace_to_prime(static_cast<Fe>(c)) != 1)
            throw std::logic_error(
                "find_irreducible_shift_char2: trace criterion disagrees");
        return static_cast<Fe>(c);
    }
    throw std::logic_error("find_irreducible_shift_char2: no rootless shift");
}

QuadricPencilRecipe build_odd_pencil(const FieldRef& ctx) {
    Fe c = find_shift_c_odd(ctx);
    HomForm f0(ctx, 4, 2), f1(ctx, 4, 2);
    for (std::uint32_t i = 0; i < 4; ++i) f0.add_term(unit2(4, i, i), 1);
    f1.add_term(unit2(4, 0, 1), 1);
    f1.add_term(unit2(4, 1, 2), 1);
    f1.add_term(unit2(4, 2, 3), 1);
    f1.add_term(unit2(4, 3, 0), c);
    return QuadricPencilRecipe{ctx, c, std::move(f0), std::move(f1)};
}

QuadricPencilRecipe build_even_pencil(const FieldRef& ctx) {
    Fe c = find_irreducible_shift_char2(ctx);
    HomForm f0(ctx, 4, 2), f1(ctx, 4, 2);
    f0.add_term(unit2(4, 0, 0), 1);
    f0.add_term(unit2(4, 1, 1), 1);
    f0.add_term(unit2(4, 0, 1), 1);
    f0.add_term(unit2(4, 1, 2), 1);
    f0.add_term(unit2(4, 2, 3), c);
    f1.add_term(unit2(4, 0, 0), 1);
    f1.add_term(unit2(4, 2, 2), 1);
    f1.add_term(unit2(4, 1, 2), 1);
    f1.add_term(unit2(4, 0, 3), 1);
    return QuadricPencilRecipe{ctx, c, std::move(f0), std::move(f1)};
}

LinearSystem pencil_of(const QuadricPencilRecipe& recipe) {
    return LinearSystem({recipe.f0, recipe.f1});
}

std::vector<std::vector<BiForm>> pencil_jacobian_matrix(const HomForm& f0,
                                                        const HomForm& f1) {
    require_quadric_pair(f0, f1);
    const std::uint32_t n1 = f0.nvars();
    std::vector<std::vector<BiForm>> m;
    m.reserve(n1);
    for (std::uint32_t i = 0; i < n1; ++i) {
        HomForm d0 = partial(f0, i), d1 = partial(f1, i);
        std::vector<BiForm> row;
        row.reserve(n1);
        for (std::uint32_t j = 0; j < n1; ++j) {
            Mono xj(n1, 0);
            xj[j] = 1;
            row.emplace_back(f0.ctx(), std::vector<Fe>{d0.coeff(xj), d1.coeff(xj)});
        }
        m.push_back(std::move(row));
    }
    return m;
}

BiForm pencil_determinant(const HomForm& f0, const HomForm& f1) {
    return det_matrix(pencil_jacobian_matrix(f0, f1));
}

bool determinant_factorization_matches(const QuadricPencilRecipe& recipe) {
    const Field& k = *recipe.ctx;
    BiForm det = pencil_determinant(recipe.f0, recipe.f1);
    if (k.p() == 2) {
        BiForm g(recipe.ctx, {recipe.c, 1, 1});
        return det == bi_mul(g, g);
    }
    Fe one_minus_c = k.sub(1, recipe.c);
    Fe twice_c1 = k.mul(k.from_int(2), k.add(recipe.c, 1));
    Fe minus4 = k.from_int(-4);
    BiForm g1(recipe.ctx, {minus4, twice_c1, one_minus_c});
    BiForm g2(recipe.ctx, {minus4, k.neg(twice_c1), one_minus_c});
    return det == bi_mul(g1, g2);
}

LinearSystem conic_net_gf2() {
    FieldRef gf2 = make_field(2, 1);
    HomForm f0 = parse_form(gf2, "x^2 + y^2 + x*z", 3);
    HomForm f1 = parse_form(gf2, "x*y + x*z + z^2", 3);
    HomForm f2 = parse_form(gf2, "x^2 + y*z", 3);
    return LinearSystem({std::move(f0), std::move(f1), std::move(f2)});
}

} // namespace pencils
