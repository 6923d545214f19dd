#pragma once

#include "pencils/gf.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pencils {

/// Point of P^n(F_q) in normalized coordinates: the first nonzero
/// coordinate equals 1.
struct ProjPoint {
    FieldRef ctx;
    std::vector<Fe> coords;

    bool operator==(const ProjPoint& other) const {
        return ctx->same(*other.ctx) && coords == other.coords;
    }
};

/// Line in P^2(F_q), stored by its normalized dual coordinates
/// [u0:u1:u2]; the line is u0 x0 + u1 x1 + u2 x2 = 0.
struct ProjLine {
    FieldRef ctx;
    std::array<Fe, 3> dual;

    bool operator==(const ProjLine& other) const {
        return ctx->same(*other.ctx) && dual == other.dual;
    }
};

/// Scales v so its first nonzero entry is 1; throws on the zero vector.
std::vector<Fe> normalize_coords(const FieldRef& ctx, std::span<const Fe> v);

/// (q^(n+1) - 1) / (q - 1)
std::uint64_t point_count(std::uint64_t q, std::uint32_t n);

/// q^2 + q + 1
std::uint64_t line_count(std::uint64_t q);

/// The index-th point of P^n(F_q) in the fixed enumeration order:
/// affine charts by position of the leading 1 (coordinate 0 first), and
/// within a chart the free coordinates run as big-endian base-q digits
/// of the local index. Writes n+1 coordinates into out.
void point_at_into(const FieldRef& ctx, std::uint32_t n, std::uint64_t index,
                   std::span<Fe> out);

ProjPoint point_at(const FieldRef& ctx, std::uint32_t n, std::uint64_t index);

/// All points, in enumeration order. Materializes the whole space; meant
/// for small q and tests.
std::vector<ProjPoint> enum_points(const FieldRef& ctx, std::uint32_t n);

/// The index-th line of P^2(F_q): dual coordinates enumerate like points.
ProjLine line_at(const FieldRef& ctx, std::uint64_t index);

std::vector<ProjLine> enum_lines(const FieldRef& ctx);

/// Two independent points spanning the line, deterministically chosen
/// from the dual coordinates.
std::pair<std::array<Fe, 3>, std::array<Fe, 3>> line_basis(const ProjLine& l);

/// The q+1 points of the line in the order [s:t] = [1:0], [x:1] for
/// ascending x, with respect to the returned basis (a, b): point = s*a + t*b.
struct LinePoints {
    std::array<Fe, 3> a;
    std::array<Fe, 3> b;
    std::vector<ProjPoint> points;
};
LinePoints points_on_line(const ProjLine& l);

/// Line through two distinct points.
ProjLine line_through(const ProjPoint& p1, const ProjPoint& p2);

bool on_line(const ProjLine& l, const ProjPoint& p);

} // namespace pencils
