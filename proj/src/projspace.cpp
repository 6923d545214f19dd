#include "pencils/projspace.hpp"

#include <stdexcept>

namespace pencils {

std::vector<Fe> normalize_coords(const FieldRef& ctx, std::span<const Fe> v) {
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) {
            lead = i;
            break;
        }
    if (lead == v.size())
        throw std::invalid_argument("normalize_coords: zero vector");
    std::vector<Fe> out(v.begin(), v.end());
    if (v[lead] != 1) {
        Fe s = ctx->inv(v[lead]);
        for (auto& c : out) c = ctx->mul(c, s);
    }
    return out;
}

std::uint64_t point_count(std::uint64_t q, std::uint32_t n) {
    std::uint64_t acc = 0, qk = 1;
    for (std::uint32_t k = 0; k <= n; ++k) {
        acc += qk;
        qk *= q;
    }
    return acc;
}

std::uint64_t line_count(std::uint64_t q) { return q * q + q + 1; }

void point_at_into(const FieldRef& ctx, std::uint32_t n, std::uint64_t index,
                   std::span<Fe> out) {
    if (out.size() != n + 1)
        throw std::invalid_argument("point_at_into: bad output size");
    const std::uint64_t q = ctx->q();
    std::uint32_t lead = 0;
    std::uint64_t chart = 1;
    for (std::uint32_t k = 0; k < n; ++k) chart *= q; // q^n points in chart 0
    while (index >= chart) {
        index -= chart;
        chart /= q;
        ++lead;
        if (lead > n) throw std::out_of_range("point_at_into: index out of range");
    }
    for (std::uint32_t i = 0; i < lead; ++i) out[i] = 0;
    out[lead] = 1;
    // big-endian digits: the last coordinate is the least significant
    for (std::uint32_t i = n; i > lead; --i) {
        out[i] = static_cast<Fe>(index % q);
        index /= q;
    }
}

ProjPoint point_at(const FieldRef& ctx, std::uint32_t n, std::uint64_t index) {
    ProjPoint p{ctx, std::vector<Fe>(n + 1)};
    point_at_into(ctx, n, index, p.coords);
    return p;
}

std::vector<ProjPoint> enum_points(const FieldRef& ctx, std::uint32_t n) {
    std::uint64_t total = point_count(ctx->q(), n);
    std::vector<ProjPoint> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(point_at(ctx, n, i));
    return out;
}

ProjLine line_at(const FieldRef& ctx, std::uint64_t index) {
    ProjLine l{ctx, {}};
    point_at_into(ctx, 2, index, l.dual);
    return l;
}

std::vector<ProjLine> enum_lines(const FieldRef& ctx) {
    std::uint64_t total = line_count(ctx->q());
    std::vector<ProjLine> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(line_at(ctx, i));
    return out;
}

std::pair<std::array<Fe, 3>, std::array<Fe, 3>> line_basis(const ProjLine& l) {
    const Field& k = *l.ctx;
    const auto& u = l.dual;
    // The dual vector is normalized, so its leading coordinate is 1.
    if (u[0] == 1) {
        // x0 = -(u1 x1 + u2 x2); free coordinates (x1, x2) = (1,0), (0,1)
        return {{k.neg(u[1]), 1, 0}, {k.neg(u[2]), 0, 1}};
    }
    if (u[1] == 1) {
        // u0 = 0: line is x1 = -u2 x2
        return {{1, 0, 0}, {0, k.neg(u[2]), 1}};
    }
    // u = [0:0:1]: line x2 = 0
    return {{1, 0, 0}, {0, 1, 0}};
}

LinePoints points_on_line(const ProjLine& l) {
    const Field& k = *l.ctx;
    auto [a, b] = line_basis(l);
    LinePoints out{a, b, {}};
    out.points.reserve(k.q() + 1);
    std::array<Fe, 3> v;
    v = a;
    out.points.push_back({l.ctx, normalize_coords(l.ctx, v)});
    for (std::uint64_t x = 0; x < k.q(); ++x) {
        for (int i = 0; i < 3; ++i)
            v[i] = k.add(k.mul(static_cast<Fe>(x), a[i]), b[i]);
        out.points.push_back({l.ctx, normalize_coords(l.ctx, v)});
    }
    return out;
}

ProjLine line_through(const ProjPoint& p1, const ProjPoint& p2) {
    if (!p1.ctx->same(*p2.ctx))
        throw std::invalid_argument("line_through: field mismatch");
    if (p1.coords.size() != 3 || p2.coords.size() != 3)
        throw std::invalid_argument("line_through: points must lie in the plane");
    const Field& k = *p1.ctx;
    const auto& a = p1.coords;
    const auto& b = p2.coords;
    std::array<Fe, 3> cross{
        k.sub(k.mul(a[1], b[2]), k.mul(a[2], b[1])),
        k.sub(k.mul(a[2], b[0]), k.mul(a[0], b[2])),
        k.sub(k.mul(a[0], b[1]), k.mul(a[1], b[0]))};
    if (cross[0] == 0 && cross[1] == 0 && cross[2] == 0)
        throw std::invalid_argument("line_through: points coincide");
    auto n = normalize_coords(p1.ctx, cross);
    return ProjLine{p1.ctx, {n[0], n[1], n[2]}};
}

bool on_line(const ProjLine& l, const ProjPoint& p) {
    const Field& k = *l.ctx;
    Fe acc = 0;
    for (int i = 0; i < 3; ++i)
        acc = k.add(acc, k.mul(l.dual[i], p.coords[i]));
    return acc == 0;
}

} // namespace pencils
