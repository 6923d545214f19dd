#include "pencils/incidence.hpp"

#include "pencils/parallel.hpp"

#include <stdexcept>

namespace pencils {
namespace {

void validate_curve(const HomForm& c) {
    if (c.nvars() != 3)
        throw std::invalid_argument("incidence: the form must define a plane curve");
    if (c.degree() == 0 || c.is_zero())
        throw std::invalid_argument("incidence: the curve must be a nonzero form");
}

std::uint64_t count_points_on_curve(const HomForm& c, int threads) {
    const FieldRef& ctx = c.ctx();
    std::uint64_t total = point_count(ctx->q(), 2);
    auto chunks = chunk_ranges(total, threads);
    std::vector<std::uint64_t> per_chunk(chunks.size(), 0);
    parallel_chunks(total, threads,
                    [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
                        std::vector<Fe> pt(3);
                        std::uint64_t n = 0;
                        for (std::uint64_t i = begin; i < end; ++i) {
                            point_at_into(ctx, 2, i, pt);
                            if (eval(c, pt) == 0) ++n;
                        }
                        per_chunk[ci] = n;
                    });
    std::uint64_t n = 0;
    for (auto v : per_chunk) n += v;
    return n;
}

mpz_class pairs(const mpz_class& n) { return n * (n - 1) / 2; }

} // namespace

IncidenceProfile line_incidence_profile(const HomForm& c, int threads) {
    validate_curve(c);
    const FieldRef& ctx = c.ctx();
    const Field& k = *ctx;
    const std::uint32_t delta = c.degree();
    const std::uint64_t q = k.q();
    const std::uint64_t lines = line_count(q);

    IncidenceProfile prof{q, delta, count_points_on_curve(c, threads),
                          std::vector<std::uint64_t>(delta + 1, 0), 0};

    auto chunks = chunk_ranges(lines, threads);
    // one extra slot per histogram for lines inside the curve
    std::vector<std::vector<std::uint64_t>> per_chunk(
        chunks.size(), std::vector<std::uint64_t>(delta + 2, 0));
    std::atomic<bool> overflow{false};
    parallel_chunks(lines, threads,
                    [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
                        auto& hist = per_chunk[ci];
                        for (std::uint64_t i = begin; i < end; ++i) {
                            ProjLine line = line_at(ctx, i);
                            auto [a, b] = line_basis(line);
                            BiForm g = restrict_to_line(c, a, b);
                            if (g.is_zero()) {
                                ++hist[delta + 1];
                                continue;
                            }
                            std::uint64_t m = count_projective_roots(g);
                            if (m > delta) {
                                overflow.store(true, std::memory_order_relaxed);
                                continue;
                            }
                            ++hist[m];
                        }
                    });
    if (overflow.load())
        throw std::logic_error("incidence: root count exceeds the degree");
    for (const auto& hist : per_chunk) {
        for (std::uint32_t m = 0; m <= delta; ++m) prof.t[m] += hist[m];
        prof.lines_inside += hist[delta + 1];
    }

    // Double counts: every line lands in one bucket; every (point, line)
    // incidence is seen from both sides; same for collinear point pairs.
    const mpz_class qz(static_cast<unsigned long>(q));
    const mpz_class nz(static_cast<unsigned long>(prof.points));
    const mpz_class inside(static_cast<unsigned long>(prof.lines_inside));
    mpz_class bucket_sum = inside, incid = (qz + 1) * inside,
              pair_sum = pairs(qz + 1) * inside;
    for (std::uint32_t m = 0; m <= delta; ++m) {
        mpz_class tm(static_cast<unsigned long>(prof.t[m]));
        bucket_sum += tm;
        incid += tm * m;
        pair_sum += tm * pairs(mpz_class(m));
    }
    if (bucket_sum != qz * qz + qz + 1)
        throw std::logic_error("incidence: buckets do not partition the lines");
    if (incid != (qz + 1) * nz)
        throw std::logic_error("incidence: incidence double count failed");
    if (pair_sum != pairs(nz))
        throw std::logic_error("incidence: pair double count failed");

    return prof;
}

mpq_class t0_lower_bound(std::uint64_t q, std::uint32_t delta,
                         std::uint64_t n_points) {
    if (delta == 0) throw std::invalid_argument("t0_lower_bound: degree must be positive");
    const mpz_class qz(static_cast<unsigned long>(q));
    const mpz_class nz(static_cast<unsigned long>(n_points));
    mpq_class out(qz * qz + qz + 1 - (qz + 1) * nz);
    mpq_class frac(nz * (nz - 1), delta);
    frac.canonicalize();
    return out + frac;
}

bool hasse_weil_window_contains(std::uint64_t q, std::uint32_t delta,
                                std::uint64_t n_points) {
    const mpz_class qz(static_cast<unsigned long>(q));
    const mpz_class nz(static_cast<unsigned long>(n_points));
    mpz_class dev = nz - qz - 1;
    mpz_class g1 = mpz_class(delta) - 1, g2 = mpz_class(delta) - 2;
    return dev * dev <= g1 * g1 * g2 * g2 * qz;
}

std::optional<ProjLine> find_avoiding_line(const HomForm& c, int threads) {
    validate_curve(c);
    const FieldRef& ctx = c.ctx();
    const Field& k = *ctx;
    const std::uint64_t q = k.q();

    auto hit = find_first_index(line_count(q), threads, [&](std::uint64_t i) {
        ProjLine line = line_at(ctx, i);
        auto [a, b] = line_basis(line);
        BiForm g = restrict_to_line(c, a, b);
        const auto& coef = g.coeffs();
        if (coef[0] == 0) return false; // the point [1:0] lies on the curve
        for (std::uint64_t x = 0; x < q; ++x) {
            Fe acc = 0;
            for (std::size_t j = 0; j < coef.size(); ++j)
                acc = k.add(k.mul(acc, static_cast<Fe>(x)), coef[j]);
            if (acc == 0) return false;
        }
        return true;
    });
    if (!hit) return std::nullopt;
    return line_at(ctx, *hit);
}

ProfileBounds check_profile_bounds(const IncidenceProfile& p) {
    ProfileBounds out{t0_lower_bound(p.q, p.delta, p.points), p.t[0], false,
                      hasse_weil_window_contains(p.q, p.delta, p.points)};
    out.t0_respects_bound =
        mpq_class(static_cast<unsigned long>(p.t[0])) >= out.t0_bound;
    return out;
}

} // namespace pencils
