#include "pencils/linsys.hpp"

#include "pencils/linalg.hpp"
#include "pencils/parallel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pencils {
namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based generator: the stream for trial i is a pure function of
/// (seed, i), so trials can run on any thread in any order.
struct TrialStream {
    std::uint64_t state;
    TrialStream(std::uint64_t seed, std::uint64_t trial)
        : state(mix64(seed ^ mix64(trial))) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    Fe uniform(std::uint32_t q) {
        return static_cast<Fe>(
            (static_cast<unsigned __int128>(next()) * q) >> 64);
    }
};

std::optional<std::uint64_t> checked_point_count(std::uint64_t q,
                                                 std::uint64_t n,
                                                 std::uint64_t cap) {
    std::uint64_t acc = 0, qk = 1;
    for (std::uint64_t k = 0; k <= n; ++k) {
        if (qk > cap || acc > cap - qk) return std::nullopt;
        acc += qk;
        if (k < n) {
            if (qk > cap / q) return std::nullopt;
            qk *= q;
        }
    }
    return acc;
}

std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k,
                                              std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

// Lexicographically ranked k-subset of {0, ..., n-1}.
void unrank_subset(std::uint64_t rank, std::uint64_t n, std::uint32_t k,
                   std::vector<std::uint32_t>& out) {
    out.resize(k);
    std::uint64_t v = 0;
    for (std::uint32_t pos = 0; pos < k; ++pos) {
        for (;;) {
            std::uint64_t cnt = binomial(n - 1 - v, k - 1 - pos);
            if (rank < cnt) {
                out[pos] = static_cast<std::uint32_t>(v++);
                break;
            }
            rank -= cnt;
            ++v;
        }
    }
}

SmoothnessVerdict member_verdict(const HomForm& f, const OracleConfig& cfg) {
    return f.degree() == 2 ? quadric_is_smooth(f) : brute_is_smooth(f, cfg);
}

std::vector<Fe> span_key(const FieldRef& ctx,
                         const std::vector<std::vector<Fe>>& rows) {
    Matrix m = rows;
    rref(ctx, m);
    std::vector<Fe> flat;
    flat.reserve(m.size() * m[0].size());
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

} // namespace

LinearSystem::LinearSystem(std::vector<HomForm> generators)
    : generators_(std::move(generators)) {
    if (generators_.size() < 2)
        throw std::invalid_argument("linear system needs at least two generators");
    const HomForm& head = generators_[0];
    Matrix rows;
    rows.reserve(generators_.size());
    for (const auto& g : generators_) {
        if (!g.ctx()->same(*head.ctx()) || g.nvars() != head.nvars() ||
            g.degree() != head.degree())
            throw std::invalid_argument("generators disagree in shape");
        rows.push_back(dense_coeffs(g));
    }
    if (matrix_rank(head.ctx(), std::move(rows)) != generators_.size())
        throw std::invalid_argument("generators are linearly dependent");
}

std::uint64_t member_count(const LinearSystem& s) {
    return point_count(s.ctx()->q(), s.dim());
}

SystemMember member_at(const LinearSystem& s, std::uint64_t index) {
    ProjPoint coeffs = point_at(s.ctx(), s.dim(), index);
    HomForm form = lincomb(coeffs.coords, s.generators());
    return SystemMember{std::move(coeffs), std::move(form)};
}

std::vector<SystemMember> members(const LinearSystem& s) {
    std::uint64_t total = member_count(s);
    std::vector<SystemMember> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(member_at(s, i));
    return out;
}

SystemReport verify_all_smooth(const LinearSystem& s, const OracleConfig& cfg) {
    SystemReport rep{SystemState::AllSmooth, member_count(s), 0, std::nullopt};
    std::optional<MemberVerdict> unsettled;
    for (std::uint64_t i = 0; i < rep.member_total; ++i) {
        SystemMember mem = member_at(s, i);
        SmoothnessVerdict v = member_verdict(mem.form, cfg);
        switch (v.status) {
            case SmoothStatus::Singular:
                rep.state = SystemState::SingularMember;
                rep.blocker = MemberVerdict{std::move(mem.coeffs), std::move(v)};
                return rep;
            case SmoothStatus::Smooth:
                ++rep.smooth_members;
                break;
            case SmoothStatus::Inconclusive:
                if (!unsettled)
                    unsettled = MemberVerdict{std::move(mem.coeffs), std::move(v)};
                break;
        }
    }
    if (unsettled) {
        rep.state = SystemState::Inconclusive;
        rep.blocker = std::move(unsettled);
    }
    return rep;
}

std::vector<HomForm> enumerate_smooth_forms(FieldRef ctx, std::uint32_t nvars,
                                            std::uint32_t degree,
                                            const OracleConfig& oracle,
                                            std::uint64_t cap) {
    std::uint64_t dim = binomial(nvars - 1 + degree, degree);
    auto classes = checked_point_count(ctx->q(), dim - 1, cap);
    if (!classes)
        throw std::runtime_error("enumerate_smooth_forms: class count exceeds cap");

    OracleConfig inner = oracle;
    inner.threads = 1; // chunking is the only parallelism here

    std::vector<std::vector<HomForm>> per_chunk(
        chunk_ranges(*classes, oracle.threads).size());
    parallel_chunks(*classes, oracle.threads,
                    [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
                        std::vector<Fe> buf(dim);
                        for (std::uint64_t i = begin; i < end; ++i) {
                            point_at_into(ctx, static_cast<std::uint32_t>(dim - 1),
                                          i, buf);
                            HomForm f = from_dense(ctx, nvars, degree, buf);
                            if (member_verdict(f, inner).status == SmoothStatus::Smooth)
                                per_chunk[c].push_back(std::move(f));
                        }
                    });

    std::vector<HomForm> out;
    for (auto& chunk : per_chunk)
        for (auto& f : chunk) out.push_back(std::move(f));
    return out;
}

SearchOutcome search_exhaustive_in(const std::vector<HomForm>& pool,
                                   std::uint32_t r, const SearchConfig& cfg) {
    if (r < 1) throw std::invalid_argument("search: dimension must be at least 1");
    const std::uint32_t k = r + 1;
    SearchOutcome out;
    out.pool_size = pool.size();
    if (pool.size() < k) return out;

    const FieldRef& ctx = pool[0].ctx();
    auto total = checked_binomial(pool.size(), k, cfg.subset_cap);
    if (!total)
        throw std::runtime_error("search: subset count exceeds the configured cap");
    out.candidates = *total;

    std::vector<std::vector<Fe>> dense;
    dense.reserve(pool.size());
    for (const auto& f : pool) dense.push_back(dense_coeffs(f));

    OracleConfig inner = cfg.oracle;
    inner.threads = 1;

    using Hit = std::pair<std::uint64_t, std::vector<std::uint32_t>>;
    std::vector<std::vector<Hit>> per_chunk(
        chunk_ranges(*total, cfg.threads).size());
    parallel_chunks(*total, cfg.threads,
                    [&](std::size_t c, std::uint64_t begin, std::uint64_t end) {
                        std::vector<std::uint32_t> idx;
                        for (std::uint64_t rank = begin; rank < end; ++rank) {
                            unrank_subset(rank, pool.size(), k, idx);
                            Matrix rows;
                            rows.reserve(k);
                            for (auto i : idx) rows.push_back(dense[i]);
                            if (matrix_rank(ctx, std::move(rows)) != k) continue;
                            std::vector<HomForm> gens;
                            gens.reserve(k);
                            for (auto i : idx) gens.push_back(pool[i]);
                            LinearSystem sys(std::move(gens));
                            if (verify_all_smooth(sys, inner).state ==
                                SystemState::AllSmooth)
                                per_chunk[c].emplace_back(rank, idx);
                        }
                    });

    std::set<std::vector<Fe>> seen;
    for (const auto& chunk : per_chunk)
        for (const auto& [rank, idx] : chunk) {
            if (!out.first_hit) out.first_hit = rank;
            std::vector<std::vector<Fe>> rows;
            rows.reserve(k);
            for (auto i : idx) rows.push_back(dense[i]);
            if (!seen.insert(span_key(ctx, rows)).second) continue;
            std::vector<HomForm> gens;
            gens.reserve(k);
            for (auto i : idx) gens.push_back(pool[i]);
            out.found.emplace_back(std::move(gens));
        }
    return out;
}

SearchOutcome search_exhaustive(FieldRef ctx, std::uint32_t nvars,
                                std::uint32_t degree, std::uint32_t r,
                                const SearchConfig& cfg) {
    OracleConfig pool_oracle = cfg.oracle;
    pool_oracle.threads = cfg.threads;
    auto pool = enumerate_smooth_forms(std::move(ctx), nvars, degree, pool_oracle);
    return search_exhaustive_in(pool, r, cfg);
}

SearchOutcome search_random(FieldRef ctx, std::uint32_t nvars,
                            std::uint32_t degree, std::uint32_t r,
                            const SearchConfig& cfg) {
    if (r < 1) throw std::invalid_argument("search: dimension must be at least 1");
    const std::uint32_t k = r + 1;
    const std::uint64_t dim = binomial(nvars - 1 + degree, degree);

    OracleConfig inner = cfg.oracle;
    inner.threads = 1;

    auto draw_system = [&](std::uint64_t trial) -> std::optional<LinearSystem> {
        TrialStream rng(cfg.seed, trial);
        Matrix rows(k, std::vector<Fe>(dim));
        for (auto& row : rows)
            for (auto& c : row) c = rng.uniform(ctx->q());
        if (matrix_rank(ctx, rows) != k) return std::nullopt;
        std::vector<HomForm> gens;
        gens.reserve(k);
        for (const auto& row : rows)
            gens.push_back(from_dense(ctx, nvars, degree, row));
        return LinearSystem(std::move(gens));
    };

    auto hit = find_first_index(cfg.trials, cfg.threads, [&](std::uint64_t trial) {
        auto sys = draw_system(trial);
        if (!sys) return false;
        return verify_all_smooth(*sys, inner).state == SystemState::AllSmooth;
    });

    SearchOutcome out;
    if (hit) {
        out.found.push_back(*draw_system(*hit));
        out.first_hit = hit;
        out.candidates = *hit + 1;
    } else {
        out.candidates = cfg.trials;
    }
    return out;
}

} // namespace pencils
