#include "pencils/smoothness.hpp"

#include "pencils/linalg.hpp"
#include "pencils/parallel.hpp"

#include <stdexcept>

namespace pencils {
namespace {

void validate_witness(const HomForm& f, const SingularWitness& w) {
    const HomForm* probe = &f;
    std::optional<HomForm> lifted;
    if (w.ext_degree > 1) {
        Embedding emb(f.ctx(), w.field);
        lifted = embed_form(f, emb);
        probe = &*lifted;
    }
    if (eval(*probe, w.coords) != 0)
        throw std::logic_error("singular witness does not lie on the hypersurface");
    for (std::uint32_t i = 0; i < f.nvars(); ++i)
        if (eval(partial(*probe, i), w.coords) != 0)
            throw std::logic_error("singular witness has a nonvanishing partial");
}

SmoothnessVerdict singular_at(const HomForm& f, std::uint32_t ext_degree,
                              FieldRef field, std::vector<Fe> coords) {
    SingularWitness w{ext_degree, std::move(field), {}};
    w.coords = normalize_coords(w.field, coords);
    validate_witness(f, w);
    return SmoothnessVerdict{SmoothStatus::Singular, std::move(w), std::nullopt};
}

std::uint32_t default_bound(std::uint32_t degree, std::uint32_t n) {
    if (degree <= 1) return 0;
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        acc *= degree - 1;
        if (acc > 0xFFFFFFFFull) return 0xFFFFFFFFu;
    }
    return static_cast<std::uint32_t>(acc);
}

} // namespace

SmoothnessVerdict quadric_is_smooth(const HomForm& f) {
    if (f.degree() != 2)
        throw std::invalid_argument("quadric_is_smooth: degree must be 2");
    const Field& k = *f.ctx();
    const std::uint32_t n1 = f.nvars();

    if (f.is_zero()) {
        std::vector<Fe> origin(n1, 0);
        origin[0] = 1;
        return singular_at(f, 1, f.ctx(), std::move(origin));
    }

    // M[i][j] is the x_j coefficient of df/dx_i; its kernel carries all
    // the singular-point candidates.
    Matrix m(n1, std::vector<Fe>(n1, 0));
    for (std::uint32_t i = 0; i < n1; ++i) {
        HomForm d = partial(f, i);
        for (const auto& [mono, c] : d.terms())
            for (std::uint32_t j = 0; j < n1; ++j)
                if (mono[j]) m[i][j] = c;
    }

    auto kernel = nullspace(f.ctx(), m);
    if (kernel.empty())
        return SmoothnessVerdict{SmoothStatus::Smooth, std::nullopt, std::nullopt};

    if (kernel.size() == 1) {
        Fe value = eval(f, kernel[0]);
        if (value != 0)
            return SmoothnessVerdict{SmoothStatus::Smooth, std::nullopt, std::nullopt};
        return singular_at(f, 1, f.ctx(), std::move(kernel[0]));
    }

    // Restricting f to the kernel span has no cross term: kernel vectors
    // pair to zero under the polar form. So f(s v1 + t v2) = a s^2 + c t^2
    // and a root is always rational, through a square root when p = 2.
    const auto& v1 = kernel[0];
    const auto& v2 = kernel[1];
    Fe a = eval(f, v1), c = eval(f, v2);
    if (a == 0) return singular_at(f, 1, f.ctx(), v1);
    if (c == 0) return singular_at(f, 1, f.ctx(), v2);
    if (k.p() != 2)
        throw std::logic_error("kernel vector with nonzero value in odd characteristic");
    Fe sa = k.sqrt_char2(a), sc = k.sqrt_char2(c);
    std::vector<Fe> w(n1);
    for (std::uint32_t i = 0; i < n1; ++i)
        w[i] = k.add(k.mul(sc, v1[i]), k.mul(sa, v2[i]));
    return singular_at(f, 1, f.ctx(), std::move(w));
}

SmoothnessVerdict brute_is_smooth(const HomForm& f, const OracleConfig& cfg) {
    if (f.degree() == 0)
        throw std::invalid_argument("brute_is_smooth: degree must be positive");
    const Field& k = *f.ctx();
    const std::uint32_t n = f.nvars() - 1;
    const std::uint32_t bound = cfg.bound.value_or(default_bound(f.degree(), n));

    std::uint64_t used = 0;
    for (std::uint32_t m = 1; m <= bound; ++m) {
        // field size cap: q^m must stay enumerable
        std::uint64_t qm = 1;
        bool too_big = false;
        for (std::uint32_t i = 0; i < m && !too_big; ++i) {
            qm *= k.q();
            too_big = qm > kMaxFieldSize;
        }
        if (too_big)
            return SmoothnessVerdict{SmoothStatus::Inconclusive, std::nullopt, m - 1};

        std::uint64_t count = point_count(qm, n);
        if (used + count > cfg.work_cap)
            return SmoothnessVerdict{SmoothStatus::Inconclusive, std::nullopt, m - 1};
        used += count;

        FieldRef ext = m == 1 ? f.ctx() : make_field(k.p(), k.r() * m);
        HomForm fm = m == 1 ? f : embed_form(f, Embedding(f.ctx(), ext));
        std::vector<HomForm> parts;
        parts.reserve(n + 1);
        for (std::uint32_t i = 0; i <= n; ++i) parts.push_back(partial(fm, i));

        auto hit = find_first_index(count, cfg.threads, [&](std::uint64_t idx) {
            thread_local std::vector<Fe> pt;
            pt.resize(n + 1);
            point_at_into(ext, n, idx, pt);
            if (eval(fm, pt) != 0) return false;
            for (const auto& d : parts)
                if (eval(d, pt) != 0) return false;
            return true;
        });
        if (hit) {
            ProjPoint p = point_at(ext, n, *hit);
            SingularWitness w{m, ext, std::move(p.coords)};
            validate_witness(f, w);
            return SmoothnessVerdict{SmoothStatus::Singular, std::move(w),
                                     std::nullopt};
        }
    }

    if (f.degree() == 2) {
        SmoothnessVerdict exact = quadric_is_smooth(f);
        exact.searched_up_to = bound;
        return exact;
    }
    return SmoothnessVerdict{SmoothStatus::Smooth, std::nullopt, bound};
}

std::optional<bool> is_geom_irreducible_if_smooth(const HomForm& f,
                                                  const OracleConfig& cfg) {
    if (f.nvars() < 3) return std::nullopt;
    SmoothnessVerdict v =
        f.degree() == 2 ? quadric_is_smooth(f) : brute_is_smooth(f, cfg);
    if (v.status == SmoothStatus::Smooth) return true;
    return std::nullopt;
}

} // namespace pencils
