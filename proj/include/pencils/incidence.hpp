#pragma once

#include "pencils/mpoly.hpp"
#include "pencils/projspace.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace pencils {

/// Line-incidence histogram of a plane curve of degree delta: t[i]
/// counts the lines meeting the curve in exactly i rational points for
/// i <= delta, and lines_inside counts lines contained in the curve,
/// which meet it in all q+1 of their points.
struct IncidenceProfile {
    std::uint64_t q;
    std::uint32_t delta;
    std::uint64_t points; // number of rational points of the curve
    std::vector<std::uint64_t> t;
    std::uint64_t lines_inside;
};

/// Builds the histogram by restricting the curve to every line of the
/// plane. Before returning, three double-count identities are checked:
/// the buckets partition all q^2+q+1 lines, incidences line-by-line
/// match (q+1) per curve point, and collinear point pairs match C(N,2).
/// A failure throws std::logic_error.
IncidenceProfile line_incidence_profile(const HomForm& c, int threads = 1);

/// (q^2+q+1) - (q+1)N + N(N-1)/delta, exact: a lower bound on the number
/// of lines that miss every rational point of a degree-delta curve with
/// N rational points and no line inside it.
mpq_class t0_lower_bound(std::uint64_t q, std::uint32_t delta,
                         std::uint64_t n_points);

/// Whether (N - q - 1)^2 <= (delta-1)^2 (delta-2)^2 q, the rational-point
/// window for an absolutely irreducible smooth plane curve.
bool hasse_weil_window_contains(std::uint64_t q, std::uint32_t delta,
                                std::uint64_t n_points);

/// First line in enumeration order that misses every rational point of
/// the curve, if one exists.
std::optional<ProjLine> find_avoiding_line(const HomForm& c, int threads = 1);

struct ProfileBounds {
    mpq_class t0_bound;
    std::uint64_t t0_observed;
    bool t0_respects_bound;
    bool hasse_weil_ok;
};

ProfileBounds check_profile_bounds(const IncidenceProfile& p);

} // namespace pencils
