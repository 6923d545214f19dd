#pragma once

#include "pencils/mpoly.hpp"
#include "pencils/projspace.hpp"

#include <cstdint>
#include <optional>

namespace pencils {

enum class SmoothStatus { Smooth, Singular, Inconclusive };

/// A projective point where the form and all its partials vanish. The
/// coordinates are normalized and live over GF(q^ext_degree).
struct SingularWitness {
    std::uint32_t ext_degree;
    FieldRef field;
    std::vector<Fe> coords;
};

struct SmoothnessVerdict {
    SmoothStatus status;
    std::optional<SingularWitness> witness;      // present iff Singular
    std::optional<std::uint32_t> searched_up_to; // extension degrees fully scanned
};

struct OracleConfig {
    /// Extension-degree search bound; defaults to (d-1)^n.
    std::optional<std::uint32_t> bound;
    /// Budget in visited projective points per call.
    std::uint64_t work_cap = 1'000'000'000;
    int threads = 1;
};

/// Exact verdict for degree-2 forms via the rank of the matrix of
/// partial-derivative coefficients; never Inconclusive, and a Singular
/// verdict always carries a base-field witness.
SmoothnessVerdict quadric_is_smooth(const HomForm& f);

/// Scans P^n(GF(q^m)) for m = 1..bound for a common zero of f and its
/// partials; the witness is the first hit in enumeration order over the
/// smallest such m. Returns Inconclusive once the work cap or the field
/// size cap cuts the search short, recording how far it got. Degree-2
/// input that survives the scan is settled by the exact oracle.
SmoothnessVerdict brute_is_smooth(const HomForm& f, const OracleConfig& cfg = {});

/// True when smoothness is certified and the hypersurface dimension is
/// at least 1, in which case smooth implies geometrically irreducible;
/// nullopt whenever that argument does not apply.
std::optional<bool> is_geom_irreducible_if_smooth(const HomForm& f,
                                                  const OracleConfig& cfg = {});

} // namespace pencils
