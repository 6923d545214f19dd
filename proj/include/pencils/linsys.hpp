#pragma once

#include "pencils/smoothness.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pencils {

/// A linear system of degree-d hypersurfaces: r+1 linearly independent
/// generators, with members the nonzero combinations up to scaling. The
/// projective dimension r is generators().size() - 1; r = 1 is a pencil.
class LinearSystem {
public:
    LinearSystem(std::vector<HomForm> generators);

    const FieldRef& ctx() const { return generators_[0].ctx(); }
    std::uint32_t nvars() const { return generators_[0].nvars(); }
    std::uint32_t degree() const { return generators_[0].degree(); }
    std::uint32_t dim() const {
        return static_cast<std::uint32_t>(generators_.size()) - 1;
    }
    const std::vector<HomForm>& generators() const { return generators_; }

private:
    std::vector<HomForm> generators_;
};

/// One F_q-member: its coefficient class in P^r and the combined form.
struct SystemMember {
    ProjPoint coeffs;
    HomForm form;
};

/// (q^(r+1) - 1) / (q - 1)
std::uint64_t member_count(const LinearSystem& s);

/// Members follow the projective enumeration order of their coefficient
/// classes.
SystemMember member_at(const LinearSystem& s, std::uint64_t index);

std::vector<SystemMember> members(const LinearSystem& s);

enum class SystemState { AllSmooth, SingularMember, Inconclusive };

struct MemberVerdict {
    ProjPoint coeffs;
    SmoothnessVerdict verdict;
};

/// Outcome of checking every member. blocker is the first singular
/// member when state is SingularMember, else the first member the oracle
/// could not settle when state is Inconclusive. smooth_members counts
/// the members certified smooth before the scan stopped.
struct SystemReport {
    SystemState state;
    std::uint64_t member_total;
    std::uint64_t smooth_members;
    std::optional<MemberVerdict> blocker;
};

/// Scans members in enumeration order. Degree-2 systems use the exact
/// quadric oracle; everything else uses the bounded search oracle with
/// the given config. Stops at the first singular member; an unsettled
/// member is remembered but the scan continues looking for a singular
/// one.
SystemReport verify_all_smooth(const LinearSystem& s, const OracleConfig& cfg = {});

/// All projective classes of certified-smooth forms of the given shape,
/// ordered by their coefficient class index. Throws when the class count
/// exceeds the cap.
std::vector<HomForm> enumerate_smooth_forms(FieldRef ctx, std::uint32_t nvars,
                                            std::uint32_t degree,
                                            const OracleConfig& oracle = {},
                                            std::uint64_t cap = 100'000'000);

struct SearchConfig {
    OracleConfig oracle;
    int threads = 1;
    /// Random strategy only.
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    /// Exhaustive strategy only: hard ceiling on the subset count.
    std::uint64_t subset_cap = 50'000'000;
};

struct SearchOutcome {
    /// Exhaustive: every all-smooth system, deduplicated by span, in
    /// subset-rank order. Random: at most one system, from the first
    /// successful trial.
    std::vector<LinearSystem> found;
    /// Subsets examined (exhaustive, counting dependent tuples) or
    /// trials consumed (random).
    std::uint64_t candidates = 0;
    /// Size of the smooth-form pool (exhaustive strategies).
    std::uint64_t pool_size = 0;
    /// Subset rank or trial index of the first hit.
    std::optional<std::uint64_t> first_hit;
};

/// Examines every (r+1)-subset of the certified-smooth forms of the
/// given shape, in subset-rank (lexicographic) order.
SearchOutcome search_exhaustive(FieldRef ctx, std::uint32_t nvars,
                                std::uint32_t degree, std::uint32_t r,
                                const SearchConfig& cfg = {});

/// Same scan over a caller-provided pool. The set of spans found does
/// not depend on the pool's order.
SearchOutcome search_exhaustive_in(const std::vector<HomForm>& pool,
                                   std::uint32_t r, const SearchConfig& cfg = {});

/// Draws generator tuples from a counter-based stream keyed by (seed,
/// trial); the reported hit is the smallest successful trial index, so
/// the outcome is reproducible for a fixed seed at any thread count.
SearchOutcome search_random(FieldRef ctx, std::uint32_t nvars,
                            std::uint32_t degree, std::uint32_t r,
                            const SearchConfig& cfg = {});

} // namespace pencils
