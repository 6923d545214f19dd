#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace pencils {

/// Sign of a + b*sqrt(2), computed exactly.
int sign_with_sqrt2(const mpz_class& a, const mpz_class& b);

/// Sign of x - y*sqrt(q), computed exactly. q must be nonnegative.
int sign_minus_sqrt(const mpz_class& x, const mpz_class& y, const mpz_class& q);

/// (n+1)(d-1)^n: the degree of the locus of singular members in the
/// coefficient space of degree-d forms in n+1 variables.
mpz_class discriminant_degree(std::uint32_t n, std::uint32_t d);

/// The bound T = ((3 + 2 sqrt 2)/4) K^2, kept exact as the pair
/// (3K^2, 2K^2) over 4. q_passes decides q > T with integer arithmetic
/// only; display is a rounded double for reporting.
struct ThresholdReport {
    mpz_class k;
    mpz_class three_k2;
    mpz_class two_k2;
    double display;

    bool q_passes(const mpz_class& q) const;

    /// Sign of T - num/den, exact. den must be positive.
    int cmp_rational(const mpz_class& num, const mpz_class& den) const;
};

ThresholdReport threshold_from_k(const mpz_class& k);

/// K = D(D-1)(D-2) with D = (n+1)(d-1)^n; above this threshold a pencil
/// of degree-d hypersurfaces in P^n with one smooth F_q-member has all
/// its F_q-members smooth.
ThresholdReport theorem_threshold(std::uint32_t n, std::uint32_t d);

/// K = delta(delta-1)(delta-2): the plane-curve specialization, where a
/// smooth plane curve of degree delta admits a transversal line over F_q.
ThresholdReport curve_prop_threshold(const mpz_class& delta);

/// Smallest prime power q with q_passes(q).
std::uint64_t smallest_passing_prime_power(const ThresholdReport& t);

/// (3 delta^4 - 4 delta^3 + 5 delta^2) / 2: the comparison bound from
/// the effective-irreducibility literature.
mpq_class kaltofen_threshold(const mpz_class& delta);

/// Whether the curve threshold is at least the comparison bound.
bool curve_threshold_geq_kaltofen(const mpz_class& delta);

/// delta^2 / 4: cap on the F_q-points of a smooth but geometrically
/// reducible plane curve of degree delta.
mpq_class reducible_point_bound(const mpz_class& delta);

/// (delta^2/4)(q+1) < q^2 + q + 1: such a curve cannot meet every line.
bool reducible_case_line_ok(const mpz_class& delta, const mpz_class& q);

/// The inequalities the transversal-line argument reduces to. main_holds
/// is the target; side_holds and reduced_holds together imply it.
struct SufficiencyChain {
    bool main_holds;
    bool side_holds;
    bool reduced_holds;
};

SufficiencyChain proof_sufficiency_chain(const mpz_class& q,
                                         const mpz_class& delta);

/// delta^2(delta-1)^2(delta-2)^2 >= 4(delta-1)^2(delta-2)^2 + 4(delta+1):
/// the discriminant step that turns the threshold into reduced_holds.
bool quadratic_step_holds(const mpz_class& delta);

} // namespace pencils
