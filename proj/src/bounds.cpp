#include "pencils/bounds.hpp"

#include "pencils/gf.hpp"

#include <cmath>
#include <stdexcept>

namespace pencils {

int sign_with_sqrt2(const mpz_class& a, const mpz_class& b) {
    if (sgn(a) >= 0 && sgn(b) >= 0) return (sgn(a) || sgn(b)) ? 1 : 0;
    if (sgn(a) <= 0 && sgn(b) <= 0) return -1;
    // opposite signs; sqrt(2) is irrational so equality cannot occur
    mpz_class a2 = a * a, b2 = 2 * b * b;
    if (sgn(a) > 0) return a2 > b2 ? 1 : -1;
    return b2 > a2 ? 1 : -1;
}

int sign_minus_sqrt(const mpz_class& x, const mpz_class& y, const mpz_class& q) {
    if (sgn(q) < 0) throw std::invalid_argument("sign_minus_sqrt: negative radicand");
    if (sgn(y) == 0) return sgn(x);
    if (sgn(y) > 0) {
        if (sgn(x) <= 0) return -1;
        mpz_class lhs = x * x, rhs = y * y * q;
        return lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
    }
    if (sgn(x) >= 0) return 1;
    mpz_class lhs = x * x, rhs = y * y * q;
    return lhs == rhs ? 0 : (rhs > lhs ? 1 : -1);
}

mpz_class discriminant_degree(std::uint32_t n, std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("discriminant_degree: degree must be positive");
    mpz_class acc = 1;
    for (std::uint32_t i = 0; i < n; ++i) acc *= static_cast<long>(d) - 1;
    return acc * (static_cast<long>(n) + 1);
}

bool ThresholdReport::q_passes(const mpz_class& q) const {
    // q > (3K^2 + 2K^2 sqrt 2)/4  <=>  (4q - 3K^2) - 2K^2 sqrt 2 > 0
    mpz_class a = 4 * q - three_k2;
    return sign_with_sqrt2(a, -two_k2) > 0;
}

int ThresholdReport::cmp_rational(const mpz_class& num, const mpz_class& den) const {
    if (sgn(den) <= 0) throw std::invalid_argument("cmp_rational: denominator must be positive");
    // (3K^2 + 2K^2 sqrt 2)/4 - num/den, scaled by 4*den
    mpz_class a = three_k2 * den - 4 * num;
    return sign_with_sqrt2(a, two_k2 * den);
}

ThresholdReport threshold_from_k(const mpz_class& k) {
    ThresholdReport t;
    t.k = k;
    mpz_class k2 = k * k;
    t.three_k2 = 3 * k2;
    t.two_k2 = 2 * k2;
    t.display = (3.0 + 2.0 * std::sqrt(2.0)) * k2.get_d() / 4.0;
    return t;
}

ThresholdReport theorem_threshold(std::uint32_t n, std::uint32_t d) {
    mpz_class dd = discriminant_degree(n, d);
    return threshold_from_k(dd * (dd - 1) * (dd - 2));
}

ThresholdReport curve_prop_threshold(const mpz_class& delta) {
    return threshold_from_k(delta * (delta - 1) * (delta - 2));
}

std::uint64_t smallest_passing_prime_power(const ThresholdReport& t) {
    // floor(T) = floor((3K^2 + floor(sqrt(8 K^4))) / 4), so integers pass
    // exactly from floor(T) + 1 on; scan prime powers from there.
    mpz_class rad;
    mpz_sqrt(rad.get_mpz_t(), mpz_class(2 * t.two_k2 * t.two_k2).get_mpz_t());
    mpz_class first_int = (t.three_k2 + rad) / 4 + 1;
    if (first_int < 2) first_int = 2;
    if (!first_int.fits_ulong_p())
        throw std::runtime_error("smallest_passing_prime_power: threshold too large");
    std::uint64_t q = first_int.get_ui();
    if (!factor_prime_power(q)) q = next_prime_power(q);
    if (!t.q_passes(mpz_class(static_cast<unsigned long>(q))))
        throw std::logic_error("smallest_passing_prime_power: scan start overshoots");
    return q;
}

mpq_class kaltofen_threshold(const mpz_class& delta) {
    mpz_class num = 3 * delta * delta * delta * delta -
                    4 * delta * delta * delta + 5 * delta * delta;
    mpq_class out(num, 2);
    out.canonicalize();
    return out;
}

bool curve_threshold_geq_kaltofen(const mpz_class& delta) {
    ThresholdReport t = curve_prop_threshold(delta);
    return t.cmp_rational(kaltofen_threshold(delta).get_num(),
                          kaltofen_threshold(delta).get_den()) >= 0;
}

mpq_class reducible_point_bound(const mpz_class& delta) {
    mpq_class out(delta * delta, 4);
    out.canonicalize();
    return out;
}

bool reducible_case_line_ok(const mpz_class& delta, const mpz_class& q) {
    return delta * delta * (q + 1) < 4 * (q * q + q + 1);
}

SufficiencyChain proof_sufficiency_chain(const mpz_class& q,
                                         const mpz_class& delta) {
    const mpz_class d1 = delta - 1, d2 = delta - 2, dp = delta + 1;
    SufficiencyChain out{};

    // q^2 - ((delta-1)^2(delta-2)^2 + (delta-1)) q
    //   > (delta(delta-1)(delta-2) q + (delta+1)(delta-1)(delta-2)) sqrt(q)
    mpz_class x_main = q * q - (d1 * d1 * d2 * d2 + d1) * q;
    mpz_class y_main = delta * d1 * d2 * q + dp * d1 * d2;
    out.main_holds = sign_minus_sqrt(x_main, y_main, q) > 0;

    // 2q > (delta+1)(delta-1)(delta-2) sqrt(q)
    out.side_holds = sign_minus_sqrt(2 * q, dp * d1 * d2, q) > 0;

    // q - (delta-1)^2(delta-2)^2 - (delta+1) > delta(delta-1)(delta-2) sqrt(q)
    mpz_class x_red = q - d1 * d1 * d2 * d2 - dp;
    out.reduced_holds = sign_minus_sqrt(x_red, delta * d1 * d2, q) > 0;

    return out;
}

bool quadratic_step_holds(const mpz_class& delta) {
    const mpz_class d1 = delta - 1, d2 = delta - 2;
    return delta * delta * d1 * d1 * d2 * d2 >=
           4 * d1 * d1 * d2 * d2 + 4 * (delta + 1);
}

} // namespace pencils
