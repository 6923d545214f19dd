#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pencils {

/// Element of a finite field GF(p^r), encoded as an integer in [0, q).
/// The base-p digits of the code, least significant first, are the
/// coefficients of the residue polynomial in the class of x.
using Fe = std::uint32_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// Hard cap on field size; keeps every full enumeration at desk scale.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 20;

/// A finite field GF(p^r) with a deterministic modulus choice.
///
/// Immutable after construction; a Field may be shared freely across
/// threads. Obtain instances through make_field or parse_field_spec.
class Field {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, low degree first, length r+1, monic.
    /// For r = 1 this is {0, 1}, i.e. the polynomial x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const Field& other) const {
        return p_ == other.p_ && r_ == other.r_;
    }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    /// Canonical image of an integer in the prime subfield.
    Fe from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += p_;
        return static_cast<Fe>(m);
    }

    Fe add(Fe a, Fe b) const {
        if (r_ == 1) {
            Fe s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        return add_general(a, b);
    }

    Fe neg(Fe a) const {
        if (r_ == 1) return a ? p_ - a : 0;
        if (p_ == 2) return a;
        return neg_general(a);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        if (r_ == 1) return mulmod_prime(a, b);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Fe inv(Fe a) const;

    /// a^e with the convention pow(0, 0) = 1.
    Fe pow(Fe a, std::uint64_t e) const;

    /// Whether a is a square in the field. Odd q only.
    bool is_square(Fe a) const;

    /// Number of squares including zero: 1 + (q-1)/2. Odd q only.
    std::uint64_t count_squares() const;

    /// The unique square root when q is even (Frobenius is bijective).
    Fe sqrt_char2(Fe a) const;

    /// Absolute trace down to GF(p); the result is a code below p.
    Fe trace_to_prime(Fe a) const;

    /// All element codes in their fixed order 0, 1, ..., q-1.
    std::vector<Fe> enumerate() const;

private:
    Field() = default;
    friend FieldRef make_field(std::uint32_t, std::uint32_t);

    Fe mulmod_prime(Fe a, Fe b) const {
        std::uint64_t x = std::uint64_t(a) * b;
        std::uint64_t qhat = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * barrett_) >> 64);
        std::uint64_t rem = x - qhat * p_;
        if (rem >= p_) rem -= p_;
        return static_cast<Fe>(rem);
    }

    Fe add_general(Fe a, Fe b) const;
    Fe neg_general(Fe a) const;

    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    std::uint32_t q_ = 0;
    std::uint64_t barrett_ = 0;            // floor(2^64 / p), r = 1 only
    std::vector<std::uint32_t> modulus_;   // monic, low degree first
    std::vector<Fe> exp_;                  // g^i for i in [0, 2(q-1)), r > 1
    std::vector<std::uint32_t> log_;       // discrete log base g, r > 1
};

/// Returns the cached field GF(p^r). The modulus is the lexicographically
/// smallest monic irreducible of degree r, where candidates are ordered by
/// the integer whose base-p digits are the non-leading coefficients.
/// Throws std::invalid_argument unless p is prime, r >= 1 and p^r is
/// within kMaxFieldSize.
FieldRef make_field(std::uint32_t p, std::uint32_t r);

/// Accepts "p^r" or a plain prime power "q"; factors the latter.
FieldRef parse_field_spec(const std::string& spec);

bool is_prime(std::uint64_t n);

/// (p, r) with n = p^r and p prime, or nullopt.
std::optional<std::pair<std::uint64_t, std::uint32_t>>
factor_prime_power(std::uint64_t n);

/// Smallest prime power strictly above n.
std::uint64_t next_prime_power(std::uint64_t n);

/// The inclusion GF(p^r) -> GF(p^s) for r | s that sends the class of x
/// to the smallest-code root of the subfield modulus. Precomputes the
/// whole image table, so application is a lookup.
class Embedding {
public:
    Embedding(FieldRef sub, FieldRef sup);

    Fe operator()(Fe a) const { return image_[a]; }
    const FieldRef& sub() const { return sub_; }
    const FieldRef& sup() const { return sup_; }

private:
    FieldRef sub_;
    FieldRef sup_;
    std::vector<Fe> image_;
};

} // namespace pencils
