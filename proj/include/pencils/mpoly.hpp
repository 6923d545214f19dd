#pragma once

#include "pencils/gf.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pencils {

/// Exponent vector of a monomial; length is the variable count.
using Mono = std::vector<std::uint32_t>;

/// Graded lexicographic order, biggest monomial first, so iteration over a
/// term map visits x0^d before anything else. Within one homogeneous form
/// the grading is constant and this is plain lex with x0 > x1 > ...
struct MonoBefore {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Homogeneous polynomial in nvars variables over a fixed field. Only
/// nonzero coefficients are stored; the zero form is an empty term map
/// with a declared degree.
class HomForm {
public:
    HomForm(FieldRef ctx, std::uint32_t nvars, std::uint32_t degree);

    static HomForm from_terms(
        FieldRef ctx, std::uint32_t nvars, std::uint32_t degree,
        std::initializer_list<std::pair<Mono, Fe>> terms);

    const FieldRef& ctx() const { return ctx_; }
    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t degree() const { return degree_; }
    const std::map<Mono, Fe, MonoBefore>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Fe coeff(const Mono& m) const;

    /// Adds c * m into the form, merging with any existing term and
    /// dropping the term if the sum cancels.
    void add_term(const Mono& m, Fe c);

    bool operator==(const HomForm& other) const;

private:
    FieldRef ctx_;
    std::uint32_t nvars_;
    std::uint32_t degree_;
    std::map<Mono, Fe, MonoBefore> terms_;
};

/// Homogeneous binary form in (s, t). coeffs()[j] is the coefficient of
/// s^(degree-j) t^j, so index equals the t-exponent.
class BiForm {
public:
    BiForm(FieldRef ctx, std::uint32_t degree);
    BiForm(FieldRef ctx, std::vector<Fe> coeffs);

    const FieldRef& ctx() const { return ctx_; }
    std::uint32_t degree() const { return degree_; }
    const std::vector<Fe>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    Fe eval(Fe s, Fe t) const;

    bool operator==(const BiForm& other) const;

private:
    FieldRef ctx_;
    std::uint32_t degree_;
    std::vector<Fe> coeffs_;
};

Fe eval(const HomForm& f, std::span<const Fe> pt);

HomForm partial(const HomForm& f, std::uint32_t var);

HomForm scale(const HomForm& f, Fe c);

/// Sum of coeffs[i] * forms[i]; all forms must share field, variable
/// count and degree.
HomForm lincomb(std::span<const Fe> coeffs, std::span<const HomForm> forms);

/// Coefficient-wise image of f under the field inclusion.
HomForm embed_form(const HomForm& f, const Embedding& emb);

/// f(s*A + t*B) as a binary form. A and B must span a line, i.e. be
/// non-proportional nonzero vectors of length nvars.
BiForm restrict_to_line(const HomForm& f, std::span<const Fe> a,
                        std::span<const Fe> b);

/// Checks sum_i x_i * df/dx_i == (degree mod p) * f, which holds
/// identically for homogeneous f and guards the partial-derivative code.
bool euler_identity_holds(const HomForm& f);

BiForm bi_add(const BiForm& a, const BiForm& b);
BiForm bi_mul(const BiForm& a, const BiForm& b);
BiForm bi_scale(const BiForm& a, Fe c);
BiForm bi_neg(const BiForm& a);

/// Determinant by cofactor expansion. Entries must be square and share
/// one degree; for a k x k matrix of degree-e entries the result has
/// degree k*e.
BiForm det_matrix(const std::vector<std::vector<BiForm>>& m);

/// Number of distinct roots of g in P^1(F_q); q + 1 for the zero form.
std::uint64_t count_projective_roots(const BiForm& g);

/// All exponent vectors of total degree d in canonical order.
std::vector<Mono> monomial_basis(std::uint32_t nvars, std::uint32_t degree);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Coefficients of f against monomial_basis(nvars, degree).
std::vector<Fe> dense_coeffs(const HomForm& f);

HomForm from_dense(FieldRef ctx, std::uint32_t nvars, std::uint32_t degree,
                   std::span<const Fe> coeffs);

/// Canonical display: terms in basis order, coefficients as element
/// codes, variables printed x0, x1, ... Parse accepts that syntax plus
/// the aliases x, y, z, w for the first four variables; factors are
/// separated by '*' and a leading '-' negates a term.
std::string to_string(const HomForm& f);
std::string to_string(const BiForm& g);

/// If nvars is zero it is inferred as one past the highest variable
/// mentioned. The degree is taken from the first term; mixed-degree
/// input is rejected.
HomForm parse_form(FieldRef ctx, const std::string& text,
                   std::uint32_t nvars = 0);

} // namespace pencils
