#include "pencils/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pencils {
namespace {

std::uint32_t mono_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

void require_same_field(const FieldRef& a, const FieldRef& b,
                        const char* what) {
    if (!a->same(*b)) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

Fe pow_small(const Field& k, Fe base, std::uint32_t e) {
    if (e == 0) return 1;
    Fe acc = base;
    for (std::uint32_t i = 1; i < e; ++i) acc = k.mul(acc, base);
    return acc;
}

} // namespace

bool MonoBefore::operator()(const Mono& a, const Mono& b) const {
    std::uint32_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

HomForm::HomForm(FieldRef ctx, std::uint32_t nvars, std::uint32_t degree)
    : ctx_(std::move(ctx)), nvars_(nvars), degree_(degree) {
    if (!ctx_) throw std::invalid_argument("form requires a field");
    if (nvars_ == 0) throw std::invalid_argument("form requires variables");
}

HomForm HomForm::from_terms(FieldRef ctx, std::uint32_t nvars,
                            std::uint32_t degree,
                            std::initializer_list<std::pair<Mono, Fe>> terms) {
    HomForm f(std::move(ctx), nvars, degree);
    for (const auto& [m, c] : terms) f.add_term(m, c);
    return f;
}

Fe HomForm::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void HomForm::add_term(const Mono& m, Fe c) {
    if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (mono_degree(m) != degree_) throw std::invalid_argument("monomial degree mismatch");
    if (c >= ctx_->q()) throw std::invalid_argument("coefficient code out of range");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = ctx_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

bool HomForm::operator==(const HomForm& other) const {
    return ctx_->same(*other.ctx_) && nvars_ == other.nvars_ &&
           degree_ == other.degree_ && terms_ == other.terms_;
}

BiForm::BiForm(FieldRef ctx, std::uint32_t degree)
    : ctx_(std::move(ctx)), degree_(degree), coeffs_(degree + 1, 0) {
    if (!ctx_) throw std::invalid_argument("form requires a field");
}

BiForm::BiForm(FieldRef ctx, std::vector<Fe> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (!ctx_) throw std::invalid_argument("form requires a field");
    if (coeffs_.empty()) throw std::invalid_argument("binary form needs coefficients");
    degree_ = static_cast<std::uint32_t>(coeffs_.size() - 1);
    for (Fe c : coeffs_)
        if (c >= ctx_->q()) throw std::invalid_argument("coefficient code out of range");
}

bool BiForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](Fe c) { return c == 0; });
}

Fe BiForm::eval(Fe s, Fe t) const {
    const Field& k = *ctx_;
    // sum over j of c[j] s^(d-j) t^j, built from running powers
    Fe acc = 0;
    Fe tp = 1;
    for (std::uint32_t j = 0; j <= degree_; ++j) {
        if (coeffs_[j]) {
            Fe sp = pow_small(k, s, degree_ - j);
            acc = k.add(acc, k.mul(coeffs_[j], k.mul(sp, tp)));
        }
        tp = k.mul(tp, t);
    }
    return acc;
}

bool BiForm::operator==(const BiForm& other) const {
    return ctx_->same(*other.ctx_) && coeffs_ == other.coeffs_;
}

Fe eval(const HomForm& f, std::span<const Fe> pt) {
    if (pt.size() != f.nvars()) throw std::invalid_argument("eval: point arity mismatch");
    const Field& k = *f.ctx();
    Fe acc = 0;
    for (const auto& [m, c] : f.terms()) {
        Fe v = c;
        for (std::uint32_t i = 0; i < f.nvars() && v; ++i)
            if (m[i]) v = k.mul(v, pow_small(k, pt[i], m[i]));
        acc = k.add(acc, v);
    }
    return acc;
}

HomForm partial(const HomForm& f, std::uint32_t var) {
    if (var >= f.nvars()) throw std::invalid_argument("partial: no such variable");
    if (f.degree() == 0) throw std::invalid_argument("partial: degree-zero form");
    const Field& k = *f.ctx();
    HomForm out(f.ctx(), f.nvars(), f.degree() - 1);
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Fe factor = k.from_int(m[var]);
        if (factor == 0) continue;
        Mono shifted = m;
        --shifted[var];
        out.add_term(shifted, k.mul(c, factor));
    }
    return out;
}

HomForm scale(const HomForm& f, Fe c) {
    HomForm out(f.ctx(), f.nvars(), f.degree());
    if (c == 0) return out;
    const Field& k = *f.ctx();
    for (const auto& [m, v] : f.terms()) out.add_term(m, k.mul(v, c));
    return out;
}

HomForm lincomb(std::span<const Fe> coeffs, std::span<const HomForm> forms) {
    if (coeffs.size() != forms.size() || forms.empty())
        throw std::invalid_argument("lincomb: size mismatch");
    const HomForm& head = forms[0];
    HomForm out(head.ctx(), head.nvars(), head.degree());
    const Field& k = *head.ctx();
    for (std::size_t i = 0; i < forms.size(); ++i) {
        require_same_field(head.ctx(), forms[i].ctx(), "lincomb");
        if (forms[i].nvars() != head.nvars() || forms[i].degree() != head.degree())
            throw std::invalid_argument("lincomb: shape mismatch");
        if (coeffs[i] == 0) continue;
        for (const auto& [m, v] : forms[i].terms())
            out.add_term(m, k.mul(v, coeffs[i]));
    }
    return out;
}

HomForm embed_form(const HomForm& f, const Embedding& emb) {
    if (!f.ctx()->same(*emb.sub()))
        throw std::invalid_argument("embed_form: form not over the subfield");
    HomForm out(emb.sup(), f.nvars(), f.degree());
    for (const auto& [m, c] : f.terms()) out.add_term(m, emb(c));
    return out;
}

BiForm restrict_to_line(const HomForm& f, std::span<const Fe> a,
                        std::span<const Fe> b) {
    const std::uint32_t n = f.nvars();
    if (a.size() != n || b.size() != n)
        throw std::invalid_argument("restrict_to_line: arity mismatch");
    const Field& k = *f.ctx();

    auto first_nonzero = [](std::span<const Fe> v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) return i;
        return v.size();
    };
    std::size_t ia = first_nonzero(a), ib = first_nonzero(b);
    if (ia == n || ib == n)
        throw std::invalid_argument("restrict_to_line: zero spanning vector");
    bool proportional = (ia == ib);
    if (proportional) {
        Fe lambda = k.mul(b[ia], k.inv(a[ia]));
        for (std::size_t i = 0; i < n; ++i)
            if (b[i] != k.mul(lambda, a[i])) {
                proportional = false;
                break;
            }
    }
    if (proportional)
        throw std::invalid_argument("restrict_to_line: spanning vectors are proportional");

    const std::uint32_t d = f.degree();
    std::vector<Fe> out(d + 1, 0);
    std::vector<Fe> poly, next;
    poly.reserve(d + 1);
    next.reserve(d + 1);
    for (const auto& [m, c] : f.terms()) {
        // expand prod_i (a_i s + b_i t)^(m_i); index is the t-exponent
        poly.assign(1, c);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) {
                next.assign(poly.size() + 1, 0);
                for (std::size_t j = 0; j < poly.size(); ++j) {
                    if (!poly[j]) continue;
                    next[j] = k.add(next[j], k.mul(poly[j], a[i]));
                    next[j + 1] = k.add(next[j + 1], k.mul(poly[j], b[i]));
                }
                poly.swap(next);
            }
        }
        for (std::size_t j = 0; j < poly.size(); ++j)
            out[j] = k.add(out[j], poly[j]);
    }
    return BiForm(f.ctx(), std::move(out));
}

bool euler_identity_holds(const HomForm& f) {
    const Field& k = *f.ctx();
    HomForm sum(f.ctx(), f.nvars(), f.degree());
    for (std::uint32_t i = 0; i < f.nvars(); ++i) {
        HomForm d = partial(f, i);
        for (const auto& [m, c] : d.terms()) {
            Mono lifted = m;
            ++lifted[i];
            sum.add_term(lifted, c);
        }
    }
    return sum == scale(f, k.from_int(f.degree()));
}

BiForm bi_add(const BiForm& a, const BiForm& b) {
    require_same_field(a.ctx(), b.ctx(), "bi_add");
    if (a.degree() != b.degree()) throw std::invalid_argument("bi_add: degree mismatch");
    const Field& k = *a.ctx();
    std::vector<Fe> out(a.degree() + 1);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = k.add(a.coeffs()[j], b.coeffs()[j]);
    return BiForm(a.ctx(), std::move(out));
}

BiForm bi_mul(const BiForm& a, const BiForm& b) {
    require_same_field(a.ctx(), b.ctx(), "bi_mul");
    const Field& k = *a.ctx();
    std::vector<Fe> out(a.degree() + b.degree() + 1, 0);
    for (std::size_t i = 0; i <= a.degree(); ++i) {
        if (!a.coeffs()[i]) continue;
        for (std::size_t j = 0; j <= b.degree(); ++j)
            out[i + j] = k.add(out[i + j], k.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return BiForm(a.ctx(), std::move(out));
}

BiForm bi_scale(const BiForm& a, Fe c) {
    const Field& k = *a.ctx();
    std::vector<Fe> out(a.degree() + 1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = k.mul(a.coeffs()[j], c);
    return BiForm(a.ctx(), std::move(out));
}

BiForm bi_neg(const BiForm& a) {
    const Field& k = *a.ctx();
    std::vector<Fe> out(a.degree() + 1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = k.neg(a.coeffs()[j]);
    return BiForm(a.ctx(), std::move(out));
}

BiForm det_matrix(const std::vector<std::vector<BiForm>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det_matrix: empty matrix");
    std::uint32_t e = m[0][0].degree();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("det_matrix: not square");
        for (const auto& entry : row)
            if (entry.degree() != e)
                throw std::invalid_argument("det_matrix: mixed entry degrees");
    }
    if (n == 1) return m[0][0];

    FieldRef ctx = m[0][0].ctx();
    BiForm acc(ctx, static_cast<std::uint32_t>(n) * e);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<BiForm>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BiForm> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        BiForm term = bi_mul(m[0][j], det_matrix(minor));
        if (j % 2) term = bi_neg(term);
        acc = bi_add(acc, term);
    }
    return acc;
}

std::uint64_t count_projective_roots(const BiForm& g) {
    const Field& k = *g.ctx();
    if (g.is_zero()) return std::uint64_t(k.q()) + 1;
    const auto& c = g.coeffs();
    std::uint64_t count = c[0] == 0 ? 1 : 0; // the point [1:0]
    for (std::uint64_t x = 0; x < k.q(); ++x) {
        // g(x, 1) via Horner, highest s-power first
        Fe acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            acc = k.add(k.mul(acc, static_cast<Fe>(x)), c[j]);
        if (acc == 0) ++count;
    }
    return count;
}

std::vector<Mono> monomial_basis(std::uint32_t nvars, std::uint32_t degree) {
    if (nvars == 0) throw std::invalid_argument("monomial_basis: no variables");
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    auto rec = [&](auto&& self, std::uint32_t var, std::uint32_t left) -> void {
        if (var + 1 == nvars) {
            cur[var] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // exact at every step: acc holds C(n-k+i-1, i-1) times remaining factor
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

std::vector<Fe> dense_coeffs(const HomForm& f) {
    auto basis = monomial_basis(f.nvars(), f.degree());
    std::vector<Fe> out(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] = f.coeff(basis[i]);
    return out;
}

HomForm from_dense(FieldRef ctx, std::uint32_t nvars, std::uint32_t degree,
                   std::span<const Fe> coeffs) {
    auto basis = monomial_basis(nvars, degree);
    if (coeffs.size() != basis.size())
        throw std::invalid_argument("from_dense: coefficient count mismatch");
    HomForm f(std::move(ctx), nvars, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i]) f.add_term(basis[i], coeffs[i]);
    return f;
}

std::string to_string(const HomForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || mono_degree(m) == 0) {
            os << c;
            printed = true;
        }
        for (std::uint32_t i = 0; i < f.nvars(); ++i) {
            if (!m[i]) continue;
            if (printed) os << "*";
            os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

std::string to_string(const BiForm& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::uint32_t d = g.degree();
    for (std::uint32_t j = 0; j <= d; ++j) {
        Fe c = g.coeffs()[j];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || d == 0) {
            os << c;
            printed = true;
        }
        std::uint32_t se = d - j, te = j;
        if (se) {
            if (printed) os << "*";
            os << "s";
            if (se > 1) os << "^" << se;
            printed = true;
        }
        if (te) {
            if (printed) os << "*";
            os << "t";
            if (te > 1) os << "^" << te;
        }
    }
    return os.str();
}

HomForm parse_form(FieldRef ctx, const std::string& text, std::uint32_t nvars) {
    struct RawTerm {
        Fe coeff;
        std::map<std::uint32_t, std::uint32_t> exps;
        bool negate;
    };

    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("parse_form: empty input");

    const Field& k = *ctx;
    std::vector<RawTerm> raw;
    std::size_t pos = 0;
    bool negate = false;
    if (s[0] == '-') {
        negate = true;
        pos = 1;
    } else if (s[0] == '+') {
        pos = 1;
    }

    std::uint32_t max_var = 0;
    bool any_var = false;
    while (pos < s.size()) {
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw std::invalid_argument("parse_form: empty term");

        RawTerm rt{1, {}, negate};
        std::size_t fpos = 0;
        while (fpos < term.size()) {
            std::size_t fend = term.find('*', fpos);
            if (fend == std::string::npos) fend = term.size();
            std::string factor = term.substr(fpos, fend - fpos);
            if (factor.empty()) throw std::invalid_argument("parse_form: empty factor");

            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                if (factor.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("parse_form: bad coefficient " + factor);
                unsigned long long code = std::stoull(factor);
                if (code >= k.q())
                    throw std::invalid_argument("parse_form: coefficient code out of range");
                rt.coeff = k.mul(rt.coeff, static_cast<Fe>(code));
            } else {
                std::uint32_t var;
                std::size_t cursor = 1;
                char head = factor[0];
                if (head == 'y') var = 1;
                else if (head == 'z') var = 2;
                else if (head == 'w') var = 3;
                else if (head == 'x') {
                    var = 0;
                    std::size_t digits = cursor;
                    while (digits < factor.size() &&
                           std::isdigit(static_cast<unsigned char>(factor[digits])))
                        ++digits;
                    if (digits > cursor) {
                        var = static_cast<std::uint32_t>(
                            std::stoul(factor.substr(cursor, digits - cursor)));
                        cursor = digits;
                    }
                } else {
                    throw std::invalid_argument("parse_form: bad factor " + factor);
                }
                std::uint32_t exp = 1;
                if (cursor < factor.size()) {
                    if (factor[cursor] != '^')
                        throw std::invalid_argument("parse_form: bad factor " + factor);
                    std::string e = factor.substr(cursor + 1);
                    if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
                        throw std::invalid_argument("parse_form: bad exponent in " + factor);
                    exp = static_cast<std::uint32_t>(std::stoul(e));
                }
                rt.exps[var] += exp;
                max_var = std::max(max_var, var);
                any_var = true;
            }
            fpos = fend + 1;
        }
        raw.push_back(std::move(rt));

        if (end < s.size()) {
            negate = s[end] == '-';
            pos = end + 1;
        } else {
            pos = end;
        }
    }

    if (!any_var) throw std::invalid_argument("parse_form: no variables");
    std::uint32_t n = nvars ? nvars : max_var + 1;
    if (max_var >= n) throw std::invalid_argument("parse_form: variable index out of range");

    std::uint32_t degree = 0;
    for (const auto& [v, e] : raw[0].exps) degree += e;
    HomForm f(std::move(ctx), n, degree);
    for (const auto& rt : raw) {
        Mono m(n, 0);
        std::uint32_t d = 0;
        for (const auto& [v, e] : rt.exps) {
            m[v] = e;
            d += e;
        }
        if (d != degree) throw std::invalid_argument("parse_form: input is not homogeneous");
        f.add_term(m, rt.negate ? k.neg(rt.coeff) : rt.coeff);
    }
    return f;
}

} // namespace pencils
