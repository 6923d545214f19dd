#include "pencils/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pencils {
namespace {

using Poly = std::vector<std::uint32_t>; // coefficients mod p, low first

std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint32_t mulp(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0.
    std::uint32_t acc = 1, base = a;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) acc = mulp(acc, base, p);
        base = mulp(base, base, p);
    }
    return acc;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// a * b reduced by the monic modulus m.
Poly polymulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = addp(prod[i + j], mulp(a[i], b[j], p), p);
    }
    std::size_t deg_m = m.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg_m;) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < deg_m; ++j) {
            std::uint32_t t = mulp(c, m[j], p);
            prod[i - deg_m + j] = addp(prod[i - deg_m + j], t ? p - t : 0, p);
        }
    }
    trim(prod);
    return prod;
}

Poly polypowmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly acc{1};
    while (e) {
        if (e & 1) acc = polymulmod(acc, base, m, p);
        base = polymulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Poly polysub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = addp(a[i], b[i] ? p - b[i] : 0, p);
    trim(a);
    return a;
}

Poly polygcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b; each pass cancels the current leading term of rem.
        std::uint32_t lead_inv = invp(b.back(), p);
        Poly rem = std::move(a);
        while (rem.size() >= b.size()) {
            std::uint32_t c = mulp(rem.back(), lead_inv, p);
            std::size_t shift = rem.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint32_t t = mulp(c, b[i], p);
                rem[shift + i] = addp(rem[shift + i], t ? p - t : 0, p);
            }
            trim(rem);
        }
        a = std::move(b);
        b = std::move(rem);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin test: f is irreducible over GF(p) iff x^(p^r) = x mod f and
// gcd(x^(p^(r/t)) - x, f) = 1 for every prime t | r.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t r = f.size() - 1;
    if (r == 1) return true;
    const Poly x{0, 1};
    std::vector<Poly> frob(r + 1); // frob[k] = x^(p^k) mod f
    frob[0] = x;
    for (std::size_t k = 1; k <= r; ++k)
        frob[k] = polypowmod(frob[k - 1], p, f, p);
    if (polysub(frob[r], x, p) != Poly{}) return false;
    for (std::uint64_t t : prime_factors(r)) {
        Poly g = polygcd(f, polysub(frob[r / t], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> digits_base_p(std::uint64_t code, std::uint32_t p,
                                         std::uint32_t len) {
    std::vector<std::uint32_t> d(len, 0);
    for (std::uint32_t i = 0; i < len && code; ++i) {
        d[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return d;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t acc = 1;
    while (e--) acc *= b;
    return acc;
}

} // namespace

Fe Field::add_general(Fe a, Fe b) const {
    Fe out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += addp(da, db, p_) * mult;
        mult *= p_;
    }
    return out;
}

Fe Field::neg_general(Fe a) const {
    Fe out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t da = a % p_;
        a /= p_;
        out += (da ? p_ - da : 0) * mult;
        mult *= p_;
    }
    return out;
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (r_ == 1) return pow(a, p_ - 2);
    std::uint32_t l = log_[a];
    return exp_[(q_ - 1) - l];
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (r_ > 1) {
        std::uint64_t l = log_[a];
        std::uint64_t m = q_ - 1;
        return exp_[static_cast<std::size_t>(l * (e % m) % m)];
    }
    Fe acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mulmod_prime(acc, base);
        base = mulmod_prime(base, base);
        e >>= 1;
    }
    return acc;
}

bool Field::is_square(Fe a) const {
    if (q_ % 2 == 0) throw std::domain_error("is_square requires odd q");
    return a == 0 || pow(a, (q_ - 1) / 2) == 1;
}

std::uint64_t Field::count_squares() const {
    if (q_ % 2 == 0) throw std::domain_error("count_squares requires odd q");
    return 1 + (std::uint64_t(q_) - 1) / 2;
}

Fe Field::sqrt_char2(Fe a) const {
    if (p_ != 2) throw std::domain_error("sqrt_char2 requires characteristic 2");
    return pow(a, q_ / 2);
}

Fe Field::trace_to_prime(Fe a) const {
    Fe acc = a, frob = a;
    for (std::uint32_t k = 1; k < r_; ++k) {
        frob = pow(frob, p_);
        acc = add(acc, frob);
    }
    if (acc >= p_) throw std::logic_error("trace escaped the prime subfield");
    return acc;
}

std::vector<Fe> Field::enumerate() const {
    std::vector<Fe> all(q_);
    std::iota(all.begin(), all.end(), Fe{0});
    return all;
}

FieldRef make_field(std::uint32_t p, std::uint32_t r) {
    static std::mutex cache_mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldRef> cache;

    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({p, r});
        if (it != cache.end()) return it->second;
    }

    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (r < 1) throw std::invalid_argument("field extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw std::invalid_argument("field size exceeds the 2^20 cap");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->r_ = r;
    f->q_ = static_cast<std::uint32_t>(q);
    f->barrett_ = ~std::uint64_t(0) / p + (p == 2 ? 1 : 0);

    if (r == 1) {
        f->modulus_ = {0, 1};
    } else {
        // Scan candidate moduli by the integer code of their low coefficients.
        for (std::uint64_t code = 0;; ++code) {
            if (code >= q) throw std::logic_error("no irreducible modulus found");
            Poly cand = digits_base_p(code, p, r);
            cand.push_back(1);
            if (poly_irreducible(cand, p)) {
                f->modulus_ = cand;
                break;
            }
        }

        // Codes multiply through polynomial arithmetic only while the
        // tables are being built; afterwards everything is table lookups.
        auto decode = [&](Fe a) { return digits_base_p(a, p, r); };
        auto encode = [&](const Poly& v) {
            Fe out = 0, mult = 1;
            for (std::uint32_t i = 0; i < r; ++i) {
                out += (i < v.size() ? v[i] : 0) * mult;
                mult *= p;
            }
            return out;
        };
        auto slow_mul = [&](Fe a, Fe b) {
            return encode(polymulmod(decode(a), decode(b), f->modulus_, p));
        };
        auto slow_pow = [&](Fe a, std::uint64_t e) {
            Fe acc = 1, base = a;
            while (e) {
                if (e & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                e >>= 1;
            }
            return acc;
        };

        std::uint64_t order = q - 1;
        auto order_factors = prime_factors(order);
        Fe gen = 0;
        for (Fe g = 2; g < q; ++g) {
            bool primitive = true;
            for (std::uint64_t t : order_factors)
                if (slow_pow(g, order / t) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = g;
                break;
            }
        }
        if (!gen) throw std::logic_error("no generator found");

        f->exp_.resize(2 * order);
        f->log_.assign(q, 0);
        Fe cur = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            f->exp_[i] = cur;
            f->exp_[i + order] = cur;
            f->log_[cur] = static_cast<std::uint32_t>(i);
            cur = slow_mul(cur, gen);
        }
        if (cur != 1) throw std::logic_error("generator order mismatch");
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(p, r), f);
    return it->second;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 7; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>>
factor_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = n;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    std::uint32_t r = 0;
    std::uint64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, r);
}

std::uint64_t next_prime_power(std::uint64_t n) {
    for (std::uint64_t m = n + 1;; ++m)
        if (factor_prime_power(m)) return m;
}

FieldRef parse_field_spec(const std::string& spec) {
    auto parse_u64 = [](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad field spec: " + s);
        return std::stoull(s);
    };
    auto caret = spec.find('^');
    std::uint64_t p, r;
    if (caret != std::string::npos) {
        p = parse_u64(spec.substr(0, caret));
        r = parse_u64(spec.substr(caret + 1));
    } else {
        std::uint64_t q = parse_u64(spec);
        auto pr = factor_prime_power(q);
        if (!pr) throw std::invalid_argument("not a prime power: " + spec);
        p = pr->first;
        r = pr->second;
    }
    if (p > kMaxFieldSize || r > 20)
        throw std::invalid_argument("field size exceeds the 2^20 cap");
    return make_field(static_cast<std::uint32_t>(p),
                      static_cast<std::uint32_t>(r));
}

Embedding::Embedding(FieldRef sub, FieldRef sup)
    : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->p() != sup_->p())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (sup_->r() % sub_->r() != 0)
        throw std::invalid_argument("embedding requires subfield degree dividing");

    const auto& m = sub_->modulus();
    Fe root = 0;
    bool found = false;
    for (std::uint64_t c = 0; c < sup_->q(); ++c) {
        // Horner over the big field; modulus coefficients live in GF(p).
        Fe v = 0;
        for (std::size_t i = m.size(); i-- > 0;)
            v = sup_->add(sup_->mul(v, static_cast<Fe>(c)), m[i]);
        if (v == 0) {
            root = static_cast<Fe>(c);
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("subfield modulus has no root upstairs");

    std::vector<Fe> root_pow(sub_->r());
    root_pow[0] = 1;
    for (std::uint32_t k = 1; k < sub_->r(); ++k)
        root_pow[k] = sup_->mul(root_pow[k - 1], root);

    image_.resize(sub_->q());
    for (std::uint64_t a = 0; a < sub_->q(); ++a) {
        Fe img = 0;
        std::uint64_t rest = a;
        for (std::uint32_t k = 0; k < sub_->r(); ++k) {
            std::uint32_t digit = static_cast<std::uint32_t>(rest % sub_->p());
            rest /= sub_->p();
            if (digit) img = sup_->add(img, sup_->mul(digit, root_pow[k]));
        }
        image_[a] = img;
    }
}

} // namespace pencils
