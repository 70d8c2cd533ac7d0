#pragma once

// Finite fields GF(p^a) as GF(p)[x]/(f) with a deterministic choice of f.
//
// Elements are identified with their canonical integer encoding
// enc = sum_i c_i p^i, where c_0..c_{a-1} are the little-endian coefficients
// of the representative polynomial. Every serialized artifact uses enc.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace finplane {

struct Element {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Polynomials over GF(p), little-endian coefficients, no trailing zeros (zero polynomial is empty).
namespace poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
    // p is prime: x^(p-2)
    std::uint64_t r = 1, b = x % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

inline Poly sub(Poly f, const Poly& g, std::uint32_t p) {
    if (f.size() < g.size()) f.resize(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = (f[i] + p - g[i]) % p;
    trim(f);
    return f;
}

/// Remainder of f modulo nonzero g.
inline Poly mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint64_t lead_inv = inv_mod(g.back(), p);
    while (f.size() > dg) {
        const std::uint64_t c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - c * g[i] % p) % p);
        trim(f);
    }
    return f;
}

inline Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    Poly out(acc.begin(), acc.end());
    trim(out);
    return out;
}

inline Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p) { return mod(mul(f, g, p), m, p); }

inline Poly gcd(Poly f, Poly g, std::uint32_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

/// x^(p^k) mod m by k repeated p-th powers.
inline Poly frobenius_x(std::uint64_t k, const Poly& m, std::uint32_t p) {
    Poly r = mod(Poly{0, 1}, m, p);
    for (std::uint64_t step = 0; step < k; ++step) {
        Poly base = r, acc{1};
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mulmod(acc, base, m, p);
            base = mulmod(base, base, m, p);
        }
        r = std::move(acc);
    }
    return r;
}

inline std::uint32_t eval(const Poly& f, std::uint32_t x, std::uint32_t p) {
    std::uint64_t r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = (r * x + *it) % p;
    return static_cast<std::uint32_t>(r);
}

/// Rabin's test: f of degree n is irreducible iff x^(p^n) = x mod f and
/// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
inline bool rabin_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    const Poly x{0, 1};
    if (sub(frobenius_x(n, f, p), mod(x, f, p), p).size() != 0) return false;
    for (auto r : prime_factors(n)) {
        Poly g = gcd(f, sub(frobenius_x(n / r, f, p), mod(x, f, p), p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Irreducibility of a polynomial of degree >= 1. Degrees up to 3 use root search.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    if (n <= 3) {
        for (std::uint32_t x = 0; x < p; ++x)
            if (eval(f, x, p) == 0) return false;
        return true;
    }
    return rabin_irreducible(f, p);
}

/// Monic irreducible of degree a whose lower coefficients have the smallest
/// little-endian integer encoding sum_{i<a} c_i p^i.
inline Poly smallest_irreducible(std::uint32_t p, std::uint32_t a) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < a; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(a + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < a; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        f[a] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw ConjectureViolation("no irreducible polynomial of degree " + std::to_string(a));
}

}  // namespace poly

/// GF(p^a). Immutable and cheap to copy; lookup tables are shared.
class Field {
   public:
    static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 30;
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

    Field(std::uint32_t p, std::uint32_t a, std::uint64_t max_order = kDefaultMaxOrder) : p_(p), a_(a) {
        if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
        if (a < 1) throw InvalidArgument("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < a; ++i) {
            q *= p;
            if (q > max_order) throw InvalidArgument("field order exceeds configured bound");
        }
        q_ = static_cast<std::uint32_t>(q);
        modulus_ = a == 1 ? poly::Poly{0, 1} : poly::smallest_irreducible(p, a);
        group_factors_ = prime_factors(q - 1);
        if (a > 1 && q <= kTableLimit) build_tables();
    }

    static Field of_order(std::uint64_t q, std::uint64_t max_order = kDefaultMaxOrder) {
        auto pp = as_prime_power(q);
        if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
        return Field(pp->p, pp->a, max_order);
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return a_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, little-endian, length a+1. For prime fields this is x.
    const poly::Poly& modulus() const { return modulus_; }
    /// Distinct prime factors of q-1.
    const std::vector<std::uint64_t>& group_order_factors() const { return group_factors_; }

    Element zero() const { return {0}; }
    Element one() const { return {1}; }
    Element element(std::uint64_t enc) const {
        if (enc >= q_) throw InvalidArgument("encoding " + std::to_string(enc) + " out of range");
        return {static_cast<std::uint32_t>(enc)};
    }
    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    std::vector<std::uint32_t> coefficients(Element x) const {
        std::vector<std::uint32_t> c(a_);
        std::uint32_t v = x.value;
        for (std::uint32_t i = 0; i < a_; ++i, v /= p_) c[i] = v % p_;
        return c;
    }
    Element from_coefficients(const std::vector<std::uint32_t>& c) const {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
        return element(v);
    }

    Element add(Element x, Element y) const {
        if (a_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{x.value} + y.value) % p_)};
        if (p_ == 2) return {x.value ^ y.value};
        std::uint32_t u = x.value, v = y.value, out = 0, scale = 1;
        for (std::uint32_t i = 0; i < a_; ++i, u /= p_, v /= p_, scale *= p_) out += ((u % p_ + v % p_) % p_) * scale;
        return {out};
    }
    Element neg(Element x) const {
        if (a_ == 1) return {x.value == 0 ? 0 : p_ - x.value};
        if (p_ == 2) return x;
        std::uint32_t u = x.value, out = 0, scale = 1;
        for (std::uint32_t i = 0; i < a_; ++i, u /= p_, scale *= p_) out += ((p_ - u % p_) % p_) * scale;
        return {out};
    }
    Element sub(Element x, Element y) const { return add(x, neg(y)); }

    Element mul(Element x, Element y) const {
        if (a_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{x.value} * y.value % p_)};
        if (x.value == 0 || y.value == 0) return zero();
        if (tables_) {
            const auto& t = *tables_;
            std::uint64_t s = std::uint64_t{t.log[x.value]} + t.log[y.value];
            if (s >= q_ - 1) s -= q_ - 1;
            return {t.exp[s]};
        }
        return generic_mul(x, y);
    }

    Element pow(Element x, std::uint64_t e) const {
        Element r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    Element inv(Element x) const {
        if (x.value == 0) throw InvalidArgument("inverse of zero");
        if (tables_) {
            const auto& t = *tables_;
            const std::uint32_t l = t.log[x.value];
            return {t.exp[l == 0 ? 0 : q_ - 1 - l]};
        }
        return pow(x, q_ - 2);
    }
    Element div(Element x, Element y) const { return mul(x, inv(y)); }

    /// Least t >= 1 with x^t = 1, found by stripping prime factors from q-1.
    std::uint64_t element_order(Element x) const {
        if (x.value == 0) throw InvalidArgument("zero has no multiplicative order");
        std::uint64_t t = q_ - 1;
        for (auto r : group_factors_)
            while (t % r == 0 && pow(x, t / r) == one()) t /= r;
        return t;
    }
    bool is_primitive(Element x) const { return x.value != 0 && element_order(x) == q_ - 1; }

    /// Primitive elements in increasing encoding.
    std::vector<Element> primitive_elements() const {
        std::vector<Element> out;
        for (std::uint32_t v = 1; v < q_; ++v)
            if (is_primitive({v})) out.push_back({v});
        return out;
    }
    /// First primitive element by encoding.
    Element first_primitive() const {
        for (std::uint32_t v = 1; v < q_; ++v)
            if (is_primitive({v})) return {v};
        throw ConjectureViolation("multiplicative group has no generator");
    }

    friend bool operator==(const Field& f, const Field& g) { return f.p_ == g.p_ && f.a_ == g.a_; }

   private:
    struct Tables {
        std::vector<std::uint32_t> exp;
        std::vector<std::uint32_t> log;
    };

    Element generic_mul(Element x, Element y) const {
        auto f = coefficients(x), g = coefficients(y);
        poly::trim(f);
        poly::trim(g);
        auto r = poly::mulmod(f, g, modulus_, p_);
        return from_coefficients(r);
    }

    void build_tables() {
        // the generator is located with table-free arithmetic
        Element g{0};
        for (std::uint32_t v = 2; v < q_ && g.value == 0; ++v) {
            std::uint64_t t = q_ - 1;
            bool primitive = true;
            for (auto r : group_factors_) {
                Element acc = one(), b{v};
                for (std::uint64_t e = t / r; e > 0; e >>= 1) {
                    if (e & 1) acc = generic_mul(acc, b);
                    b = generic_mul(b, b);
                }
                if (acc == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) g = {v};
        }
        auto t = std::make_shared<Tables>();
        t->exp.resize(q_ - 1);
        t->log.assign(q_, 0);
        Element cur = one();
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            t->exp[i] = cur.value;
            t->log[cur.value] = i;
            cur = generic_mul(cur, g);
        }
        tables_ = std::move(t);
    }

    std::uint32_t p_;
    std::uint32_t a_;
    std::uint32_t q_ = 0;
    poly::Poly modulus_;
    std::vector<std::uint64_t> group_factors_;
    std::shared_ptr<const Tables> tables_;
};

}  // namespace finplane
