#include <gtest/gtest.h>

#include <numeric>

#include "finplane/field.hpp"
#include "finplane/number_theory.hpp"

using namespace finplane;

namespace {

// Schoolbook reference arithmetic on coefficient vectors, independent of the tables.
struct RefField {
    std::uint32_t p, a;
    std::vector<std::uint32_t> modulus;

    std::vector<std::uint32_t> decode(std::uint32_t v) const {
        std::vector<std::uint32_t> c(a);
        for (auto& x : c) x = v % p, v /= p;
        return c;
    }
    std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
        std::uint32_t v = 0;
        for (std::size_t i = a; i-- > 0;) v = v * p + c[i];
        return v;
    }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
        auto u = decode(x), w = decode(y);
        for (std::uint32_t i = 0; i < a; ++i) u[i] = (u[i] + w[i]) % p;
        return encode(u);
    }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        const auto u = decode(x), w = decode(y);
        std::vector<std::uint64_t> prod(2 * a, 0);
        for (std::uint32_t i = 0; i < a; ++i)
            for (std::uint32_t j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{u[i]} * w[j]) % p;
        for (std::size_t d = 2 * a - 1; d >= a; --d) {
            const auto c = prod[d] % p;
            if (!c) continue;
            prod[d] = 0;
            for (std::uint32_t i = 0; i < a; ++i) prod[d - a + i] = (prod[d - a + i] + (p - c) * modulus[i]) % p;
        }
        std::vector<std::uint32_t> r(a);
        for (std::uint32_t i = 0; i < a; ++i) r[i] = static_cast<std::uint32_t>(prod[i] % p);
        return encode(r);
    }
};

// Degree-a monic polynomial has no monic factor of degree 1..a/2 (trial division).
bool brute_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t a = f.size() - 1;
    for (std::size_t d = 1; d <= a / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
            g[d] = 1;
            std::vector<std::int64_t> r(f.begin(), f.end());
            for (std::size_t k = a; k >= d; --k) {
                const auto lead = ((r[k] % p) + p) % p;
                for (std::size_t i = 0; i <= d; ++i) r[k - d + i] -= static_cast<std::int64_t>(lead * g[i]);
                if (k == d) break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && ((r[i] % p) + p) % p == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

TEST(NumberTheory, PrimePowers) {
    EXPECT_TRUE(is_prime_power(9));
    EXPECT_TRUE(is_prime_power(2));
    EXPECT_FALSE(is_prime_power(1));
    EXPECT_FALSE(is_prime_power(12));
    const auto pp = as_prime_power(3125);
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->p, 5u);
    EXPECT_EQ(pp->a, 5u);
    EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(NumberTheory, PrimePowersInRangeMatchesNaiveCount) {
    auto naive = [](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
            std::uint64_t p = 2;
            while (n % p) ++p;
            std::uint64_t m = n;
            while (m % p == 0) m /= p;
            if (m == 1) out.push_back(n);
        }
        return out;
    };
    EXPECT_EQ(prime_powers_in(3, 100), naive(3, 100));
    EXPECT_EQ(prime_powers_in(1, 5000), naive(1, 5000));
    EXPECT_TRUE(prime_powers_in(24, 24).empty());
}

TEST(Field, ModulusChoiceIsSmallestEncoding) {
    EXPECT_EQ(Field(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));     // x^2+x+1
    EXPECT_EQ(Field(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));  // x^3+x+1
    EXPECT_EQ(Field(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));     // x^2+1
    EXPECT_EQ(Field(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    EXPECT_EQ(Field(7, 1).modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, ModulusIsFirstIrreducibleByBruteForce) {
    for (auto [p, a] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}}) {
        const Field f(p, a);
        const auto& m = f.modulus();
        ASSERT_TRUE(brute_irreducible(m, p)) << p << "^" << a;
        std::uint64_t code = 0;
        for (std::size_t i = a; i-- > 0;) code = code * p + m[i];
        for (std::uint64_t c = 0; c < code; ++c) {
            std::vector<std::uint32_t> g(a + 1, 0);
            std::uint64_t r = c;
            for (std::uint32_t i = 0; i < a; ++i, r /= p) g[i] = static_cast<std::uint32_t>(r % p);
            g[a] = 1;
            EXPECT_FALSE(brute_irreducible(g, p)) << "smaller irreducible exists for " << p << "^" << a;
        }
    }
}

TEST(Field, RabinAgreesWithTrialDivision) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t a = 2; a <= (p == 2 ? 7u : 4u); ++a) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < a; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(a + 1, 0);
                std::uint64_t r = code;
                for (std::uint32_t i = 0; i < a; ++i, r /= p) g[i] = static_cast<std::uint32_t>(r % p);
                g[a] = 1;
                EXPECT_EQ(poly::rabin_irreducible(g, p), brute_irreducible(g, p)) << p << " " << a << " " << code;
            }
        }
    }
}

TEST(Field, ArithmeticMatchesReference) {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 7u, 13u}) {
        const Field f = Field::of_order(q);
        RefField ref{f.characteristic(), f.degree(), f.modulus()};
        for (std::uint32_t x = 0; x < q; ++x)
            for (std::uint32_t y = 0; y < q; ++y) {
                ASSERT_EQ(f.add({x}, {y}).value, ref.add(x, y)) << q;
                ASSERT_EQ(f.mul({x}, {y}).value, ref.mul(x, y)) << q;
            }
    }
}

TEST(Field, AxiomsAndInverses) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u, 11u, 16u, 27u}) {
        const Field f = Field::of_order(q);
        for (std::uint32_t x = 0; x < q; ++x) {
            const Element ex{x};
            EXPECT_EQ(f.add(ex, f.neg(ex)), f.zero());
            EXPECT_EQ(f.sub(ex, ex), f.zero());
            if (x) {
                EXPECT_EQ(f.mul(ex, f.inv(ex)), f.one());
                EXPECT_EQ(f.pow(ex, q - 1), f.one());
                EXPECT_EQ((q - 1) % f.element_order(ex), 0u);
            }
            for (std::uint32_t y = 0; y < q; ++y)
                for (std::uint32_t z = 0; z < q; z += 3) {
                    const Element ey{y}, ez{z};
                    EXPECT_EQ(f.mul(ex, f.add(ey, ez)), f.add(f.mul(ex, ey), f.mul(ex, ez)));
                    EXPECT_EQ(f.mul(f.mul(ex, ey), ez), f.mul(ex, f.mul(ey, ez)));
                }
        }
        EXPECT_THROW(f.inv(f.zero()), InvalidArgument);
    }
}

TEST(Field, EncodingRoundTrip) {
    const Field f(3, 3);
    for (std::uint32_t v = 0; v < 27; ++v) EXPECT_EQ(f.from_coefficients(f.coefficients({v})).value, v);
    EXPECT_EQ(f.coefficients({5}), (std::vector<std::uint32_t>{2, 1, 0}));
    EXPECT_THROW(f.element(27), InvalidArgument);
    EXPECT_EQ(f.from_int(-1).value, 2u);
}

TEST(Field, PrimitiveElements) {
    // Euler phi(q-1) primitive elements
    for (std::uint64_t q : {5u, 7u, 8u, 9u, 16u, 25u, 31u, 64u, 81u}) {
        const Field f = Field::of_order(q);
        const auto prims = f.primitive_elements();
        std::uint64_t phi = 0;
        for (std::uint64_t k = 1; k < q; ++k) phi += std::gcd(k, q - 1) == 1;
        EXPECT_EQ(prims.size(), phi) << q;
        for (auto g : prims) {
            std::uint64_t ord = 1;
            for (Element x = g; x != f.one(); x = f.mul(x, g)) ++ord;
            EXPECT_EQ(ord, q - 1);
        }
    }
    EXPECT_EQ(Field::of_order(7).first_primitive().value, 3u);
    EXPECT_EQ(Field::of_order(8).first_primitive().value, 2u);
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(Field(4, 1), InvalidArgument);
    EXPECT_THROW(Field(2, 0), InvalidArgument);
    EXPECT_THROW(Field::of_order(12), InvalidArgument);
    EXPECT_THROW(Field(2, 40), InvalidArgument);
}

TEST(Field, LargeFieldsWithoutTables) {
    const Field f(2, 21);  // above the log-table limit
    RefField ref{2, 21, f.modulus()};
    for (std::uint32_t x : {1u, 3u, 12345u, 2097151u})
        for (std::uint32_t y : {2u, 77u, 1048577u}) EXPECT_EQ(f.mul({x}, {y}).value, ref.mul(x, y));
    const Element g = f.first_primitive();
    EXPECT_TRUE(f.is_primitive(g));
    EXPECT_EQ(f.mul(g, f.inv(g)), f.one());
}
