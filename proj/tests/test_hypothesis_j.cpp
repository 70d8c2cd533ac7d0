#include <gtest/gtest.h>

#include "finplane/hypothesis_j.hpp"
#include "finplane/number_theory.hpp"

using namespace finplane;

namespace {

// gamma over a prime field with plain modular arithmetic
std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}
std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) { return modpow(x, p - 2, p); }

}  // namespace

TEST(Gamma, PrimeFieldExamples) {
    const Field f5 = Field::of_order(5);
    EXPECT_EQ(gamma_map(f5, {2}).value, 3u);
    const Field f7 = Field::of_order(7);
    EXPECT_EQ(gamma_map(f7, {5}).value, 3u);
    // GF(7), alpha = 5: gamma' = 4 / 6^3
    EXPECT_EQ(gamma_prime_map(f7, {5}).value, 4 * inv_mod(6 * 6 * 6 % 7, 7) % 7);
}

TEST(Gamma, MatchesModularFormulaOnPrimeFields) {
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 101u}) {
        const Field f = Field::of_order(p);
        for (std::uint64_t a = 2; a + 1 < p; ++a) {
            const std::uint64_t den = (1 + p - a) % p * ((1 + a) * (1 + a) % p) % p;
            EXPECT_EQ(gamma_map(f, {static_cast<std::uint32_t>(a)}).value, (p - a) * inv_mod(den, p) % p);
            const std::uint64_t c = (1 + a) % p;
            EXPECT_EQ(gamma_prime_map(f, {static_cast<std::uint32_t>(a)}).value,
                      (a + p - 1) % p * inv_mod(c * c % p * c % p, p) % p);
        }
    }
}

TEST(Gamma, DegenerateAlpha) {
    const Field f = Field::of_order(7);
    EXPECT_THROW(gamma_map(f, f.one()), DegenerateAlpha);
    EXPECT_THROW(gamma_map(f, f.neg(f.one())), DegenerateAlpha);
    EXPECT_THROW(gamma_prime_map(f, f.neg(f.one())), DegenerateAlpha);
    // in GF(2) the only nonzero alpha is 1 = -1, so gamma' is 0/0
    EXPECT_THROW(gamma_prime_map(Field::of_order(2), {1}), DegenerateAlpha);
}

TEST(Gamma, GF4GammaPrime) {
    const Field f = Field::of_order(4);  // omega = 2, omega + 1 = 3
    EXPECT_EQ(gamma_prime_map(f, {2}).value, 3u);
    EXPECT_TRUE(f.is_primitive({3}));
}

TEST(Gamma, NeverBothOneAboveNine) {
    for (auto q : prime_powers_in(10, 1000)) {
        const Field f = Field::of_order(q);
        for (Element a : f.primitive_elements()) {
            if (f.add(a, f.one()) == f.zero() || a == f.one()) continue;
            EXPECT_FALSE(gamma_map(f, a) == f.one() && gamma_prime_map(f, a) == f.one()) << q;
        }
    }
}

TEST(Golomb, ConsecutivePrimitivePairs) {
    EXPECT_EQ(consecutive_primitive_pair(Field::of_order(4)).value, 2u);
    EXPECT_EQ(consecutive_primitive_pair(Field::of_order(8)).value, 2u);
    for (std::uint32_t a = 2; a <= 16; ++a) {
        const Field f(2, a);
        const Element alpha = consecutive_primitive_pair(f);
        EXPECT_TRUE(f.is_primitive(alpha));
        EXPECT_TRUE(f.is_primitive(f.add(alpha, f.one())));
    }
    EXPECT_THROW(consecutive_primitive_pair(Field::of_order(2)), InvalidArgument);
    EXPECT_THROW(consecutive_primitive_pair(Field::of_order(9)), InvalidArgument);
}

TEST(HypothesisJ, Examples) {
    const auto c5 = std::get<HypothesisJCertificate>(hypothesis_j_search(5));
    EXPECT_EQ(c5.route, CertificateRoute::OddGamma);
    EXPECT_EQ(c5.alpha.value, 2u);
    EXPECT_EQ(c5.gamma.value, 3u);
    const auto c7 = std::get<HypothesisJCertificate>(hypothesis_j_search(7));
    EXPECT_EQ(c7.alpha.value, 5u);
    EXPECT_EQ(c7.gamma.value, 3u);
    const auto c4 = std::get<HypothesisJCertificate>(hypothesis_j_search(4));
    EXPECT_EQ(c4.route, CertificateRoute::EvenGolomb);
    EXPECT_EQ(c4.alpha.value, 2u);
    EXPECT_EQ(c4.gamma.value, 3u);
    EXPECT_TRUE(std::holds_alternative<NotFound>(hypothesis_j_search(3)));
    EXPECT_THROW(hypothesis_j_search(2), InvalidArgument);
    EXPECT_THROW(require_certificate(Field::of_order(3)), NoCertificate);
}

TEST(HypothesisJ, CertificateInvariants) {
    for (auto q : prime_powers_in(4, 2000)) {
        const Field f = Field::of_order(q);
        const auto r = hypothesis_j_search(f);
        ASSERT_TRUE(std::holds_alternative<HypothesisJCertificate>(r)) << q;
        const auto c = std::get<HypothesisJCertificate>(r);
        EXPECT_EQ(c.ord_alpha, q - 1);
        EXPECT_EQ(c.ord_gamma, q - 1);
        EXPECT_TRUE(f.is_primitive(c.alpha));
        EXPECT_TRUE(f.is_primitive(c.gamma));
        if (c.route == CertificateRoute::OddGamma) {
            EXPECT_EQ(c.gamma, gamma_map(f, c.alpha));
        } else {
            EXPECT_EQ(c.gamma, gamma_prime_map(f, c.alpha));
        }
        if (q % 2 == 0) {
            EXPECT_EQ(c.route, CertificateRoute::EvenGolomb);
            EXPECT_TRUE(f.is_primitive(f.add(c.alpha, f.one())));
            const Element s = f.add(c.alpha, f.one());
            EXPECT_EQ(c.gamma, f.inv(f.mul(s, s)));
        } else {
            // first primitive alpha (by encoding) whose gamma is primitive
            for (Element a : f.primitive_elements()) {
                if (a == c.alpha) break;
                if (a == f.neg(f.one())) continue;
                if (c.route == CertificateRoute::OddGamma) {
                    EXPECT_FALSE(f.is_primitive(gamma_map(f, a))) << q;
                }
            }
        }
    }
}
