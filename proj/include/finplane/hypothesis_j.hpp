#pragma once

// Primitive-element machinery behind the long-cycle construction: the return
// multipliers of the two slope labelings and the search for a primitive alpha
// whose multiplier is primitive too ("Hypothesis J").

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "field.hpp"

namespace finplane {

/// -alpha / ((1 - alpha)(1 + alpha)^2): return multiplier of labeling A.
inline Element gamma_map(const Field& f, Element alpha) {
    const Element one = f.one();
    const Element minus = f.sub(one, alpha);
    const Element plus = f.add(one, alpha);
    if (minus == f.zero() || plus == f.zero()) throw DegenerateAlpha("gamma undefined for alpha = +-1");
    return f.div(f.neg(alpha), f.mul(minus, f.mul(plus, plus)));
}

/// (alpha - 1) / (alpha + 1)^3: return multiplier of labeling B.
inline Element gamma_prime_map(const Field& f, Element alpha) {
    const Element plus = f.add(alpha, f.one());
    if (plus == f.zero()) throw DegenerateAlpha("gamma' undefined for alpha = -1");
    return f.div(f.sub(alpha, f.one()), f.mul(plus, f.mul(plus, plus)));
}

/// First alpha (by encoding) with alpha and alpha + 1 both primitive, for q = 2^a, a > 1.
inline Element consecutive_primitive_pair(const Field& f) {
    if (f.characteristic() != 2 || f.degree() < 2)
        throw InvalidArgument("consecutive primitive pairs are searched only in GF(2^a), a > 1");
    for (std::uint32_t v = 1; v < f.order(); ++v) {
        const Element alpha{v};
        if (f.is_primitive(alpha) && f.is_primitive(f.add(alpha, f.one()))) return alpha;
    }
    throw ConjectureViolation("no consecutive primitive pair in GF(" + std::to_string(f.order()) + ")");
}

enum class CertificateRoute { OddGamma, EvenGolomb, BruteSmall };

inline std::string_view route_name(CertificateRoute r) {
    switch (r) {
        case CertificateRoute::OddGamma: return "ODD_GAMMA";
        case CertificateRoute::EvenGolomb: return "EVEN_GOLOMB";
        case CertificateRoute::BruteSmall: return "BRUTE_SMALL";
    }
    return "?";
}

/// Witness that Hypothesis J holds for one q.
///
/// OddGamma: gamma = gamma_map(alpha), use slope labeling A.
/// EvenGolomb: alpha, alpha+1 primitive and gamma = ((alpha+1)^2)^-1 = gamma_prime_map(alpha), labeling B.
/// BruteSmall: odd q where only the labeling-B multiplier works; gamma = gamma_prime_map(alpha).
struct HypothesisJCertificate {
    std::uint32_t q = 0;
    CertificateRoute route = CertificateRoute::OddGamma;
    Element alpha;
    Element gamma;
    std::uint64_t ord_alpha = 0;
    std::uint64_t ord_gamma = 0;

    bool uses_labeling_b() const { return route != CertificateRoute::OddGamma; }
};

struct NotFound {
    std::uint32_t q = 0;
};

using HypothesisJResult = std::variant<HypothesisJCertificate, NotFound>;

inline HypothesisJResult hypothesis_j_search(const Field& f) {
    const std::uint32_t q = f.order();
    if (q <= 2) throw InvalidArgument("Hypothesis J is searched only for q > 2");
    if (f.characteristic() == 2) {
        const Element alpha = consecutive_primitive_pair(f);
        const Element gamma = gamma_prime_map(f, alpha);
        return HypothesisJCertificate{q, CertificateRoute::EvenGolomb, alpha, gamma, f.element_order(alpha),
                                      f.element_order(gamma)};
    }
    const auto primitives = f.primitive_elements();
    const Element minus_one = f.neg(f.one());
    for (Element alpha : primitives) {
        if (alpha == minus_one) continue;
        const Element gamma = gamma_map(f, alpha);
        if (f.is_primitive(gamma)) return HypothesisJCertificate{q, CertificateRoute::OddGamma, alpha, gamma, q - 1, q - 1};
    }
    for (Element alpha : primitives) {
        if (alpha == minus_one) continue;
        const Element gamma = gamma_prime_map(f, alpha);
        if (f.is_primitive(gamma))
            return HypothesisJCertificate{q, CertificateRoute::BruteSmall, alpha, gamma, q - 1, q - 1};
    }
    return NotFound{q};
}

inline HypothesisJResult hypothesis_j_search(std::uint32_t q) { return hypothesis_j_search(Field::of_order(q)); }

/// Certificate for q or NoCertificate.
inline HypothesisJCertificate require_certificate(const Field& f) {
    auto r = hypothesis_j_search(f);
    if (auto* c = std::get_if<HypothesisJCertificate>(&r)) return *c;
    throw NoCertificate("Hypothesis J has no certificate for q = " + std::to_string(f.order()));
}

}  // namespace finplane
