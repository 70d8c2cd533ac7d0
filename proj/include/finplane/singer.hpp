#pragma once

// Singer cycles. With g primitive in GF(q^3) and n = q^2+q+1, the points of
// PG(2,q) are the powers g^0..g^(n-1) taken up to GF(q)* scaling, and the
// GF(q)-span of {1, g} is a line; its exponents form a perfect difference set D.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "plane.hpp"

namespace finplane {

struct SingerModel {
    std::int32_t q = 0;
    std::int32_t n = 0;                      ///< q^2 + q + 1
    std::vector<std::int32_t> difference_set;///< sorted residues mod n
    std::vector<PointId> residue_points;     ///< residue i -> id of <g^i> in PG(2,q)
};

namespace detail {

/// Embedding of GF(q) into the subfield of `big` fixed by x -> x^q.
inline std::vector<Element> subfield_embedding(const Field& small, const Field& big) {
    const std::uint32_t q = small.order();
    const Element g = big.first_primitive();
    const std::uint64_t step = (std::uint64_t{big.order()} - 1) / (q - 1);
    std::vector<Element> sub{big.zero()};
    const Element h = big.pow(g, step);
    Element cur = big.one();
    for (std::uint32_t i = 0; i + 1 < q; ++i, cur = big.mul(cur, h)) sub.push_back(cur);

    auto lift_prime = [&](std::uint32_t c) { return big.from_int(c); };
    Element root = big.zero();
    if (small.degree() > 1) {
        const auto& m = small.modulus();
        bool found = false;
        std::sort(sub.begin(), sub.end());
        for (Element r : sub) {
            Element acc = big.zero();
            for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, r), lift_prime(m[i]));
            if (acc == big.zero()) {
                root = r;
                found = true;
                break;
            }
        }
        if (!found) throw ConjectureViolation("modulus has no root in the subfield");
    }
    std::vector<Element> image(q);
    for (std::uint32_t v = 0; v < q; ++v) {
        const auto c = small.coefficients({v});
        Element acc = big.zero();
        for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, root), lift_prime(c[i]));
        image[v] = acc;
    }
    return image;
}

}  // namespace detail

inline SingerModel singer_model(std::uint32_t q) {
    const DesarguesianPlane pg = pg_from_field(q);
    const Field& f = pg.field();
    const Field big(f.characteristic(), 3 * f.degree());
    const std::int32_t n = static_cast<std::int32_t>(q * q + q + 1);

    const Element g = big.first_primitive();
    std::vector<std::uint32_t> log(big.order(), 0);
    Element cur = big.one();
    for (std::uint32_t i = 0; i + 1 < big.order(); ++i, cur = big.mul(cur, g)) log[cur.value] = i;

    const auto phi = detail::subfield_embedding(f, big);
    const Element g2 = big.mul(g, g);
    auto residue = [&](const ProjPoint& P) {
        const Element e = big.add(big.add(phi[P.c[0].value], big.mul(phi[P.c[1].value], g)), big.mul(phi[P.c[2].value], g2));
        return static_cast<std::int32_t>(log[e.value] % static_cast<std::uint32_t>(n));
    };

    SingerModel m{static_cast<std::int32_t>(q), n, {}, std::vector<PointId>(n, -1)};
    for (PointId id = 0; id < n; ++id) {
        const std::int32_t r = residue(pg.point(id));
        if (m.residue_points[r] != -1) throw ConjectureViolation("two points share a Singer residue");
        m.residue_points[r] = id;
    }
    // D = exponents of the nonzero vectors in span{1, g}
    for (std::uint32_t c0 = 0; c0 < q; ++c0)
        for (std::uint32_t c1 = 0; c1 < q; ++c1) {
            if (c0 == 0 && c1 == 0) continue;
            const Element e = big.add(phi[c0], big.mul(phi[c1], g));
            m.difference_set.push_back(static_cast<std::int32_t>(log[e.value] % static_cast<std::uint32_t>(n)));
        }
    std::sort(m.difference_set.begin(), m.difference_set.end());
    m.difference_set.erase(std::unique(m.difference_set.begin(), m.difference_set.end()), m.difference_set.end());
    if (m.difference_set.size() != q + 1) throw ConjectureViolation("Singer line has the wrong size");
    return m;
}

inline std::vector<std::int32_t> singer_difference_set(std::uint32_t q) { return singer_model(q).difference_set; }

/// Smallest d with d and d+1 (mod n) both in D.
inline std::int32_t singer_consecutive(const std::vector<std::int32_t>& D, std::int32_t n) {
    for (auto d : D)
        if (std::binary_search(D.begin(), D.end(), (d + 1) % n)) return d;
    throw InvalidArgument("difference set has no consecutive pair");
}

}  // namespace finplane
