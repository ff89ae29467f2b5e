#ifndef QTREE_TESTS_HELPERS_HPP
#define QTREE_TESTS_HELPERS_HPP

#include "qtree/poly_io.hpp"
#include "qtree/rng.hpp"
#include "qtree/tree.hpp"

namespace qtree::testing {

inline const GFDesc F2{2};
inline const GFDesc F3{3};
inline const GFDesc F5{5};
inline const GFDesc F7{7};

inline BiPoly<GF> bp(GFDesc d, const char* s) { return parse_bipoly<GF>(d, s); }
inline UniPoly<GF> up(GFDesc d, const char* s) { return parse_unipoly<GF>(d, s); }
inline HForm<GF> hf(GFDesc d, const char* s) {
    return HForm<GF>::from_bipoly(parse_bipoly<GF>(d, s));
}
inline Frac<GF> fr(GFDesc d, const char* s) {
    auto [n, den] = parse_frac_parts<GF>(d, s);
    return Frac<GF>(n, den);
}
inline QuadPath<GF> qp(GFDesc d, const char* s) { return parse_path<GF>(d, s); }

/// random nonzero polynomial with coefficients over all monomials of
/// total degree <= max_deg
inline BiPoly<GF> random_poly(GFDesc d, Rng& rng, int max_deg, bool origin_zero = false) {
    while (true) {
        std::vector<BiPoly<GF>::Term> ts;
        for (int i = 0; i <= max_deg; ++i)
            for (int j = 0; i + j <= max_deg; ++j) {
                if (origin_zero && i == 0 && j == 0) continue;
                if (rng.below(2)) continue;
                GF c(d, static_cast<std::int64_t>(rng.below(d.p)));
                if (!c.is_zero()) ts.push_back({{i, j}, c});
            }
        BiPoly<GF> f = BiPoly<GF>::from_terms(d, std::move(ts));
        if (!f.is_zero()) return f;
    }
}

inline QuadPath<GF> random_path(GFDesc d, Rng& rng, int depth) {
    QuadPath<GF> q;
    for (int i = 0; i < depth; ++i) {
        auto r = rng.below(d.p + 1);
        q.push_back(r == d.p ? Direction<GF>::at_infinity(d)
                             : Direction<GF>::finite(GF(d, static_cast<std::int64_t>(r))));
    }
    return q;
}

} // namespace qtree::testing

#endif
