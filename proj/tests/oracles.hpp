// Test-only oracles, independent of the library's factorization and
// containment paths: exhaustive enumeration over small finite fields.

#ifndef QTREE_TESTS_ORACLES_HPP
#define QTREE_TESTS_ORACLES_HPP

#include <vector>

#include "qtree/bi_factor.hpp"

namespace qtree::oracle {

/// every bivariate polynomial over F_p with total degree exactly `deg`,
/// up to scalar (graded-lex leading coefficient 1)
inline std::vector<BiPoly<GF>> all_normalized_of_degree(GFDesc d, int deg) {
    std::vector<Mono> monos;
    for (int t = deg; t >= 0; --t)
        for (int i = t; i >= 0; --i) monos.push_back({i, t - i});
    std::vector<BiPoly<GF>> out;
    std::vector<std::uint32_t> digits(monos.size(), 0);
    while (true) {
        std::size_t lead = 0;
        while (lead < digits.size() && digits[lead] == 0) ++lead;
        if (lead < digits.size() && digits[lead] == 1 && monos[lead].deg() == deg) {
            std::vector<BiPoly<GF>::Term> ts;
            for (std::size_t i = lead; i < digits.size(); ++i)
                if (digits[i] != 0) ts.push_back({monos[i], GF(d, digits[i])});
            out.push_back(BiPoly<GF>::from_terms(d, std::move(ts)));
        }
        std::size_t i = digits.size();
        bool done = true;
        while (i-- > 0) {
            if (++digits[i] < d.p) { done = false; break; }
            digits[i] = 0;
        }
        if (done) break;
    }
    return out;
}

/// exhaustive multiplication oracle: f (nonconstant) is irreducible iff
/// no normalized polynomial of degree 1 .. deg(f)/2 divides it
inline bool irreducible_exhaustive(const BiPoly<GF>& f) {
    int deg = f.total_degree();
    for (int dd = 1; 2 * dd <= deg; ++dd)
        for (const auto& cand : all_normalized_of_degree(f.desc(), dd))
            if (cand.divides(f)) return false;
    return true;
}

/// quadratic residues of F_p by enumeration
inline std::vector<bool> squares_mod(GFDesc d) {
    std::vector<bool> sq(d.p, false);
    for (std::uint64_t a = 0; a < d.p; ++a) sq[(a * a) % d.p] = true;
    return sq;
}

/// product-of-factors identity, computed from scratch
template <class K>
bool factorization_reproduces(const BiPoly<K>& f, const K& unit,
                              const std::vector<std::pair<BiPoly<K>, int>>& factors) {
    BiPoly<K> prod = BiPoly<K>::constant(f.desc(), unit);
    for (const auto& [q, m] : factors) prod = prod * q.pow(m);
    return prod == f;
}

template <class K>
bool factorization_reproduces_uni(const UniPoly<K>& f, const K& unit,
                                  const std::vector<std::pair<UniPoly<K>, int>>& factors) {
    UniPoly<K> prod = UniPoly<K>::constant(f.desc(), unit);
    for (const auto& [q, m] : factors)
        for (int i = 0; i < m; ++i) prod = prod * q;
    return prod == f;
}

} // namespace qtree::oracle

#endif
