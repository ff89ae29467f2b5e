#ifndef QTREE_APPROX_HPP
#define QTREE_APPROX_HPP

#include <optional>
#include <utility>

#include "qtree/linsolve.hpp"
#include "qtree/valuation.hpp"

namespace qtree {

/// Solve G*b + H*a = e degreewise for coprime forms G, H and a form e of
/// degree >= deg G + deg H, with deg a = deg e - deg H and
/// deg b = deg e - deg G. The underdetermined linear system is resolved
/// deterministically (see solve_canonical).
template <class K>
std::pair<HForm<K>, HForm<K>> bezout_solve(const HForm<K>& G, const HForm<K>& H,
                                           const HForm<K>& e) {
    auto d = G.desc();
    if (G.is_zero() || H.is_zero())
        throw precondition_error("bezout_solve needs nonzero forms");
    if (!HForm<K>::coprime(G, H))
        throw precondition_error("bezout_solve needs coprime forms");
    if (e.degree() < G.degree() + H.degree())
        throw precondition_error("bezout_solve target degree too small");
    int da = e.degree() - H.degree();
    int db = e.degree() - G.degree();
    HForm<K> a(d, da), b(d, db);
    if (e.is_zero()) return {a, b};
    // unknowns: a_0..a_da, b_0..b_db; rows: coefficients of X^(e-k) Y^k
    std::size_t na = static_cast<std::size_t>(da) + 1;
    std::size_t nb = static_cast<std::size_t>(db) + 1;
    std::vector<std::vector<K>> M(static_cast<std::size_t>(e.degree()) + 1,
                                  std::vector<K>(na + nb, K::zero(d)));
    std::vector<K> rhs(static_cast<std::size_t>(e.degree()) + 1, K::zero(d));
    for (int k = 0; k <= e.degree(); ++k) rhs[static_cast<std::size_t>(k)] = e.coeff(k);
    for (int i = 0; i <= H.degree(); ++i)
        for (int j = 0; j <= da; ++j)
            M[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(j)] =
                M[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(j)] + H.coeff(i);
    for (int i = 0; i <= G.degree(); ++i)
        for (int j = 0; j <= db; ++j)
            M[static_cast<std::size_t>(i + j)][na + static_cast<std::size_t>(j)] =
                M[static_cast<std::size_t>(i + j)][na + static_cast<std::size_t>(j)] + G.coeff(i);
    auto sol = solve_canonical<K>(d, std::move(M), std::move(rhs));
    if (!sol)
        throw internal_error("bezout system is inconsistent for coprime forms");
    std::vector<K> ac(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<K> bc(sol->begin() + static_cast<std::ptrdiff_t>(na), sol->end());
    return {HForm<K>(d, std::move(ac)), HForm<K>(d, std::move(bc))};
}

template <class K>
struct LiftResult {
    BiPoly<K> g;
    BiPoly<K> h;
    std::optional<int> achieved_order; // nullopt when f - g h = 0
};

/// Given f whose initial form splits as G*H with G, H coprime, produce
/// g, h with in(g) = G, in(h) = H and ord(f - g h) >= n. Degreewise: start
/// from g = G, h = H and correct each homogeneous error component with a
/// Bezout solve, which never changes components already fixed.
template <class K>
LiftResult<K> lift_factorization(const BiPoly<K>& f, const HForm<K>& G0,
                                 const HForm<K>& H, int n) {
    if (f.is_zero()) throw precondition_error("lift of zero");
    int r = f.low_degree();
    if (n <= r) throw precondition_error("target order must exceed ord(f)");
    if (G0.is_zero() || H.is_zero() || G0.degree() + H.degree() != r)
        throw precondition_error("form degrees do not match ord(f)");
    if (!HForm<K>::coprime(G0, H))
        throw precondition_error("initial form split must be coprime");
    // absorb the scalar between in(f) and G*H into G
    HForm<K> inf = HForm<K>::from_bipoly(initial_component(f));
    HForm<K> GH = G0 * H;
    K u = inf.lc() / GH.lc();
    if (inf != GH.scaled(u))
        throw precondition_error("initial form of f is not G*H up to scalar");
    HForm<K> G = G0.scaled(u);
    BiPoly<K> g = G.to_bipoly(), h = H.to_bipoly();
    for (int deg = r + 1; deg < n; ++deg) {
        BiPoly<K> err = (f - g * h).component(deg);
        if (err.is_zero()) continue;
        std::vector<K> cs(static_cast<std::size_t>(deg) + 1, K::zero(f.desc()));
        for (const auto& t : err.terms()) cs[static_cast<std::size_t>(t.m.j)] = t.c;
        HForm<K> e(f.desc(), std::move(cs));
        auto [a, b] = bezout_solve(G, H, e);
        g = g + a.to_bipoly();
        h = h + b.to_bipoly();
    }
    BiPoly<K> rem = f - g * h;
    LiftResult<K> res{g, h, std::nullopt};
    if (!rem.is_zero()) {
        res.achieved_order = rem.low_degree();
        if (*res.achieved_order < n)
            throw internal_error("lift failed to reach the target order");
    }
    return res;
}

} // namespace qtree

#endif
