#ifndef QTREE_BI_FACTOR_HPP
#define QTREE_BI_FACTOR_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "qtree/factor.hpp"

namespace qtree {

template <class K>
struct BiFactorization {
    K unit;
    std::vector<std::pair<BiPoly<K>, int>> factors; // normalized irreducible
};

struct BiFactorOptions {
    int degree_cap = 32;          // reject inputs of larger total degree
    int fallback_degree_bound = 4; // exhaustive divisor search bound
    long long fallback_budget = 1 << 20;
};

namespace detail {

// ----- truncated power-series-in-x arithmetic for polynomials in y -----
//
// A value is the coefficient vector in y; each coefficient is a
// polynomial in x implicitly reduced mod x^B.

using YS = std::vector<UniPoly<GF>>;

inline void ys_trim(YS& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}
inline YS ys_from_bipoly(const BiPoly<GF>& f) { return f.y_coeffs(); }
inline BiPoly<GF> ys_to_bipoly(GFDesc d, const YS& a) {
    return BiPoly<GF>::from_y_coeffs(d, a);
}
inline YS ys_trunc(YS a, int B) {
    for (auto& u : a) u = u.trunc(B);
    ys_trim(a);
    return a;
}
inline YS ys_mul(const YS& a, const YS& b, GFDesc d, int B) {
    if (a.empty() || b.empty()) return {};
    YS r(a.size() + b.size() - 1, UniPoly<GF>(d));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]).trunc(B);
    }
    ys_trim(r);
    return r;
}
inline YS ys_sub(YS a, const YS& b, GFDesc d) {
    if (a.size() < b.size()) a.resize(b.size(), UniPoly<GF>(d));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    ys_trim(a);
    return a;
}
inline YS ys_add(YS a, const YS& b, GFDesc d) {
    if (a.size() < b.size()) a.resize(b.size(), UniPoly<GF>(d));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    ys_trim(a);
    return a;
}
inline bool ys_is_monic(const YS& a) {
    return !a.empty() && a.back().degree() == 0 && a.back().coeff(0).is_one();
}

/// division by a divisor monic in y; returns (quotient, remainder)
inline std::pair<YS, YS> ys_divrem(YS a, const YS& b, GFDesc d, int B) {
    if (!ys_is_monic(b)) throw internal_error("series division by non-monic");
    YS q;
    ys_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        UniPoly<GF> top = a.back();
        if (q.size() < shift + 1) q.resize(shift + 1, UniPoly<GF>(d));
        q[shift] = q[shift] + top;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = (a[i + shift] - top * b[i]).trunc(B);
        ys_trim(a);
        if (a.size() > shift + b.size() - 1)
            throw internal_error("series division failed to reduce");
    }
    ys_trim(q);
    return {q, a};
}

/// inverse of l (l(0) != 0) as a power series mod x^B
inline UniPoly<GF> series_inv(const UniPoly<GF>& l, int B) {
    auto d = l.desc();
    if (l.is_zero() || l.coeff(0).is_zero())
        throw internal_error("series inverse needs a unit constant term");
    GF c0 = l.coeff(0).inv();
    std::vector<GF> r(static_cast<std::size_t>(B), GF::zero(d));
    r[0] = c0;
    for (int k = 1; k < B; ++k) {
        GF acc = GF::zero(d);
        for (int i = 1; i <= std::min(k, l.degree()); ++i)
            acc = acc + l.coeff(i) * r[static_cast<std::size_t>(k - i)];
        r[static_cast<std::size_t>(k)] = -(c0 * acc);
    }
    return UniPoly<GF>(d, std::move(r));
}

/// quadratic Hensel lifting of f ~ g*h from x-precision 1 to B.
/// f, g, h monic in y; g0, h0 coprime univariates equal to g, h at x = 0.
inline std::pair<YS, YS> hensel_pair(const YS& f, const UniPoly<GF>& g0,
                                     const UniPoly<GF>& h0, GFDesc d, int B) {
    auto embed = [&](const UniPoly<GF>& u) {
        YS v;
        for (int j = 0; j <= u.degree(); ++j)
            v.push_back(UniPoly<GF>::constant(d, u.coeff(j)));
        ys_trim(v);
        return v;
    };
    auto [gg, ss, tt] = UniPoly<GF>::xgcd(g0, h0);
    if (gg.degree() != 0)
        throw internal_error("hensel: local factors are not coprime");
    // normalize: s*g0 + t*h0 = 1 with deg s < deg h0
    auto [qs, rs] = UniPoly<GF>::divrem(ss, h0);
    UniPoly<GF> s1 = rs;
    UniPoly<GF> t1 = tt + qs * g0;
    YS g = embed(g0), h = embed(h0), s = embed(s1), t = embed(t1);
    int k = 1;
    while (k < B) {
        int k2 = std::min(2 * k, B);
        YS e = ys_trunc(ys_sub(f, ys_mul(g, h, d, k2), d), k2);
        // delta_h = (s*e) rem h ; delta_g = (e - g*delta_h) / h, exact
        auto [q1, dh] = ys_divrem(ys_mul(s, e, d, k2), h, d, k2);
        (void)q1;
        YS num = ys_trunc(ys_sub(e, ys_mul(g, dh, d, k2), d), k2);
        auto [dg, rem] = ys_divrem(num, h, d, k2);
        if (!rem.empty())
            throw internal_error("hensel: correction division not exact");
        g = ys_trunc(ys_add(g, dg, d), k2);
        h = ys_trunc(ys_add(h, dh, d), k2);
        // refresh the Bezout pair: s*(g) + t*(h) = 1 mod x^k2
        YS one = embed(UniPoly<GF>::constant(d, GF::one(d)));
        YS b = ys_trunc(ys_sub(ys_add(ys_mul(s, g, d, k2), ys_mul(t, h, d, k2), d), one, d), k2);
        YS sb = ys_mul(s, b, d, k2);
        auto [q2, snew] = ys_divrem(ys_sub(s, sb, d), h, d, k2);
        (void)q2;
        s = snew;
        YS tnum = ys_trunc(ys_sub(one, ys_mul(s, g, d, k2), d), k2);
        auto [tnew, trem] = ys_divrem(tnum, h, d, k2);
        if (!trem.empty())
            throw internal_error("hensel: bezout refresh not exact");
        t = tnew;
        k = k2;
    }
    return {g, h};
}

/// lift the full local factorization of the monic series f to precision B
inline std::vector<YS> lift_locals(const YS& f, const std::vector<UniPoly<GF>>& locals,
                                   GFDesc d, int B) {
    if (locals.size() == 1) return {f};
    UniPoly<GF> rest = UniPoly<GF>::constant(d, GF::one(d));
    for (std::size_t i = 1; i < locals.size(); ++i) rest = rest * locals[i];
    auto [G, H] = hensel_pair(f, locals[0], rest, d, B);
    std::vector<UniPoly<GF>> tail(locals.begin() + 1, locals.end());
    std::vector<YS> out = {G};
    for (auto& part : lift_locals(H, tail, d, B)) out.push_back(std::move(part));
    return out;
}

// ----- linear coordinate changes used to find good evaluation points -----

struct LinChange {
    int kind; // 0 id, 1 swap, 2: y -> y + c x, 3: x -> x + c y
    GF c;
};

inline BiPoly<GF> apply_change(const BiPoly<GF>& f, const LinChange& t) {
    auto d = f.desc();
    switch (t.kind) {
        case 0: return f;
        case 1: return f.swap_xy();
        case 2: return f.subst(BiPoly<GF>::x(d), BiPoly<GF>::y(d) + BiPoly<GF>::monomial(d, t.c, 1, 0));
        default: return f.subst(BiPoly<GF>::x(d) + BiPoly<GF>::monomial(d, t.c, 0, 1), BiPoly<GF>::y(d));
    }
}
inline BiPoly<GF> undo_change(const BiPoly<GF>& f, const LinChange& t) {
    auto d = f.desc();
    switch (t.kind) {
        case 0: return f;
        case 1: return f.swap_xy();
        case 2: return f.subst(BiPoly<GF>::x(d), BiPoly<GF>::y(d) - BiPoly<GF>::monomial(d, t.c, 1, 0));
        default: return f.subst(BiPoly<GF>::x(d) - BiPoly<GF>::monomial(d, t.c, 0, 1), BiPoly<GF>::y(d));
    }
}

inline std::vector<LinChange> all_changes(GFDesc d) {
    std::vector<LinChange> v;
    v.push_back({0, GF::zero(d)});
    v.push_back({1, GF::zero(d)});
    for (std::uint32_t c = 1; c < d.p; ++c) v.push_back({2, GF(d, c)});
    for (std::uint32_t c = 1; c < d.p; ++c) v.push_back({3, GF(d, c)});
    return v;
}

inline void push_factor(std::vector<BiPoly<GF>>& out, const BiPoly<GF>& q) {
    out.push_back(q.monic_gl());
}

std::vector<BiPoly<GF>> factor_squarefree(const BiPoly<GF>& w, const BiFactorOptions& opt);

/// Hensel route for g squarefree and primitive with a good point at x = a:
/// lc_y(g)(a) != 0 and g(a, y) squarefree of full y-degree.
inline std::vector<BiPoly<GF>> hensel_route(const BiPoly<GF>& g_in, const GF& a,
                                            const BiFactorOptions& opt) {
    auto d = g_in.desc();
    BiPoly<GF> shift_in = BiPoly<GF>::x(d) + BiPoly<GF>::constant(d, a);
    BiPoly<GF> shift_out = BiPoly<GF>::x(d) - BiPoly<GF>::constant(d, a);
    BiPoly<GF> g = g_in.subst(shift_in, BiPoly<GF>::y(d));
    UniPoly<GF> l = g.y_coeffs().back();
    int B = g.deg_x() + std::max(l.degree(), 0) + 1;
    UniPoly<GF> linv = series_inv(l, B);
    YS fstar;
    for (auto& u : g.y_coeffs()) fstar.push_back((u * linv).trunc(B));
    ys_trim(fstar);
    if (!ys_is_monic(fstar)) throw internal_error("monicized series is not monic");
    UniPoly<GF> u0 = g.eval_x(GF::zero(d)).scaled(l.eval(GF::zero(d)).inv());
    auto locals_fac = uni_factor(u0);
    std::vector<UniPoly<GF>> locals;
    for (auto& [q, m] : locals_fac.factors) {
        if (m != 1) throw internal_error("evaluation was not squarefree");
        locals.push_back(q);
    }
    std::vector<BiPoly<GF>> out;
    if (locals.size() == 1) {
        push_factor(out, g_in);
        return out;
    }
    std::vector<YS> lifted = lift_locals(fstar, locals, d, B);
    // recombination: minimal subsets whose product (times the leading
    // coefficient) drops to a polynomial factor
    std::vector<int> alive(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
    BiPoly<GF> active = g;
    UniPoly<GF> lact = l;
    bool restart = true;
    while (restart) {
        restart = false;
        for (std::size_t s = 1; 2 * s <= alive.size() && !restart; ++s) {
            std::vector<std::size_t> comb(s);
            for (std::size_t i = 0; i < s; ++i) comb[i] = i;
            while (true) {
                YS cand = {lact};
                for (std::size_t i : comb) cand = ys_mul(cand, lifted[static_cast<std::size_t>(alive[i])], d, B);
                BiPoly<GF> cpoly = ys_to_bipoly(d, cand);
                if (!cpoly.is_zero()) {
                    UniPoly<GF> cont = x_content(cpoly);
                    cpoly = divide_by_x_poly(cpoly, cont);
                    auto quo = active.try_divide(cpoly);
                    if (quo) {
                        push_factor(out, cpoly);
                        active = *quo;
                        lact = active.y_coeffs().back();
                        std::vector<int> keep;
                        for (std::size_t i = 0; i < alive.size(); ++i)
                            if (std::find(comb.begin(), comb.end(), i) == comb.end())
                                keep.push_back(alive[i]);
                        alive = std::move(keep);
                        restart = true;
                        break;
                    }
                }
                // next combination
                std::size_t i = s;
                while (i-- > 0) {
                    if (comb[i] + (s - i) < alive.size()) {
                        ++comb[i];
                        for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
                        break;
                    }
                    if (i == 0) { i = s + 1; break; }
                }
                if (i == s + 1) break;
            }
        }
    }
    if (active.total_degree() > 0) push_factor(out, active);
    else if (alive.size() > 0 && active.total_degree() <= 0)
        throw internal_error("recombination lost a factor");
    // undo the x-shift
    for (auto& q : out) q = q.subst(shift_out, BiPoly<GF>::y(d)).monic_gl();
    (void)opt;
    return out;
}

/// exhaustive divisor search for the degenerate case (tiny fields)
inline std::vector<BiPoly<GF>> exhaustive_route(const BiPoly<GF>& w, const BiFactorOptions& opt) {
    auto d = w.desc();
    int half = w.total_degree() / 2;
    for (int dd = 1; dd <= half; ++dd) {
        if (dd > opt.fallback_degree_bound)
            throw budget_error("factor fallback exceeded its degree bound");
        // monomials of total degree <= dd, graded lex descending
        std::vector<Mono> monos;
        for (int t = dd; t >= 0; --t)
            for (int i = t; i >= 0; --i) monos.push_back({i, t - i});
        long long count = 1;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            count *= d.p;
            if (count > opt.fallback_budget)
                throw budget_error("factor fallback exceeded its candidate budget");
        }
        std::vector<std::uint32_t> digits(monos.size(), 0);
        while (true) {
            // build candidate; require normalized leading coefficient and full degree
            std::size_t lead = 0;
            while (lead < digits.size() && digits[lead] == 0) ++lead;
            if (lead < digits.size() && digits[lead] == 1 && monos[lead].deg() == dd) {
                std::vector<typename BiPoly<GF>::Term> ts;
                for (std::size_t i = lead; i < digits.size(); ++i)
                    if (digits[i] != 0) ts.push_back({monos[i], GF(d, digits[i])});
                BiPoly<GF> cand = BiPoly<GF>::from_terms(d, std::move(ts));
                auto quo = w.try_divide(cand);
                if (quo) {
                    std::vector<BiPoly<GF>> out = {cand.monic_gl()};
                    for (auto& q : factor_squarefree(*quo, opt)) out.push_back(q);
                    return out;
                }
            }
            std::size_t i = digits.size();
            while (i-- > 0) {
                if (++digits[i] < d.p) break;
                digits[i] = 0;
                if (i == 0) { i = digits.size() + 1; break; }
            }
            if (i == digits.size() + 1) break;
        }
    }
    return {w.monic_gl()}; // no divisor up to half the degree: irreducible
}

/// factor a squarefree polynomial with no K[x]-content, separable in y
inline std::vector<BiPoly<GF>> factor_squarefree(const BiPoly<GF>& w, const BiFactorOptions& opt) {
    auto d = w.desc();
    if (w.total_degree() == 1) return {w.monic_gl()};
    for (const auto& tf : all_changes(d)) {
        BiPoly<GF> g = apply_change(w, tf);
        if (g.deg_y() < 1) continue;
        std::vector<BiPoly<GF>> pre;
        UniPoly<GF> cont = x_content(g);
        if (cont.degree() > 0) {
            for (auto& [u, m] : uni_factor(cont).factors) {
                if (m != 1) throw internal_error("content of squarefree input not squarefree");
                std::vector<typename BiPoly<GF>::Term> ts;
                for (int i = 0; i <= u.degree(); ++i)
                    if (!u.coeff(i).is_zero()) ts.push_back({{i, 0}, u.coeff(i)});
                pre.push_back(BiPoly<GF>::from_terms(d, std::move(ts)));
            }
            g = divide_by_x_poly(g, cont);
        }
        UniPoly<GF> l = g.y_coeffs().back();
        for (std::uint32_t av = 0; av < d.p; ++av) {
            GF a(d, av);
            if (l.eval(a).is_zero()) continue;
            UniPoly<GF> u = g.eval_x(a);
            UniPoly<GF> up = u.derivative();
            if (up.is_zero() || UniPoly<GF>::gcd(u, up).degree() != 0) continue;
            std::vector<BiPoly<GF>> out;
            for (auto& q : pre) push_factor(out, undo_change(q, tf));
            for (auto& q : hensel_route(g, a, opt))
                push_factor(out, undo_change(q, tf));
            return out;
        }
    }
    return exhaustive_route(w, opt);
}

inline BiPoly<GF> bi_pth_root(const BiPoly<GF>& f) {
    auto d = f.desc();
    int p = static_cast<int>(d.p);
    std::vector<typename BiPoly<GF>::Term> ts;
    for (const auto& t : f.terms()) {
        if (t.m.i % p != 0 || t.m.j % p != 0)
            throw internal_error("pth root of a non-p-power");
        ts.push_back({{t.m.i / p, t.m.j / p}, t.c});
    }
    return BiPoly<GF>::from_terms(d, std::move(ts));
}

inline void factor_rec(const BiPoly<GF>& f_in, int mult, const BiFactorOptions& opt,
                       std::vector<std::pair<BiPoly<GF>, int>>& out) {
    auto d = f_in.desc();
    BiPoly<GF> f = f_in;
    if (f.is_constant()) return;
    // monomial part
    int ax = f.min_exp_x(), ay = f.min_exp_y();
    if (ax > 0) out.emplace_back(BiPoly<GF>::x(d), ax * mult);
    if (ay > 0) out.emplace_back(BiPoly<GF>::y(d), ay * mult);
    if (ax > 0 || ay > 0) f = f.shift_exp(-ax, -ay);
    if (f.is_constant()) return;
    // univariate shapes
    auto uni_to_bi = [&](const UniPoly<GF>& u, bool in_x) {
        std::vector<typename BiPoly<GF>::Term> ts;
        for (int i = 0; i <= u.degree(); ++i)
            if (!u.coeff(i).is_zero())
                ts.push_back({in_x ? Mono{i, 0} : Mono{0, i}, u.coeff(i)});
        return BiPoly<GF>::from_terms(d, std::move(ts));
    };
    if (f.deg_y() == 0 || f.deg_x() == 0) {
        bool in_x = f.deg_y() == 0;
        UniPoly<GF> u = in_x ? f.eval_y(GF::zero(d)) : f.eval_x(GF::zero(d));
        for (auto& [q, m] : uni_factor(u).factors)
            out.emplace_back(uni_to_bi(q, in_x).monic_gl(), m * mult);
        return;
    }
    // K[x]-content
    UniPoly<GF> cont = x_content(f);
    if (cont.degree() > 0) {
        for (auto& [q, m] : uni_factor(cont).factors)
            out.emplace_back(uni_to_bi(q, true).monic_gl(), m * mult);
        f = divide_by_x_poly(f, cont);
        if (f.is_constant()) return;
        if (f.deg_y() == 0 || f.deg_x() == 0) {
            factor_rec(f, mult, opt, out);
            return;
        }
    }
    BiPoly<GF> fy = f.derivative_y();
    if (fy.is_zero()) {
        BiPoly<GF> fx = f.derivative_x();
        if (fx.is_zero()) {
            factor_rec(bi_pth_root(f), mult * static_cast<int>(d.p), opt, out);
            return;
        }
        // swap so the main variable is separable
        std::vector<std::pair<BiPoly<GF>, int>> sub;
        factor_rec(f.swap_xy(), mult, opt, sub);
        for (auto& [q, m] : sub) out.emplace_back(q.swap_xy().monic_gl(), m);
        return;
    }
    BiPoly<GF> g = bi_gcd(f, fy);
    BiPoly<GF> w = f / g;
    if (w.is_constant()) throw internal_error("separable part is constant");
    std::vector<BiPoly<GF>> irr = factor_squarefree(w, opt);
    BiPoly<GF> rest = f;
    for (auto& q : irr) {
        int m = 0;
        while (true) {
            auto quo = rest.try_divide(q);
            if (!quo) break;
            rest = *quo;
            ++m;
        }
        if (m == 0) throw internal_error("reported factor does not divide input");
        out.emplace_back(q, m * mult);
    }
    if (!rest.is_constant()) factor_rec(rest, mult, opt, out);
}

} // namespace detail

/// Factor f over F_p into normalized irreducibles; unit * prod = f exactly.
/// Deterministic for a given input. The product identity is re-checked
/// internally before returning.
inline BiFactorization<GF> bi_factor(const BiPoly<GF>& f, const BiFactorOptions& opt = {}) {
    if (f.is_zero()) throw precondition_error("bi_factor of zero polynomial");
    if (f.total_degree() > opt.degree_cap)
        throw precondition_error("bi_factor degree cap exceeded");
    auto d = f.desc();
    std::vector<std::pair<BiPoly<GF>, int>> raw;
    detail::factor_rec(f, 1, opt, raw);
    // merge duplicates, sort canonically
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        return BiPoly<GF>::cmp(a.first, b.first) < 0;
    });
    BiFactorization<GF> res{GF::one(d), {}};
    for (auto& [q, m] : raw) {
        if (!res.factors.empty() && res.factors.back().first == q)
            res.factors.back().second += m;
        else
            res.factors.emplace_back(q, m);
    }
    BiPoly<GF> prod = BiPoly<GF>::one(d);
    for (auto& [q, m] : res.factors) prod = prod * q.pow(m);
    auto quo = f.try_divide(prod);
    if (!quo || !quo->is_constant())
        throw internal_error("factorization product check failed");
    res.unit = quo->is_zero() ? GF::zero(d) : quo->at_origin();
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        return BiPoly<GF>::cmp(a.first, b.first) < 0;
    });
    return res;
}

template <class Opt = BiFactorOptions>
inline BiFactorization<QQ> bi_factor(const BiPoly<QQ>&, const Opt& = {}) {
    throw precondition_error("factorization over the rationals is not supported");
}

inline bool bi_irreducible(const BiPoly<GF>& f, const BiFactorOptions& opt = {}) {
    auto fac = bi_factor(f, opt);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

inline bool bi_irreducible(const BiPoly<QQ>&, const BiFactorOptions& = {}) {
    throw precondition_error("irreducibility over the rationals is not supported");
}

} // namespace qtree

#endif
