#ifndef QTREE_FACTOR_HPP
#define QTREE_FACTOR_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qtree/bipoly.hpp"
#include "qtree/hform.hpp"
#include "qtree/rng.hpp"
#include "qtree/unipoly.hpp"

namespace qtree {

// ---------------------------------------------------------------------
// univariate factorization over F_p
// ---------------------------------------------------------------------

template <class K>
struct UniFactorization {
    K unit;
    std::vector<std::pair<UniPoly<K>, int>> factors; // monic irreducible, multiplicity
};

namespace detail {

/// p-th root of f in F_p[t], valid when f' = 0 (so f in F_p[t^p])
inline UniPoly<GF> uni_pth_root(const UniPoly<GF>& f) {
    auto d = f.desc();
    int p = static_cast<int>(d.p);
    UniPoly<GF> r(d);
    for (int i = 0; i <= f.degree(); i += p)
        r.set_coeff(i / p, f.coeff(i));
    return r;
}

/// squarefree decomposition of a monic f over F_p (multiplicities exact)
inline void uni_squarefree(const UniPoly<GF>& f, int scale,
                           std::vector<std::pair<UniPoly<GF>, int>>& out) {
    auto d = f.desc();
    if (f.degree() < 1) return;
    UniPoly<GF> fp = f.derivative();
    if (fp.is_zero()) {
        uni_squarefree(uni_pth_root(f), scale * static_cast<int>(d.p), out);
        return;
    }
    UniPoly<GF> c = UniPoly<GF>::gcd(f, fp);
    UniPoly<GF> w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<GF> y = UniPoly<GF>::gcd(w, c);
        UniPoly<GF> z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i * scale);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) uni_squarefree(uni_pth_root(c), scale * static_cast<int>(d.p), out);
}

/// equal-degree splitting (Cantor-Zassenhaus; trace map in char 2).
/// g monic squarefree, product of irreducibles all of degree deg.
inline void uni_edf(const UniPoly<GF>& g, int deg, Rng& rng,
                    std::vector<UniPoly<GF>>& out) {
    auto d = g.desc();
    if (g.degree() == deg) {
        out.push_back(g);
        return;
    }
    BigInt q = 1;
    for (int i = 0; i < deg; ++i) q *= d.p;
    while (true) {
        // random nonconstant poly of degree < deg g
        UniPoly<GF> r(d);
        int dr = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.degree() - 1)));
        for (int i = 0; i <= dr; ++i)
            r.set_coeff(i, GF(d, static_cast<std::int64_t>(rng.below(d.p))));
        if (r.degree() < 1) continue;
        UniPoly<GF> s(d);
        if (d.p % 2 == 1) {
            s = UniPoly<GF>::powmod(r, (q - 1) / 2, g) -
                UniPoly<GF>::constant(d, GF(d, 1));
        } else {
            // trace map sum r^(2^i), i < deg
            UniPoly<GF> term = r % g;
            s = term;
            for (int i = 1; i < deg; ++i) {
                term = (term * term) % g;
                s = s + term;
            }
        }
        if (s.is_zero()) continue;
        UniPoly<GF> h = UniPoly<GF>::gcd(g, s);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            uni_edf(h, deg, rng, out);
            uni_edf(g / h, deg, rng, out);
            return;
        }
    }
}

/// distinct-degree then equal-degree factorization of monic squarefree g
inline void uni_factor_squarefree(const UniPoly<GF>& g0, Rng& rng,
                                  std::vector<UniPoly<GF>>& out) {
    auto d = g0.desc();
    UniPoly<GF> g = g0;
    UniPoly<GF> h = UniPoly<GF>::t(d) % g;
    int k = 0;
    while (g.degree() > 0) {
        ++k;
        if (2 * k > g.degree()) {
            out.push_back(g); // remaining part is irreducible
            return;
        }
        h = UniPoly<GF>::powmod(h, BigInt(d.p), g);
        UniPoly<GF> split = UniPoly<GF>::gcd(g, h - UniPoly<GF>::t(d));
        if (split.degree() > 0) {
            uni_edf(split, k, rng, out);
            g = g / split;
            h = h % g;
        }
    }
}

} // namespace detail

/// Complete factorization over F_p into monic irreducibles. Deterministic:
/// the internal splitting randomness is seeded from the input, and the
/// result is sorted by (degree, coefficient order).
inline UniFactorization<GF> uni_factor(const UniPoly<GF>& f) {
    if (f.degree() < 1)
        throw precondition_error("uni_factor requires a nonconstant polynomial");
    UniFactorization<GF> res{f.lc(), {}};
    UniPoly<GF> fm = f.monic();
    Rng rng(0x5eedf00dULL ^ fm.hash());
    std::vector<std::pair<UniPoly<GF>, int>> sqf;
    detail::uni_squarefree(fm, 1, sqf);
    for (auto& [g, mult] : sqf) {
        std::vector<UniPoly<GF>> irr;
        detail::uni_factor_squarefree(g, rng, irr);
        for (auto& q : irr) res.factors.emplace_back(q, mult);
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  return UniPoly<GF>::cmp(a.first, b.first) < 0;
              });
    return res;
}

inline UniFactorization<QQ> uni_factor(const UniPoly<QQ>&) {
    throw precondition_error("factorization over the rationals is not supported");
}

// ---------------------------------------------------------------------
// homogeneous binary form factorization
// ---------------------------------------------------------------------

template <class K>
struct HFactorization {
    K unit;
    std::vector<std::pair<HForm<K>, int>> factors; // normalized irreducible
};

namespace detail {

/// rational-root factorization of a squarefree-ish univariate over Q;
/// throws when a nonconstant factor without rational roots remains
inline std::vector<std::pair<UniPoly<QQ>, int>> uni_rational_roots(const UniPoly<QQ>& f0) {
    UniPoly<QQ> f = f0.monic();
    std::vector<std::pair<UniPoly<QQ>, int>> out;
    // clear denominators to an integer polynomial
    BigInt den = 1;
    for (int i = 0; i <= f.degree(); ++i)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(f.coeff(i).rep()));
    std::vector<BigInt> c(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i)
        c[static_cast<std::size_t>(i)] =
            boost::multiprecision::numerator(f.coeff(i).rep()) *
            (den / boost::multiprecision::denominator(f.coeff(i).rep()));
    auto divisors = [](BigInt n) {
        n = boost::multiprecision::abs(n);
        std::vector<BigInt> ds;
        if (n > BigInt("1000000000000"))
            throw precondition_error("rational-root search out of range");
        for (BigInt d = 1; d * d <= n; ++d)
            if (n % d == 0) { ds.push_back(d); ds.push_back(n / d); }
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    };
    while (f.degree() > 0) {
        // constant term zero: root 0
        if (f.coeff(0).is_zero()) {
            UniPoly<QQ> t = UniPoly<QQ>::t({});
            int m = 0;
            while (!f.is_zero() && f.coeff(0).is_zero()) { f = f / t; ++m; }
            out.emplace_back(t, m);
            continue;
        }
        BigInt a0 = 1, an = 1;
        {
            BigInt dd = 1;
            for (int i = 0; i <= f.degree(); ++i)
                dd = boost::multiprecision::lcm(dd, boost::multiprecision::denominator(f.coeff(i).rep()));
            a0 = boost::multiprecision::numerator(f.coeff(0).rep()) *
                 (dd / boost::multiprecision::denominator(f.coeff(0).rep()));
            an = boost::multiprecision::numerator(f.coeff(f.degree()).rep()) *
                 (dd / boost::multiprecision::denominator(f.coeff(f.degree()).rep()));
        }
        bool found = false;
        for (const BigInt& pn : divisors(a0)) {
            for (const BigInt& qd : divisors(an)) {
                for (int sign = 0; sign < 2 && !found; ++sign) {
                    BigRat r(sign ? -pn : pn, qd);
                    QQ root{BigRat(r)};
                    if (f.eval(root).is_zero()) {
                        UniPoly<QQ> lin({}, {-root, QQ::one({})});
                        int m = 0;
                        while (true) {
                            auto [q, rem] = UniPoly<QQ>::divrem(f, lin);
                            if (!rem.is_zero()) break;
                            f = q; ++m;
                        }
                        out.emplace_back(lin, m);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw precondition_error("form requires irrational factorization over Q");
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return UniPoly<QQ>::cmp(a.first, b.first) < 0;
    });
    return out;
}

template <class K>
std::vector<std::pair<UniPoly<K>, int>> uni_factor_any(const UniPoly<K>& f);

template <>
inline std::vector<std::pair<UniPoly<GF>, int>> uni_factor_any(const UniPoly<GF>& f) {
    return uni_factor(f).factors;
}
template <>
inline std::vector<std::pair<UniPoly<QQ>, int>> uni_factor_any(const UniPoly<QQ>& f) {
    return uni_rational_roots(f);
}

} // namespace detail

/// Factor a nonzero binary form: split off the X power, dehomogenize in
/// t = Y/X and factor the univariate part.
template <class K>
HFactorization<K> hform_factor(const HForm<K>& F) {
    if (F.is_zero()) throw precondition_error("hform_factor of zero form");
    auto d = F.desc();
    HFactorization<K> res{F.lc(), {}};
    if (F.degree() == 0) return res;
    int xp = F.x_power();
    if (xp > 0) res.factors.emplace_back(HForm<K>::X(d), xp);
    UniPoly<K> g = F.dehomogenize();
    if (g.degree() > 0) {
        auto fac = detail::uni_factor_any<K>(g);
        for (auto& [u, m] : fac) {
            HForm<K> h = HForm<K>::homogenize(d, u, u.degree()).normalized();
            res.factors.emplace_back(h, m);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        return HForm<K>::cmp(a.first, b.first) < 0;
    });
    return res;
}

/// true when every distinct factor is the same prime (i.e. F is a prime power)
template <class K>
bool hform_prime_power(const HForm<K>& F) {
    auto fac = hform_factor(F);
    return fac.factors.size() == 1;
}

// ---------------------------------------------------------------------
// bivariate gcd (primitive PRS in K[x][y])
// ---------------------------------------------------------------------

namespace detail {

template <class K>
UniPoly<K> x_content(const BiPoly<K>& f) {
    UniPoly<K> c(f.desc());
    for (auto& u : f.y_coeffs()) {
        if (u.is_zero()) continue;
        c = c.is_zero() ? u.monic() : UniPoly<K>::gcd(c, u);
        if (c.degree() == 0) break;
    }
    return c;
}

template <class K>
BiPoly<K> divide_by_x_poly(const BiPoly<K>& f, const UniPoly<K>& c) {
    auto rows = f.y_coeffs();
    for (auto& u : rows) u = u.is_zero() ? u : u / c;
    return BiPoly<K>::from_y_coeffs(f.desc(), rows);
}

/// pseudo-remainder of A by B as polynomials in y over K[x]
template <class K>
std::vector<UniPoly<K>> y_prem(std::vector<UniPoly<K>> A, const std::vector<UniPoly<K>>& B) {
    auto lcB = B.back();
    int degB = static_cast<int>(B.size()) - 1;
    auto trim = [](std::vector<UniPoly<K>>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(A);
    while (static_cast<int>(A.size()) - 1 >= degB && !A.empty()) {
        int shift = static_cast<int>(A.size()) - 1 - degB;
        UniPoly<K> top = A.back();
        for (auto& u : A) u = u * lcB;
        for (int i = 0; i <= degB; ++i)
            A[static_cast<std::size_t>(i + shift)] =
                A[static_cast<std::size_t>(i + shift)] - top * B[static_cast<std::size_t>(i)];
        trim(A);
    }
    return A;
}

} // namespace detail

/// gcd in K[x, y], normalized so the graded-lex leading coefficient is 1
template <class K>
BiPoly<K> bi_gcd(const BiPoly<K>& a, const BiPoly<K>& b) {
    auto d = a.desc();
    if (a.is_zero() && b.is_zero())
        throw precondition_error("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic_gl();
    if (b.is_zero()) return a.monic_gl();
    if (a.deg_y() == 0 && b.deg_y() == 0) {
        UniPoly<K> g = UniPoly<K>::gcd(a.y_coeffs()[0], b.y_coeffs()[0]);
        return BiPoly<K>::from_y_coeffs(d, {g}).monic_gl();
    }
    // contents and primitive parts w.r.t. K[x]
    UniPoly<K> ca = detail::x_content(a), cb = detail::x_content(b);
    UniPoly<K> cg = UniPoly<K>::gcd(ca, cb);
    std::vector<UniPoly<K>> A = detail::divide_by_x_poly(a, ca).y_coeffs();
    std::vector<UniPoly<K>> B = detail::divide_by_x_poly(b, cb).y_coeffs();
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        if (B.empty()) break;
        if (B.size() == 1) {
            // primitive and constant in y => unit; only the content survives
            return BiPoly<K>::from_y_coeffs(d, {cg}).monic_gl();
        }
        std::vector<UniPoly<K>> R = detail::y_prem<K>(A, B);
        BiPoly<K> rb = BiPoly<K>::from_y_coeffs(d, R);
        if (!rb.is_zero()) {
            UniPoly<K> cr = detail::x_content(rb);
            rb = detail::divide_by_x_poly(rb, cr);
        }
        A = B;
        B = rb.y_coeffs();
        if (rb.is_zero()) B.clear();
    }
    BiPoly<K> prim = BiPoly<K>::from_y_coeffs(d, A);
    UniPoly<K> cp = detail::x_content(prim);
    prim = detail::divide_by_x_poly(prim, cp);
    BiPoly<K> cont = BiPoly<K>::from_y_coeffs(d, {cg});
    return (prim * cont).monic_gl();
}

} // namespace qtree

#endif
