#ifndef QTREE_BIPOLY_HPP
#define QTREE_BIPOLY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qtree/field.hpp"
#include "qtree/unipoly.hpp"

namespace qtree {

/// Exponent pair for a monomial x^i * y^j, ordered by graded lex with
/// x > y (total degree first, then x-exponent).
struct Mono {
    int i = 0;
    int j = 0;
    int deg() const { return i + j; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// strict "a > b" in graded lex, x > y
inline bool mono_gl_greater(const Mono& a, const Mono& b) {
    if (a.deg() != b.deg()) return a.deg() > b.deg();
    return a.i > b.i;
}

inline bool mono_divides(const Mono& a, const Mono& b) { // a | b
    return a.i <= b.i && a.j <= b.j;
}

/// Sparse bivariate polynomial in x, y over a field K. Terms are kept
/// sorted in decreasing graded-lex order with no zero coefficients, so
/// equality, hashing and leading-term access are structural.
template <class K>
class BiPoly {
public:
    using Desc = typename K::Desc;
    struct Term {
        Mono m;
        K c;
    };

    explicit BiPoly(Desc d) : d_(d) {}

    static BiPoly zero(Desc d) { return BiPoly(d); }
    static BiPoly constant(Desc d, const K& v) {
        BiPoly r(d);
        if (!v.is_zero()) r.t_.push_back({{0, 0}, v});
        return r;
    }
    static BiPoly one(Desc d) { return constant(d, K::one(d)); }
    static BiPoly monomial(Desc d, const K& v, int i, int j) {
        BiPoly r(d);
        if (!v.is_zero()) r.t_.push_back({{i, j}, v});
        return r;
    }
    static BiPoly x(Desc d) { return monomial(d, K::one(d), 1, 0); }
    static BiPoly y(Desc d) { return monomial(d, K::one(d), 0, 1); }

    /// build from an unsorted term list (combines duplicates)
    static BiPoly from_terms(Desc d, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return mono_gl_greater(a.m, b.m);
        });
        BiPoly r(d);
        for (auto& t : terms) {
            if (!r.t_.empty() && r.t_.back().m == t.m)
                r.t_.back().c = r.t_.back().c + t.c;
            else
                r.t_.push_back(std::move(t));
            if (!r.t_.empty() && r.t_.back().c.is_zero()) r.t_.pop_back();
        }
        return r;
    }

    Desc desc() const { return d_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m == Mono{0, 0}); }

    int total_degree() const { // -1 for zero
        if (t_.empty()) return -1;
        return t_.front().m.deg();
    }
    /// lowest total degree among terms (order at the origin); -1 for zero
    int low_degree() const {
        if (t_.empty()) return -1;
        int lo = t_.front().m.deg();
        for (const auto& t : t_) lo = std::min(lo, t.m.deg());
        return lo;
    }
    int deg_x() const {
        int d = -1;
        for (const auto& t : t_) d = std::max(d, t.m.i);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (const auto& t : t_) d = std::max(d, t.m.j);
        return d;
    }

    const Term& lt() const {
        if (t_.empty()) throw precondition_error("leading term of 0");
        return t_.front();
    }
    K coeff(int i, int j) const {
        for (const auto& t : t_)
            if (t.m.i == i && t.m.j == j) return t.c;
        return K::zero(d_);
    }
    K at_origin() const { return coeff(0, 0); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        a.match(b);
        BiPoly r(a.d_);
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() ||
                (i < a.t_.size() && mono_gl_greater(a.t_[i].m, b.t_[j].m))) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || mono_gl_greater(b.t_[j].m, a.t_[i].m)) {
                r.t_.push_back(b.t_[j++]);
            } else {
                K s = a.t_[i].c + b.t_[j].c;
                if (!s.is_zero()) r.t_.push_back({a.t_[i].m, s});
                ++i; ++j;
            }
        }
        return r;
    }
    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        a.match(b);
        if (a.is_zero() || b.is_zero()) return zero(a.d_);
        std::vector<Term> acc;
        acc.reserve(a.t_.size() * b.t_.size());
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_)
                acc.push_back({{ta.m.i + tb.m.i, ta.m.j + tb.m.j}, ta.c * tb.c});
        return from_terms(a.d_, std::move(acc));
    }
    BiPoly scaled(const K& s) const {
        BiPoly r(d_);
        if (s.is_zero()) return r;
        r.t_ = t_;
        for (auto& t : r.t_) t.c = t.c * s;
        return r;
    }
    BiPoly mul_mono(const K& c, int i, int j) const {
        BiPoly r(d_);
        if (c.is_zero()) return r;
        r.t_ = t_;
        for (auto& t : r.t_) { t.c = t.c * c; t.m.i += i; t.m.j += j; }
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        a.match(b);
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
        return true;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int e) const {
        BiPoly acc = one(d_), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    /// Exact division attempt by leading-term reduction. A single divisor
    /// is a Groebner basis of the ideal it generates, so the remainder
    /// test is decisive: returns the quotient iff g divides *this.
    std::optional<BiPoly> try_divide(const BiPoly& g) const {
        match(g);
        if (g.is_zero()) throw precondition_error("division by zero polynomial");
        BiPoly r = *this, q(d_);
        K glc_inv = g.lt().c.inv();
        std::vector<Term> qterms;
        while (!r.is_zero()) {
            const Term& lr = r.lt();
            const Term& lg = g.lt();
            if (!mono_divides(lg.m, lr.m)) return std::nullopt;
            Term f{{lr.m.i - lg.m.i, lr.m.j - lg.m.j}, lr.c * glc_inv};
            qterms.push_back(f);
            r = r - g.mul_mono(f.c, f.m.i, f.m.j);
        }
        return from_terms(d_, std::move(qterms));
    }
    friend BiPoly operator/(const BiPoly& a, const BiPoly& b) {
        auto q = a.try_divide(b);
        if (!q) throw internal_error("inexact bivariate division");
        return *q;
    }

    bool divides(const BiPoly& f) const { return f.try_divide(*this).has_value(); }

    /// multiplicity of *this (nonconstant) in f; 0 if coprime
    int multiplicity_in(const BiPoly& f) const {
        int m = 0;
        BiPoly cur = f;
        if (f.is_zero()) throw precondition_error("multiplicity in zero polynomial");
        while (true) {
            auto q = cur.try_divide(*this);
            if (!q) return m;
            cur = *q;
            ++m;
        }
    }

    /// minimum x-exponent over all terms (0 for zero polynomial)
    int min_exp_x() const {
        if (t_.empty()) return 0;
        int m = t_.front().m.i;
        for (const auto& t : t_) m = std::min(m, t.m.i);
        return m;
    }
    int min_exp_y() const {
        if (t_.empty()) return 0;
        int m = t_.front().m.j;
        for (const auto& t : t_) m = std::min(m, t.m.j);
        return m;
    }
    BiPoly shift_exp(int dx, int dy) const { // multiply by x^dx y^dy (dx,dy may be <0 if exact)
        BiPoly r = *this;
        for (auto& t : r.t_) {
            t.m.i += dx; t.m.j += dy;
            if (t.m.i < 0 || t.m.j < 0) throw internal_error("inexact monomial shift");
        }
        return r;
    }

    /// normalize so that the graded-lex leading coefficient is 1
    BiPoly monic_gl() const {
        if (is_zero()) return *this;
        return scaled(lt().c.inv());
    }

    BiPoly swap_xy() const {
        std::vector<Term> ts = t_;
        for (auto& t : ts) std::swap(t.m.i, t.m.j);
        return from_terms(d_, std::move(ts));
    }

    /// substitute x -> sx, y -> sy where sx, sy are bivariate polynomials
    BiPoly subst(const BiPoly& sx, const BiPoly& sy) const {
        match(sx); match(sy);
        // group by y-exponent, Horner in y, powers of x cached
        BiPoly r = zero(d_);
        int dx = deg_x(), dy = deg_y();
        if (is_zero()) return r;
        std::vector<BiPoly> xpow(static_cast<std::size_t>(std::max(dx, 0)) + 1, one(d_));
        for (int i = 1; i <= dx; ++i) xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * sx;
        for (int j = dy; j >= 0; --j) {
            BiPoly row = zero(d_);
            for (const auto& t : t_)
                if (t.m.j == j) row = row + xpow[static_cast<std::size_t>(t.m.i)].scaled(t.c);
            if (j == dy) r = row;
            else r = r * sy + row;
        }
        return r;
    }

    BiPoly derivative_x() const {
        std::vector<Term> ts;
        for (const auto& t : t_) {
            if (t.m.i == 0) continue;
            K m = scalar_of_int(t.m.i);
            if (!m.is_zero()) ts.push_back({{t.m.i - 1, t.m.j}, t.c * m});
        }
        return from_terms(d_, std::move(ts));
    }
    BiPoly derivative_y() const {
        std::vector<Term> ts;
        for (const auto& t : t_) {
            if (t.m.j == 0) continue;
            K m = scalar_of_int(t.m.j);
            if (!m.is_zero()) ts.push_back({{t.m.i, t.m.j - 1}, t.c * m});
        }
        return from_terms(d_, std::move(ts));
    }

    K eval(const K& vx, const K& vy) const {
        K acc = K::zero(d_);
        for (const auto& t : t_) {
            K m = t.c;
            for (int k = 0; k < t.m.i; ++k) m = m * vx;
            for (int k = 0; k < t.m.j; ++k) m = m * vy;
            acc = acc + m;
        }
        return acc;
    }

    /// univariate restriction y -> value (polynomial in x)
    UniPoly<K> eval_y(const K& vy) const {
        UniPoly<K> r(d_);
        for (const auto& t : t_) {
            K m = t.c;
            for (int k = 0; k < t.m.j; ++k) m = m * vy;
            r.set_coeff(t.m.i, r.coeff(t.m.i) + m);
        }
        return r;
    }
    UniPoly<K> eval_x(const K& vx) const {
        UniPoly<K> r(d_);
        for (const auto& t : t_) {
            K m = t.c;
            for (int k = 0; k < t.m.i; ++k) m = m * vx;
            r.set_coeff(t.m.j, r.coeff(t.m.j) + m);
        }
        return r;
    }

    /// coefficients as polynomials in x, indexed by y-degree
    std::vector<UniPoly<K>> y_coeffs() const {
        std::vector<UniPoly<K>> v(static_cast<std::size_t>(std::max(deg_y(), 0)) + 1, UniPoly<K>(d_));
        if (is_zero()) return v;
        for (const auto& t : t_) {
            auto& u = v[static_cast<std::size_t>(t.m.j)];
            u.set_coeff(t.m.i, u.coeff(t.m.i) + t.c);
        }
        return v;
    }
    static BiPoly from_y_coeffs(Desc d, const std::vector<UniPoly<K>>& v) {
        std::vector<Term> ts;
        for (std::size_t j = 0; j < v.size(); ++j)
            for (int i = 0; i <= v[j].degree(); ++i)
                if (!v[j].coeff(i).is_zero())
                    ts.push_back({{i, static_cast<int>(j)}, v[j].coeff(i)});
        return from_terms(d, std::move(ts));
    }

    /// homogeneous component of the given total degree
    BiPoly component(int deg) const {
        BiPoly r(d_);
        for (const auto& t : t_)
            if (t.m.deg() == deg) r.t_.push_back(t);
        return r;
    }

    /// deterministic total order: graded-lex term sequences compared
    /// termwise (monomials first, then scalar order)
    static int cmp(const BiPoly& a, const BiPoly& b) {
        a.match(b);
        std::size_t n = std::min(a.t_.size(), b.t_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& ta = a.t_[i];
            const auto& tb = b.t_[i];
            if (!(ta.m == tb.m)) return mono_gl_greater(ta.m, tb.m) ? 1 : -1;
            int c = K::cmp(ta.c, tb.c);
            if (c != 0) return c;
        }
        if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
        return 0;
    }

    std::size_t hash() const {
        std::size_t h = 14695981039346656037ull;
        for (const auto& t : t_) {
            h ^= static_cast<std::size_t>(t.m.i) * 1315423911u + static_cast<std::size_t>(t.m.j);
            h *= 1099511628211ull;
            h ^= t.c.hash();
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    K scalar_of_int(int n) const {
        K m = K::zero(d_);
        for (int k = 0; k < n; ++k) m = m + K::one(d_);
        return m;
    }
    void match(const BiPoly& o) const {
        if (!(d_ == o.d_)) throw precondition_error("mixed field descriptors");
    }

    Desc d_;
    std::vector<Term> t_;
};

} // namespace qtree

#endif
