#ifndef QTREE_HFORM_HPP
#define QTREE_HFORM_HPP

#include <vector>

#include "qtree/bipoly.hpp"
#include "qtree/unipoly.hpp"

namespace qtree {

/// Homogeneous binary form of degree d in the graded variables (X, Y),
/// stored as the coefficient vector of X^d, X^(d-1)Y, ..., Y^d.
/// The zero form is permitted (all coefficients zero) so that homogeneous
/// components of arbitrary polynomials can be represented.
template <class K>
class HForm {
public:
    using Desc = typename K::Desc;

    HForm(Desc d, int degree)
        : d_(d), c_(static_cast<std::size_t>(degree) + 1, K::zero(d)) {
        if (degree < 0) throw precondition_error("negative form degree");
    }
    HForm(Desc d, std::vector<K> coeffs) : d_(d), c_(std::move(coeffs)) {
        if (c_.empty()) throw precondition_error("empty form coefficient vector");
    }

    static HForm X(Desc d) { return HForm(d, {K::one(d), K::zero(d)}); }
    static HForm Y(Desc d) { return HForm(d, {K::zero(d), K::one(d)}); }
    static HForm one(Desc d) { return HForm(d, {K::one(d)}); }
    /// Y - c X
    static HForm line(Desc d, const K& c) { return HForm(d, {-c, K::one(d)}); }

    Desc desc() const { return d_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    /// coefficient of X^(d-k) Y^k
    K coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        for (const auto& v : c_) if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const HForm& a, const HForm& b) {
        a.match(b);
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const HForm& a, const HForm& b) { return !(a == b); }

    friend HForm operator*(const HForm& a, const HForm& b) {
        a.match(b);
        HForm r(a.d_, a.degree() + b.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; j <= b.degree(); ++j)
                r.c_[static_cast<std::size_t>(i + j)] =
                    r.c_[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    HForm scaled(const K& s) const {
        HForm r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }

    HForm pow(int e) const {
        HForm acc = one(d_), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    /// leading coefficient in graded lex (first nonzero from the X^d end)
    K lc() const {
        for (const auto& v : c_) if (!v.is_zero()) return v;
        throw precondition_error("leading coefficient of zero form");
    }
    HForm normalized() const { return scaled(lc().inv()); }

    /// exponent of X dividing the form
    int x_power() const {
        if (is_zero()) throw precondition_error("x_power of zero form");
        for (int k = degree(); k >= 0; --k)
            if (!coeff(k).is_zero()) return degree() - k;
        return degree();
    }

    /// f(t) = F(1, t); together with x_power() this determines the form
    UniPoly<K> dehomogenize() const {
        UniPoly<K> f(d_);
        for (int k = 0; k <= degree(); ++k)
            if (!coeff(k).is_zero()) f.set_coeff(k, coeff(k));
        return f;
    }
    /// X^(d - deg f) * f(Y/X) * X^deg f, of total degree d >= deg f
    static HForm homogenize(Desc dsc, const UniPoly<K>& f, int d) {
        if (f.is_zero()) throw precondition_error("homogenize zero polynomial");
        if (d < f.degree()) throw precondition_error("degree too small to homogenize");
        HForm r(dsc, d);
        for (int k = 0; k <= f.degree(); ++k)
            r.c_[static_cast<std::size_t>(k)] = f.coeff(k);
        return r;
    }

    /// exact division; throws if not divisible
    HForm divide_exact(const HForm& g) const {
        match(g);
        if (g.is_zero()) throw precondition_error("division by zero form");
        if (is_zero()) throw precondition_error("division of zero form");
        int xa = x_power(), xg = g.x_power();
        if (xa < xg) throw internal_error("inexact form division (X power)");
        UniPoly<K> fa = dehomogenize(), fg = g.dehomogenize();
        auto [q, r] = UniPoly<K>::divrem(fa, fg);
        if (!r.is_zero()) throw internal_error("inexact form division");
        int dq = degree() - g.degree();
        return homogenize(d_, q, dq);
    }

    bool divides(const HForm& f) const {
        if (is_zero() || f.is_zero()) return false;
        if (x_power() > f.x_power()) return false;
        auto [q, r] = UniPoly<K>::divrem(f.dehomogenize(), dehomogenize());
        (void)q;
        return r.is_zero();
    }

    static HForm gcd(const HForm& a, const HForm& b) {
        a.match(b);
        if (a.is_zero() || b.is_zero())
            throw precondition_error("gcd with zero form");
        int xp = std::min(a.x_power(), b.x_power());
        UniPoly<K> g = UniPoly<K>::gcd(a.dehomogenize(), b.dehomogenize());
        return HForm::X(a.d_).pow(xp) * homogenize(a.d_, g, g.degree());
    }

    static bool coprime(const HForm& a, const HForm& b) {
        return gcd(a, b).degree() == 0;
    }

    /// view as a polynomial in the chart coordinates (X -> x, Y -> y)
    BiPoly<K> to_bipoly() const {
        std::vector<typename BiPoly<K>::Term> ts;
        for (int k = 0; k <= degree(); ++k)
            if (!coeff(k).is_zero())
                ts.push_back({{degree() - k, k}, coeff(k)});
        return BiPoly<K>::from_terms(d_, std::move(ts));
    }
    /// homogeneous bivariate polynomial -> form of its degree
    static HForm from_bipoly(const BiPoly<K>& f) {
        if (f.is_zero()) throw precondition_error("form from zero polynomial");
        int d = f.total_degree();
        HForm r(f.desc(), d);
        for (const auto& t : f.terms()) {
            if (t.m.deg() != d)
                throw precondition_error("polynomial is not homogeneous");
            r.c_[static_cast<std::size_t>(t.m.j)] = t.c;
        }
        return r;
    }

    static int cmp(const HForm& a, const HForm& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            int c = K::cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

private:
    void match(const HForm& o) const {
        if (!(d_ == o.d_)) throw precondition_error("mixed field descriptors");
    }

    Desc d_;
    std::vector<K> c_;
};

} // namespace qtree

#endif
