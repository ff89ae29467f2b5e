#ifndef QTREE_FRAC_HPP
#define QTREE_FRAC_HPP

#include <utility>

#include "qtree/factor.hpp"

namespace qtree {

/// Element of the fraction field k(x, y), kept reduced: gcd(num, den) = 1
/// and the denominator normalized with graded-lex leading coefficient 1.
template <class K>
class Frac {
public:
    using Desc = typename K::Desc;

    explicit Frac(Desc d) : num_(BiPoly<K>::zero(d)), den_(BiPoly<K>::one(d)) {}
    Frac(BiPoly<K> num, BiPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw precondition_error("zero denominator");
        reduce();
    }
    static Frac of(const BiPoly<K>& p) { return Frac(p, BiPoly<K>::one(p.desc())); }

    /// trusted constructor for pairs already known to be coprime with a
    /// graded-lex monic denominator (no gcd pass)
    static Frac reduced_unchecked(BiPoly<K> num, BiPoly<K> den) {
        if (den.is_zero()) throw precondition_error("zero denominator");
        Frac f(num.desc());
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }

    Desc desc() const { return num_.desc(); }
    const BiPoly<K>& num() const { return num_; }
    const BiPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw precondition_error("division by zero element");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac inverse() const {
        if (is_zero()) throw precondition_error("inverse of zero element");
        return Frac(den_, num_);
    }

    Frac pow(int e) const {
        auto d = desc();
        if (e == 0) return of(BiPoly<K>::one(d));
        if (e < 0) return inverse().pow(-e);
        return Frac(num_.pow(e), den_.pow(e));
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = BiPoly<K>::one(num_.desc());
            return;
        }
        BiPoly<K> g = bi_gcd(num_, den_);
        if (g.total_degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K lc = den_.lt().c;
        if (!lc.is_one()) {
            K inv = lc.inv();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    BiPoly<K> num_, den_;
};

} // namespace qtree

#endif
