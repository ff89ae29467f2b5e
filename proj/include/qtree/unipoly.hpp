#ifndef QTREE_UNIPOLY_HPP
#define QTREE_UNIPOLY_HPP

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "qtree/field.hpp"

namespace qtree {

/// Dense univariate polynomial over a field K. Canonical form: no
/// trailing zero coefficients (the zero polynomial has an empty vector).
template <class K>
class UniPoly {
public:
    using Desc = typename K::Desc;

    explicit UniPoly(Desc d) : d_(d) {}
    UniPoly(Desc d, std::vector<K> coeffs) : d_(d), c_(std::move(coeffs)) {
        normalize();
    }

    static UniPoly zero(Desc d) { return UniPoly(d); }
    static UniPoly constant(Desc d, const K& v) {
        UniPoly r(d);
        if (!v.is_zero()) r.c_.push_back(v);
        return r;
    }
    static UniPoly monomial(Desc d, const K& v, int deg) {
        UniPoly r(d);
        if (!v.is_zero()) {
            r.c_.assign(deg + 1, K::zero(d));
            r.c_[deg] = v;
        }
        return r;
    }
    static UniPoly t(Desc d) { return monomial(d, K::one(d), 1); }

    Desc desc() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K::zero(d_);
        return c_[static_cast<std::size_t>(i)];
    }
    K lc() const {
        if (is_zero()) throw precondition_error("leading coefficient of 0");
        return c_.back();
    }

    void set_coeff(int i, const K& v) {
        if (i >= static_cast<int>(c_.size()))
            c_.resize(static_cast<std::size_t>(i) + 1, K::zero(d_));
        c_[static_cast<std::size_t>(i)] = v;
        normalize();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.match(b);
        UniPoly r(a.d_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K::zero(a.d_));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(int(i)) + b.coeff(int(i));
        r.normalize();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        return a + (-b);
    }
    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.match(b);
        if (a.is_zero() || b.is_zero()) return zero(a.d_);
        UniPoly r(a.d_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K::zero(a.d_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }
    UniPoly scaled(const K& s) const {
        UniPoly r(d_);
        if (s.is_zero()) return r;
        r.c_ = c_;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        a.match(b);
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        a.match(b);
        if (b.is_zero()) throw precondition_error("division by zero polynomial");
        UniPoly q = zero(a.d_), r = a;
        K blc_inv = b.lc().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            K f = r.lc() * blc_inv;
            q.set_coeff(shift, q.coeff(shift) + f);
            // r -= f * t^shift * b
            for (int i = 0; i <= b.degree(); ++i) {
                int k = i + shift;
                r.c_[static_cast<std::size_t>(k)] =
                    r.coeff(k) - f * b.coeff(i);
            }
            r.normalize();
        }
        return {q, r};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw internal_error("inexact univariate division");
        return q;
    }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) {
        return divrem(a, b).second;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inv());
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        a.match(b);
        while (!b.is_zero()) {
            UniPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or 0)
    static std::tuple<UniPoly, UniPoly, UniPoly> xgcd(const UniPoly& a, const UniPoly& b) {
        a.match(b);
        UniPoly r0 = a, r1 = b;
        UniPoly s0 = constant(a.d_, K::one(a.d_)), s1 = zero(a.d_);
        UniPoly t0 = zero(a.d_), t1 = constant(a.d_, K::one(a.d_));
        while (!r1.is_zero()) {
            auto [q, r] = divrem(r0, r1);
            r0 = r1; r1 = r;
            UniPoly s2 = s0 - q * s1; s0 = s1; s1 = s2;
            UniPoly t2 = t0 - q * t1; t0 = t1; t1 = t2;
        }
        if (r0.is_zero()) return {r0, s0, t0};
        K u = r0.lc().inv();
        return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
    }

    UniPoly derivative() const {
        UniPoly r(d_);
        K m = K::zero(d_);
        for (int i = 1; i <= degree(); ++i) {
            m = m + K::one(d_); // i reduced in the field (may vanish in char p)
            r.c_.push_back(m * c_[static_cast<std::size_t>(i)]);
        }
        r.normalize();
        return r;
    }

    K eval(const K& x) const {
        K acc = K::zero(d_);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    static UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& mod) {
        UniPoly acc = constant(base.d_, K::one(base.d_)) % mod;
        UniPoly b = base % mod;
        BigInt k = e;
        while (k > 0) {
            if ((k & 1) != 0) acc = (acc * b) % mod;
            b = (b * b) % mod;
            k >>= 1;
        }
        return acc;
    }

    /// multiply by t^k
    UniPoly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        UniPoly r(d_);
        r.c_.assign(c_.size() + static_cast<std::size_t>(k), K::zero(d_));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// truncate: keep coefficients of t^0 .. t^(n-1)
    UniPoly trunc(int n) const {
        UniPoly r(d_);
        int m = std::min<int>(n, static_cast<int>(c_.size()));
        r.c_.assign(c_.begin(), c_.begin() + std::max(0, m));
        r.normalize();
        return r;
    }

    /// deterministic lexicographic comparison (degree first, then
    /// coefficients from the top); used for stable factor ordering.
    static int cmp(const UniPoly& a, const UniPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            int c = K::cmp(a.coeff(i), b.coeff(i));
            if (c != 0) return c;
        }
        return 0;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& x : c_) { h ^= x.hash(); h *= 1099511628211ull; }
        return h;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void match(const UniPoly& o) const {
        if (!(d_ == o.d_)) throw precondition_error("mixed field descriptors");
    }

    Desc d_;
    std::vector<K> c_;
};

} // namespace qtree

#endif
