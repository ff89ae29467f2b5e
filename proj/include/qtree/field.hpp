#ifndef QTREE_FIELD_HPP
#define QTREE_FIELD_HPP

#include <cstdint>
#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtree/errors.hpp"

namespace qtree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Field descriptor for a prime field F_p. Every scalar carries its
/// descriptor so that mixing moduli is detected at run time.
struct GFDesc {
    std::uint32_t p = 0;
    friend bool operator==(const GFDesc&, const GFDesc&) = default;
};

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of a prime field F_p, p prime, p <= 2^16. Values are kept
/// reduced to [0, p).
class GF {
public:
    using Desc = GFDesc;

    GF() = default;
    GF(Desc d, std::int64_t v) : d_(d) {
        check_desc(d);
        std::int64_t r = v % static_cast<std::int64_t>(d.p);
        if (r < 0) r += d.p;
        v_ = static_cast<std::uint32_t>(r);
    }
    GF(Desc d, const BigInt& v) : d_(d) {
        check_desc(d);
        BigInt r = v % d.p;
        if (r < 0) r += d.p;
        v_ = static_cast<std::uint32_t>(r);
    }

    static GF zero(Desc d) { return GF(d, 0); }
    static GF one(Desc d) { return GF(d, 1); }

    Desc desc() const { return d_; }
    std::uint32_t rep() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    GF operator-() const { return from_raw(d_, v_ == 0 ? 0 : d_.p - v_); }

    friend GF operator+(const GF& a, const GF& b) {
        a.match(b);
        std::uint32_t s = a.v_ + b.v_;
        if (s >= a.d_.p) s -= a.d_.p;
        return from_raw(a.d_, s);
    }
    friend GF operator-(const GF& a, const GF& b) { return a + (-b); }
    friend GF operator*(const GF& a, const GF& b) {
        a.match(b);
        return from_raw(a.d_, static_cast<std::uint32_t>(
                                  (std::uint64_t(a.v_) * b.v_) % a.d_.p));
    }
    GF inv() const {
        if (v_ == 0) throw precondition_error("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = d_.p, nr = v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += d_.p;
        return from_raw(d_, static_cast<std::uint32_t>(t));
    }
    friend GF operator/(const GF& a, const GF& b) { return a * b.inv(); }

    friend bool operator==(const GF& a, const GF& b) {
        a.match(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }

    /// Canonical total order on scalars (used only for deterministic
    /// tie-breaking, not field structure): 0 < 1 < ... < p-1.
    static int cmp(const GF& a, const GF& b) {
        a.match(b);
        return a.v_ < b.v_ ? -1 : a.v_ > b.v_ ? 1 : 0;
    }

    std::string str() const { return std::to_string(v_); }

    std::size_t hash() const {
        return std::size_t(v_) * 0x9e3779b97f4a7c15ull + d_.p;
    }

private:
    static void check_desc(Desc d) {
        if (d.p == 0 || d.p > 65536 || !is_prime_u32(d.p))
            throw precondition_error("field modulus must be a prime <= 2^16");
    }
    static GF from_raw(Desc d, std::uint32_t v) {
        GF x; x.d_ = d; x.v_ = v; return x;
    }
    void match(const GF& o) const {
        if (!(d_ == o.d_))
            throw precondition_error("mixed field descriptors");
    }

    Desc d_{};
    std::uint32_t v_ = 0;
};

/// Trivial descriptor for the rationals.
struct QQDesc {
    friend bool operator==(const QQDesc&, const QQDesc&) = default;
};

/// Arbitrary-precision rational scalar. boost::multiprecision keeps the
/// value in lowest terms with positive denominator, which is exactly the
/// canonical form required here.
class QQ {
public:
    using Desc = QQDesc;

    QQ() = default;
    QQ(Desc, std::int64_t v) : v_(v) {}
    QQ(Desc, BigRat v) : v_(std::move(v)) {}
    explicit QQ(BigRat v) : v_(std::move(v)) {}

    static QQ zero(Desc) { return QQ(BigRat(0)); }
    static QQ one(Desc) { return QQ(BigRat(1)); }

    Desc desc() const { return {}; }
    const BigRat& rep() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    QQ operator-() const { return QQ(BigRat(-v_)); }
    friend QQ operator+(const QQ& a, const QQ& b) { return QQ(BigRat(a.v_ + b.v_)); }
    friend QQ operator-(const QQ& a, const QQ& b) { return QQ(BigRat(a.v_ - b.v_)); }
    friend QQ operator*(const QQ& a, const QQ& b) { return QQ(BigRat(a.v_ * b.v_)); }
    QQ inv() const {
        if (is_zero()) throw precondition_error("division by zero in Q");
        return QQ(BigRat(1 / v_));
    }
    friend QQ operator/(const QQ& a, const QQ& b) { return a * b.inv(); }

    friend bool operator==(const QQ& a, const QQ& b) { return a.v_ == b.v_; }
    friend bool operator!=(const QQ& a, const QQ& b) { return a.v_ != b.v_; }

    static int cmp(const QQ& a, const QQ& b) {
        return a.v_ < b.v_ ? -1 : a.v_ > b.v_ ? 1 : 0;
    }

    std::string str() const {
        if (boost::multiprecision::denominator(v_) == 1)
            return boost::multiprecision::numerator(v_).str();
        return boost::multiprecision::numerator(v_).str() + "/" +
               boost::multiprecision::denominator(v_).str();
    }

    std::size_t hash() const {
        return std::hash<std::string>{}(str());
    }

private:
    BigRat v_;
};

/// true when K supports full factorization (prime fields only).
template <class K> constexpr bool field_is_finite = false;
template <> inline constexpr bool field_is_finite<GF> = true;

} // namespace qtree

#endif
