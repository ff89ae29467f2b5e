#ifndef QTREE_POLY_IO_HPP
#define QTREE_POLY_IO_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qtree/bipoly.hpp"
#include "qtree/hform.hpp"
#include "qtree/unipoly.hpp"

namespace qtree {

// ---------------------------------------------------------------------
// scalar helpers
// ---------------------------------------------------------------------

inline GF scalar_from_int(GFDesc d, const BigInt& v) { return GF(d, v); }
inline QQ scalar_from_int(QQDesc, const BigInt& v) { return QQ(BigRat(v)); }

inline bool scalar_negative(const GF&) { return false; }
inline bool scalar_negative(const QQ& v) { return v.rep() < 0; }

template <class K>
K scalar_abs(const K& v) { return scalar_negative(v) ? -v : v; }

/// parse "a" or "a/b" (integers, optional leading '-') as a field scalar
template <class K>
K parse_scalar(typename K::Desc d, std::string_view s) {
    std::size_t pos = 0;
    auto read_int = [&]() -> BigInt {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected integer in scalar literal");
        BigInt v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? BigInt(-v) : v;
    };
    BigInt num = read_int();
    K r = scalar_from_int(d, num);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        BigInt den = read_int();
        if (den == 0) throw parse_error("zero denominator in scalar literal");
        r = r / scalar_from_int(d, den);
    }
    if (pos != s.size()) throw parse_error("trailing characters in scalar literal");
    return r;
}

// ---------------------------------------------------------------------
// polynomial grammar
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := uint | var ('^' uint)?
//
// Variables are x, y for bivariate input and t for univariate input; any
// other identifier is rejected. Elements of the fraction field are
// written poly or poly/poly with a single top-level '/'.
// ---------------------------------------------------------------------

namespace detail {

struct PolyLexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input");
        return s[pos++];
    }
    BigInt take_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected integer");
        BigInt v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }
    std::string take_ident() {
        skip_ws();
        std::string id;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
            id.push_back(s[pos++]);
        if (id.empty()) throw parse_error("expected identifier");
        return id;
    }
};

template <class K, class Vars>
BiPoly<K> parse_poly_impl(typename K::Desc d, PolyLexer& lex, const Vars& var_index) {
    BiPoly<K> acc = BiPoly<K>::zero(d);
    bool first = true;
    while (true) {
        if (lex.done()) {
            if (first) throw parse_error("empty polynomial");
            break;
        }
        char c = lex.peek();
        K sign = K::one(d);
        if (c == '+' || c == '-') {
            lex.take();
            if (c == '-') sign = -sign;
        } else if (!first) {
            break; // let the caller deal with '/', ')' etc.
        }
        // term
        K coeff = sign;
        int ex = 0, ey = 0;
        bool any_factor = false;
        while (true) {
            char f = lex.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff = coeff * scalar_from_int(d, lex.take_uint());
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(f))) {
                std::string id = lex.take_ident();
                int which = var_index(id);
                int e = 1;
                if (lex.peek() == '^') {
                    lex.take();
                    BigInt be = lex.take_uint();
                    if (be > 100000) throw parse_error("exponent too large");
                    e = static_cast<int>(be);
                }
                (which == 0 ? ex : ey) += e;
                any_factor = true;
            } else {
                throw parse_error("expected coefficient or variable");
            }
            if (lex.peek() == '*') { lex.take(); continue; }
            break;
        }
        if (!any_factor) throw parse_error("empty term");
        acc = acc + BiPoly<K>::monomial(d, coeff, ex, ey);
        first = false;
    }
    return acc;
}

} // namespace detail

/// parse a bivariate polynomial in x, y
template <class K>
BiPoly<K> parse_bipoly(typename K::Desc d, std::string_view text) {
    detail::PolyLexer lex{text};
    auto vars = [](const std::string& id) -> int {
        if (id == "x") return 0;
        if (id == "y") return 1;
        throw parse_error("unknown variable '" + id + "' (expected x or y)");
    };
    BiPoly<K> p = detail::parse_poly_impl<K>(d, lex, vars);
    if (!lex.done()) throw parse_error("trailing characters in polynomial");
    return p;
}

/// parse a univariate polynomial in t
template <class K>
UniPoly<K> parse_unipoly(typename K::Desc d, std::string_view text) {
    detail::PolyLexer lex{text};
    auto vars = [](const std::string& id) -> int {
        if (id == "t") return 0;
        throw parse_error("unknown variable '" + id + "' (expected t)");
    };
    BiPoly<K> p = detail::parse_poly_impl<K>(d, lex, vars);
    if (!lex.done()) throw parse_error("trailing characters in polynomial");
    UniPoly<K> u(d);
    for (const auto& t : p.terms()) u.set_coeff(t.m.i, t.c);
    return u;
}

/// parse "poly" or "poly/poly"; returns numerator and denominator
template <class K>
std::pair<BiPoly<K>, BiPoly<K>> parse_frac_parts(typename K::Desc d, std::string_view text) {
    detail::PolyLexer lex{text};
    auto vars = [](const std::string& id) -> int {
        if (id == "x") return 0;
        if (id == "y") return 1;
        throw parse_error("unknown variable '" + id + "' (expected x or y)");
    };
    BiPoly<K> num = detail::parse_poly_impl<K>(d, lex, vars);
    BiPoly<K> den = BiPoly<K>::one(d);
    if (!lex.done()) {
        if (lex.peek() != '/') throw parse_error("expected '/' or end of element");
        lex.take();
        den = detail::parse_poly_impl<K>(d, lex, vars);
        if (!lex.done()) throw parse_error("trailing characters in element");
    }
    return {num, den};
}

// ---------------------------------------------------------------------
// printing (canonical, re-parseable)
// ---------------------------------------------------------------------

template <class K>
std::string scalar_str(const K& v) { return v.str(); }

template <class K>
std::string format_bipoly(const BiPoly<K>& p, const char* vx = "x", const char* vy = "y") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        K c = t.c;
        bool neg = scalar_negative(c);
        if (first) {
            if (neg) { out += "-"; c = -c; }
        } else {
            out += neg ? " - " : " + ";
            if (neg) c = -c;
        }
        std::string mono;
        if (t.m.i > 0) {
            mono += vx;
            if (t.m.i > 1) mono += "^" + std::to_string(t.m.i);
        }
        if (t.m.j > 0) {
            if (!mono.empty()) mono += "*";
            mono += vy;
            if (t.m.j > 1) mono += "^" + std::to_string(t.m.j);
        }
        if (mono.empty()) {
            out += scalar_str(c);
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += scalar_str(c) + "*" + mono;
        }
        first = false;
    }
    return out;
}

template <class K>
std::string format_unipoly(const UniPoly<K>& p, const char* var = "t") {
    typename K::Desc d = p.desc();
    std::vector<typename BiPoly<K>::Term> ts;
    for (int i = p.degree(); i >= 0; --i)
        if (!p.coeff(i).is_zero()) ts.push_back({{i, 0}, p.coeff(i)});
    return format_bipoly(BiPoly<K>::from_terms(d, std::move(ts)), var, "?");
}

template <class K>
std::string format_hform(const HForm<K>& f) {
    if (f.is_zero()) return "0";
    return format_bipoly(f.to_bipoly());
}

} // namespace qtree

#endif
