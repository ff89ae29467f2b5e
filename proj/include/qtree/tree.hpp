#ifndef QTREE_TREE_HPP
#define QTREE_TREE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qtree/frac.hpp"
#include "qtree/poly_io.hpp"

namespace qtree {

/// A rational direction in the first neighborhood of a node: the point of
/// P^1 chosen when blowing up. Finite(c) is the tangent line y = c x,
/// Infinity the vertical tangent x = 0.
template <class K>
struct Direction {
    bool infinity = false;
    K c{};

    static Direction finite(const K& v) { return {false, v}; }
    static Direction at_infinity(typename K::Desc d) { return {true, K::zero(d)}; }

    friend bool operator==(const Direction& a, const Direction& b) {
        if (a.infinity != b.infinity) return false;
        return a.infinity || a.c == b.c;
    }
    friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
};

/// A point of the quadratic tree: the chain of rational directions from
/// the root. The empty path is the root ring itself.
template <class K>
using QuadPath = std::vector<Direction<K>>;

template <class K>
bool is_prefix(const QuadPath<K>& a, const QuadPath<K>& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

/// Tree order: two nodes are comparable iff one path is a prefix of the
/// other (containment of the corresponding local rings).
template <class K>
bool comparable(const QuadPath<K>& a, const QuadPath<K>& b) {
    return is_prefix(a, b) || is_prefix(b, a);
}

/// All rational children of a node: Finite(c) for each c in F_p, then
/// Infinity. Only available over a finite field.
inline std::vector<QuadPath<GF>> children(GFDesc d, const QuadPath<GF>& path) {
    std::vector<QuadPath<GF>> out;
    out.reserve(d.p + 1);
    for (std::uint32_t c = 0; c < d.p; ++c) {
        QuadPath<GF> child = path;
        child.push_back(Direction<GF>::finite(GF(d, c)));
        out.push_back(std::move(child));
    }
    QuadPath<GF> child = path;
    child.push_back(Direction<GF>::at_infinity(d));
    out.push_back(std::move(child));
    return out;
}

inline std::vector<QuadPath<QQ>> children(QQDesc, const QuadPath<QQ>&) {
    throw precondition_error("children enumeration needs a finite field or an explicit direction list");
}

/// children along caller-supplied directions (any base field)
template <class K>
std::vector<QuadPath<K>> children_along(const QuadPath<K>& path,
                                        const std::vector<Direction<K>>& dirs) {
    std::vector<QuadPath<K>> out;
    for (const auto& dir : dirs) {
        QuadPath<K> child = path;
        child.push_back(dir);
        out.push_back(std::move(child));
    }
    return out;
}

/// One blowup step: rewrite a polynomial at the parent node in the child
/// chart. Finite(c): x -> x', y -> x'(y' + c); Infinity: x -> x'y', y -> y'.
template <class K>
BiPoly<K> step_subst(const BiPoly<K>& f, const Direction<K>& dir) {
    auto d = f.desc();
    if (dir.infinity)
        return f.subst(BiPoly<K>::x(d) * BiPoly<K>::y(d), BiPoly<K>::y(d));
    BiPoly<K> ych = BiPoly<K>::x(d) * (BiPoly<K>::y(d) + BiPoly<K>::constant(d, dir.c));
    return f.subst(BiPoly<K>::x(d), ych);
}

/// Composite chart data for a node: the root coordinates as polynomials
/// in the node coordinates, the exceptional coordinate of each level, and
/// the inverse expressions of the node coordinates in the root field.
template <class K>
struct NodeChart {
    BiPoly<K> phi; // root x in node coordinates
    BiPoly<K> psi; // root y in node coordinates
    std::vector<int> exceptional; // per level: 0 = x-coordinate, 1 = y-coordinate
    Frac<K> inv_x; // node x as an element of k(x, y)
    Frac<K> inv_y; // node y as an element of k(x, y)
};

template <class K>
NodeChart<K> chart(typename K::Desc d, const QuadPath<K>& path) {
    NodeChart<K> ch{BiPoly<K>::x(d), BiPoly<K>::y(d), {},
                    Frac<K>::of(BiPoly<K>::x(d)), Frac<K>::of(BiPoly<K>::y(d))};
    for (const auto& dir : path) {
        ch.phi = step_subst(ch.phi, dir);
        ch.psi = step_subst(ch.psi, dir);
        if (dir.infinity) {
            // x_{i+1} = x_i / y_i, y_{i+1} = y_i
            ch.inv_x = ch.inv_x / ch.inv_y;
            ch.exceptional.push_back(1);
        } else {
            // x_{i+1} = x_i, y_{i+1} = y_i / x_i - c
            Frac<K> cfrac = Frac<K>::of(BiPoly<K>::constant(d, dir.c));
            ch.inv_y = ch.inv_y / ch.inv_x - cfrac;
            ch.exceptional.push_back(0);
        }
    }
    return ch;
}

/// Jacobian determinant of the chart map; its zero locus is exactly the
/// union of the exceptional curves visible in this chart.
template <class K>
BiPoly<K> chart_jacobian(const NodeChart<K>& ch) {
    return ch.phi.derivative_x() * ch.psi.derivative_y() -
           ch.phi.derivative_y() * ch.psi.derivative_x();
}

// ---------------------------------------------------------------------
// path text format: [c0, c1, inf, ...]
// ---------------------------------------------------------------------

template <class K>
std::string format_path(const QuadPath<K>& path) {
    std::string out = "[";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ", ";
        out += path[i].infinity ? "inf" : path[i].c.str();
    }
    return out + "]";
}

template <class K>
QuadPath<K> parse_path(typename K::Desc d, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("path must be bracketed, e.g. [0, inf]");
    s = trim(s.substr(1, s.size() - 2));
    QuadPath<K> path;
    if (s.empty()) return path;
    while (true) {
        std::size_t comma = s.find(',');
        std::string_view entry = trim(comma == std::string_view::npos ? s : s.substr(0, comma));
        if (entry.empty()) throw parse_error("empty path entry");
        if (entry == "inf")
            path.push_back(Direction<K>::at_infinity(d));
        else
            path.push_back(Direction<K>::finite(parse_scalar<K>(d, entry)));
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return path;
}

} // namespace qtree

#endif
