#ifndef QTREE_VALUATION_HPP
#define QTREE_VALUATION_HPP

#include <optional>
#include <vector>

#include "qtree/bi_factor.hpp"
#include "qtree/tree.hpp"

namespace qtree {

// ---------------------------------------------------------------------
// order valuation, initial forms, node-coordinate rewriting
// ---------------------------------------------------------------------

/// lowest homogeneous component of a nonzero polynomial (raw, unscaled)
template <class K>
BiPoly<K> initial_component(const BiPoly<K>& f) {
    if (f.is_zero()) throw precondition_error("initial form of zero");
    return f.component(f.low_degree());
}

/// initial form in the graded variables of the node, normalized so the
/// graded-lex leading coefficient is 1
template <class K>
HForm<K> initial_form(const BiPoly<K>& f_in_node_coords) {
    return HForm<K>::from_bipoly(initial_component(f_in_node_coords)).normalized();
}

/// Rewrite an element of the fraction field in the coordinates of the
/// node at `path`. Works level by level: substitute one chart, then strip
/// the common power of that level's exceptional coordinate. For a reduced
/// input the result is again reduced (the only common factors a single
/// blowup can introduce are powers of its exceptional coordinate).
template <class K>
Frac<K> to_node(const QuadPath<K>& path, const Frac<K>& w) {
    auto d = w.desc();
    BiPoly<K> num = w.num(), den = w.den();
    for (const auto& dir : path) {
        num = step_subst(num, dir);
        den = step_subst(den, dir);
        if (num.is_zero()) break;
        if (dir.infinity) {
            int e = std::min(num.min_exp_y(), den.min_exp_y());
            if (e > 0) { num = num.shift_exp(0, -e); den = den.shift_exp(0, -e); }
        } else {
            int e = std::min(num.min_exp_x(), den.min_exp_x());
            if (e > 0) { num = num.shift_exp(-e, 0); den = den.shift_exp(-e, 0); }
        }
    }
    if (num.is_zero()) return Frac<K>(d);
    K lc = den.lt().c;
    if (!lc.is_one()) {
        K inv = lc.inv();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return Frac<K>::reduced_unchecked(std::move(num), std::move(den));
}

/// order valuation of the node applied to a nonzero element
template <class K>
int ord_at(const QuadPath<K>& path, const Frac<K>& w) {
    if (w.is_zero()) throw precondition_error("ord of zero");
    Frac<K> t = to_node(path, w);
    return t.num().low_degree() - t.den().low_degree();
}

/// membership in the node's local ring: the reduced denominator must not
/// vanish at the node origin
template <class K>
bool member(const QuadPath<K>& path, const Frac<K>& w) {
    Frac<K> t = to_node(path, w);
    return !t.den().at_origin().is_zero();
}

// ---------------------------------------------------------------------
// element transforms along a chain
// ---------------------------------------------------------------------

template <class K>
struct TransformLevel {
    BiPoly<K> p; // transform of the element in the level's coordinates
    int r;       // its order at the level's origin
};

template <class K>
struct TransformResult {
    std::vector<TransformLevel<K>> levels; // indices 0 .. path length
    bool passes;                           // every level order >= 1
};

/// Iteratively rewrite p in each chart and divide out the exact power of
/// the exceptional coordinate. The division is exact by construction and
/// is asserted on every call.
template <class K>
TransformResult<K> transform_elem(const QuadPath<K>& path, const BiPoly<K>& p) {
    if (p.is_zero()) throw precondition_error("transform of zero");
    TransformResult<K> res{{}, true};
    BiPoly<K> cur = p;
    for (std::size_t i = 0;; ++i) {
        int r = cur.low_degree();
        res.levels.push_back({cur, r});
        if (r < 1) res.passes = false;
        if (i == path.size()) break;
        BiPoly<K> nxt = step_subst(cur, path[i]);
        int e = path[i].infinity ? nxt.min_exp_y() : nxt.min_exp_x();
        if (e != r)
            throw internal_error("chart substitution is not exactly divisible by the exceptional power");
        cur = path[i].infinity ? nxt.shift_exp(0, -e) : nxt.shift_exp(-e, 0);
    }
    return res;
}

// ---------------------------------------------------------------------
// directions determined by an element
// ---------------------------------------------------------------------

template <class K>
struct DirectionClass {
    enum Kind { finite, infinity, nonrational } kind;
    K c;        // for finite
    int degree; // for nonrational
};

template <class K>
struct DirectionEntry {
    HForm<K> factor;
    int mult;
    DirectionClass<K> dir;
};

/// Factor the initial form of f (given in node coordinates, vanishing at
/// the node origin); linear factors correspond to rational first-
/// neighborhood points, higher-degree irreducible factors are reported
/// with their degree but not materialized as children.
template <class K>
std::vector<DirectionEntry<K>> directions_of(const BiPoly<K>& f) {
    auto d = f.desc();
    if (f.is_zero() || f.is_constant())
        throw precondition_error("directions need a nonconstant element");
    if (!f.at_origin().is_zero())
        throw precondition_error("element does not vanish at the node origin");
    HForm<K> inf = HForm<K>::from_bipoly(initial_component(f));
    auto fac = hform_factor(inf);
    std::vector<DirectionEntry<K>> out;
    for (auto& [h, m] : fac.factors) {
        DirectionClass<K> dc{DirectionClass<K>::nonrational, K::zero(d), h.degree()};
        if (h.degree() == 1) {
            K a = h.coeff(0), b = h.coeff(1); // a X + b Y
            if (b.is_zero())
                dc = {DirectionClass<K>::infinity, K::zero(d), 1};
            else
                dc = {DirectionClass<K>::finite, -(a / b), 1};
        }
        out.push_back({h, m, dc});
    }
    return out;
}

// ---------------------------------------------------------------------
// essential valuations
// ---------------------------------------------------------------------

/// A height-one prime of the root ring, given by an irreducible
/// polynomial vanishing at the origin, graded-lex monic.
template <class K>
struct EssentialVal {
    BiPoly<K> p;
};

/// validating constructor; irreducibility is checked over finite fields
template <class K>
EssentialVal<K> make_essential(const BiPoly<K>& p, const BiFactorOptions& opt = {}) {
    if (p.is_zero() || p.is_constant())
        throw precondition_error("essential valuation needs a nonconstant generator");
    if (!p.at_origin().is_zero())
        throw precondition_error("essential valuation generator must vanish at the origin");
    if constexpr (field_is_finite<K>) {
        if (!bi_irreducible(p, opt))
            throw precondition_error("essential valuation generator must be irreducible");
    }
    return {p.monic_gl()};
}

/// value of w under the valuation: multiplicity of p in the numerator
/// minus multiplicity in the denominator
template <class K>
int essential_value(const EssentialVal<K>& v, const Frac<K>& w) {
    if (w.is_zero()) throw precondition_error("essential value of zero");
    return v.p.multiplicity_in(w.num()) - v.p.multiplicity_in(w.den());
}

/// containment of the node ring in the valuation ring, via the transform
/// chain: true iff the strict transform passes through every origin
template <class K>
bool contains(const EssentialVal<K>& v, const QuadPath<K>& path) {
    return transform_elem(path, v.p).passes;
}

/// Independent implementation of `contains`, used as a cross-check: fully
/// substitute p in the node chart, factor, discard the factors dividing
/// the chart Jacobian (those cut exceptional curves), and test whether
/// what remains vanishes at the node origin. The nonnegativity of the
/// valuation on the pulled-back node coordinates is verified alongside.
inline bool contains_by_factorization(const EssentialVal<GF>& v, const QuadPath<GF>& path,
                                      const BiFactorOptions& opt = {.degree_cap = 512}) {
    auto d = v.p.desc();
    NodeChart<GF> ch = chart<GF>(d, path);
    BiPoly<GF> P = v.p.subst(ch.phi, ch.psi);
    BiPoly<GF> J = chart_jacobian(ch);
    if (J.is_zero()) throw internal_error("chart jacobian vanished");
    auto fac = bi_factor(P, opt);
    bool strict_through_origin = false;
    for (auto& [q, m] : fac.factors) {
        if (q.divides(J)) continue; // exceptional curve
        if (q.at_origin().is_zero()) strict_through_origin = true;
    }
    if (strict_through_origin) {
        if (essential_value(v, ch.inv_x) < 0 || essential_value(v, ch.inv_y) < 0)
            throw internal_error("containment with a negative value on a node coordinate");
    }
    return strict_through_origin;
}

} // namespace qtree

#endif
