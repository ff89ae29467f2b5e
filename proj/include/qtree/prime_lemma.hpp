#ifndef QTREE_PRIME_LEMMA_HPP
#define QTREE_PRIME_LEMMA_HPP

#include <optional>
#include <vector>

#include "qtree/approx.hpp"
#include "qtree/rng.hpp"
#include "qtree/valuation.hpp"

namespace qtree {

// ---------------------------------------------------------------------
// transform sequences with initial-form bookkeeping
// ---------------------------------------------------------------------

template <class K>
struct SeqLevel {
    BiPoly<K> p;        // transform at this level, in the level's coordinates
    int r;              // order at the level origin
    HForm<K> initial;   // normalized initial form
    bool prime_power;   // initial form has a single distinct prime factor
};

template <class K>
struct TransformSequence {
    std::vector<SeqLevel<K>> levels; // 0 .. n su path of length n
    std::vector<int> partial_sums;   // s_0 = 0, s_k = r_0 + ... + r_{k-1}, size n+2
    int total;                       // m = s_{n+1}
};

/// transform bookkeeping for a prime through a chain (pre: it passes)
inline TransformSequence<GF> analyze(const EssentialVal<GF>& v, const QuadPath<GF>& beta) {
    TransformResult<GF> tr = transform_elem(beta, v.p);
    if (!tr.passes)
        throw precondition_error("prime does not pass through the chain");
    TransformSequence<GF> seq{{}, {0}, 0};
    for (auto& lvl : tr.levels) {
        HForm<GF> inf = initial_form(lvl.p);
        bool pp = hform_factor(inf).factors.size() == 1;
        seq.levels.push_back({lvl.p, lvl.r, inf, pp});
        seq.partial_sums.push_back(seq.partial_sums.back() + lvl.r);
    }
    seq.total = seq.partial_sums.back();
    return seq;
}

// ---------------------------------------------------------------------
// seed construction
// ---------------------------------------------------------------------

struct PrimeLemmaOptions {
    std::uint64_t seed = 1;
    int outer_budget = 20;  // approximation rounds
    int seed_budget = 64;   // candidate curves per seeding
    int max_exponent = 6;   // exponent range of the transversal curves
    BiFactorOptions factor{.degree_cap = 512};
};

namespace detail {

/// deterministic candidate list for the transversal curve at a node:
/// first the transversal coordinate itself, then t - s * u^e for
/// e = 2, 3, ... with the shifts s in a seeded order
inline std::vector<Frac<GF>> seed_candidates(GFDesc d, const QuadPath<GF>& beta,
                                             const PrimeLemmaOptions& opt) {
    NodeChart<GF> ch = chart<GF>(d, beta);
    bool last_inf = !beta.empty() && beta.back().infinity;
    Frac<GF> t = last_inf ? ch.inv_x : ch.inv_y; // transversal coordinate
    Frac<GF> u = last_inf ? ch.inv_y : ch.inv_x; // exceptional coordinate
    std::vector<Frac<GF>> out = {t};
    std::vector<std::uint32_t> shifts;
    for (std::uint32_t s = 1; s < d.p; ++s) shifts.push_back(s);
    Rng rng(opt.seed ^ 0x9d2c5680u);
    for (std::size_t i = shifts.size(); i > 1; --i)
        std::swap(shifts[i - 1], shifts[rng.below(i)]);
    for (int e = 2; e <= opt.max_exponent; ++e) {
        Frac<GF> ue = u.pow(e);
        for (auto s : shifts) {
            out.push_back(t - ue * Frac<GF>::of(BiPoly<GF>::constant(d, GF(d, s))));
            if (static_cast<int>(out.size()) > opt.seed_budget) return out;
        }
    }
    return out;
}

} // namespace detail

/// Construct an irreducible element of the root ring whose valuation
/// passes through the whole chain: pull a transversal node curve back
/// through the inverse chart, clear denominators, and keep the first
/// irreducible factor whose transform passes. `skip` many successful
/// candidates are discarded first (used for reseeding).
inline EssentialVal<GF> seed_prime(GFDesc d, const QuadPath<GF>& beta,
                                   const PrimeLemmaOptions& opt = {}, int skip = 0) {
    int budget = opt.seed_budget;
    for (const Frac<GF>& cand : detail::seed_candidates(d, beta, opt)) {
        if (budget-- <= 0) break;
        const BiPoly<GF>& N = cand.num();
        if (N.is_constant()) continue;
        auto fac = bi_factor(N, opt.factor);
        for (auto& [q, m] : fac.factors) {
            if (!q.at_origin().is_zero()) continue;
            if (!transform_elem(beta, q).passes) continue;
            if (skip-- > 0) continue;
            return EssentialVal<GF>{q.monic_gl()};
        }
    }
    throw budget_error("seed_prime found no chain prime within its budget");
}

// ---------------------------------------------------------------------
// the approximation loop
// ---------------------------------------------------------------------

template <class K>
struct PrimeLemmaStep {
    TransformSequence<K> seq;
    std::optional<int> lift_level;       // level where a lift was applied
    std::optional<int> lift_error_order; // ord(p_k - g h); nullopt when exact
    bool multiple_candidates = false;    // more than one usable factor of g
};

template <class K>
struct PrimeLemmaResult {
    EssentialVal<K> v;
    std::vector<PrimeLemmaStep<K>> trace;
};

/// The approximation loop, starting from a given chain prime: iteratively
/// repairs the deepest level whose initial form splits, using
/// lift_factorization and a factor of the lifted g that still passes
/// through the rest of the chain.
inline PrimeLemmaResult<GF> prime_lemma_from(EssentialVal<GF> v, const QuadPath<GF>& beta,
                                             const PrimeLemmaOptions& opt = {}) {
    GFDesc d = v.p.desc();
    const int n = static_cast<int>(beta.size());
    std::vector<PrimeLemmaStep<GF>> trace;
    int reseeds = 0;
    for (int iter = 0; iter < opt.outer_budget; ++iter) {
        TransformSequence<GF> seq = analyze(v, beta);
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (!seq.levels[static_cast<std::size_t>(i)].prime_power) k = i;
        if (k < 0) {
            trace.push_back({seq, std::nullopt, std::nullopt, false});
            return {v, std::move(trace)};
        }
        const auto& lvl = seq.levels[static_cast<std::size_t>(k)];
        // split in(p_k) = pr^t * a with pr the prime toward the next level
        HForm<GF> pr = beta[static_cast<std::size_t>(k)].infinity
                           ? HForm<GF>::X(d)
                           : HForm<GF>::line(d, beta[static_cast<std::size_t>(k)].c);
        HForm<GF> inf = HForm<GF>::from_bipoly(initial_component(lvl.p));
        int t = 0;
        HForm<GF> rest = inf;
        while (pr.divides(rest)) {
            rest = rest.divide_exact(pr);
            ++t;
        }
        if (t < 1) throw internal_error("chain direction does not divide the initial form");
        HForm<GF> G = pr.pow(t);
        int target = seq.total - seq.partial_sums[static_cast<std::size_t>(k)];
        LiftResult<GF> lift = lift_factorization(lvl.p, G, rest, target);
        // pick a factor of g through the remaining chain, not exceptional
        QuadPath<GF> prefix(beta.begin(), beta.begin() + k);
        QuadPath<GF> suffix(beta.begin() + k, beta.end());
        NodeChart<GF> chp = chart<GF>(d, prefix);
        BiPoly<GF> J = chart_jacobian(chp);
        std::vector<BiPoly<GF>> usable;
        for (auto& [q, m] : bi_factor(lift.g, opt.factor).factors) {
            if (!q.at_origin().is_zero()) continue;
            if (k > 0 && q.divides(J)) continue; // exceptional in this chart
            if (!transform_elem(suffix, q).passes) continue;
            usable.push_back(q);
        }
        PrimeLemmaStep<GF> step{seq, k, lift.achieved_order, usable.size() > 1};
        trace.push_back(std::move(step));
        if (usable.empty()) {
            // degenerate: restart from a fresh transversal curve
            v = seed_prime(d, beta, opt, ++reseeds);
            continue;
        }
        const BiPoly<GF>& q = usable.front();
        if (k == 0) {
            v = EssentialVal<GF>{q.monic_gl()};
            continue;
        }
        // re-seat: express the level-k curve as a root-coordinate prime
        Frac<GF> w = Frac<GF>::of(BiPoly<GF>::zero(d));
        {
            // evaluate q at the inverse chart of the prefix
            Frac<GF> acc(d);
            int dy = q.deg_y();
            std::vector<Frac<GF>> xpow = {Frac<GF>::of(BiPoly<GF>::one(d))};
            for (int i = 1; i <= q.deg_x(); ++i) xpow.push_back(xpow.back() * chp.inv_x);
            for (int j = dy; j >= 0; --j) {
                Frac<GF> row(d);
                for (const auto& tm : q.terms())
                    if (tm.m.j == j)
                        row = row + xpow[static_cast<std::size_t>(tm.m.i)] *
                                        Frac<GF>::of(BiPoly<GF>::constant(d, tm.c));
                acc = (j == dy) ? row : acc * chp.inv_y + row;
            }
            w = acc;
        }
        bool reseated = false;
        for (auto& [u, m] : bi_factor(w.num(), opt.factor).factors) {
            if (!u.at_origin().is_zero()) continue;
            TransformResult<GF> tru = transform_elem(prefix, u);
            if (tru.levels.back().p.monic_gl() == q.monic_gl()) {
                v = EssentialVal<GF>{u.monic_gl()};
                reseated = true;
                break;
            }
        }
        if (!reseated)
            throw internal_error("could not re-seat the lifted factor at the root");
    }
    throw budget_error("prime_lemma exceeded its iteration budget");
}

/// Produce an essential valuation through beta such that every node it
/// contains is comparable to beta: seed with a transversal curve, then
/// run the approximation loop until every proper chain level has a
/// prime-power initial form.
inline PrimeLemmaResult<GF> prime_lemma(GFDesc d, const QuadPath<GF>& beta,
                                        const PrimeLemmaOptions& opt = {}) {
    return prime_lemma_from(seed_prime(d, beta, opt), beta, opt);
}

// ---------------------------------------------------------------------
// exhaustive comparability audit
// ---------------------------------------------------------------------

template <class K>
struct ComparabilityReport {
    std::vector<QuadPath<K>> counterexamples;
    long long nodes_visited = 0;
    int depth = 0;
};

/// Enumerate every rational node up to the given depth and verify that
/// containment in the valuation implies comparability with beta. Reports
/// counterexamples instead of throwing; pruning uses the fact that once a
/// transform is a unit it stays a unit further up.
inline ComparabilityReport<GF> comparability_guarantee(const EssentialVal<GF>& v,
                                                       const QuadPath<GF>& beta,
                                                       int depth) {
    GFDesc d = v.p.desc();
    ComparabilityReport<GF> rep{{}, 0, depth};
    struct Frame {
        QuadPath<GF> path;
        BiPoly<GF> cur;
    };
    std::vector<Frame> stack = {{QuadPath<GF>{}, v.p}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        ++rep.nodes_visited;
        int r = fr.cur.low_degree();
        if (r < 1) continue; // the valuation misses this node and its subtree
        if (!comparable(fr.path, beta)) rep.counterexamples.push_back(fr.path);
        if (static_cast<int>(fr.path.size()) >= depth) continue;
        for (auto& child : children(d, fr.path)) {
            const Direction<GF>& dir = child.back();
            BiPoly<GF> nxt = step_subst(fr.cur, dir);
            int e = dir.infinity ? nxt.min_exp_y() : nxt.min_exp_x();
            if (e != r) throw internal_error("chart exactness failed in the audit");
            nxt = dir.infinity ? nxt.shift_exp(0, -e) : nxt.shift_exp(-e, 0);
            stack.push_back({std::move(child), std::move(nxt)});
        }
    }
    return rep;
}

} // namespace qtree

#endif
