#ifndef QTREE_SUITES_HPP
#define QTREE_SUITES_HPP

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "qtree/report_json.hpp"

namespace qtree {

struct SuiteResult {
    std::vector<Json> lines;
    long long verified = 0;
    long long not_found = 0;
    long long counterexamples = 0;
    double seconds = 0;
};

namespace detail {

struct SuiteTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

inline void tally(SuiteResult& res, CheckStatus st) {
    switch (st) {
        case CheckStatus::verified: ++res.verified; break;
        case CheckStatus::witness_not_found: ++res.not_found; break;
        case CheckStatus::counterexample: ++res.counterexamples; break;
    }
}

inline BiPoly<GF> random_bipoly(GFDesc d, Rng& rng, int max_deg, bool vanish_at_origin) {
    while (true) {
        std::vector<typename BiPoly<GF>::Term> ts;
        for (int i = 0; i <= max_deg; ++i)
            for (int j = 0; i + j <= max_deg; ++j) {
                if (vanish_at_origin && i == 0 && j == 0) continue;
                if (rng.below(2) == 0) continue;
                GF c(d, static_cast<std::int64_t>(rng.below(d.p)));
                if (!c.is_zero()) ts.push_back({{i, j}, c});
            }
        BiPoly<GF> f = BiPoly<GF>::from_terms(d, std::move(ts));
        if (!f.is_zero() && !f.is_constant()) return f;
    }
}

inline HForm<GF> random_form(GFDesc d, Rng& rng, int deg) {
    while (true) {
        std::vector<GF> c;
        for (int k = 0; k <= deg; ++k)
            c.push_back(GF(d, static_cast<std::int64_t>(rng.below(d.p))));
        HForm<GF> f(d, std::move(c));
        if (!f.is_zero()) return f;
    }
}

inline QuadPath<GF> random_path(GFDesc d, Rng& rng, int depth) {
    QuadPath<GF> path;
    for (int i = 0; i < depth; ++i) {
        std::uint64_t r = rng.below(d.p + 1);
        path.push_back(r == d.p ? Direction<GF>::at_infinity(d)
                                : Direction<GF>::finite(GF(d, static_cast<std::int64_t>(r))));
    }
    return path;
}

/// random irreducible through the origin, degree <= max_deg
inline EssentialVal<GF> random_chain_prime(GFDesc d, Rng& rng, int max_deg) {
    while (true) {
        BiPoly<GF> f = random_bipoly(d, rng, max_deg, true);
        if (f.at_origin() != GF::zero(d)) continue;
        auto fac = bi_factor(f);
        std::vector<BiPoly<GF>> through;
        for (auto& [q, m] : fac.factors)
            if (q.at_origin().is_zero()) through.push_back(q);
        if (through.empty()) continue;
        return EssentialVal<GF>{through[rng.below(through.size())]};
    }
}

} // namespace detail

// ---------------------------------------------------------------------
// initial-form lifting suite
// ---------------------------------------------------------------------

/// random coprime split G*H plus a higher-order tail; lift and verify the
/// postconditions exactly
inline SuiteResult suite_approx(GFDesc d, long long count, std::uint64_t seed) {
    SuiteResult res;
    detail::SuiteTimer timer;
    Rng root(seed);
    for (long long idx = 0; idx < count; ++idx) {
        Rng rng = root.fork(static_cast<std::uint64_t>(idx));
        HForm<GF> G = detail::random_form(d, rng, 1 + static_cast<int>(rng.below(4)));
        HForm<GF> H(d, 0);
        do {
            H = detail::random_form(d, rng, 1 + static_cast<int>(rng.below(4)));
        } while (!HForm<GF>::coprime(G, H));
        int r = G.degree() + H.degree();
        BiPoly<GF> f = G.to_bipoly() * H.to_bipoly();
        // tail of order > r, degree <= 8
        for (int deg = r + 1; deg <= 8; ++deg)
            for (int i = 0; i <= deg; ++i) {
                if (rng.below(3) != 0) continue;
                GF c(d, static_cast<std::int64_t>(rng.below(d.p)));
                if (!c.is_zero()) f = f + BiPoly<GF>::monomial(d, c, i, deg - i);
            }
        int n = r + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(12 - r)));
        CheckReport<GF> rep;
        LiftResult<GF> lift = lift_factorization(f, G, H, n);
        bool ok = initial_form(lift.g) == G.normalized() &&
                  initial_form(lift.h) == H.normalized() &&
                  (!lift.achieved_order || *lift.achieved_order >= n);
        BiPoly<GF> rem = f - lift.g * lift.h;
        ok = ok && (rem.is_zero() || rem.low_degree() >= n);
        rep.status = ok ? CheckStatus::verified : CheckStatus::counterexample;
        if (!ok) rep.note = "lift postcondition failed";
        Json line = check_line("approx", d.p, seed, idx, rep);
        line["instance"] = Json{{"f", format_bipoly(f)},
                                {"G", format_hform(G)},
                                {"H", format_hform(H)},
                                {"n", n}};
        line["g"] = format_bipoly(lift.g);
        line["h"] = format_bipoly(lift.h);
        line["order_of_remainder"] =
            lift.achieved_order ? Json(*lift.achieved_order) : Json(nullptr);
        res.lines.push_back(std::move(line));
        detail::tally(res, rep.status);
    }
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------------
// essential valuation construction suite
// ---------------------------------------------------------------------

inline SuiteResult suite_prime_lemma(GFDesc d, long long count, int max_depth,
                                     std::uint64_t seed, bool audit = true) {
    SuiteResult res;
    detail::SuiteTimer timer;
    Rng root(seed);
    for (long long idx = 0; idx < count; ++idx) {
        Rng rng = root.fork(static_cast<std::uint64_t>(idx));
        int depth = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_depth)));
        QuadPath<GF> beta = detail::random_path(d, rng, depth);
        PrimeLemmaOptions lopt;
        lopt.seed = seed ^ static_cast<std::uint64_t>(idx * 0x9e3779b9ull);
        auto out = prime_lemma(d, beta, lopt);
        TransformSequence<GF> seq = analyze(out.v, beta);
        bool chain_ok = true;
        for (std::size_t i = 0; i + 1 < seq.levels.size(); ++i)
            chain_ok = chain_ok && seq.levels[i].prime_power;
        CheckReport<GF> rep;
        rep.set = {beta};
        rep.witnesses.push_back({out.v, std::nullopt});
        if (!chain_ok || !contains(out.v, beta)) {
            rep.status = CheckStatus::counterexample;
            rep.note = "transform chain is not prime-power";
        } else if (audit) {
            auto audit_rep = comparability_guarantee(out.v, beta, depth + 1);
            if (!audit_rep.counterexamples.empty()) {
                rep.status = CheckStatus::counterexample;
                rep.note = "containment without comparability at depth " +
                           std::to_string(depth + 1);
            }
        }
        Json line = check_line("prime-lemma", d.p, seed, idx, rep);
        line["v"] = format_bipoly(out.v.p);
        line["rounds"] = out.trace.size();
        res.lines.push_back(std::move(line));
        detail::tally(res, rep.status);
    }
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------------
// theorem suites
// ---------------------------------------------------------------------

inline SuiteResult suite_unique_essential(GFDesc d, long long count, int max_size,
                                          int max_depth, std::uint64_t seed) {
    SuiteResult res;
    detail::SuiteTimer timer;
    Rng root(seed);
    for (long long idx = 0; idx < count; ++idx) {
        Rng rng = root.fork(static_cast<std::uint64_t>(idx));
        int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
        IncomparableSet<GF> X = random_incomparable(d, rng.next(), size, max_depth);
        TheoremOptions topt;
        topt.lemma.seed = seed ^ static_cast<std::uint64_t>(idx);
        CheckReport<GF> rep = check_unique_essential(d, X, topt);
        res.lines.push_back(check_line("unique-essential", d.p, seed, idx, rep));
        detail::tally(res, rep.status);
    }
    res.seconds = timer.elapsed();
    return res;
}

inline SuiteResult suite_comparability(GFDesc d, long long count, int max_size,
                                       int max_depth, std::uint64_t seed) {
    SuiteResult res;
    detail::SuiteTimer timer;
    Rng root(seed);
    for (long long idx = 0; idx < count; ++idx) {
        Rng rng = root.fork(static_cast<std::uint64_t>(idx));
        int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
        IncomparableSet<GF> X = random_incomparable(d, rng.next(), size, max_depth);
        QuadPath<GF> alpha;
        bool found = false;
        for (int tries = 0; tries < 500 && !found; ++tries) {
            alpha = detail::random_path(
                d, rng, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_depth))));
            found = true;
            for (const auto& b : X.members)
                if (comparable(alpha, b)) { found = false; break; }
        }
        if (!found) {
            // sets that block every sampled alpha are re-drawn as singletons
            X = random_incomparable(d, rng.next(), 1, max_depth);
            do {
                alpha = detail::random_path(d, rng, 1);
            } while (comparable(alpha, X.members[0]));
        }
        TheoremOptions topt;
        topt.lemma.seed = seed ^ static_cast<std::uint64_t>(idx);
        CheckReport<GF> rep = check_comparability(d, X, alpha, topt);
        res.lines.push_back(check_line("comparability", d.p, seed, idx, rep));
        detail::tally(res, rep.status);
    }
    res.seconds = timer.elapsed();
    return res;
}

/// all ordered pairs of distinct depth-1 nodes: find the irredundance
/// witness and re-verify it independently
inline SuiteResult suite_irredundance(GFDesc d) {
    SuiteResult res;
    detail::SuiteTimer timer;
    std::vector<QuadPath<GF>> depth1 = children(d, QuadPath<GF>{});
    long long idx = 0;
    for (std::size_t i = 0; i < depth1.size(); ++i)
        for (std::size_t j = 0; j < depth1.size(); ++j) {
            if (i == j) continue;
            IncomparableSet<GF> X = make_incomparable_set<GF>({depth1[i], depth1[j]});
            auto w = find_witness(d, X, 0);
            CheckReport<GF> rep;
            rep.set = X.members;
            rep.alpha = depth1[i];
            if (w && verify_witness({depth1[j]}, depth1[i], *w)) {
                rep.witnesses.push_back({std::nullopt, *w});
            } else if (w) {
                rep.status = CheckStatus::counterexample;
                rep.note = "witness failed independent re-verification";
            } else {
                rep.status = CheckStatus::witness_not_found;
            }
            res.lines.push_back(check_line("irredundance", d.p, 0, idx++, rep));
            detail::tally(res, rep.status);
        }
    res.seconds = timer.elapsed();
    return res;
}

inline SuiteResult suite_localization(GFDesc d, long long count, int max_depth,
                                      std::uint64_t seed) {
    SuiteResult res;
    detail::SuiteTimer timer;
    Rng root(seed);
    for (long long idx = 0; idx < count; ++idx) {
        Rng rng = root.fork(static_cast<std::uint64_t>(idx));
        int size = 1 + static_cast<int>(rng.below(3));
        std::vector<QuadPath<GF>> X;
        for (int i = 0; i < size; ++i)
            X.push_back(detail::random_path(
                d, rng, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_depth)))));
        EssentialVal<GF> p = detail::random_chain_prime(d, rng, 3);
        TheoremOptions topt;
        topt.lemma.seed = seed ^ static_cast<std::uint64_t>(idx);
        CheckReport<GF> rep = check_localization(X, p, topt);
        Json line = check_line("localization", d.p, seed, idx, rep);
        line["instance"]["p"] = format_bipoly(p.p);
        res.lines.push_back(std::move(line));
        detail::tally(res, rep.status);
    }
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------------
// kernel suites
// ---------------------------------------------------------------------

/// factorization round-trips plus the dual containment implementations
inline SuiteResult suite_kernel(GFDesc d, long long factor_count, long long contains_count,
                                std::uint64_t seed, int factor_deg = 10) {
    SuiteResult res;
    detail::SuiteTimer timer;
    Rng root(seed);
    for (long long idx = 0; idx < factor_count; ++idx) {
        Rng rng = root.fork(static_cast<std::uint64_t>(idx));
        BiPoly<GF> f = detail::random_bipoly(d, rng, factor_deg, false);
        auto fac = bi_factor(f);
        BiPoly<GF> prod = BiPoly<GF>::constant(d, fac.unit);
        for (auto& [q, m] : fac.factors) prod = prod * q.pow(m);
        CheckReport<GF> rep;
        if (prod != f) {
            rep.status = CheckStatus::counterexample;
            rep.note = "factor product does not reproduce the input";
        }
        Json line = check_line("kernel-factor", d.p, seed, idx, rep);
        line["instance"] = Json{{"f", format_bipoly(f)}, {"n_factors", fac.factors.size()}};
        res.lines.push_back(std::move(line));
        detail::tally(res, rep.status);
    }
    Rng root2(seed ^ 0xc0417a115ull);
    for (long long idx = 0; idx < contains_count; ++idx) {
        Rng rng = root2.fork(static_cast<std::uint64_t>(idx));
        EssentialVal<GF> v = detail::random_chain_prime(d, rng, 4);
        QuadPath<GF> path =
            detail::random_path(d, rng, static_cast<int>(rng.below(4)));
        bool r1 = contains(v, path);
        bool r2 = contains_by_factorization(v, path);
        CheckReport<GF> rep;
        if (r1 != r2) {
            rep.status = CheckStatus::counterexample;
            rep.note = "containment implementations disagree";
        }
        Json line = check_line("kernel-contains", d.p, seed, idx, rep);
        line["instance"] = Json{{"p", format_bipoly(v.p)}, {"path", format_path(path)}};
        line["contains"] = r1;
        res.lines.push_back(std::move(line));
        detail::tally(res, rep.status);
    }
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------------
// cusp regression
// ---------------------------------------------------------------------

/// resolve y^2 - x^3 by following its unique rational direction and check
/// the chain and multiplicity sequence exactly
inline SuiteResult suite_cusp(GFDesc d) {
    SuiteResult res;
    detail::SuiteTimer timer;
    BiPoly<GF> cusp = BiPoly<GF>::y(d).pow(2) - BiPoly<GF>::x(d).pow(3);
    QuadPath<GF> path;
    std::vector<int> rs;
    BiPoly<GF> cur = cusp;
    for (int level = 0; level < 3; ++level) {
        rs.push_back(cur.low_degree());
        auto dirs = directions_of(cur);
        CheckReport<GF> rep;
        if (dirs.size() != 1 || dirs[0].dir.kind == DirectionClass<GF>::nonrational) {
            rep.status = CheckStatus::counterexample;
            rep.note = "branch direction is not unique and rational";
            res.lines.push_back(check_line("cusp", d.p, 0, level, rep));
            detail::tally(res, rep.status);
            res.seconds = timer.elapsed();
            return res;
        }
        Direction<GF> dir = dirs[0].dir.kind == DirectionClass<GF>::infinity
                                ? Direction<GF>::at_infinity(d)
                                : Direction<GF>::finite(dirs[0].dir.c);
        path.push_back(dir);
        auto tr = transform_elem(QuadPath<GF>{dir}, cur);
        cur = tr.levels[1].p;
    }
    QuadPath<GF> expected = {Direction<GF>::finite(GF(d, 0)), Direction<GF>::at_infinity(d)};
    bool chain_ok = path.size() == 3 && is_prefix(expected, path);
    bool rs_ok = rs == std::vector<int>{2, 1, 1};
    CheckReport<GF> rep;
    if (!chain_ok || !rs_ok) {
        rep.status = CheckStatus::counterexample;
        rep.note = "cusp chain or multiplicity sequence mismatch";
    }
    Json line = check_line("cusp", d.p, 0, 0, rep);
    line["chain"] = format_path(path);
    line["multiplicities"] = rs;
    res.lines.push_back(std::move(line));
    detail::tally(res, rep.status);
    res.seconds = timer.elapsed();
    return res;
}

} // namespace qtree

#endif
