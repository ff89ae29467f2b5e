#ifndef QTREE_THEOREMS_HPP
#define QTREE_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtree/prime_lemma.hpp"

namespace qtree {

// ---------------------------------------------------------------------
// instances
// ---------------------------------------------------------------------

/// A nonempty antichain of tree nodes (no member a prefix of another).
template <class K>
struct IncomparableSet {
    std::vector<QuadPath<K>> members;
};

template <class K>
IncomparableSet<K> make_incomparable_set(std::vector<QuadPath<K>> paths) {
    if (paths.empty())
        throw precondition_error("incomparable set must be nonempty");
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            if (paths[i] == paths[j])
                throw precondition_error("incomparable set contains a duplicate");
            if (comparable(paths[i], paths[j]))
                throw precondition_error("incomparable set contains a comparable pair");
        }
    return {std::move(paths)};
}

/// Seeded sampling of a pairwise-incomparable family of rational nodes.
inline IncomparableSet<GF> random_incomparable(GFDesc d, std::uint64_t seed, int size,
                                               int max_depth) {
    if (size < 1) throw precondition_error("set size must be positive");
    if (max_depth < 1) throw precondition_error("max depth must be positive");
    double leaves = 1;
    for (int i = 0; i < max_depth; ++i) leaves *= d.p + 1;
    if (static_cast<double>(size) > leaves)
        throw precondition_error("requested size exceeds the antichain capacity at this depth");
    Rng rng(seed ^ 0xa17e0101ull);
    std::vector<QuadPath<GF>> out;
    long long attempts = 0, cap = 2000LL * size + 2000;
    while (static_cast<int>(out.size()) < size) {
        if (++attempts > cap)
            throw budget_error("random_incomparable rejection sampling stalled");
        int depth = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_depth)));
        QuadPath<GF> path;
        for (int i = 0; i < depth; ++i) {
            std::uint64_t r = rng.below(d.p + 1);
            path.push_back(r == d.p ? Direction<GF>::at_infinity(d)
                                    : Direction<GF>::finite(GF(d, static_cast<std::int64_t>(r))));
        }
        bool ok = true;
        for (const auto& other : out)
            if (comparable(path, other)) { ok = false; break; }
        if (ok) out.push_back(std::move(path));
    }
    return {std::move(out)};
}

// ---------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------

enum class CheckStatus { verified, witness_not_found, counterexample };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::witness_not_found: return "witness-not-found";
        default: return "counterexample";
    }
}

template <class K>
struct Witness {
    std::optional<EssentialVal<K>> prime;
    std::optional<Frac<K>> element;
};

template <class K>
struct CheckReport {
    CheckStatus status = CheckStatus::verified;
    std::vector<QuadPath<K>> set;
    std::optional<QuadPath<K>> alpha;
    std::vector<Witness<K>> witnesses;
    std::string note;
    double seconds = 0; // informational only, never part of canonical output
};

struct TheoremOptions {
    PrimeLemmaOptions lemma{};
    int witness_bound = 6; // exponent bound of the witness search
};

// ---------------------------------------------------------------------
// unique essential valuations on an antichain
// ---------------------------------------------------------------------

/// For each member of the antichain, construct a height-one prime whose
/// valuation ring contains that member and no other; verify both sides
/// by direct containment checks.
inline CheckReport<GF> check_unique_essential(GFDesc d, const IncomparableSet<GF>& X,
                                              const TheoremOptions& opt = {}) {
    if (X.members.empty()) throw precondition_error("empty set");
    CheckReport<GF> rep;
    rep.set = X.members;
    for (std::size_t i = 0; i < X.members.size(); ++i) {
        auto res = prime_lemma(d, X.members[i], opt.lemma);
        rep.witnesses.push_back({res.v, std::nullopt});
        if (!contains(res.v, X.members[i])) {
            rep.status = CheckStatus::counterexample;
            rep.note = "constructed prime misses its own node (member " + std::to_string(i) + ")";
            return rep;
        }
        for (std::size_t j = 0; j < X.members.size(); ++j) {
            if (j == i) continue;
            if (contains(res.v, X.members[j])) {
                rep.status = CheckStatus::counterexample;
                rep.note = "prime of member " + std::to_string(i) + " also contains member " +
                           std::to_string(j);
                return rep;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------
// element witnesses
// ---------------------------------------------------------------------

/// Bounded deterministic search for w in the fraction field lying in
/// every ring of `ins` but not in `avoid`: w = q^a / p^b with p the
/// witness prime of `avoid`, q over small monomials then the members'
/// chain primes, exponents up to the bound, ordered by total size.
inline std::optional<Frac<GF>> witness_search(GFDesc d, const std::vector<QuadPath<GF>>& ins,
                                              const QuadPath<GF>& avoid,
                                              const EssentialVal<GF>& avoid_prime,
                                              const std::vector<EssentialVal<GF>>& in_primes,
                                              int bound) {
    std::vector<BiPoly<GF>> qs = {BiPoly<GF>::x(d), BiPoly<GF>::y(d)};
    for (const auto& v : in_primes)
        if (!(v.p == avoid_prime.p)) qs.push_back(v.p);
    Frac<GF> pinv = Frac<GF>::of(avoid_prime.p);
    for (const auto& q : qs) {
        if (q == avoid_prime.p) continue;
        Frac<GF> qf = Frac<GF>::of(q);
        for (int total = 2; total <= 2 * bound; ++total) {
            for (int a = std::max(1, total - bound); a < total && a <= bound; ++a) {
                int b = total - a;
                Frac<GF> w = qf.pow(a) / pinv.pow(b);
                bool ok = !member(avoid, w);
                for (const auto& beta : ins) {
                    if (!ok) break;
                    ok = member(beta, w);
                }
                if (ok) return w;
            }
        }
    }
    return std::nullopt;
}

/// Independent re-verification of a witness (kept separate from the
/// search on purpose).
inline bool verify_witness(const std::vector<QuadPath<GF>>& ins, const QuadPath<GF>& avoid,
                           const Frac<GF>& w) {
    if (member(avoid, w)) return false;
    for (const auto& beta : ins)
        if (!member(beta, w)) return false;
    return true;
}

/// Irredundance witness: an element of the fraction field lying in every
/// member of X except the chosen one.
inline std::optional<Frac<GF>> find_witness(GFDesc d, const IncomparableSet<GF>& X,
                                            std::size_t alpha_index,
                                            const TheoremOptions& opt = {}) {
    if (X.members.size() < 2)
        throw precondition_error("irredundance witness needs at least two members");
    if (alpha_index >= X.members.size())
        throw precondition_error("member index out of range");
    const QuadPath<GF>& alpha = X.members[alpha_index];
    EssentialVal<GF> p_alpha = prime_lemma(d, alpha, opt.lemma).v;
    std::vector<QuadPath<GF>> others;
    std::vector<EssentialVal<GF>> other_primes;
    for (std::size_t i = 0; i < X.members.size(); ++i) {
        if (i == alpha_index) continue;
        others.push_back(X.members[i]);
        other_primes.push_back(prime_lemma(d, X.members[i], opt.lemma).v);
    }
    return witness_search(d, others, alpha, p_alpha, other_primes, opt.witness_bound);
}

// ---------------------------------------------------------------------
// comparability of intersections
// ---------------------------------------------------------------------

/// alpha incomparable to every member of X: build a valuation containing
/// alpha and none of X, then attempt an element witness that lies in
/// every member but not in alpha.
inline CheckReport<GF> check_comparability(GFDesc d, const IncomparableSet<GF>& X,
                                           const QuadPath<GF>& alpha,
                                           const TheoremOptions& opt = {}) {
    for (const auto& beta : X.members)
        if (comparable(alpha, beta))
            throw precondition_error("alpha must be incomparable to every member");
    CheckReport<GF> rep;
    rep.set = X.members;
    rep.alpha = alpha;
    auto res = prime_lemma(d, alpha, opt.lemma);
    rep.witnesses.push_back({res.v, std::nullopt});
    if (!contains(res.v, alpha)) {
        rep.status = CheckStatus::counterexample;
        rep.note = "constructed prime misses alpha";
        return rep;
    }
    for (std::size_t j = 0; j < X.members.size(); ++j)
        if (contains(res.v, X.members[j])) {
            rep.status = CheckStatus::counterexample;
            rep.note = "prime of alpha contains member " + std::to_string(j);
            return rep;
        }
    std::vector<EssentialVal<GF>> member_primes;
    for (const auto& beta : X.members)
        member_primes.push_back(prime_lemma(d, beta, opt.lemma).v);
    auto w = witness_search(d, X.members, alpha, res.v, member_primes, opt.witness_bound);
    if (w) {
        if (!verify_witness(X.members, alpha, *w)) {
            rep.status = CheckStatus::counterexample;
            rep.note = "witness failed independent re-verification";
            return rep;
        }
        rep.witnesses.push_back({std::nullopt, *w});
    } else {
        rep.status = CheckStatus::witness_not_found;
        rep.note = "bounded element-witness search failed (not a refutation)";
    }
    return rep;
}

// ---------------------------------------------------------------------
// localization
// ---------------------------------------------------------------------

/// Either some member sits inside the localization (then the intersection
/// does too), or we exhibit an element of every member with a negative
/// value at p, showing the intersection escapes the localization.
inline CheckReport<GF> check_localization(const std::vector<QuadPath<GF>>& X,
                                          const EssentialVal<GF>& p,
                                          const TheoremOptions& opt = {}) {
    if (X.empty()) throw precondition_error("localization check needs a nonempty set");
    GFDesc d = p.p.desc();
    CheckReport<GF> rep;
    rep.set = X;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (contains(p, X[i])) {
            rep.witnesses.push_back({p, std::nullopt});
            rep.note = "member " + std::to_string(i) + " is contained in the localization";
            return rep;
        }
    // no member inside: look for w in every member with negative value at p
    std::vector<EssentialVal<GF>> member_primes;
    for (const auto& beta : X) member_primes.push_back(prime_lemma(d, beta, opt.lemma).v);
    std::vector<BiPoly<GF>> qs = {BiPoly<GF>::x(d), BiPoly<GF>::y(d)};
    for (const auto& v : member_primes) qs.push_back(v.p);
    Frac<GF> pinv = Frac<GF>::of(p.p);
    for (const auto& q : qs) {
        if (q == p.p) continue;
        Frac<GF> qf = Frac<GF>::of(q);
        for (int total = 2; total <= 2 * opt.witness_bound; ++total) {
            for (int a = std::max(1, total - opt.witness_bound);
                 a < total && a <= opt.witness_bound; ++a) {
                int b = total - a;
                Frac<GF> w = qf.pow(a) / pinv.pow(b);
                if (essential_value(p, w) >= 0) continue;
                bool ok = true;
                for (const auto& beta : X) {
                    ok = member(beta, w);
                    if (!ok) break;
                }
                if (ok) {
                    rep.witnesses.push_back({std::nullopt, w});
                    rep.note = "intersection element with negative value exhibited";
                    return rep;
                }
            }
        }
    }
    rep.status = CheckStatus::witness_not_found;
    rep.note = "bounded search found no separating element (not a refutation)";
    return rep;
}

} // namespace qtree

#endif
