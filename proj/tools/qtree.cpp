// command-line front end: parse inputs, dispatch to the library, emit
// deterministic JSON (timing and summaries go to stderr only)

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qtree/report_json.hpp"
#include "qtree/suites.hpp"

using namespace qtree;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;       // internal errors or counterexamples
constexpr int exit_parse = 2;         // malformed input
constexpr int exit_precondition = 3;  // contract violations
constexpr int exit_budget = 4;        // retry/iteration budgets exhausted

struct GlobalOpts {
    std::string field = "5";
    std::uint64_t seed = 1;
    bool pretty = false;
};

void emit(const Json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

bool field_is_rational(const std::string& f) {
    return f == "q" || f == "Q" || f == "rational" || f == "rationals";
}

GFDesc parse_gf_field(const std::string& f) {
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(f, &pos);
        if (pos != f.size()) throw parse_error("field must be a prime or 'q'");
        GFDesc d{static_cast<std::uint32_t>(v)};
        GF::one(d); // validates primality and range
        return d;
    } catch (const std::invalid_argument&) {
        throw parse_error("field must be a prime or 'q'");
    } catch (const std::out_of_range&) {
        throw parse_error("field modulus out of range");
    }
}

template <class K>
Frac<K> parse_elem(typename K::Desc d, const std::string& text) {
    auto [num, den] = parse_frac_parts<K>(d, text);
    return Frac<K>(num, den);
}

// ------------------------------------------------------------------
// node
// ------------------------------------------------------------------

template <class K>
int run_node(typename K::Desc d, const std::string& path_text, bool pretty) {
    QuadPath<K> path = parse_path_any<K>(d, path_text);
    NodeChart<K> ch = chart<K>(d, path);
    Json exc = Json::array();
    for (int e : ch.exceptional) exc.push_back(e == 0 ? "x" : "y");
    Json j{{"schema_version", kSchemaVersion},
           {"path", format_path(path)},
           {"path_json", dirs_json(path)},
           {"level", path.size()},
           {"phi", format_bipoly(ch.phi)},
           {"psi", format_bipoly(ch.psi)},
           {"exceptional", exc},
           {"inverse", Json{{"x", frac_str(ch.inv_x)}, {"y", frac_str(ch.inv_y)}}}};
    emit(j, pretty);
    return exit_ok;
}

// ------------------------------------------------------------------
// compute
// ------------------------------------------------------------------

template <class K>
int run_compute(typename K::Desc d, const std::string& kind, const std::string& path_text,
                const std::string& elem, const std::string& prime, bool pretty) {
    QuadPath<K> path = parse_path_any<K>(d, path_text);
    Json j{{"schema_version", kSchemaVersion}, {"op", kind}, {"path", format_path(path)}};
    if (kind == "ord") {
        j["elem"] = elem;
        j["ord"] = ord_at(path, parse_elem<K>(d, elem));
    } else if (kind == "inform") {
        BiPoly<K> f = parse_bipoly<K>(d, elem);
        Frac<K> t = to_node(path, Frac<K>::of(f));
        if (!t.den().is_constant())
            throw precondition_error("element is not regular at the node");
        j["elem"] = elem;
        j["initial_form"] = format_hform(initial_form(parse_bipoly<K>(d, elem)));
    } else if (kind == "transform") {
        j["elem"] = elem;
        j["transform"] = transform_json(transform_elem(path, parse_bipoly<K>(d, elem)));
    } else if (kind == "member") {
        j["elem"] = elem;
        j["member"] = member(path, parse_elem<K>(d, elem));
    } else if (kind == "directions") {
        auto dirs = directions_of(parse_bipoly<K>(d, elem));
        Json arr = Json::array();
        for (auto& e : dirs) {
            Json dj;
            switch (e.dir.kind) {
                case DirectionClass<K>::finite: dj = Json{{"finite", e.dir.c.str()}}; break;
                case DirectionClass<K>::infinity: dj = Json{{"infinity", true}}; break;
                default: dj = Json{{"nonrational_degree", e.dir.degree}}; break;
            }
            arr.push_back(Json{{"form", format_hform(e.factor)}, {"mult", e.mult}, {"dir", dj}});
        }
        j["elem"] = elem;
        j["directions"] = arr;
    } else if (kind == "value") {
        if (prime.empty()) throw parse_error("compute value needs --prime");
        EssentialVal<K> v = make_essential(parse_bipoly<K>(d, prime));
        j["prime"] = format_bipoly(v.p);
        j["elem"] = elem;
        j["value"] = essential_value(v, parse_elem<K>(d, elem));
    } else {
        throw parse_error("unknown compute kind: " + kind);
    }
    emit(j, pretty);
    return exit_ok;
}

// ------------------------------------------------------------------
// approx
// ------------------------------------------------------------------

template <class K>
int run_approx(typename K::Desc d, const std::string& f_text, const std::string& g_text,
               const std::string& h_text, int n, bool pretty) {
    BiPoly<K> f = parse_bipoly<K>(d, f_text);
    BiPoly<K> gb = parse_bipoly<K>(d, g_text);
    BiPoly<K> hb = parse_bipoly<K>(d, h_text);
    LiftResult<K> r = lift_factorization(f, HForm<K>::from_bipoly(gb),
                                         HForm<K>::from_bipoly(hb), n);
    Json j{{"schema_version", kSchemaVersion},
           {"g", format_bipoly(r.g)},
           {"h", format_bipoly(r.h)},
           {"order_of_remainder",
            r.achieved_order ? Json(*r.achieved_order) : Json(nullptr)}};
    emit(j, pretty);
    return exit_ok;
}

// ------------------------------------------------------------------
// prime-lemma
// ------------------------------------------------------------------

int run_prime_lemma(GFDesc d, std::uint64_t seed, const std::string& path_text,
                    std::optional<int> depth_check, bool pretty) {
    QuadPath<GF> beta = parse_path_any<GF>(d, path_text);
    PrimeLemmaOptions opt;
    opt.seed = seed;
    auto res = prime_lemma(d, beta, opt);
    Json j{{"schema_version", kSchemaVersion},
           {"path", format_path(beta)},
           {"field", d.p},
           {"seed", std::to_string(seed)},
           {"v", format_bipoly(res.v.p)},
           {"trace", trace_json(res.trace)}};
    if (depth_check) {
        auto rep = comparability_guarantee(res.v, beta, *depth_check);
        j["comparability"] = comparability_json(rep);
    }
    emit(j, pretty);
    return exit_ok;
}

// ------------------------------------------------------------------
// check / suite
// ------------------------------------------------------------------

int finish_suite(const std::string& name, const SuiteResult& res) {
    for (const auto& line : res.lines) std::cout << line.dump() << "\n";
    std::cerr << name << ": " << res.verified << " verified, " << res.not_found
              << " witness-not-found, " << res.counterexamples << " counterexamples in "
              << res.seconds << "s\n";
    return res.counterexamples ? exit_failure : exit_ok;
}

int run_check(GFDesc d, std::uint64_t seed, const std::string& kind, long long count,
              int size, int depth) {
    if (kind == "unique-essential")
        return finish_suite(kind, suite_unique_essential(d, count, size, depth, seed));
    if (kind == "comparability")
        return finish_suite(kind, suite_comparability(d, count, size, depth, seed));
    if (kind == "irredundance")
        return finish_suite(kind, suite_irredundance(d));
    if (kind == "localization")
        return finish_suite(kind, suite_localization(d, count, depth, seed));
    throw parse_error("unknown check kind: " + kind);
}

int run_suite(GFDesc d, std::uint64_t seed, const std::string& name, long long count,
              int size, int depth) {
    if (name == "approx") return finish_suite(name, suite_approx(d, count, seed));
    if (name == "prime-lemma")
        return finish_suite(name, suite_prime_lemma(d, count, depth, seed));
    if (name == "kernel")
        return finish_suite(name, suite_kernel(d, count, count, seed));
    if (name == "cusp") return finish_suite(name, suite_cusp(d));
    return run_check(d, seed, name, count, size, depth);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact blowup chains, valuations and finite-instance checks "
                 "over k[x,y] localized at the origin"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--field", g.field, "prime modulus (<= 65521) or 'q' for the rationals")
        ->envname("QTREE_FIELD");
    app.add_option("--seed", g.seed, "seed for all randomized constructions")
        ->envname("QTREE_SEED");
    app.add_flag("--pretty", g.pretty, "indent JSON output");

    std::string path_text = "[]", elem, prime, kind, f_text, G_text, H_text;
    int n = 0, size = 3, depth = 3;
    long long count = 10;
    std::optional<int> depth_check;

    auto* node = app.add_subcommand("node", "describe the chart of a tree node");
    node->add_option("path", path_text, "path, e.g. \"[0, inf]\"")->required();

    auto* compute = app.add_subcommand("compute", "evaluate a node operation");
    compute->add_option("kind", kind, "ord|inform|transform|member|directions|value")->required();
    compute->add_option("--path", path_text, "tree node");
    compute->add_option("--elem", elem, "element (polynomial or poly/poly)")->required();
    compute->add_option("--prime", prime, "irreducible generator (for value)");

    auto* approx = app.add_subcommand("approx", "lift a coprime initial-form split");
    approx->add_option("--f", f_text, "polynomial to approximate")->required();
    approx->add_option("--G", G_text, "homogeneous factor, initial form of g")->required();
    approx->add_option("--H", H_text, "homogeneous factor, initial form of h")->required();
    approx->add_option("--n", n, "target order of f - g h")->required();

    auto* plemma = app.add_subcommand("prime-lemma",
                                      "construct an essential valuation pinning a node");
    plemma->add_option("--path", path_text, "target node")->required();
    int dc = -1;
    plemma->add_option("--depth-check", dc, "exhaustively audit comparability to this depth");

    auto* check = app.add_subcommand("check", "run a theorem check suite (JSON lines)");
    check->add_option("kind", kind, "unique-essential|comparability|irredundance|localization")
        ->required();
    check->add_option("--count", count, "number of instances");
    check->add_option("--size", size, "maximum antichain size");
    check->add_option("--depth", depth, "maximum node depth");

    auto* suite = app.add_subcommand("suite", "run a named suite (JSON lines)");
    suite->add_option("name", kind,
                      "approx|prime-lemma|unique-essential|comparability|irredundance|"
                      "localization|kernel|cusp")
        ->required();
    suite->add_option("--count", count, "number of instances");
    suite->add_option("--size", size, "maximum antichain size");
    suite->add_option("--depth", depth, "maximum node depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_parse;
    }

    try {
        bool rational = field_is_rational(g.field);
        if (plemma->parsed() && dc >= 0) depth_check = dc;
        if (node->parsed()) {
            if (rational) return run_node<QQ>(QQDesc{}, path_text, g.pretty);
            return run_node<GF>(parse_gf_field(g.field), path_text, g.pretty);
        }
        if (compute->parsed()) {
            if (rational)
                return run_compute<QQ>(QQDesc{}, kind, path_text, elem, prime, g.pretty);
            return run_compute<GF>(parse_gf_field(g.field), kind, path_text, elem, prime,
                                   g.pretty);
        }
        if (approx->parsed()) {
            if (rational) return run_approx<QQ>(QQDesc{}, f_text, G_text, H_text, n, g.pretty);
            return run_approx<GF>(parse_gf_field(g.field), f_text, G_text, H_text, n, g.pretty);
        }
        if (rational)
            throw precondition_error("this command needs a finite base field");
        GFDesc d = parse_gf_field(g.field);
        if (plemma->parsed())
            return run_prime_lemma(d, g.seed, path_text, depth_check, g.pretty);
        if (check->parsed()) return run_check(d, g.seed, kind, count, size, depth);
        if (suite->parsed()) return run_suite(d, g.seed, kind, count, size, depth);
        return exit_parse;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}
