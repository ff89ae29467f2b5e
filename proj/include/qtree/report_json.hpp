#ifndef QTREE_REPORT_JSON_HPP
#define QTREE_REPORT_JSON_HPP

#include <string>

#include "json.hpp"

#include "qtree/prime_lemma.hpp"
#include "qtree/theorems.hpp"

namespace qtree {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

template <class K>
std::string frac_str(const Frac<K>& w) {
    if (w.den() == BiPoly<K>::one(w.desc())) return format_bipoly(w.num());
    return format_bipoly(w.num()) + "/" + format_bipoly(w.den());
}

template <class K>
Json dirs_json(const QuadPath<K>& path) {
    Json arr = Json::array();
    for (const auto& d : path) {
        if (d.infinity)
            arr.push_back(Json{{"infinity", true}});
        else
            arr.push_back(Json{{"finite", d.c.str()}});
    }
    return Json{{"dirs", arr}};
}

template <class K>
QuadPath<K> path_from_json(typename K::Desc d, const Json& j) {
    if (!j.is_object() || !j.contains("dirs") || !j["dirs"].is_array())
        throw parse_error("path JSON must be an object with a dirs array");
    QuadPath<K> path;
    for (const auto& e : j["dirs"]) {
        if (e.contains("infinity") && e["infinity"].get<bool>())
            path.push_back(Direction<K>::at_infinity(d));
        else if (e.contains("finite"))
            path.push_back(Direction<K>::finite(
                parse_scalar<K>(d, e["finite"].get<std::string>())));
        else
            throw parse_error("path entry must be finite or infinity");
    }
    return path;
}

/// accepts both the text form "[0, inf]" and the JSON object form
template <class K>
QuadPath<K> parse_path_any(typename K::Desc d, const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{')
        return path_from_json<K>(d, Json::parse(text));
    return parse_path<K>(d, text);
}

template <class K>
Json transform_json(const TransformResult<K>& tr) {
    Json levels = Json::array();
    for (const auto& l : tr.levels)
        levels.push_back(Json{{"p", format_bipoly(l.p)}, {"r", l.r}});
    return Json{{"levels", levels}, {"passes", tr.passes}};
}

template <class K>
Json sequence_json(const TransformSequence<K>& seq) {
    Json levels = Json::array();
    for (const auto& l : seq.levels)
        levels.push_back(Json{{"p", format_bipoly(l.p)},
                              {"r", l.r},
                              {"initial", format_hform(l.initial)},
                              {"prime_power", l.prime_power}});
    return Json{{"levels", levels},
                {"partial_sums", seq.partial_sums},
                {"total", seq.total}};
}

template <class K>
Json trace_json(const std::vector<PrimeLemmaStep<K>>& trace) {
    Json arr = Json::array();
    for (const auto& st : trace) {
        Json j = sequence_json(st.seq);
        j["lift_level"] = st.lift_level ? Json(*st.lift_level) : Json(nullptr);
        j["lift_error_order"] =
            st.lift_error_order ? Json(*st.lift_error_order) : Json(nullptr);
        j["multiple_candidates"] = st.multiple_candidates;
        arr.push_back(std::move(j));
    }
    return arr;
}

template <class K>
Json comparability_json(const ComparabilityReport<K>& rep) {
    Json cex = Json::array();
    for (const auto& q : rep.counterexamples) cex.push_back(format_path(q));
    return Json{{"depth", rep.depth},
                {"nodes_visited", rep.nodes_visited},
                {"counterexamples", cex}};
}

template <class K>
Json witnesses_json(const std::vector<Witness<K>>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) {
        Json j = Json::object();
        if (w.prime) j["prime"] = format_bipoly(w.prime->p);
        if (w.element) j["element"] = frac_str(*w.element);
        arr.push_back(std::move(j));
    }
    return arr;
}

/// one JSON-lines record for a theorem check instance
template <class K>
Json check_line(const std::string& check, std::uint32_t field_p, std::uint64_t seed,
                long long index, const CheckReport<K>& rep, bool include_timing = false) {
    Json set = Json::array();
    for (const auto& q : rep.set) set.push_back(format_path(q));
    Json j{{"schema_version", kSchemaVersion},
           {"check", check},
           {"field", field_p},
           {"seed", std::to_string(seed)},
           {"index", index}};
    Json inst{{"set", set}};
    if (rep.alpha) inst["alpha"] = format_path(*rep.alpha);
    j["instance"] = inst;
    j["status"] = to_string(rep.status);
    j["witnesses"] = witnesses_json(rep.witnesses);
    j["note"] = rep.note;
    if (include_timing) j["seconds"] = rep.seconds;
    return j;
}

} // namespace qtree

#endif
