#pragma once

// JSON glue for configurations, blow-up sequences, case inputs and reports.

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "blowup.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "cremona.hpp"

namespace coble::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

template <class T>
T field(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw Error(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(where + ": field '" + key + "': " + e.what());
    }
}

template <class T>
T field_or(const json& j, const char* key, T fallback, const std::string& where) {
    return j.contains(key) ? field<T>(j, key, where) : fallback;
}

// ---------------------------------------------------------------- lattice bases

// "P2" or {"Fb": b}
inline BaseKind base_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "P2") return BaseKind::p2();
    if (j.is_object() && j.contains("Fb") && j.at("Fb").is_number_integer())
        return BaseKind::hirzebruch(j.at("Fb").get<i64>());
    throw Error("base must be \"P2\" or {\"Fb\": b}, got " + j.dump());
}

inline json base_to_json(const BaseKind& b) {
    if (b.is_p2()) return "P2";
    return json{{"Fb", b.b}};
}

// ---------------------------------------------------------------- configurations

inline Marker marker_from_string(const std::string& s) {
    if (s == "node") return Marker::Node;
    if (s == "cusp") return Marker::Cusp;
    if (s == "none") return Marker::None;
    throw Error("unknown marker: " + s);
}

inline const char* marker_name(Marker m) {
    switch (m) {
        case Marker::Node: return "node";
        case Marker::Cusp: return "cusp";
        case Marker::None: return "none";
    }
    return "none";
}

inline CurveConfiguration config_from_json(const json& j) {
    if (!j.is_object()) throw Error("configuration must be a JSON object");
    std::vector<CurveNode> nodes;
    std::vector<CurveEdge> edges;
    std::vector<Triple> triples;
    for (const auto& n : j.value("nodes", json::array())) {
        CurveNode c;
        c.id = field<std::string>(n, "id", "node");
        const std::string where = "node " + c.id;
        c.self_int = field<i64>(n, "self", where);
        c.mult = field_or<i64>(n, "mult", 1, where);
        c.genus = field_or<i64>(n, "genus", 0, where);
        c.marker = marker_from_string(field_or<std::string>(n, "marker", "none", where));
        nodes.push_back(c);
    }
    for (const auto& e : j.value("edges", json::array())) {
        CurveEdge c;
        c.a = field<std::string>(e, "a", "edge");
        c.b = field<std::string>(e, "b", "edge");
        const std::string where = "edge " + c.a + "-" + c.b;
        c.count = field_or<i64>(e, "count", 1, where);
        c.tangency = field_or<i64>(e, "tangency", 1, where);
        edges.push_back(c);
    }
    for (const auto& t : j.value("triples", json::array())) {
        auto v = t.get<std::vector<std::string>>();
        if (v.size() != 3) throw Error("a triple point lists exactly three nodes");
        triples.push_back({v[0], v[1], v[2]});
    }
    return CurveConfiguration(nodes, edges, triples);
}

inline json config_to_json(const CurveConfiguration& c) {
    json nodes = json::array(), edges = json::array(), triples = json::array();
    for (const auto& n : c.nodes()) {
        json x{{"id", n.id}, {"self", n.self_int}, {"mult", n.mult}, {"genus", n.genus}};
        if (n.marker != Marker::None) x["marker"] = marker_name(n.marker);
        nodes.push_back(x);
    }
    for (const auto& e : c.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"count", e.count}, {"tangency", e.tangency}});
    for (const auto& t : c.triples()) triples.push_back({t[0], t[1], t[2]});
    return {{"nodes", nodes}, {"edges", edges}, {"triples", triples}};
}

// ---------------------------------------------------------------- blow-up sequences

inline BlowUpSequence blowup_from_json(const json& j) {
    if (!j.is_object()) throw Error("blow-up sequence must be a JSON object");
    const BaseKind base = base_from_json(j.at("base"));
    std::vector<Center> centers;
    for (const auto& c : j.value("centers", json::array())) {
        Center x;
        x.id = field<std::string>(c, "id", "center");
        if (c.contains("parent") && !c.at("parent").is_null()) x.parent = field<std::string>(c, "parent", x.id);
        x.on = field_or<std::vector<std::string>>(c, "on", {}, "center " + x.id);
        centers.push_back(x);
    }
    std::vector<CurveAssignment> curves;
    for (const auto& c : j.value("curves", json::array())) {
        CurveAssignment a;
        a.label = field<std::string>(c, "label", "curve");
        const std::string where = "curve " + a.label;
        const json& cls = c.at("class");
        a.base_class = cls.is_array() ? cls.get<std::vector<i64>>() : std::vector<i64>{cls.get<i64>()};
        a.mults = field_or<std::map<std::string, i64>>(c, "mults", {}, where);
        curves.push_back(a);
    }
    return BlowUpSequence(base, centers, curves);
}

inline json blowup_to_json(const BlowUpSequence& s) {
    json centers = json::array(), curves = json::array();
    for (const auto& c : s.centers())
        centers.push_back({{"id", c.id}, {"parent", c.parent ? json(*c.parent) : json()}, {"on", c.on}});
    for (const auto& c : s.curves()) curves.push_back({{"label", c.label}, {"class", c.base_class}, {"mults", c.mults}});
    return {{"base", base_to_json(s.base())}, {"centers", centers}, {"curves", curves}};
}

// ---------------------------------------------------------------- divisor classes

inline json class_to_json(const DivisorClass& c) { return {{"coeffs", c.coeffs()}, {"text", to_string(c)}}; }

// ---------------------------------------------------------------- rational-type input

// "P2", "P1xP1" or {"Fb": b}
inline MinimalBase minimal_base_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "P2") return MinimalBase::p2();
        if (s == "P1xP1") return MinimalBase::p1xp1();
    }
    if (j.is_object() && j.contains("Fb") && j.at("Fb").is_number_integer()) return MinimalBase::f(j.at("Fb").get<i64>());
    throw Error("y_min must be \"P2\", \"P1xP1\" or {\"Fb\": b}, got " + j.dump());
}

inline json minimal_base_to_json(const MinimalBase& b) {
    if (b.kind == MinimalBase::Kind::F) return json{{"Fb", b.b}};
    return b.name();
}

inline Role role_from_string(const std::string& s) {
    if (s == "M1") return Role::M1;
    if (s == "G") return Role::G;
    if (s == "H") return Role::H;
    throw Error("unknown component role: " + s);
}

inline RationalTypeInput rational_input_from_json(const json& j) {
    if (!j.is_object()) throw Error("case input must be a JSON object");
    RationalTypeInput in;
    in.y_min = minimal_base_from_json(j.at("y_min"));
    in.k = field<i64>(j, "k", "case input");
    in.m = field<i64>(j, "m", "case input");
    for (const auto& c : j.value("components", json::array())) {
        Component x;
        x.role = role_from_string(field<std::string>(c, "role", "component"));
        x.label = field_or<std::string>(c, "label", to_string(x.role), "component");
        const std::string where = "component " + x.label;
        x.coef = field_or<i64>(c, "g", 1, where);
        const json& cls = c.at("class");
        x.cls = cls.is_array() ? cls.get<std::vector<i64>>() : std::vector<i64>{cls.get<i64>()};
        if (c.contains("through_p1") && !c.at("through_p1").is_null()) x.through_p1 = c.at("through_p1").get<bool>();
        in.components.push_back(x);
    }
    return in;
}

inline json rational_input_to_json(const RationalTypeInput& in) {
    json comps = json::array();
    for (const auto& c : in.components) {
        json x{{"role", to_string(c.role)}, {"g", c.coef}, {"label", c.label}};
        x["class"] = c.cls.size() == 1 ? json(c.cls[0]) : json(c.cls);
        if (c.through_p1) x["through_p1"] = *c.through_p1;
        comps.push_back(x);
    }
    return {{"y_min", minimal_base_to_json(in.y_min)}, {"k", in.k}, {"m", in.m}, {"components", comps}};
}

inline json case_report_to_json(const RationalCaseReport& r) {
    json log = json::array(), assumed = json::array();
    for (const auto& e : r.constraint_log)
        log.push_back({{"case", e.case_no}, {"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"pass", e.pass}});
    for (const auto& [c, text] : r.assumed) assumed.push_back({{"case", c}, {"text", text}});
    return {{"matched_cases", r.matched_cases}, {"constraint_log", log}, {"assumed", assumed}};
}

// ---------------------------------------------------------------- cremona

inline json trace_to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"kind", s.kind},
                         {"indices", s.indices},
                         {"general_points", s.general_points},
                         {"before", s.before.str()},
                         {"after", s.after.str()}});
    }
    json out{{"steps", steps}, {"final", t.final.str()}, {"final_degree", t.final.d}};
    if (!t.stop_note.empty()) out["stop_note"] = t.stop_note;
    return out;
}

}  // namespace coble::io
