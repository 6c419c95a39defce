#pragma once

// Worked examples as data: each catalog file names blow-up sequences and
// configurations and lists claims, every claim a checkable operation with an
// expected value, a source location and a provenance tag.

#include <cctype>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "io.hpp"
#include "negcurves.hpp"

namespace coble {

using nlohmann::json;

struct Claim {
    std::string description;
    std::string ref;         // where the statement sits in the source
    std::string provenance;  // "quoted" (stated in the source) or "computed" (derived here)
    std::string op;
    json args;
    json expected;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string file;
    std::map<std::string, i64> params;  // defaults, overridable from the CLI
    std::string generator;              // optional built-in sequence family
    json sequences = json::object();
    json configurations = json::object();
    std::vector<Claim> claims;
};

struct UnknownExample : Error {
    using Error::Error;
};

inline const std::set<std::string>& claim_ops() {
    static const std::set<std::string> ops{
        "k_squared",     "class_identity", "self_intersection", "intersection", "genus",
        "exceptional_intersections", "fiber_type", "is_k3_type", "halphen_k3", "jacobian_bound",
        "genus_proxy",   "quintic",        "quadratic",         "reduce",       "rational_case",
    };
    return ops;
}

inline CatalogEntry entry_from_json(const json& j, const std::string& file = "") {
    CatalogEntry e;
    e.file = file;
    e.name = io::field<std::string>(j, "name", file);
    const std::string where = "catalog entry " + e.name;
    e.summary = io::field_or<std::string>(j, "summary", "", where);
    e.params = io::field_or<std::map<std::string, i64>>(j, "params", {}, where);
    e.generator = io::field_or<std::string>(j, "generator", "", where);
    if (!e.generator.empty() && e.generator != "fibre_tower") throw Error(where + ": unknown generator " + e.generator);
    e.sequences = j.value("sequences", json::object());
    e.configurations = j.value("configurations", json::object());
    for (const auto& c : j.at("claims")) {
        Claim cl;
        cl.description = io::field<std::string>(c, "description", where);
        cl.ref = io::field<std::string>(c, "ref", where + ": " + cl.description);
        cl.provenance = io::field<std::string>(c, "provenance", where + ": " + cl.description);
        cl.op = io::field<std::string>(c, "op", where + ": " + cl.description);
        cl.args = c.value("args", json::object());
        if (!c.contains("expected")) throw Error(where + ": claim '" + cl.description + "' has no expected value");
        cl.expected = c.at("expected");
        if (cl.ref.empty()) throw Error(where + ": claim '" + cl.description + "' has an empty ref");
        if (cl.provenance != "quoted" && cl.provenance != "computed")
            throw Error(where + ": claim '" + cl.description + "' has provenance '" + cl.provenance +
                        "', expected quoted or computed");
        if (!claim_ops().count(cl.op)) throw Error(where + ": unknown claim op " + cl.op);
        e.claims.push_back(cl);
    }
    if (e.claims.empty()) throw Error(where + ": no claims");
    return e;
}

inline std::string default_catalog_dir() {
#ifdef COBLE_DATA_DIR
    return std::string(COBLE_DATA_DIR) + "/catalog";
#else
    return "data/catalog";
#endif
}

inline std::vector<CatalogEntry> load_catalog(const std::string& dir = default_catalog_dir()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error("catalog directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(dir))
        if (f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    for (const auto& f : files) {
        out.push_back(entry_from_json(io::read_json_file(f.string()), f.filename().string()));
        if (!names.insert(out.back().name).second) throw Error("duplicate catalog entry " + out.back().name);
    }
    return out;
}

inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return e;
    std::string list;
    for (const auto& e : cat) list += (list.empty() ? "" : ", ") + e.name;
    throw UnknownExample("unknown example '" + name + "'; catalog: " + list);
}

namespace detail {

// Integer expression over named parameters: + - * and parentheses.
class ParamExpr {
public:
    ParamExpr(const std::string& s, const std::map<std::string, i64>& p) : s_(s), p_(p) {}

    i64 parse() {
        const i64 v = sum();
        skip();
        if (i_ != s_.size()) throw Error("trailing input in expression '" + s_ + "' at position " + std::to_string(i_));
        return v;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    i64 sum() {
        i64 v = product();
        for (;;) {
            skip();
            if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
                const char op = s_[i_++];
                const i64 r = product();
                v = op == '+' ? add(v, r) : sub(v, r);
            } else {
                return v;
            }
        }
    }
    i64 product() {
        i64 v = unary();
        for (;;) {
            skip();
            if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                v = mul(v, unary());
            } else {
                return v;
            }
        }
    }
    i64 unary() {
        skip();
        if (i_ < s_.size() && s_[i_] == '-') {
            ++i_;
            return neg(unary());
        }
        return atom();
    }
    i64 atom() {
        skip();
        if (i_ >= s_.size()) throw Error("unexpected end of expression '" + s_ + "'");
        if (s_[i_] == '(') {
            ++i_;
            const i64 v = sum();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') throw Error("missing ')' in expression '" + s_ + "'");
            ++i_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            i64 v = 0;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = add(mul(v, 10), s_[i_++] - '0');
            return v;
        }
        const size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) throw Error("unexpected '" + std::string(1, s_[i_]) + "' in expression '" + s_ + "'");
        const auto name = s_.substr(start, i_ - start);
        auto it = p_.find(name);
        if (it == p_.end()) throw Error("unknown parameter '" + name + "' in expression '" + s_ + "'");
        return it->second;
    }

    const std::string& s_;
    const std::map<std::string, i64>& p_;
    size_t i_ = 0;
};

}  // namespace detail

inline i64 eval_param_expr(const std::string& s, const std::map<std::string, i64>& params) {
    return detail::ParamExpr(s, params).parse();
}

// Sequences, configurations and named expressions of one entry at fixed parameters.
class ExampleContext {
public:
    ExampleContext(const CatalogEntry& e, std::map<std::string, i64> params) : params_(std::move(params)) {
        for (const auto& [name, j] : e.sequences.items()) seqs_.emplace(name, io::blowup_from_json(j));
        for (const auto& [name, j] : e.configurations.items()) cfgs_.emplace(name, io::config_from_json(j));
        if (e.generator == "fibre_tower") {
            for (auto p : {"n", "b", "t"})
                if (!params_.count(p)) throw Error("fibre_tower needs parameter " + std::string(p));
            auto ft = fibre_tower(params_.at("n"), params_.at("b"), params_.at("t"));
            seqs_.emplace("T", ft.seq);
            named_["minus_k_base"] = ft.minus_k_base;
            named_["minus_2k_base"] = ft.minus_2k_base;
            named_["minus_k_top"] = ft.minus_k_top;
            named_["minus_2k_top"] = ft.minus_2k_top;
            named_["h_part"] = ft.h_part;
        }
    }

    const std::map<std::string, i64>& params() const { return params_; }

    const BlowUpSequence& seq(const json& args) const {
        const auto name = io::field<std::string>(args, "seq", "claim args");
        auto it = seqs_.find(name);
        if (it == seqs_.end()) throw Error("unknown sequence " + name);
        return it->second;
    }

    // "@name" refers to a generator expression, anything else is parsed
    DivisorClass cls(const BlowUpSequence& s, const std::string& text) const {
        if (!text.empty() && text[0] == '@') {
            auto it = named_.find(text.substr(1));
            if (it == named_.end()) throw Error("unknown named expression " + text);
            return evaluate(s, it->second);
        }
        return evaluate(s, parse_class_expr(text));
    }

    // from {"config": name} or {"seq": S, "components": [{"label", "expr", "mult"}]}
    CurveConfiguration config(const json& args) const {
        if (args.contains("config")) {
            const auto name = args.at("config").get<std::string>();
            auto it = cfgs_.find(name);
            if (it == cfgs_.end()) throw Error("unknown configuration " + name);
            return it->second;
        }
        const auto& s = seq(args);
        std::vector<NamedClass> comps;
        for (const auto& c : args.at("components")) {
            const auto expr = io::field<std::string>(c, "expr", "component");
            comps.push_back({io::field_or<std::string>(c, "label", expr, "component"), cls(s, expr),
                             io::field_or<i64>(c, "mult", 1, "component")});
        }
        return configuration_from_classes(comps);
    }

    json resolve_expected(const json& expected) const {
        if (expected.is_object() && expected.contains("expr"))
            return eval_param_expr(expected.at("expr").get<std::string>(), params_);
        return expected;
    }

private:
    std::map<std::string, i64> params_;
    std::map<std::string, BlowUpSequence> seqs_;
    std::map<std::string, CurveConfiguration> cfgs_;
    std::map<std::string, ClassExpr> named_;
};

inline std::vector<size_t> index_list(const json& j) { return j.get<std::vector<size_t>>(); }

// The computed value for a claim; the verdict is equality with the expected value.
inline json evaluate_claim(const ExampleContext& ctx, const std::string& op, const json& a) {
    if (op == "k_squared") return ctx.seq(a).k_squared();
    if (op == "class_identity") {
        const auto& s = ctx.seq(a);
        return (ctx.cls(s, a.at("lhs").get<std::string>()) - ctx.cls(s, a.at("rhs").get<std::string>())).is_zero();
    }
    if (op == "self_intersection") {
        const auto& s = ctx.seq(a);
        return self_intersection(ctx.cls(s, a.at("expr").get<std::string>()));
    }
    if (op == "intersection") {
        const auto& s = ctx.seq(a);
        return pair(ctx.cls(s, a.at("a").get<std::string>()), ctx.cls(s, a.at("b").get<std::string>()));
    }
    if (op == "genus") {
        const auto& s = ctx.seq(a);
        return arithmetic_genus(ctx.cls(s, a.at("expr").get<std::string>()));
    }
    if (op == "exceptional_intersections") {
        const auto& s = ctx.seq(a);
        return exceptional_intersections(s, ctx.cls(s, a.at("expr").get<std::string>())).all_two;
    }
    if (op == "fiber_type") {
        auto t = recognize_fiber(ctx.config(a));
        return t ? json(t->name()) : json();
    }
    if (op == "is_k3_type") return is_k3_type(ctx.config(a)).holds;
    if (op == "halphen_k3") {
        auto f = a.at("fibers").get<std::vector<std::string>>();
        if (f.empty() || f.size() > 2) throw Error("halphen_k3 takes one or two fibre types");
        std::optional<FiberType> f1;
        if (f.size() == 2) f1 = parse_fiber_type(f[1]);
        return halphen_k3_predicate(parse_fiber_type(f[0]), f1);
    }
    if (op == "jacobian_bound")
        return jacobian_bound_check(parse_fiber_type(a.at("fiber").get<std::string>()), a.at("g").get<std::vector<i64>>())
            .pass;
    if (op == "genus_proxy") return parse_mv(a.at("vector").get<std::string>()).genus_proxy();
    if (op == "quintic" || op == "quadratic") {
        const auto v = parse_mv(a.at("vector").get<std::string>());
        const auto idx = index_list(a.at("indices"));
        MultiplicityVector r;
        if (op == "quintic") {
            if (idx.size() != 6) throw Error("quintic takes six indices");
            r = quintic_transform(v, {idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]});
        } else {
            if (idx.size() != 3) throw Error("quadratic takes three indices");
            r = quadratic_transform(v, idx[0], idx[1], idx[2]);
        }
        return a.value("part", "full") == "singular" ? r.singular_part().str() : r.str();
    }
    if (op == "reduce") return noether_reduce(parse_mv(a.at("vector").get<std::string>())).final.str();
    if (op == "rational_case") return match_rational_case(io::rational_input_from_json(a.at("input"))).matched_cases;
    throw Error("unknown claim op " + op);
}

struct ClaimResult {
    const Claim* claim = nullptr;
    json expected;
    json actual;
    bool pass = false;
    std::string error;
};

struct ExampleReport {
    std::string name;
    std::map<std::string, i64> params;
    std::vector<ClaimResult> results;
    bool passed() const {
        return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
    }
};

inline std::map<std::string, i64> merge_params(const CatalogEntry& e, const std::map<std::string, i64>& overrides) {
    auto p = e.params;
    for (const auto& [k, v] : overrides) {
        if (!p.count(k)) throw Error("example " + e.name + " has no parameter '" + k + "'");
        p[k] = v;
    }
    return p;
}

// Bad parameters throw before any claim runs; a failing claim only marks its row.
inline ExampleReport verify_example(const CatalogEntry& e, const std::map<std::string, i64>& overrides = {}) {
    ExampleReport rep{e.name, merge_params(e, overrides), {}};
    const ExampleContext ctx(e, rep.params);
    for (const auto& c : e.claims) {
        ClaimResult r;
        r.claim = &c;
        r.expected = ctx.resolve_expected(c.expected);
        try {
            r.actual = evaluate_claim(ctx, c.op, c.args);
            r.pass = r.actual == r.expected;
        } catch (const std::exception& ex) {
            r.error = ex.what();
        }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

inline json example_report_to_json(const ExampleReport& r) {
    json claims = json::array();
    for (const auto& c : r.results) {
        json x{{"description", c.claim->description},
               {"ref", c.claim->ref},
               {"provenance", c.claim->provenance},
               {"op", c.claim->op},
               {"args", c.claim->args},
               {"expected", c.expected},
               {"actual", c.actual},
               {"pass", c.pass}};
        if (!c.error.empty()) x["error"] = c.error;
        claims.push_back(x);
    }
    return {{"name", r.name}, {"params", r.params}, {"pass", r.passed()}, {"claims", claims}};
}

}  // namespace coble
