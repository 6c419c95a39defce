#include <CLI11.hpp>
#include <iomanip>
#include <iostream>

#include "coble/catalog.hpp"

using namespace coble;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

bool g_json = false;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

BaseKind parse_base(const std::string& s) {
    if (s == "P2") return BaseKind::p2();
    if (s.size() >= 2 && s[0] == 'F' && std::all_of(s.begin() + 1, s.end(), ::isdigit))
        return BaseKind::hirzebruch(std::stoll(s.substr(1)));
    throw Error("base must be P2 or F<b>, got " + s);
}

int cmd_reduce(const std::string& text, bool force) {
    const auto v = parse_mv(text);
    try {
        const auto tr = noether_reduce(v, force);
        if (g_json) {
            auto j = io::trace_to_json(tr);
            j["input"] = v.str();
            j["pass"] = tr.final.d <= 3;
            emit(j);
        } else {
            std::cout << v.str() << "\n";
            for (const auto& s : tr.steps)
                std::cout << "  " << s.kind << " at " << s.indices[0] << "," << s.indices[1] << "," << s.indices[2]
                          << (s.general_points ? " (general points)" : "") << " -> " << s.after.str() << "\n";
            std::cout << "final " << tr.final.str() << "\n";
            if (!tr.stop_note.empty()) std::cout << "note: " << tr.stop_note << "\n";
        }
        return tr.final.d <= 3 ? kOk : kCheckFailed;
    } catch (const ReductionError& e) {
        if (g_json) {
            auto j = io::trace_to_json(e.trace);
            j["input"] = v.str();
            j["pass"] = false;
            j["error"] = e.what();
            emit(j);
        } else {
            std::cout << "reduction failed: " << e.what() << " after " << e.trace.steps.size() << " step(s)\n";
        }
        return kCheckFailed;
    }
}

int cmd_genus(const std::string& text) {
    const auto v = parse_mv(text);
    const i64 closed = v.genus_proxy();
    const i64 lattice = arithmetic_genus(to_class(v));
    if (closed != lattice) throw std::logic_error("closed form and lattice genus disagree");
    if (g_json)
        emit({{"vector", v.str()}, {"p_a", closed}});
    else
        std::cout << v.str() << ": p_a = " << closed << "\n";
    return kOk;
}

int cmd_classify(const std::string& path) {
    const auto in = io::rational_input_from_json(io::read_json_file(path));
    const auto rep = match_rational_case(in);
    if (g_json) {
        emit(io::case_report_to_json(rep));
    } else {
        std::cout << "matched cases:";
        if (rep.matched_cases.empty()) std::cout << " none";
        for (int c : rep.matched_cases) std::cout << " " << c;
        auto row = [](const std::string& c, const std::string& n, const std::string& l, const std::string& r,
                      const std::string& v) {
            std::cout << std::left << std::setw(5) << c << " " << std::setw(44) << n << " " << std::setw(14) << l << " "
                      << std::setw(20) << r << " " << v << "\n";
        };
        std::cout << "\n\n";
        row("case", "constraint", "lhs", "rhs", "result");
        for (const auto& e : rep.constraint_log)
            row(e.case_no ? std::to_string(e.case_no) : "all", e.name, e.lhs, e.rhs, e.pass ? "ok" : "FAIL");
        for (const auto& [c, text] : rep.assumed) std::cout << "case " << c << " assumes: " << text << "\n";
    }
    return rep.matched_cases.empty() ? kCheckFailed : kOk;
}

int cmd_enumerate(const std::string& base, int points, i64 selfint, i64 cap, bool lattice_only, std::size_t budget) {
    if (selfint >= 0) throw Error("--selfint must be negative");
    EnumerationOptions opt;
    opt.budget = budget;
    if (lattice_only) opt.mode = EnumerationMode::LatticeOnly;
    auto lat = make_lattice(parse_base(base), points);
    std::vector<DivisorClass> cls;
    try {
        cls = enumerate_negative_classes(lat, -selfint, cap, opt);
    } catch (const BudgetError& e) {
        if (g_json)
            emit({{"error", e.what()}, {"pass", false}});
        else
            std::cout << e.what() << "\n";
        return kCheckFailed;
    }
    if (g_json) {
        json arr = json::array();
        for (const auto& c : cls) arr.push_back(io::class_to_json(c));
        emit({{"base", io::base_to_json(lat->base())},
              {"points", points},
              {"selfint", selfint},
              {"cap", cap},
              {"count", cls.size()},
              {"classes", arr}});
    } else {
        for (const auto& c : cls) std::cout << to_string(c) << "\n";
        std::cout << cls.size() << " class(es)\n";
    }
    return kOk;
}

int cmd_check_config(const std::string& path, const std::string& expect_fiber) {
    const auto j = io::read_json_file(path);
    if (j.contains("centers")) {
        const auto s = io::blowup_from_json(j);
        json curves = json::array();
        for (const auto& c : s.curves()) {
            const auto p = s.proper_transform(c);
            curves.push_back({{"label", c.label},
                              {"proper_transform", to_string(p)},
                              {"self", self_intersection(p)},
                              {"p_a", arithmetic_genus(p)}});
        }
        if (!expect_fiber.empty()) throw Error("--expect-fiber applies to curve configurations");
        if (g_json) {
            emit({{"kind", "blowup"}, {"k_squared", s.k_squared()}, {"curves", curves}});
        } else {
            std::cout << "blow-up sequence with " << s.centers().size() << " center(s), K^2 = " << s.k_squared() << "\n";
            for (const auto& c : curves)
                std::cout << "  " << c["label"].get<std::string>() << " = " << c["proper_transform"].get<std::string>()
                          << ", self " << c["self"] << ", p_a " << c["p_a"] << "\n";
        }
        return kOk;
    }
    const auto cfg = io::config_from_json(j);
    const auto d = cfg.as_divisor();
    const auto pa = divisor_pa(cfg, d);
    const auto fib = recognize_fiber(cfg);
    const auto snc = check_snc(cfg);
    const auto k3 = is_k3_type(cfg);
    bool pass = true;
    if (!expect_fiber.empty()) pass = fib && *fib == parse_fiber_type(expect_fiber);
    if (g_json) {
        json out{{"kind", "configuration"},
                 {"self_intersection", cfg.dot(cfg.vec(d), cfg.vec(d))},
                 {"k_dot", cfg.k_dot(cfg.vec(d))},
                 {"p_a", pa.determined ? json(pa.value) : json()},
                 {"fiber", fib ? json(fib->name()) : json()},
                 {"snc", snc.violations.empty()},
                 {"k3_type", k3.holds},
                 {"k3_reasons", k3.reasons},
                 {"pass", pass}};
        emit(out);
    } else {
        std::cout << "D^2 = " << cfg.dot(cfg.vec(d), cfg.vec(d)) << ", K.D = " << cfg.k_dot(cfg.vec(d)) << ", p_a = "
                  << (pa.determined ? std::to_string(pa.value) : "undetermined") << "\n";
        std::cout << "fibre type: " << (fib ? fib->name() : "not a Kodaira fibre") << "\n";
        std::cout << "SNC: " << (snc.violations.empty() ? "yes" : "no") << "\n";
        std::cout << "K3 type: " << (k3.holds ? "yes" : "no") << "\n";
        for (const auto& r : k3.reasons) std::cout << "  " << r << "\n";
        if (!expect_fiber.empty()) std::cout << "expected " << expect_fiber << ": " << (pass ? "ok" : "FAIL") << "\n";
    }
    return pass ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& dir, const std::string& name, const std::vector<std::string>& params) {
    const auto cat = load_catalog(dir);
    const auto& e = find_entry(cat, name);
    std::map<std::string, i64> over;
    for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw Error("parameter must look like name=value: " + p);
        try {
            size_t used = 0;
            const auto v = std::stoll(p.substr(eq + 1), &used);
            if (used != p.size() - eq - 1) throw std::invalid_argument(p);
            over[p.substr(0, eq)] = v;
        } catch (const std::logic_error&) {
            throw Error("parameter value is not an integer: " + p);
        }
    }
    const auto rep = verify_example(e, over);
    if (g_json) {
        emit(example_report_to_json(rep));
    } else {
        std::cout << rep.name;
        for (const auto& [k, v] : rep.params) std::cout << " " << k << "=" << v;
        std::cout << "\n";
        for (const auto& r : rep.results) {
            std::cout << (r.pass ? "  PASS " : "  FAIL ") << r.claim->description << "  [" << r.claim->ref << "; "
                      << r.claim->provenance << "]\n";
            if (!r.pass)
                std::cout << "       expected " << r.expected.dump() << ", got "
                          << (r.error.empty() ? r.actual.dump() : "error: " + r.error) << "\n";
        }
    }
    return rep.passed() ? kOk : kCheckFailed;
}

int cmd_catalog(const std::string& dir) {
    const auto cat = load_catalog(dir);
    if (g_json) {
        json arr = json::array();
        for (const auto& e : cat)
            arr.push_back({{"name", e.name}, {"summary", e.summary}, {"claims", e.claims.size()}, {"params", e.params}});
        emit(arr);
    } else {
        for (const auto& e : cat) {
            std::cout << std::left << std::setw(8) << e.name << " " << std::right << std::setw(2) << e.claims.size() << " claims  " << std::left << e.summary;
            for (const auto& [k, v] : e.params) std::cout << " [" << k << "=" << v << "]";
            std::cout << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice, Cremona and classification checks for Coble surfaces"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable output");
    std::string catalog_dir = default_catalog_dir();
    app.add_option("--catalog-dir", catalog_dir, "directory of catalog JSON files");

    std::string vec, input, name, base = "P2", expect_fiber;
    bool force = false, lattice_only = false;
    int points = 0;
    i64 selfint = -1, cap = 0;
    std::size_t budget = EnumerationOptions{}.budget;
    std::vector<std::string> params;
    std::optional<i64> pn, pb, pt;

    auto* reduce = app.add_subcommand("reduce", "greedy quadratic reduction of a plane curve vector");
    reduce->add_option("vector", vec, "\"(d;m1,m2,...)\"")->required();
    reduce->add_flag("--force", force, "reduce even when the genus proxy is not 0");

    auto* classify = app.add_subcommand("classify", "match a rational-type decomposition against the 16 cases");
    classify->add_option("--input", input, "case input JSON")->required();

    auto* genus = app.add_subcommand("genus", "arithmetic genus of a plane curve vector");
    genus->add_option("vector", vec, "\"(d;m1,m2,...)\"")->required();

    auto* enumerate = app.add_subcommand("enumerate", "negative classes of a blown-up lattice");
    enumerate->add_option("--base", base, "P2 or F<b>");
    enumerate->add_option("--points", points, "number of blow-ups")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--selfint", selfint, "self-intersection -n")->required();
    enumerate->add_option("--cap", cap, "degree cap")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--lattice-only", lattice_only, "keep every integer solution at degree 0");
    enumerate->add_option("--budget", budget, "maximum number of classes");

    auto* verify = app.add_subcommand("verify-example", "check every claim of a catalog entry");
    verify->add_option("name", name, "catalog entry")->required();
    verify->add_option("--n", pn, "parameter n");
    verify->add_option("--b", pb, "parameter b");
    verify->add_option("--t", pt, "parameter t");
    verify->add_option("--param", params, "name=value")->allow_extra_args(false);

    auto* check = app.add_subcommand("check-config", "report on a configuration or blow-up JSON file");
    check->add_option("--input", input, "configuration or blow-up JSON")->required();
    check->add_option("--expect-fiber", expect_fiber, "fail unless the fibre type matches");

    auto* catalog = app.add_subcommand("catalog", "list catalog entries");

    for (auto* sub : {reduce, classify, genus, enumerate, verify, check, catalog})
        sub->add_flag("--json", g_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*reduce) return cmd_reduce(vec, force);
        if (*genus) return cmd_genus(vec);
        if (*classify) return cmd_classify(input);
        if (*enumerate) return cmd_enumerate(base, points, selfint, cap, lattice_only, budget);
        if (*check) return cmd_check_config(input, expect_fiber);
        if (*catalog) return cmd_catalog(catalog_dir);
        if (*verify) {
            if (pn) params.push_back("n=" + std::to_string(*pn));
            if (pb) params.push_back("b=" + std::to_string(*pb));
            if (pt) params.push_back("t=" + std::to_string(*pt));
            return cmd_verify(catalog_dir, name, params);
        }
    } catch (const std::exception& e) {
        if (g_json)
            emit({{"error", e.what()}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
