#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "config.hpp"
#include "lattice.hpp"

namespace coble {

// ---------------------------------------------------------------- rational type cases

struct MinimalBase {
    enum class Kind { P2, P1xP1, F };
    Kind kind = Kind::P2;
    i64 b = 0;

    static MinimalBase p2() { return {Kind::P2, 0}; }
    static MinimalBase p1xp1() { return {Kind::P1xP1, 0}; }
    static MinimalBase f(i64 b) {
        if (b < 0) throw Error("Hirzebruch parameter must be >= 0");
        return {Kind::F, b};
    }
    bool is_p2() const { return kind == Kind::P2; }
    // P1xP1 is F0 with f and s0 the two rulings
    i64 scroll_b() const { return kind == Kind::F ? b : 0; }
    BaseKind lattice_base() const { return is_p2() ? BaseKind::p2() : BaseKind::hirzebruch(scroll_b()); }
    std::string name() const {
        switch (kind) {
            case Kind::P2: return "P2";
            case Kind::P1xP1: return "P1xP1";
            case Kind::F: return "F" + std::to_string(b);
        }
        return "?";
    }
};

enum class Role { M1, G, H };

inline const char* to_string(Role r) {
    switch (r) {
        case Role::M1: return "M1";
        case Role::G: return "G";
        case Role::H: return "H";
    }
    return "?";
}

struct Component {
    Role role = Role::G;
    i64 coef = 1;
    // degree on P2; (a, b) meaning a f + b s0 on a scroll
    std::vector<i64> cls;
    std::optional<bool> through_p1;
    std::string label;
};

struct RationalTypeInput {
    MinimalBase y_min;
    i64 k = 1;
    i64 m = 0;
    std::vector<Component> components;
};

struct ConstraintEntry {
    int case_no = 0;  // 0 for checks shared by all cases
    std::string name;
    std::string lhs, rhs;
    bool pass = false;
};

struct RationalCaseReport {
    std::vector<int> matched_cases;
    std::vector<ConstraintEntry> constraint_log;
    // per matched case, geometric clauses taken on trust
    std::vector<std::pair<int, std::string>> assumed;

    bool matched(int c) const { return std::find(matched_cases.begin(), matched_cases.end(), c) != matched_cases.end(); }
    std::vector<ConstraintEntry> failures(int c) const {
        std::vector<ConstraintEntry> out;
        for (const auto& e : constraint_log)
            if (e.case_no == c && !e.pass) out.push_back(e);
        return out;
    }
};

namespace detail {

inline std::string vec_str(const std::vector<i64>& v) {
    if (v.size() == 1) return std::to_string(v[0]);
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

class CaseChecker {
public:
    CaseChecker(const RationalTypeInput& in, int case_no, RationalCaseReport& rep)
        : in_(in), case_(case_no), rep_(rep) {
        for (const auto& c : in.components) {
            if (c.role == Role::M1 && !m1_) m1_ = &c;
            if (c.role == Role::G) g_.push_back(&c);
            if (c.role == Role::H) h_.push_back(&c);
        }
    }

    bool ok() const { return ok_; }

    void check(const std::string& name, const std::string& lhs, const std::string& rhs, bool pass) {
        rep_.constraint_log.push_back({case_, name, lhs, rhs, pass});
        ok_ = ok_ && pass;
    }
    void eq(const std::string& name, i64 lhs, i64 rhs) { check(name, std::to_string(lhs), std::to_string(rhs), lhs == rhs); }
    void assume(const std::string& what) { assumed_.push_back(what); }
    void commit() {
        if (!ok_) return;
        rep_.matched_cases.push_back(case_);
        for (auto& a : assumed_) rep_.assumed.push_back({case_, a});
    }

    void base_is(const std::string& want, bool pass) { check("Y_min", in_.y_min.name(), want, pass); }
    void mk(i64 m, i64 k) {
        check("(m,k)", "(" + std::to_string(in_.m) + "," + std::to_string(in_.k) + ")",
              "(" + std::to_string(m) + "," + std::to_string(k) + ")", in_.m == m && in_.k == k);
    }
    void shape(const std::string& who, const Component* c, const std::vector<i64>& want) {
        check(who + " class", c ? vec_str(c->cls) : "absent", vec_str(want), c && c->cls == want);
    }
    void all_shape(const std::string& who, const std::vector<const Component*>& cs, const std::vector<i64>& want) {
        bool pass = true;
        std::string got;
        for (auto* c : cs) {
            pass = pass && c->cls == want;
            got += (got.empty() ? "" : " ") + vec_str(c->cls);
        }
        check(who + " classes", got.empty() ? "none" : got, "all " + vec_str(want), pass);
    }
    void through(const std::string& who, const Component* c, bool want) {
        if (!c) return;
        if (!c->through_p1) {
            assume(who + (want ? " passes through p1" : " avoids p1"));
            return;
        }
        check(who + (want ? " through p1" : " avoids p1"), *c->through_p1 ? "yes" : "no", want ? "yes" : "no",
              *c->through_p1 == want);
    }
    void count(const std::string& who, std::size_t got, std::size_t want) {
        check("number of " + who, std::to_string(got), std::to_string(want), got == want);
    }
    static i64 coef_sum(const std::vector<const Component*>& cs) {
        i64 s = 0;
        for (auto* c : cs) s = add(s, c->coef);
        return s;
    }

    const Component* m1() const { return m1_; }
    const std::vector<const Component*>& gs() const { return g_; }
    const std::vector<const Component*>& hs() const { return h_; }
    const Component* g1() const { return g_.empty() ? nullptr : g_.front(); }
    std::vector<const Component*> g_rest() const {
        return g_.size() <= 1 ? std::vector<const Component*>{} : std::vector<const Component*>(g_.begin() + 1, g_.end());
    }
    std::vector<const Component*> g_with(const std::vector<i64>& cls) const {
        std::vector<const Component*> out;
        for (auto* c : g_)
            if (c->cls == cls) out.push_back(c);
        return out;
    }

private:
    const RationalTypeInput& in_;
    int case_;
    RationalCaseReport& rep_;
    bool ok_ = true;
    const Component* m1_ = nullptr;
    std::vector<const Component*> g_, h_;
    std::vector<std::string> assumed_;
};

inline void plane_cases(const RationalTypeInput& in, RationalCaseReport& rep) {
    const std::vector<i64> line{1}, conic{2};
    auto run = [&](int no, auto body) {
        CaseChecker c(in, no, rep);
        c.base_is("P2", in.y_min.is_p2());
        if (in.y_min.is_p2()) body(c);
        c.commit();
    };
    run(1, [&](CaseChecker& c) {
        c.mk(0, 1);
        c.shape("M1", c.m1(), line);
        c.count("G", c.gs().size(), 1);
        c.shape("G1", c.g1(), conic);
        if (c.g1()) c.eq("g1", c.g1()->coef, 2);
        c.count("H (with multiplicity)", CaseChecker::coef_sum(c.hs()), 1);
        c.all_shape("H", c.hs(), line);
        c.through("M1", c.m1(), true);
        for (auto* h : c.hs()) c.through("H1", h, true);
        // a third curve through p1 would break normal crossings
        c.through("G1", c.g1(), false);
        c.assume("M1 and H1 distinct; support has normal crossings");
    });
    run(2, [&](CaseChecker& c) {
        c.check("(m,k)", "(" + std::to_string(in.m) + "," + std::to_string(in.k) + ")", "(0,1) or (0,2)",
                in.m == 0 && (in.k == 1 || in.k == 2));
        c.shape("M1", c.m1(), line);
        c.count("G", c.gs().size(), 1);
        c.shape("G1", c.g1(), line);
        if (c.g1()) c.eq("g1", c.g1()->coef, 2);
        c.eq("H count (with multiplicity)", CaseChecker::coef_sum(c.hs()), 4 - in.k);
        c.all_shape("H", c.hs(), line);
        c.through("M1", c.m1(), true);
        for (auto* h : c.hs()) c.through("H", h, true);
        c.through("G1", c.g1(), false);
        c.assume("M1 differs from every H_i");
    });
    run(3, [&](CaseChecker& c) {
        c.mk(0, 1);
        c.shape("M1", c.m1(), line);
        c.count("G", c.gs().size(), 1);
        c.shape("G1", c.g1(), conic);
        if (c.g1()) c.eq("g1", c.g1()->coef, 2);
        c.count("H (with multiplicity)", CaseChecker::coef_sum(c.hs()), 1);
        c.all_shape("H", c.hs(), line);
        c.through("M1", c.m1(), true);
        for (auto* h : c.hs()) c.through("H1", h, true);
        c.through("G1", c.g1(), true);
        c.assume("M1 and H1 meet G1 transversally at p1 and two further points");
    });
    run(4, [&](CaseChecker& c) {
        c.check("(m,k)", "(" + std::to_string(in.m) + "," + std::to_string(in.k) + ")", "(0,k), 1 <= k <= 6",
                in.m == 0 && in.k >= 1 && in.k <= 6);
        c.shape("M1", c.m1(), line);
        c.count("G", c.gs().size(), 0);
        c.eq("H count (with multiplicity)", CaseChecker::coef_sum(c.hs()), 6 - in.k);
        c.all_shape("H", c.hs(), line);
        c.through("M1", c.m1(), true);
        for (auto* h : c.hs()) c.through("H", h, true);
        c.assume("M1 differs from every H_i");
    });
    run(5, [&](CaseChecker& c) {
        c.mk(1, 1);
        c.shape("M1", c.m1(), line);
        c.shape("G1", c.g1(), conic);
        if (c.g1()) {
            c.check("g1", std::to_string(c.g1()->coef), "1 or 2", c.g1()->coef == 1 || c.g1()->coef == 2);
            c.eq("2 g1 + sum g_j (j >= 2)", 2 * c.g1()->coef + CaseChecker::coef_sum(c.g_rest()), 5);
        }
        c.all_shape("G_j (j >= 2)", c.g_rest(), line);
        c.count("H", c.hs().size(), 0);
        c.assume("M1 and the G_j are distinct lines; Sing(sum G) misses M1");
    });
    run(6, [&](CaseChecker& c) {
        c.mk(1, 1);
        c.shape("M1", c.m1(), line);
        c.check("number of G", std::to_string(c.gs().size()), ">= 1", !c.gs().empty());
        c.all_shape("G", c.gs(), line);
        c.eq("sum g_i", CaseChecker::coef_sum(c.gs()), 5);
        c.count("H", c.hs().size(), 0);
        c.assume("M1 and the G_i are distinct lines; no two G_i meet on M1");
    });
    run(7, [&](CaseChecker& c) {
        c.mk(3, 1);
        c.shape("M1", c.m1(), conic);
        c.count("G", c.gs().size(), 2);
        c.all_shape("G", c.gs(), line);
        if (c.gs().size() == 2) {
            c.eq("g1", c.gs()[0]->coef, 3);
            c.eq("g2", c.gs()[1]->coef, 1);
            c.through("G2", c.gs()[1], true);
        }
        c.through("M1", c.m1(), true);
        c.count("H", c.hs().size(), 0);
        c.assume("G1 and G2 distinct; support has normal crossings");
    });
    run(8, [&](CaseChecker& c) {
        c.mk(3, 1);
        c.shape("M1", c.m1(), conic);
        c.check("number of G", std::to_string(c.gs().size()), ">= 1", !c.gs().empty());
        c.all_shape("G", c.gs(), line);
        if (c.g1()) c.check("g1", std::to_string(c.g1()->coef), "1 or 2", c.g1()->coef == 1 || c.g1()->coef == 2);
        c.eq("sum g_i", CaseChecker::coef_sum(c.gs()), 4);
        c.through("M1", c.m1(), true);
        c.through("G1", c.g1(), false);
        for (auto* g : c.g_rest()) c.through("G_j (j >= 2)", g, true);
        c.count("H", c.hs().size(), 0);
        c.assume("G_j meet M1 transversally; G1 meets M1 at two points off the other G_j");
    });
    run(9, [&](CaseChecker& c) {
        c.mk(4, 1);
        c.shape("M1", c.m1(), conic);
        c.count("G", c.gs().size(), 1);
        c.shape("G1", c.g1(), line);
        if (c.g1()) c.eq("g1", c.g1()->coef, 4);
        c.count("H", c.hs().size(), 0);
        c.assume("G1 meets M1 at two distinct points");
    });
}

inline void scroll_cases(const RationalTypeInput& in, RationalCaseReport& rep) {
    const auto& y = in.y_min;
    const i64 b = y.scroll_b();
    const bool scroll = !y.is_p2();
    const std::vector<i64> fib{1, 0}, sec{0, 1};
    auto run = [&](int no, const std::string& base_want, bool base_ok, auto body) {
        CaseChecker c(in, no, rep);
        c.base_is(base_want, scroll && base_ok);
        if (scroll && base_ok) body(c);
        c.commit();
    };
    auto fibres_sum = [&](CaseChecker& c, const std::vector<const Component*>& cs, const std::vector<i64>& cls,
                          const std::string& who, i64 want) {
        c.all_shape(who, cs, cls);
        c.eq("sum of g over " + who, CaseChecker::coef_sum(cs), want);
    };
    const bool f0 = b == 0;

    run(10, "P1xP1", f0, [&](CaseChecker& c) {
        c.mk(2, 1);
        c.shape("M1", c.m1(), {1, 1});
        c.shape("G1", c.g1(), {1, 1});
        if (c.g1()) {
            const i64 g1 = c.g1()->coef;
            c.check("g1", std::to_string(g1), "1 or 2", g1 == 1 || g1 == 2);
            std::vector<const Component*> r1, r2, other;
            for (auto* g : c.g_rest()) (g->cls == fib ? r1 : g->cls == sec ? r2 : other).push_back(g);
            c.count("G_j off both rulings", other.size(), 0);
            c.eq("sum g over first-ruling fibres", CaseChecker::coef_sum(r1), 3 - g1);
            c.eq("sum g over second-ruling fibres", CaseChecker::coef_sum(r2), 3 - g1);
        }
        c.count("H", c.hs().size(), 0);
        c.assume("M1 and G1 meet at two points; Sing(sum G) misses M1");
    });
    run(11, "P1xP1", f0, [&](CaseChecker& c) {
        c.mk(2, 1);
        c.shape("M1", c.m1(), {1, 1});
        std::vector<const Component*> r1, r2, other;
        for (auto* g : c.gs()) (g->cls == fib ? r1 : g->cls == sec ? r2 : other).push_back(g);
        c.count("G off both rulings", other.size(), 0);
        c.eq("sum g over first-ruling fibres", CaseChecker::coef_sum(r1), 3);
        c.eq("sum g over second-ruling fibres", CaseChecker::coef_sum(r2), 3);
        c.count("H", c.hs().size(), 0);
        c.assume("the fibres are distinct and no G_i, G_j, M1 share a point");
    });
    run(12, "F2", y.kind == MinimalBase::Kind::F && b == 2, [&](CaseChecker& c) {
        c.mk(2, 1);
        c.shape("M1", c.m1(), {2, 1});
        const i64 h = CaseChecker::coef_sum(c.hs());
        c.check("h", std::to_string(h), "0..3", h >= 0 && h <= 3);
        c.all_shape("H", c.hs(), sec);
        auto sections = c.g_with({2, 1});
        std::vector<const Component*> fibres, other;
        for (auto* g : c.gs()) {
            if (g->cls == fib)
                fibres.push_back(g);
            else if (g->cls != std::vector<i64>{2, 1})
                other.push_back(g);
        }
        c.count("G off the allowed shapes", other.size(), 0);
        c.count("G1 sections", sections.size(), h == 3 ? 0 : 1);
        if (sections.size() == 1) c.eq("g1", sections[0]->coef, 3 - h);
        c.eq("sum g_j over fibres", CaseChecker::coef_sum(fibres), 2 * h);
        c.assume("M1 and G1 meet at two points; fibres avoid M1 cap G1");
    });
    run(13, "F_b with b >= 2", y.kind == MinimalBase::Kind::F && b >= 2, [&](CaseChecker& c) {
        c.check("(m,k)", "(" + std::to_string(in.m) + "," + std::to_string(in.k) + ")", "(0,k), 1 <= k < 2(b+2)",
                in.m == 0 && in.k >= 1 && in.k < 2 * (b + 2));
        c.shape("M1", c.m1(), fib);
        c.count("G", c.gs().size(), 1);
        c.shape("G1", c.g1(), sec);
        if (c.g1()) c.eq("g1", c.g1()->coef, 4);
        c.all_shape("H", c.hs(), fib);
        c.eq("H count (with multiplicity)", CaseChecker::coef_sum(c.hs()), 2 * (b + 2) - in.k);
        c.assume("every H_i differs from M1");
    });
    run(14, "F_{m-2}", y.kind == MinimalBase::Kind::F && in.m >= 3 && b == in.m - 2, [&](CaseChecker& c) {
        c.check("(m,k)", "(" + std::to_string(in.m) + "," + std::to_string(in.k) + ")", "(m,1), m >= 3",
                in.m >= 3 && in.k == 1);
        c.shape("M1", c.m1(), {in.m - 1, 1});
        c.shape("G1", c.g1(), sec);
        if (c.g1()) c.eq("g1", c.g1()->coef, 3);
        fibres_sum(c, c.g_rest(), fib, "fibres G_j (j >= 2)", in.m + 1);
        c.count("H", c.hs().size(), 0);
        c.assume("the fibres are distinct and avoid M1 cap G1");
    });
    run(15, "F_{m-4}", in.m >= 4 && b == in.m - 4 && (y.kind == MinimalBase::Kind::F || f0),
        [&](CaseChecker& c) {
            c.check("(m,k)", "(" + std::to_string(in.m) + "," + std::to_string(in.k) + ")", "(m,1), m >= 4",
                    in.m >= 4 && in.k == 1);
            c.shape("M1", c.m1(), {in.m - 2, 1});
            c.shape("G1", c.g1(), sec);
            if (c.g1()) c.eq("g1", c.g1()->coef, 3);
            fibres_sum(c, c.g_rest(), fib, "fibres G_j (j >= 2)", in.m - 2);
            c.count("H", c.hs().size(), 0);
            c.assume("the fibres are distinct and avoid M1 cap G1; M1 meets G1 at two points");
        });
    run(16, "F_m", y.kind == MinimalBase::Kind::F && in.m >= 3 && b == in.m, [&](CaseChecker& c) {
        c.check("(m,k)", "(" + std::to_string(in.m) + "," + std::to_string(in.k) + ")", "(m,1), m >= 3",
                in.m >= 3 && in.k == 1);
        c.shape("M1", c.m1(), {in.m, 1});
        c.all_shape("H", c.hs(), sec);
        c.eq("h", CaseChecker::coef_sum(c.hs()), 3);
        fibres_sum(c, c.gs(), fib, "fibres G_i", in.m + 4);
        c.assume("the fibres G_i are distinct");
    });
}

}  // namespace detail

// Type of G relative to a section M1 = a f + s0 on F_n; 0 when none applies.
inline int scroll_g_type(const std::vector<i64>& g, i64 a, i64 n) {
    if (g == std::vector<i64>{1, 0}) return 1;
    if (g == std::vector<i64>{1, 1} && n == 0 && a == 1) return 2;
    if (g == std::vector<i64>{2, 1} && n == 2 && a == 2) return 3;
    if (g == std::vector<i64>{1, 1} && n == 1 && a == 2) return 4;
    if (g == std::vector<i64>{0, 1} && a == n + 1) return 5;
    if (g == std::vector<i64>{0, 1} && a == n + 2) return 6;
    return 0;
}

inline RationalCaseReport match_rational_case(const RationalTypeInput& in) {
    const auto base = in.y_min.lattice_base();
    auto lat = make_lattice(base, 0);
    const std::size_t width = base.base_rank();
    for (const auto& c : in.components) {
        if (c.cls.size() != width)
            throw Error("component class " + detail::vec_str(c.cls) + " is not in the lattice of " + in.y_min.name());
        if (c.coef < 1) throw Error("component coefficients must be >= 1");
    }
    if (in.k < 1) throw Error("k must be >= 1");
    if (in.m < 0) throw Error("m must be >= 0");

    RationalCaseReport rep;
    detail::CaseChecker common(in, 0, rep);
    i64 m1_count = 0;
    for (const auto& c : in.components) m1_count += c.role == Role::M1;
    common.eq("number of M1", m1_count, 1);
    if (common.m1()) common.eq("M1 coefficient equals k", common.m1()->coef, in.k);

    auto cls = [&](const Component& c) { return DivisorClass(lat, c.cls); };
    auto gamma = DivisorClass::zero(lat);
    for (const auto& c : in.components) gamma += c.coef * cls(c);
    const auto target = -2 * DivisorClass::canonical(lat);
    common.check("Gamma in |-2K| of Y_min", to_string(gamma), to_string(target), gamma == target);
    for (const auto& c : in.components) {
        if (c.cls == std::vector<i64>(width, 0)) common.check("nonzero class", c.label, "nonzero", false);
        if (c.role == Role::G && common.m1()) {
            const i64 gm = pair(cls(c), cls(*common.m1()));
            common.check("G.M1 in {1,2}" + (c.label.empty() ? "" : " for " + c.label), std::to_string(gm), "1 or 2",
                         gm == 1 || gm == 2);
        }
    }

    if (!in.y_min.is_p2() && common.m1()) {
        const i64 n = in.y_min.scroll_b();
        const auto& mc = common.m1()->cls;
        i64 fsum = 0, ssum = 0, gb = 0;
        for (const auto& c : in.components) {
            fsum = add(fsum, mul(c.coef, c.cls[0]));
            ssum = add(ssum, mul(c.coef, c.cls[1]));
            if (c.role == Role::G) gb = add(gb, mul(c.coef, c.cls[1]));
        }
        // with M1 = a f + s0 these read sum g_i a_i + a = 2n + 4 and sum g_i b_i + h = 3
        common.eq("f-balance (coefficient of f)", fsum, 2 * n + 4);
        common.eq("s0-balance (coefficient of s0)", ssum, 4);
        if (mc[1] == 1 && in.k == 1) {
            const i64 a = mc[0];
            common.eq("(a - n)(3 - sum g_i b_i) = 0", mul(a - n, 3 - gb), 0);
            for (const auto& c : in.components) {
                if (c.role != Role::G) continue;
                const int t = scroll_g_type(c.cls, a, n);
                common.check("type of G " + (c.label.empty() ? detail::vec_str(c.cls) : c.label),
                             t ? "(" + std::to_string(t) + ")" : "none", "one of (1)-(6)", t != 0);
            }
        } else {
            common.check("(a - n)(3 - sum g_i b_i) = 0", "n/a", "M1 is not a section", true);
        }
    }

    if (!common.ok()) return rep;
    detail::plane_cases(in, rep);
    detail::scroll_cases(in, rep);
    std::sort(rep.matched_cases.begin(), rep.matched_cases.end());
    return rep;
}

// ---------------------------------------------------------------- elliptic-type bound

struct JacobianBoundReport {
    bool pass = true;
    i64 m = 0;
    std::vector<std::string> failures;
    // set for an I_s fibre with m >= 7: K^2 of the contracted surface
    std::optional<i64> contracted_k_squared;
};

inline JacobianBoundReport jacobian_bound_check(const FiberType& fiber, const std::vector<i64>& g,
                                                i64 base_k_squared = 0) {
    if (g.empty()) throw Error("g must be nonempty");
    JacobianBoundReport r;
    auto fail = [&](const std::string& s) {
        r.pass = false;
        r.failures.push_back(s);
    };
    int big = 0;
    for (i64 x : g) {
        if (x < 1) throw Error("g_i must be >= 1");
        r.m = add(r.m, x);
        if (x > 6) fail("g_i = " + std::to_string(x) + " exceeds 6");
        if (x == 6 && fiber.kind != FiberType::Kind::IIStar) fail("g_i = 6 needs a fibre of type II*");
        if (fiber.reduced() && x != 1) fail("g_i = " + std::to_string(x) + " on a reduced fibre (chain must be empty)");
        big += x >= 2;
    }
    if (!fiber.reduced() && big >= 2) fail("two g_i >= 2 on a non-reduced fibre");
    if (r.m > 6) {
        fail("m = " + std::to_string(r.m) + " exceeds 6");
        if (fiber.kind == FiberType::Kind::I) {
            r.contracted_k_squared = add(add(r.m, r.m / 2), base_k_squared);
            if (*r.contracted_k_squared >= 10)
                r.failures.push_back("contracting the sections and " + std::to_string(r.m / 2) +
                                     " fibre components gives K^2 = " + std::to_string(*r.contracted_k_squared) +
                                     " >= 10");
        }
    }
    return r;
}

// ---------------------------------------------------------------- shape predicates

struct ShapeReport {
    bool holds = true;
    std::vector<std::string> reasons;
};

inline ShapeReport is_k3_type(const CurveConfiguration& cfg) {
    ShapeReport r;
    for (const auto& n : cfg.nodes()) {
        if (n.mult != 1) r.reasons.push_back(n.id + " has multiplicity " + std::to_string(n.mult));
        if (n.genus != 0) r.reasons.push_back(n.id + " has genus " + std::to_string(n.genus));
    }
    for (const auto& v : check_snc(cfg).violations) {
        std::string ids;
        for (const auto& s : v.nodes) ids += (ids.empty() ? "" : ",") + s;
        r.reasons.push_back(std::string("not SNC: ") + to_string(v.kind) + " at " + ids);
    }
    r.holds = r.reasons.empty();
    return r;
}

inline bool terminal_shape(const CurveConfiguration& cfg) {
    if (cfg.size() == 0 || !cfg.edges().empty()) return false;
    for (const auto& n : cfg.nodes())
        if (n.self_int != -4 || n.mult != 1 || n.genus != 0 || n.marker != Marker::None) return false;
    return true;
}

// Each component a single (-4) or a chain (-3)-(-2)-...-(-2)-(-3).
inline ShapeReport log_enriques_shape(const CurveConfiguration& cfg) {
    ShapeReport r;
    if (cfg.size() == 0) {
        r.holds = false;
        r.reasons.push_back("empty configuration");
        return r;
    }
    std::vector<i64> all(cfg.size(), 1);
    for (const auto& n : cfg.nodes())
        if (n.mult != 1 || n.genus != 0 || n.marker != Marker::None) {
            r.holds = false;
            r.reasons.push_back(n.id + " is not a reduced smooth rational curve");
        }
    if (!cfg.triples().empty()) {
        r.holds = false;
        r.reasons.push_back("triple point");
    }
    const auto& gm = cfg.gram();
    for (const auto& comp : cfg.components(all)) {
        if (comp.size() == 1) {
            const auto& n = cfg.node(comp[0]);
            if (n.self_int != -4) {
                r.holds = false;
                r.reasons.push_back("isolated " + n.id + " has self-intersection " + std::to_string(n.self_int));
            }
            continue;
        }
        // a chain: every off-diagonal entry 0 or 1, degrees <= 2, edges = nodes - 1
        int ends = 0;
        std::size_t edges = 0;
        bool chain = true;
        for (int i : comp) {
            int deg = 0;
            for (int j : comp) {
                if (i == j) continue;
                if (gm[i][j] > 1) chain = false;
                deg += gm[i][j] > 0;
            }
            edges += deg;
            if (deg > 2) chain = false;
            const i64 want = deg == 1 ? -3 : -2;
            ends += deg == 1;
            if (cfg.node(i).self_int != want) {
                r.holds = false;
                r.reasons.push_back(cfg.node(i).id + " has self-intersection " + std::to_string(cfg.node(i).self_int) +
                                    ", chain needs " + std::to_string(want));
            }
        }
        if (!chain || ends != 2 || edges / 2 != comp.size() - 1) {
            r.holds = false;
            r.reasons.push_back("component of " + cfg.node(comp[0]).id + " is not a linear chain");
        } else if (comp.size() == 2) {
            r.reasons.push_back("(-3)-(-3) chain with empty interior accepted");
        }
    }
    return r;
}

// ---------------------------------------------------------------- minimality

enum class MinimalityVerdict { BlocksBlowDown, CobleAfterBlowDown, Undetermined, Other };

inline const char* to_string(MinimalityVerdict v) {
    switch (v) {
        case MinimalityVerdict::BlocksBlowDown: return "blocks blow-down";
        case MinimalityVerdict::CobleAfterBlowDown: return "Coble after blow-down";
        case MinimalityVerdict::Undetermined: return "undetermined";
        case MinimalityVerdict::Other: return "other";
    }
    return "?";
}

struct MinimalityReport {
    MinimalityVerdict verdict = MinimalityVerdict::Undetermined;
    PaResult pa;
};

// p_a(D + 2E) for a (-1)-curve E: 1 blocks, 0 means the blow-down is again Coble.
inline MinimalityReport minimality_check(const CurveConfiguration& cfg, const Multiset& d, const std::string& e) {
    const auto& en = cfg.node(cfg.index(e));
    if (en.self_int != -1 || en.genus != 0) throw Error("E must be a smooth rational (-1)-curve");
    Multiset de = d;
    de[e] = add(de[e], 2);
    MinimalityReport r;
    r.pa = divisor_pa(cfg, de);
    if (!r.pa.determined)
        r.verdict = MinimalityVerdict::Undetermined;
    else if (r.pa.value == 1)
        r.verdict = MinimalityVerdict::BlocksBlowDown;
    else if (r.pa.value == 0)
        r.verdict = MinimalityVerdict::CobleAfterBlowDown;
    else
        r.verdict = MinimalityVerdict::Other;
    return r;
}

// ---------------------------------------------------------------- Halphen fibres

inline bool halphen_k3_predicate(const FiberType& f, const std::optional<FiberType>& f1 = std::nullopt) {
    auto ok = [](const FiberType& t) {
        using K = FiberType::Kind;
        // a smooth fibre is I_0
        return t.kind == K::I || t.kind == K::Smooth || t.kind == K::II || t.kind == K::III || t.kind == K::IV;
    };
    return ok(f) && (!f1 || ok(*f1));
}

}  // namespace coble
