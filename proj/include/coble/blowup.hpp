#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace coble {

struct Center {
    std::string id;
    std::optional<std::string> parent;  // earlier center, or none for a point of the base
    std::vector<std::string> on;        // curve labels (or earlier center ids) through this center
};

struct CurveAssignment {
    std::string label;
    std::vector<i64> base_class;
    std::map<std::string, i64> mults;  // center id -> multiplicity

    i64 mult(const std::string& center) const {
        auto it = mults.find(center);
        return it == mults.end() ? 0 : it->second;
    }
};

class BlowUpSequence {
public:
    BlowUpSequence(BaseKind base, std::vector<Center> centers, std::vector<CurveAssignment> curves = {})
        : base_(base), centers_(std::move(centers)), curves_(std::move(curves)) {
        lat_ = make_lattice(base_, static_cast<int>(centers_.size()));
        base_lat_ = make_lattice(base_, 0);
        for (size_t i = 0; i < centers_.size(); ++i) {
            const auto& c = centers_[i];
            if (c.parent) {
                auto it = center_index_.find(*c.parent);
                if (it == center_index_.end())
                    throw Error("center " + c.id + ": parent " + *c.parent + " is not an earlier center");
            }
            if (!center_index_.emplace(c.id, static_cast<int>(i) + 1).second)
                throw Error("duplicate center id: " + c.id);
        }
        for (size_t i = 0; i < curves_.size(); ++i) {
            const auto& cv = curves_[i];
            if (!curve_index_.emplace(cv.label, static_cast<int>(i)).second)
                throw Error("duplicate curve label: " + cv.label);
            if (center_index_.count(cv.label)) throw Error("curve label clashes with a center id: " + cv.label);
            if (static_cast<int>(cv.base_class.size()) != base_lat_->rank())
                throw Error("curve " + cv.label + ": base class has wrong length");
            for (const auto& [p, m] : cv.mults) {
                if (!center_index_.count(p)) throw Error("curve " + cv.label + ": unknown center " + p);
                if (m < 0) throw Error("curve " + cv.label + ": negative multiplicity at " + p);
            }
        }
        for (size_t i = 0; i < centers_.size(); ++i) {
            const auto& c = centers_[i];
            for (const auto& lbl : c.on) {
                if (curve_index_.count(lbl)) continue;
                auto it = center_index_.find(lbl);
                if (it == center_index_.end() || it->second > static_cast<int>(i))
                    throw Error("center " + c.id + " lies on unknown curve " + lbl);
            }
        }
        for (const auto& cv : curves_) {
            for (const auto& c : centers_) {
                const bool listed = std::find(c.on.begin(), c.on.end(), cv.label) != c.on.end();
                const i64 m = cv.mult(c.id);
                if (listed && m == 0) throw Error("curve " + cv.label + " listed through " + c.id + " with multiplicity 0");
                if (!listed && m > 0)
                    throw Error("curve " + cv.label + " has multiplicity at " + c.id + " but is not listed there");
                if (c.parent && m > cv.mult(*c.parent))
                    throw Error("curve " + cv.label + ": multiplicity at " + c.id + " exceeds that at its parent " +
                                *c.parent);
            }
        }
    }

    const BaseKind& base() const { return base_; }
    const std::vector<Center>& centers() const { return centers_; }
    const std::vector<CurveAssignment>& curves() const { return curves_; }
    const LatticePtr& lattice() const { return lat_; }
    const LatticePtr& base_lattice() const { return base_lat_; }

    int center_number(const std::string& id) const {
        auto it = center_index_.find(id);
        if (it == center_index_.end()) throw Error("unknown center: " + id);
        return it->second;
    }
    bool has_curve(const std::string& label) const { return curve_index_.count(label) != 0; }
    const CurveAssignment& curve(const std::string& label) const {
        auto it = curve_index_.find(label);
        if (it == curve_index_.end()) throw Error("unknown curve label: " + label);
        return curves_[it->second];
    }

    // e_p: pullback of the exceptional curve of p (orthonormal (-1)-basis)
    DivisorClass exceptional(const std::string& id) const { return DivisorClass::exceptional(lat_, center_number(id)); }

    // class of the irreducible exceptional curve of p on the final surface
    DivisorClass exceptional_curve(const std::string& id) const {
        auto c = exceptional(id);
        for (const auto& q : centers_) {
            const bool on_it = (q.parent && *q.parent == id) || std::find(q.on.begin(), q.on.end(), id) != q.on.end();
            if (on_it) c -= exceptional(q.id);
        }
        return c;
    }

    DivisorClass lift(const std::vector<i64>& base_class) const {
        if (static_cast<int>(base_class.size()) != base_lat_->rank()) throw Error("base class has wrong length");
        std::vector<i64> v(lat_->rank(), 0);
        std::copy(base_class.begin(), base_class.end(), v.begin());
        return DivisorClass(lat_, v);
    }

    DivisorClass total_transform(const CurveAssignment& c) const {
        check_assignment(c);
        return lift(c.base_class);
    }
    DivisorClass total_transform(const std::string& label) const { return total_transform(curve(label)); }

    DivisorClass proper_transform(const CurveAssignment& c) const {
        check_assignment(c);
        auto r = lift(c.base_class);
        for (const auto& [p, m] : c.mults) {
            const auto* cen = &centers_[center_number(p) - 1];
            if (cen->parent && m > c.mult(*cen->parent))
                throw Error("curve " + c.label + ": multiplicity at " + p + " exceeds that at its parent");
            r -= m * exceptional(p);
        }
        return r;
    }
    DivisorClass proper_transform(const std::string& label) const { return proper_transform(curve(label)); }

    i64 k_squared() const { return lat_->k_squared(); }

    DivisorClass canonical() const { return DivisorClass::canonical(lat_); }
    DivisorClass base_canonical_pullback() const { return lift(base_lat_->canonical()); }

private:
    void check_assignment(const CurveAssignment& c) const {
        if (static_cast<int>(c.base_class.size()) != base_lat_->rank())
            throw Error("curve " + c.label + ": base class has wrong length");
        for (const auto& [p, m] : c.mults) {
            if (!center_index_.count(p)) throw Error("curve " + c.label + ": unknown center " + p);
            if (m < 0) throw Error("curve " + c.label + ": negative multiplicity");
        }
    }

    BaseKind base_;
    std::vector<Center> centers_;
    std::vector<CurveAssignment> curves_;
    LatticePtr lat_, base_lat_;
    std::map<std::string, int> center_index_;
    std::map<std::string, int> curve_index_;
};

inline DivisorClass total_transform(const BlowUpSequence& s, const CurveAssignment& c) { return s.total_transform(c); }
inline DivisorClass proper_transform(const BlowUpSequence& s, const CurveAssignment& c) { return s.proper_transform(c); }
inline i64 k_squared(const BlowUpSequence& s) { return s.k_squared(); }

// ---------------------------------------------------------------- class expressions

struct Term {
    i64 coef = 1;
    std::string symbol;
};
using ClassExpr = std::vector<Term>;

// Symbols: K, K_base, <curve> (proper transform), total(<curve>), e(<center>),
// E(<center>) (irreducible exceptional curve), base basis labels (e0, f, s0).
inline DivisorClass evaluate(const BlowUpSequence& s, const ClassExpr& expr) {
    auto acc = DivisorClass::zero(s.lattice());
    auto inner = [](const std::string& sym, const std::string& fn) -> std::optional<std::string> {
        if (sym.size() > fn.size() + 2 && sym.compare(0, fn.size() + 1, fn + "(") == 0 && sym.back() == ')')
            return sym.substr(fn.size() + 1, sym.size() - fn.size() - 2);
        return std::nullopt;
    };
    for (const auto& t : expr) {
        DivisorClass v = DivisorClass::zero(s.lattice());
        if (t.symbol == "K") v = s.canonical();
        else if (t.symbol == "K_base") v = s.base_canonical_pullback();
        else if (auto a = inner(t.symbol, "total")) v = s.total_transform(*a);
        else if (auto b = inner(t.symbol, "e")) v = s.exceptional(*b);
        else if (auto c = inner(t.symbol, "E")) v = s.exceptional_curve(*c);
        else if (s.has_curve(t.symbol)) v = s.proper_transform(t.symbol);
        else {
            const auto& labels = s.base_lattice()->labels();
            auto it = std::find(labels.begin(), labels.end(), t.symbol);
            if (it == labels.end()) throw Error("unresolved label in class expression: " + t.symbol);
            std::vector<i64> b(labels.size(), 0);
            b[it - labels.begin()] = 1;
            v = s.lift(b);
        }
        acc += t.coef * v;
    }
    return acc;
}

// Parses "2K + 3 total(F1) - E(p1)"; a coefficient may be joined by '*'.
inline ClassExpr parse_class_expr(const std::string& text) {
    ClassExpr out;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) throw Error("empty class expression");
    bool first = true;
    while (i < text.size()) {
        i64 sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw Error("expected '+' or '-' at position " + std::to_string(i));
        }
        i64 coef = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coef = add(mul(coef, 10), text[i++] - '0');
            skip();
            if (i < text.size() && text[i] == '*') ++i, skip();
        }
        const size_t start = i;
        int depth = 0;
        while (i < text.size()) {
            const char ch = text[i];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if (depth == 0 && (ch == '+' || ch == '-' || std::isspace(static_cast<unsigned char>(ch)))) break;
            ++i;
        }
        if (i == start) throw Error("missing symbol at position " + std::to_string(start));
        if (depth != 0) throw Error("unbalanced parenthesis near position " + std::to_string(start));
        out.push_back({mul(sign, coef), text.substr(start, i - start)});
        skip();
        first = false;
    }
    return out;
}

struct IdentityResult {
    bool holds = false;
    DivisorClass residual;
};

inline IdentityResult verify_class_identity(const BlowUpSequence& s, const ClassExpr& lhs, const ClassExpr& rhs) {
    auto r = evaluate(s, lhs) - evaluate(s, rhs);
    return {r.is_zero(), r};
}

// e_p.D for every center p; all equal to 2 for a member of |-2K| on a blow-up.
struct CenterIntersections {
    bool all_two = true;
    std::vector<std::pair<std::string, i64>> values;
};

inline CenterIntersections exceptional_intersections(const BlowUpSequence& s, const DivisorClass& d) {
    CenterIntersections r;
    for (const auto& c : s.centers()) {
        const i64 v = pair(s.exceptional(c.id), d);
        r.values.push_back({c.id, v});
        r.all_two = r.all_two && v == 2;
    }
    return r;
}

// ---------------------------------------------------------------- fibre tower on F_b

// Blow-ups over F_b at points of fibres away from s0: r fibres with one
// center, s fibres with a tower of three, t fibres with a tower of five,
// r = b - t - 2(n-1), s = n - t, plus one point q on a further fibre F0.
struct FibreTower {
    i64 n = 0, b = 0, t = 0, r = 0, s = 0;
    BlowUpSequence seq;
    ClassExpr minus_k_base;       // -K of F_b written with fibres and s0
    ClassExpr minus_2k_base;      // -2K of F_b written with fibres and s0
    ClassExpr minus_k_top;        // -K before the last blow-up, pulled back, in curve classes
    ClassExpr minus_2k_top;       // n M1 + 4 G1 + H, pulled back
    ClassExpr h_part;             // H
};

inline FibreTower fibre_tower(i64 n, i64 b, i64 t) {
    if (n < 3 || t < 0 || t > n || b < t + 2 * (n - 1)) throw Error("need n >= 3, 0 <= t <= n, b >= t + 2(n-1)");
    const i64 r = b - t - 2 * (n - 1), s = n - t;
    std::vector<Center> centers;
    std::vector<CurveAssignment> curves;
    FibreTower ft{n, b, t, r, s, BlowUpSequence(BaseKind::hirzebruch(b), {}), {}, {}, {}, {}, {}};
    const std::vector<i64> fibre{1, 0}, section{0, 1};
    curves.push_back({"S0", section, {}});
    auto tower = [&](const std::string& name, int depth) {
        // p1 on the fibre, p2 on the fibre and E(p1), then p3.. each on the previous exceptional curve only
        CurveAssignment cv{name, fibre, {}};
        for (int k = 1; k <= depth; ++k) {
            const std::string id = name + ".p" + std::to_string(k);
            Center c{id, std::nullopt, {}};
            if (k > 1) c.parent = name + ".p" + std::to_string(k - 1);
            if (k <= 2) {
                c.on.push_back(name);
                cv.mults[id] = 1;
            }
            centers.push_back(c);
        }
        curves.push_back(cv);
    };
    auto sym = [](const std::string& fn, const std::string& x) { return fn + "(" + x + ")"; };
    ClassExpr& mk = ft.minus_k_base;
    ClassExpr& m2k = ft.minus_2k_base;
    mk.push_back({2, "s0"});
    m2k.push_back({n, "f"});
    m2k.push_back({4, "s0"});
    ClassExpr h;
    ClassExpr mktop{{2, "total(S0)"}};
    for (i64 i = 1; i <= r; ++i) {
        const std::string f = "Fi" + std::to_string(i);
        tower(f, 1);
        mk.push_back({1, "f"});
        m2k.push_back({2, "f"});
        h.push_back({2, f});
        mktop.push_back({1, f});
    }
    for (i64 j = 1; j <= s; ++j) {
        const std::string f = "Fj" + std::to_string(j);
        tower(f, 3);
        mk.push_back({2, "f"});
        m2k.push_back({3, "f"});
        const std::string J = sym("E", f + ".p1"), E = sym("E", f + ".p2"), B = sym("E", f + ".p3");
        for (auto [c, x] : std::vector<std::pair<i64, std::string>>{{3, f}, {2, E}, {1, J}}) h.push_back({c, x});
        for (auto [c, x] : std::vector<std::pair<i64, std::string>>{{2, f}, {2, E}, {1, J}, {1, B}})
            mktop.push_back({c, x});
    }
    for (i64 k = 1; k <= t; ++k) {
        const std::string f = "Fk" + std::to_string(k);
        tower(f, 5);
        mk.push_back({3, "f"});
        m2k.push_back({5, "f"});
        const std::string J = sym("E", f + ".p1"), E = sym("E", f + ".p2"), B = sym("E", f + ".p3"),
                          C = sym("E", f + ".p4"), D = sym("E", f + ".p5");
        for (auto [c, x] : std::vector<std::pair<i64, std::string>>{{5, f}, {6, E}, {3, J}, {4, B}, {2, C}})
            h.push_back({c, x});
        for (auto [c, x] :
             std::vector<std::pair<i64, std::string>>{{3, f}, {4, E}, {2, J}, {3, B}, {2, C}, {1, D}})
            mktop.push_back({c, x});
    }
    centers.push_back({"q", std::nullopt, {"F0"}});
    curves.push_back({"F0", fibre, {{"q", 1}}});
    ft.seq = BlowUpSequence(BaseKind::hirzebruch(b), centers, curves);
    ft.h_part = h;
    ft.minus_k_top = mktop;
    ft.minus_k_top.push_back({-1, "e(q)"});
    ft.minus_2k_top = {{n, "total(F0)"}, {4, "total(S0)"}};
    ft.minus_2k_top.insert(ft.minus_2k_top.end(), h.begin(), h.end());
    ft.minus_2k_top.push_back({-2, "e(q)"});
    return ft;
}

}  // namespace coble
