#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace coble {

// Plane curve datum (d; m1, ..., mk), multiplicities sorted descending, zeros dropped.
struct MultiplicityVector {
    i64 d = 0;
    std::vector<i64> mults;

    MultiplicityVector() = default;
    MultiplicityVector(i64 degree, std::vector<i64> m) : d(degree), mults(std::move(m)) {
        if (d < 0) throw Error("degree must be >= 0");
        for (i64 x : mults)
            if (x < 0) throw Error("multiplicities must be >= 0");
        normalize();
    }

    void normalize() {
        std::sort(mults.begin(), mults.end(), std::greater<>());
        while (!mults.empty() && mults.back() == 0) mults.pop_back();
    }

    i64 at(size_t i) const { return i < mults.size() ? mults[i] : 0; }
    size_t size() const { return mults.size(); }

    // (d-1)(d-2)/2 - sum m(m-1)/2
    i64 genus_proxy() const {
        i64 g = mul(sub(d, 1), sub(d, 2)) / 2;
        for (i64 m : mults) g = sub(g, mul(m, sub(m, 1)) / 2);
        return g;
    }

    // multiplicities >= 2 only
    MultiplicityVector singular_part() const {
        std::vector<i64> s;
        for (i64 m : mults)
            if (m >= 2) s.push_back(m);
        return {d, s};
    }

    std::string str() const {
        std::string s = "(" + std::to_string(d);
        for (size_t i = 0; i < mults.size(); ++i) s += (i ? "," : ";") + std::to_string(mults[i]);
        return s + ")";
    }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// "(d;m1,m2,...)" with optional whitespace.
inline MultiplicityVector parse_mv(const std::string& text) {
    size_t i = 0;
    auto ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        ws();
        if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto number = [&]() -> i64 {
        ws();
        const size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) throw ParseError("sign not allowed", i);
        i64 v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            try {
                v = add(mul(v, 10), text[i] - '0');
            } catch (const OverflowError&) {
                throw ParseError("number too large", start);
            }
            ++i;
        }
        if (i == start) throw ParseError("expected a non-negative integer", i);
        return v;
    };
    expect('(');
    const i64 d = number();
    std::vector<i64> m;
    ws();
    if (i < text.size() && text[i] == ';') {
        ++i;
        m.push_back(number());
        ws();
        while (i < text.size() && text[i] == ',') {
            ++i;
            m.push_back(number());
            ws();
        }
    }
    expect(')');
    ws();
    if (i != text.size()) throw ParseError("trailing characters", i);
    return {d, m};
}

inline DivisorClass to_class(const MultiplicityVector& v, int n_points = -1) {
    const int n = std::max<int>(n_points, static_cast<int>(v.size()));
    auto lat = make_lattice(BaseKind::p2(), n);
    std::vector<i64> c(lat->rank(), 0);
    c[0] = v.d;
    for (size_t i = 0; i < v.size(); ++i) c[i + 1] = -v.mults[i];
    return DivisorClass(lat, c);
}

inline MultiplicityVector from_class(const DivisorClass& c) {
    if (!c.lattice()->base().is_p2()) throw Error("from_class needs a plane lattice");
    if (c[0] < 0) throw Error("negative degree in class");
    std::vector<i64> m;
    for (int i = 1; i < c.rank(); ++i) {
        if (c[i] > 0) throw Error("positive exceptional coefficient in class");
        m.push_back(-c[i]);
    }
    return {c[0], m};
}

inline const char* kNotAdmissible = "transformation not admissible for this vector";

// Indices are 0-based positions in the normalized vector; positions past
// the end stand for general points of multiplicity 0.
inline MultiplicityVector quadratic_transform(const MultiplicityVector& v, size_t i, size_t j, size_t k) {
    if (i == j || j == k || i == k) throw Error("quadratic transform needs three distinct indices");
    const i64 mi = v.at(i), mj = v.at(j), mk = v.at(k);
    const i64 d2 = sub(sub(sub(mul(2, v.d), mi), mj), mk);
    std::vector<i64> m = v.mults;
    m.resize(std::max({m.size(), i + 1, j + 1, k + 1}), 0);
    m[i] = sub(sub(v.d, mj), mk);
    m[j] = sub(sub(v.d, mi), mk);
    m[k] = sub(sub(v.d, mi), mj);
    if (d2 < 0 || m[i] < 0 || m[j] < 0 || m[k] < 0) throw Error(kNotAdmissible);
    return {d2, m};
}

// Reflection in the root 2e0 - (sum of six e's), read back as a vector.
inline MultiplicityVector quintic_transform(const MultiplicityVector& v, const std::array<size_t, 6>& idx) {
    std::set<size_t> u(idx.begin(), idx.end());
    if (u.size() != 6) throw Error("quintic transform needs six distinct indices");
    const size_t top = *u.rbegin();
    const int n = static_cast<int>(std::max(v.size(), top + 1));
    auto c = to_class(v, n);
    auto root = 2 * DivisorClass::basis(c.lattice(), 0);
    for (size_t x : idx) root -= DivisorClass::exceptional(c.lattice(), static_cast<int>(x) + 1);
    auto img = reflect(c, root);
    if (img[0] < 0) throw Error(kNotAdmissible);
    for (int a = 1; a < img.rank(); ++a)
        if (img[a] > 0) throw Error(kNotAdmissible);
    return from_class(img);
}

struct ReductionStep {
    std::string kind;  // "quadratic" or "quintic"
    std::vector<size_t> indices;
    int general_points = 0;  // padded multiplicity-0 centers
    MultiplicityVector before, after;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    MultiplicityVector final;
    // set when the loop ended on an inadmissible step at degree <= 3
    std::string stop_note;
};

struct ReductionError : Error {
    ReductionTrace trace;
    ReductionError(const std::string& msg, ReductionTrace t) : Error(msg), trace(std::move(t)) {}
};

// Quadratic transforms at the three largest multiplicities while m1+m2+m3 > d.
// Ties resolve to the lexicographically first triple, i.e. positions 0,1,2
// of the sorted vector. A step that needs a general point always fails
// (m1+m2 > d forces d-m1-m2 < 0); at degree <= 3 that ends the loop with a
// note, above it the error propagates.
inline ReductionTrace noether_reduce(const MultiplicityVector& v, bool force = false) {
    if (!force && v.genus_proxy() != 0)
        throw Error("noether_reduce expects genus proxy 0 (got " + std::to_string(v.genus_proxy()) +
                    "); pass force to override");
    ReductionTrace tr;
    tr.final = v;
    for (;;) {
        const auto& cur = tr.final;
        if (add(add(cur.at(0), cur.at(1)), cur.at(2)) <= cur.d) break;
        ReductionStep st;
        st.kind = "quadratic";
        st.indices = {0, 1, 2};
        st.general_points = static_cast<int>(3 - std::min<size_t>(3, cur.size()));
        st.before = cur;
        try {
            st.after = quadratic_transform(cur, 0, 1, 2);
        } catch (const Error& e) {
            if (cur.d <= 3) {
                tr.stop_note = std::string(e.what()) + " at " + cur.str() +
                               (st.general_points ? " (needs general points)" : "");
                break;
            }
            throw ReductionError(e.what(), tr);
        }
        if (st.after.d >= cur.d) throw ReductionError("degree did not decrease", tr);
        tr.final = st.after;
        tr.steps.push_back(st);
    }
    return tr;
}

// Irreducible-rational vectors with d in {4,5,6}, every multiplicity >= 2,
// none equal to d-1, a point of multiplicity >= 3 when d = 6, and the line
// and conic Bezout bounds m_i + m_j <= d, (five largest) <= 2d.
inline std::vector<MultiplicityVector> low_degree_rational_family() {
    std::vector<MultiplicityVector> out;
    for (i64 d = 4; d <= 6; ++d) {
        const i64 g0 = (d - 1) * (d - 2) / 2;
        std::vector<i64> cur;
        std::function<void(i64, i64)> rec = [&](i64 maxm, i64 budget) {
            if (budget == 0) {
                MultiplicityVector v(d, cur);
                if (v.size() == 0) return;
                if (d == 6 && v.at(0) < 3) return;
                if (v.at(0) + v.at(1) > d) return;
                i64 five = 0;
                for (size_t a = 0; a < 5; ++a) five += v.at(a);
                if (five > 2 * d) return;
                out.push_back(v);
                return;
            }
            for (i64 m = std::min(maxm, d - 2); m >= 2; --m) {
                const i64 c = m * (m - 1) / 2;
                if (c > budget) continue;
                cur.push_back(m);
                rec(m, budget - c);
                cur.pop_back();
            }
        };
        rec(d - 2, g0);
    }
    return out;
}

}  // namespace coble
