#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace coble {

enum class EnumerationMode {
    // d = 0 classes must look like e_i minus a set of other e_j
    EffectiveShape,
    // any integer solution at d = 0
    LatticeOnly,
};

struct BudgetError : Error {
    using Error::Error;
};

struct EnumerationOptions {
    EnumerationMode mode = EnumerationMode::EffectiveShape;
    // cap on emitted classes (after expanding permutations)
    std::size_t budget = 5'000'000;
    int max_rank = 16;
};

namespace detail {

inline i64 isqrt(i64 x) {
    if (x < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Non-increasing tuples of length len with entries in [lo, hi], given sum and sum of squares.
inline void descending_tuples(int len, i64 lo, i64 hi, i64 sum, i64 sq,
                              const std::function<void(const std::vector<i64>&)>& emit) {
    std::vector<i64> cur;
    cur.reserve(len);
    std::function<void(i64, i64, i64)> rec = [&](i64 top, i64 s, i64 q) {
        const int left = len - static_cast<int>(cur.size());
        if (left == 0) {
            if (s == 0 && q == 0) emit(cur);
            return;
        }
        if (q < 0) return;
        // Cauchy-Schwarz: s^2 <= left * q
        if (static_cast<long double>(s) * s > static_cast<long double>(left) * q) return;
        const i64 r = isqrt(q);
        for (i64 a = std::min(top, r); a >= std::max(lo, -r); --a) {
            // remaining entries are <= a, so their sum is at most (left-1)*a
            if (s - a > static_cast<i64>(left - 1) * a) break;
            cur.push_back(a);
            rec(a, s - a, q - a * a);
            cur.pop_back();
        }
    };
    rec(hi, sum, sq);
}

// number of distinct permutations of a multiset
inline long double multinomial(const std::vector<i64>& t) {
    long double r = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        run = (i > 0 && t[i] == t[i - 1]) ? run + 1 : 1;
        r = r * static_cast<long double>(i + 1) / static_cast<long double>(run);
    }
    return r;
}

inline bool effective_zero_shape(const std::vector<i64>& a) {
    int minus = 0;
    for (i64 x : a) {
        if (x == -1)
            ++minus;
        else if (x != 0 && x != 1)
            return false;
    }
    return minus == 1;
}

}  // namespace detail

// Numerical classes C with C^2 = -n and C.K = n - 2 (smooth rational shape).
// On P2 the degree is the e0 coefficient; on F_b with C = alpha f + beta s0 - sum a e
// it is alpha + beta with alpha, beta >= 0. Effectivity is not decided.
inline std::vector<DivisorClass> enumerate_negative_classes(const LatticePtr& lat, i64 n, i64 degree_cap,
                                                            const EnumerationOptions& opt = {}) {
    if (n < 1) throw Error("n must be >= 1");
    if (degree_cap < 0) throw Error("degree cap must be >= 0");
    if (lat->rank() > opt.max_rank)
        throw BudgetError("lattice rank " + std::to_string(lat->rank()) + " exceeds search limit " +
                          std::to_string(opt.max_rank));
    const auto& base = lat->base();
    const int r = lat->n_blowups();
    const int br = base.base_rank();
    std::vector<DivisorClass> out;
    std::size_t emitted = 0;

    auto expand = [&](std::vector<i64> head, const std::vector<i64>& tuple) {
        const long double count = detail::multinomial(tuple);
        if (emitted + count > opt.budget)
            throw BudgetError("enumeration exceeds budget of " + std::to_string(opt.budget) + " classes");
        std::vector<i64> perm(tuple.rbegin(), tuple.rend());  // ascending
        do {
            std::vector<i64> c = head;
            for (i64 a : perm) c.push_back(-a);
            out.emplace_back(lat, std::move(c));
            ++emitted;
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    auto solve = [&](std::vector<i64> head, i64 sum, i64 sq, bool zero_degree) {
        if (sq < 0) return;
        if (r == 0) {
            if (sum == 0 && sq == 0) expand(head, {});
            return;
        }
        const i64 bound = detail::isqrt(sq);
        const i64 lo = zero_degree ? -bound : 0;
        detail::descending_tuples(r, lo, bound, sum, sq, [&](const std::vector<i64>& t) {
            if (zero_degree && opt.mode == EnumerationMode::EffectiveShape && !detail::effective_zero_shape(t))
                return;
            expand(head, t);
        });
    };

    if (base.is_p2()) {
        for (i64 d = 0; d <= degree_cap; ++d)
            solve({d}, add(mul(3, d), n - 2), add(mul(d, d), n), d == 0);
    } else {
        const i64 b = base.b;
        for (i64 deg = 0; deg <= degree_cap; ++deg)
            for (i64 beta = 0; beta <= deg; ++beta) {
                const i64 alpha = deg - beta;
                const i64 sum = add(sub(n - 2, mul(beta, b - 2)), mul(2, alpha));
                const i64 sq = add(sub(mul(2, mul(alpha, beta)), mul(b, mul(beta, beta))), n);
                solve({alpha, beta}, sum, sq, deg == 0);
            }
    }

    std::sort(out.begin(), out.end(), [&](const DivisorClass& x, const DivisorClass& y) {
        i64 dx = 0, dy = 0;
        for (int i = 0; i < br; ++i) dx += x[i], dy += y[i];
        if (dx != dy) return dx < dy;
        return x.coeffs() > y.coeffs();
    });
    for (const auto& c : out)
        if (self_intersection(c) != -n || k_dot(c) != n - 2)
            throw std::logic_error("enumeration produced a class off the constraint surface");
    return out;
}

struct ExperimentRow {
    i64 cap = 0;
    std::size_t count = 0;
    i64 max_dot = 0;
    std::string witness;
    bool identity_holds = true;
    bool partial = false;
};

// Fix E = e9 on the 9-point plane lattice; for each cap record max E'.E over
// enumerated (-1)-classes E' != E, asserting (E'-E)^2 = -2 - 2E'.E for every pair.
inline std::vector<ExperimentRow> minus_one_intersection_experiment(const std::vector<i64>& caps,
                                                                    std::size_t budget = 5'000'000) {
    for (std::size_t i = 1; i < caps.size(); ++i)
        if (caps[i] < caps[i - 1]) throw Error("caps must be ascending");
    auto lat = make_lattice(BaseKind::p2(), 9);
    const auto e = DivisorClass::exceptional(lat, 9);
    std::vector<ExperimentRow> rows;
    for (i64 cap : caps) {
        ExperimentRow row;
        row.cap = cap;
        EnumerationOptions opt;
        opt.budget = budget;
        std::vector<DivisorClass> cls;
        try {
            cls = enumerate_negative_classes(lat, 1, cap, opt);
        } catch (const BudgetError&) {
            row.partial = true;
            rows.push_back(row);
            break;
        }
        row.count = cls.size();
        for (const auto& c : cls) {
            if (c == e) continue;
            const i64 dot = pair(c, e);
            if (self_intersection(c - e) != -2 - 2 * dot) row.identity_holds = false;
            if (row.witness.empty() || dot > row.max_dot) {
                row.max_dot = dot;
                row.witness = to_string(c);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

struct BasicSurfaceReport {
    // indices of classes with self-intersection <= -3
    std::vector<std::size_t> offenders;
    i64 k_squared = 0;
    bool k_squared_below_8 = false;
    bool hypothesis_holds() const { return offenders.empty(); }
};

inline BasicSurfaceReport basic_surface_check(const std::vector<DivisorClass>& classes,
                                              std::optional<LatticePtr> lat = std::nullopt) {
    BasicSurfaceReport rep;
    if (!lat && !classes.empty()) lat = classes.front().lattice();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (lat) classes[i].require_same(DivisorClass::zero(*lat));
        if (self_intersection(classes[i]) <= -3) rep.offenders.push_back(i);
    }
    if (lat) {
        rep.k_squared = (*lat)->k_squared();
        rep.k_squared_below_8 = rep.k_squared < 8;
    }
    return rep;
}

}  // namespace coble
