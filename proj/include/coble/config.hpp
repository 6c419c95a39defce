#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace coble {

// Singularity marker for the single-component genus-1 fibres.
enum class Marker { None, Node, Cusp };

struct CurveNode {
    std::string id;
    i64 self_int = 0;
    i64 genus = 0;
    i64 mult = 1;
    Marker marker = Marker::None;
};

struct CurveEdge {
    std::string a, b;
    i64 count = 1;
    i64 tangency = 1;
};

using Triple = std::array<std::string, 3>;

// node id -> coefficient
using Multiset = std::map<std::string, i64>;

class CurveConfiguration {
public:
    CurveConfiguration() = default;
    CurveConfiguration(std::vector<CurveNode> nodes, std::vector<CurveEdge> edges, std::vector<Triple> triples = {})
        : nodes_(std::move(nodes)), edges_(std::move(edges)), triples_(std::move(triples)) {
        for (size_t i = 0; i < nodes_.size(); ++i) {
            const auto& n = nodes_[i];
            if (!index_.emplace(n.id, static_cast<int>(i)).second) throw Error("duplicate node id: " + n.id);
            if (n.genus < 0) throw Error("negative genus on node " + n.id);
            if (n.mult < 0) throw Error("negative multiplicity on node " + n.id);
        }
        const int n = size();
        gram_.assign(n, std::vector<i64>(n, 0));
        for (int i = 0; i < n; ++i) gram_[i][i] = nodes_[i].self_int;
        for (const auto& e : edges_) {
            const int a = index(e.a), b = index(e.b);
            if (a == b) throw Error("edge joins node " + e.a + " to itself");
            if (e.count < 1 || e.tangency < 1) throw Error("edge " + e.a + "-" + e.b + " needs count, tangency >= 1");
            const i64 v = mul(e.count, e.tangency);
            gram_[a][b] = add(gram_[a][b], v);
            gram_[b][a] = gram_[a][b];
        }
        for (const auto& t : triples_) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    const int a = index(t[i]), b = index(t[j]);
                    if (a == b) throw Error("triple point repeats node " + t[i]);
                    if (gram_[a][b] < 1)
                        throw Error("triple point " + t[i] + "," + t[j] + " without an incidence edge");
                }
        }
    }

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<CurveNode>& nodes() const { return nodes_; }
    const std::vector<CurveEdge>& edges() const { return edges_; }
    const std::vector<Triple>& triples() const { return triples_; }
    const CurveNode& node(int i) const { return nodes_.at(i); }
    const Matrix& gram() const { return gram_; }

    int index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error("unknown node id: " + id);
        return it->second;
    }
    bool has(const std::string& id) const { return index_.count(id) != 0; }

    // adjunction: K.C = 2g - 2 - C^2
    i64 k_dot_node(int i) const { return sub(sub(mul(2, nodes_[i].genus), 2), nodes_[i].self_int); }

    std::vector<i64> vec(const Multiset& d) const {
        std::vector<i64> v(size(), 0);
        for (const auto& [id, c] : d) {
            if (c < 0) throw Error("negative coefficient for node " + id);
            v[index(id)] = add(v[index(id)], c);
        }
        return v;
    }
    Multiset multiset(const std::vector<i64>& v) const {
        Multiset d;
        for (int i = 0; i < size(); ++i)
            if (v[i] != 0) d[nodes_[i].id] = v[i];
        return d;
    }
    // the configuration read as a divisor with its stored multiplicities
    Multiset as_divisor() const {
        Multiset d;
        for (const auto& n : nodes_)
            if (n.mult > 0) d[n.id] = n.mult;
        return d;
    }

    i64 dot(const std::vector<i64>& a, const std::vector<i64>& b) const {
        i64 s = 0;
        for (int i = 0; i < size(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < size(); ++j)
                if (b[j] != 0 && gram_[i][j] != 0) s = add(s, mul(a[i], mul(gram_[i][j], b[j])));
        }
        return s;
    }
    i64 k_dot(const std::vector<i64>& a) const {
        i64 s = 0;
        for (int i = 0; i < size(); ++i) s = add(s, mul(a[i], k_dot_node(i)));
        return s;
    }
    i64 dot(const Multiset& a, const Multiset& b) const { return dot(vec(a), vec(b)); }

    // connected components of the support of v (positive intersection = adjacency)
    std::vector<std::vector<int>> components(const std::vector<i64>& v) const {
        std::vector<int> seen(size(), 0);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < size(); ++s) {
            if (v[s] == 0 || seen[s]) continue;
            std::vector<int> comp{s}, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int w = 0; w < size(); ++w)
                    if (w != u && v[w] != 0 && !seen[w] && gram_[u][w] > 0) {
                        seen[w] = 1;
                        comp.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(comp);
        }
        return out;
    }

private:
    std::vector<CurveNode> nodes_;
    std::vector<CurveEdge> edges_;
    std::vector<Triple> triples_;
    std::map<std::string, int> index_;
    Matrix gram_;
};

// ---------------------------------------------------------------- k-connectedness

inline constexpr int kMaxConnectivityComponents = 20;
inline constexpr i64 kMaxDecompositions = 50'000'000;

inline bool numerically_k_connected(const CurveConfiguration& cfg, const std::vector<i64>& v, i64 k) {
    std::vector<int> idx;
    for (int i = 0; i < cfg.size(); ++i)
        if (v[i] > 0) idx.push_back(i);
    if (static_cast<int>(idx.size()) > kMaxConnectivityComponents)
        throw Error("k-connectedness search limited to " + std::to_string(kMaxConnectivityComponents) +
                    " distinct components, got " + std::to_string(idx.size()));
    i64 total = 1;
    for (int i : idx) {
        total = mul(total, add(v[i], 1));
        if (total > kMaxDecompositions) throw Error("k-connectedness search space too large");
    }
    const int c = static_cast<int>(idx.size());
    Matrix g(c, std::vector<i64>(c));
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) g[a][b] = cfg.gram()[idx[a]][idx[b]];
    std::vector<i64> d(c), d1(c, 0);
    for (int a = 0; a < c; ++a) d[a] = v[idx[a]];
    // D1.(D - D1) >= k for every proper nonzero D1 <= D
    for (;;) {
        int p = 0;
        while (p < c && d1[p] == d[p]) d1[p++] = 0;
        if (p == c) break;
        ++d1[p];
        bool full = true;
        for (int a = 0; a < c && full; ++a) full = d1[a] == d[a];
        if (full) continue;
        i64 s = 0;
        for (int a = 0; a < c; ++a) {
            if (d1[a] == 0) continue;
            for (int b = 0; b < c; ++b) s += d1[a] * g[a][b] * (d[b] - d1[b]);
        }
        if (s < k) return false;
    }
    return true;
}

inline bool is_numerically_k_connected(const CurveConfiguration& cfg, const Multiset& d, i64 k) {
    return numerically_k_connected(cfg, cfg.vec(d), k);
}

// ---------------------------------------------------------------- arithmetic genus

struct PaResult {
    bool determined = false;
    i64 value = 0;    // valid when determined
    i64 numeric = 0;  // value with h^0(O_D) taken as 1
    i64 h0 = 0;       // valid when determined
    std::string note;
};

inline PaResult divisor_pa(const CurveConfiguration& cfg, const Multiset& subset) {
    const auto v = cfg.vec(subset);
    bool any = false;
    for (i64 x : v) any = any || x > 0;
    if (!any) throw Error("divisor_pa needs a nonempty divisor");
    const i64 s = add(cfg.dot(v, v), cfg.k_dot(v));
    const i64 half = half_exact(s, "D^2 + K.D");
    PaResult r;
    r.numeric = add(half, 1);
    i64 h0 = 0;
    for (const auto& comp : cfg.components(v)) {
        bool reduced = true;
        for (int i : comp) reduced = reduced && v[i] == 1;
        if (reduced) {
            h0 = add(h0, 1);
            continue;
        }
        std::vector<i64> w(cfg.size(), 0);
        for (int i : comp) w[i] = v[i];
        const auto& n = cfg.node(comp[0]);
        if (comp.size() == 1 && n.genus == 0 && n.self_int < 0) {
            // mC with C smooth rational, C^2 < 0: h^1(O_mC) = 0, so h^0 = chi
            const i64 m = v[comp[0]];
            const i64 chi = -half_exact(add(mul(mul(m, m), n.self_int), mul(m, cfg.k_dot_node(comp[0]))), "chi");
            h0 = add(h0, chi);
            continue;
        }
        if (numerically_k_connected(cfg, w, 1)) {
            h0 = add(h0, 1);
            continue;
        }
        r.note = "non-reduced part not numerically 1-connected";
        return r;
    }
    r.determined = true;
    r.h0 = h0;
    r.value = add(half, h0);
    return r;
}

inline bool pa_sum_formula_check(const CurveConfiguration& cfg, const Multiset& d1, const Multiset& d2) {
    const auto v1 = cfg.vec(d1), v2 = cfg.vec(d2);
    std::vector<i64> v(cfg.size());
    for (int i = 0; i < cfg.size(); ++i) v[i] = v1[i] + v2[i];
    for (int i = 0; i < cfg.size(); ++i)
        if (v[i] > 1) throw Error("D1 + D2 is not reduced at " + cfg.node(i).id);
    auto check = [&](const std::vector<i64>& w, const char* name) {
        bool any = false;
        for (i64 x : w) any = any || x > 0;
        if (!any) throw Error(std::string(name) + " is empty");
        if (!numerically_k_connected(cfg, w, 1)) throw Error(std::string(name) + " is not numerically 1-connected");
    };
    check(v1, "D1");
    check(v2, "D2");
    check(v, "D1 + D2");
    const auto p = divisor_pa(cfg, cfg.multiset(v));
    const auto p1 = divisor_pa(cfg, d1);
    const auto p2 = divisor_pa(cfg, d2);
    return p.value == p1.value + p2.value + cfg.dot(v1, v2) - 1;
}

// ---------------------------------------------------------------- SNC

struct SncViolation {
    enum class Kind { SingularComponent, Tangency, TriplePoint };
    Kind kind;
    std::vector<std::string> nodes;
    std::string detail;
};

inline const char* to_string(SncViolation::Kind k) {
    switch (k) {
        case SncViolation::Kind::SingularComponent: return "singular or positive-genus component";
        case SncViolation::Kind::Tangency: return "order >= 2 contact";
        case SncViolation::Kind::TriplePoint: return "three curves through one point";
    }
    return "?";
}

struct SncReport {
    bool pass = true;
    std::vector<SncViolation> violations;
    std::vector<std::string> flags;
};

inline SncReport check_snc(const CurveConfiguration& cfg) {
    SncReport r;
    for (const auto& n : cfg.nodes())
        if (n.genus != 0 || n.marker != Marker::None)
            r.violations.push_back({SncViolation::Kind::SingularComponent, {n.id}, "genus " + std::to_string(n.genus)});
    for (const auto& e : cfg.edges()) {
        if (e.tangency >= 2)
            r.violations.push_back(
                {SncViolation::Kind::Tangency, {e.a, e.b}, "contact order " + std::to_string(e.tangency)});
        if (e.count >= 2)
            r.flags.push_back(e.a + "-" + e.b + " meet transversally at " + std::to_string(e.count) + " points");
    }
    for (const auto& t : cfg.triples())
        r.violations.push_back({SncViolation::Kind::TriplePoint, {t[0], t[1], t[2]}, "common point"});
    r.pass = r.violations.empty();
    return r;
}

// A cycle in the reduced dual graph, parallel intersections counted.
inline std::optional<std::vector<std::string>> find_loop(const CurveConfiguration& cfg) {
    const int n = cfg.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cfg.gram()[a][b] >= 2) return std::vector<std::string>{cfg.node(a).id, cfg.node(b).id};
    std::vector<int> parent(n, -1), depth(n, -1);
    for (int s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (w == u || cfg.gram()[u][w] <= 0) continue;
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push_back(w);
                } else if (w != parent[u] && parent[w] != u) {
                    // close the cycle through the lowest common ancestor
                    std::vector<int> pa, pb;
                    int x = u, y = w;
                    while (depth[x] > depth[y]) pa.push_back(x), x = parent[x];
                    while (depth[y] > depth[x]) pb.push_back(y), y = parent[y];
                    while (x != y) pa.push_back(x), pb.push_back(y), x = parent[x], y = parent[y];
                    pa.push_back(x);
                    std::reverse(pb.begin(), pb.end());
                    pa.insert(pa.end(), pb.begin(), pb.end());
                    std::vector<std::string> ids;
                    for (int i : pa) ids.push_back(cfg.node(i).id);
                    return ids;
                }
            }
        }
    }
    return std::nullopt;
}

// Reduced sub-divisor exhibiting an SNC violation.
inline Multiset snc_witness(const SncViolation& v) {
    Multiset d;
    for (const auto& id : v.nodes) d[id] = 1;
    return d;
}

// ---------------------------------------------------------------- loops

struct LoopReport {
    i64 s = 0;
    i64 sum_self = 0;
    i64 bound = 0;
    bool holds = false;
    bool unique = false;
};

// cycle rank of the multigraph whose parallel edges are the intersection points
inline i64 cycle_rank(const CurveConfiguration& cfg) {
    const int n = cfg.size();
    i64 edges = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cfg.gram()[a][b] > 0) edges += cfg.gram()[a][b];
    std::vector<i64> all(n, 1);
    return edges - n + static_cast<i64>(cfg.components(all).size());
}

inline LoopReport loop_inequality_check(const CurveConfiguration& cfg, const std::vector<std::string>& chain,
                                        const std::string& m1) {
    if (chain.empty()) throw Error("loop chain is empty");
    std::vector<int> cyc{cfg.index(m1)};
    for (const auto& id : chain) cyc.push_back(cfg.index(id));
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) throw Error("loop repeats a node");
    if (chain.size() == 1) {
        if (cfg.gram()[cyc[0]][cyc[1]] < 2) throw Error("chain does not close a loop with " + m1);
    } else {
        for (size_t i = 0; i < cyc.size(); ++i) {
            const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (cfg.gram()[a][b] < 1)
                throw Error("chain does not close a loop with " + m1 + ": " + cfg.node(a).id + " and " +
                            cfg.node(b).id + " are disjoint");
        }
    }
    LoopReport r;
    r.s = static_cast<i64>(chain.size());
    for (const auto& id : chain) r.sum_self = add(r.sum_self, cfg.node(cfg.index(id)).self_int);
    r.bound = -2 * r.s - 1;
    r.holds = r.sum_self <= r.bound;
    r.unique = cycle_rank(cfg) == 1;
    return r;
}

// ---------------------------------------------------------------- Kodaira fibres

struct FiberType {
    enum class Kind { I, IStar, II, III, IV, IIStar, IIIStar, IVStar, Smooth };
    Kind kind = Kind::Smooth;
    int param = 0;  // n for I_n, b for I*_b

    std::string name() const {
        switch (kind) {
            case Kind::I: return "I" + std::to_string(param);
            case Kind::IStar: return "I" + std::to_string(param) + "*";
            case Kind::II: return "II";
            case Kind::III: return "III";
            case Kind::IV: return "IV";
            case Kind::IIStar: return "II*";
            case Kind::IIIStar: return "III*";
            case Kind::IVStar: return "IV*";
            case Kind::Smooth: return "smooth";
        }
        return "?";
    }
    bool reduced() const {
        return kind == Kind::I || kind == Kind::II || kind == Kind::III || kind == Kind::IV || kind == Kind::Smooth;
    }
    friend bool operator==(const FiberType&, const FiberType&) = default;
};

inline FiberType parse_fiber_type(const std::string& s) {
    using K = FiberType::Kind;
    if (s == "II") return {K::II, 0};
    if (s == "III") return {K::III, 0};
    if (s == "IV") return {K::IV, 0};
    if (s == "II*") return {K::IIStar, 0};
    if (s == "III*") return {K::IIIStar, 0};
    if (s == "IV*") return {K::IVStar, 0};
    if (s == "smooth" || s == "I0") return {K::Smooth, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        const bool star = s.back() == '*';
        const std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            const int p = std::stoi(digits);
            if (star) return {K::IStar, p};
            if (p >= 1) return {K::I, p};
        }
    }
    throw Error("unknown fibre type: " + s);
}

namespace detail {

inline CurveNode rnode(int i, i64 mult, i64 self = -2) { return {"R" + std::to_string(i), self, 0, mult, Marker::None}; }
inline CurveEdge redge(int a, int b, i64 count = 1, i64 tangency = 1) {
    return {"R" + std::to_string(a), "R" + std::to_string(b), count, tangency};
}

// tree fibre from a multiplicity list and an edge list over 1-based indices
inline CurveConfiguration tree_fibre(const std::vector<i64>& mults, const std::vector<std::pair<int, int>>& links) {
    std::vector<CurveNode> nodes;
    for (size_t i = 0; i < mults.size(); ++i) nodes.push_back(rnode(static_cast<int>(i) + 1, mults[i]));
    std::vector<CurveEdge> edges;
    for (auto [a, b] : links) edges.push_back(redge(a, b));
    return CurveConfiguration(nodes, edges);
}

}  // namespace detail

inline CurveConfiguration kodaira_configuration(const FiberType& t) {
    using K = FiberType::Kind;
    using detail::redge;
    using detail::rnode;
    switch (t.kind) {
        case K::Smooth: return CurveConfiguration({{"R1", 0, 1, 1, Marker::None}}, {});
        case K::II: return CurveConfiguration({{"R1", 0, 1, 1, Marker::Cusp}}, {});
        case K::III: return CurveConfiguration({rnode(1, 1), rnode(2, 1)}, {redge(1, 2, 1, 2)});
        case K::IV:
            return CurveConfiguration({rnode(1, 1), rnode(2, 1), rnode(3, 1)},
                                      {redge(1, 2), redge(2, 3), redge(1, 3)}, {Triple{"R1", "R2", "R3"}});
        case K::I: {
            if (t.param < 1) throw Error("I_n needs n >= 1");
            if (t.param == 1) return CurveConfiguration({{"R1", 0, 1, 1, Marker::Node}}, {});
            std::vector<CurveNode> nodes;
            for (int i = 1; i <= t.param; ++i) nodes.push_back(rnode(i, 1));
            if (t.param == 2) return CurveConfiguration(nodes, {redge(1, 2, 2)});
            std::vector<CurveEdge> edges;
            for (int i = 1; i <= t.param; ++i) edges.push_back(redge(i, i % t.param + 1));
            return CurveConfiguration(nodes, edges);
        }
        case K::IStar: {
            if (t.param < 0) throw Error("I*_b needs b >= 0");
            const int last = t.param + 5;
            std::vector<i64> mults{1, 1, 1, 1};
            for (int i = 5; i <= last; ++i) mults.push_back(2);
            std::vector<std::pair<int, int>> links{{1, 5}, {2, 5}, {3, last}, {4, last}};
            for (int i = 5; i < last; ++i) links.push_back({i, i + 1});
            return detail::tree_fibre(mults, links);
        }
        case K::IVStar:
            // centre R1, arms R2-R3, R4-R5, R6-R7
            return detail::tree_fibre({3, 2, 1, 2, 1, 2, 1}, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
        case K::IIIStar:
            return detail::tree_fibre({1, 2, 3, 4, 3, 2, 1, 2},
                                      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 8}});
        case K::IIStar:
            return detail::tree_fibre({2, 4, 6, 5, 4, 3, 2, 1, 3},
                                      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {3, 9}});
    }
    throw Error("unknown fibre kind");
}

// All catalog types used by the property checks.
inline std::vector<FiberType> kodaira_catalog(int max_n = 12, int max_b = 8) {
    using K = FiberType::Kind;
    std::vector<FiberType> out;
    for (int n = 1; n <= max_n; ++n) out.push_back({K::I, n});
    for (int b = 0; b <= max_b; ++b) out.push_back({K::IStar, b});
    for (K k : {K::II, K::III, K::IV, K::IIStar, K::IIIStar, K::IVStar}) out.push_back({k, 0});
    return out;
}

namespace detail {

inline std::map<std::pair<int, int>, std::vector<std::pair<i64, i64>>> edge_profile(const CurveConfiguration& c) {
    std::map<std::pair<int, int>, std::vector<std::pair<i64, i64>>> m;
    for (const auto& e : c.edges()) {
        int a = c.index(e.a), b = c.index(e.b);
        if (a > b) std::swap(a, b);
        m[{a, b}].push_back({e.count, e.tangency});
    }
    for (auto& [k, v] : m) std::sort(v.begin(), v.end());
    return m;
}

inline std::set<std::array<int, 3>> triple_profile(const CurveConfiguration& c, const std::vector<int>& map) {
    std::set<std::array<int, 3>> s;
    for (const auto& t : c.triples()) {
        std::array<int, 3> x{map[c.index(t[0])], map[c.index(t[1])], map[c.index(t[2])]};
        std::sort(x.begin(), x.end());
        s.insert(x);
    }
    return s;
}

}  // namespace detail

// Weighted dual-graph isomorphism respecting self-intersection, genus,
// multiplicity, marker, edge data and triple points.
inline bool isomorphic(const CurveConfiguration& a, const CurveConfiguration& b) {
    const int n = a.size();
    if (n != b.size() || a.triples().size() != b.triples().size()) return false;
    auto pa = detail::edge_profile(a), pb = detail::edge_profile(b);
    if (pa.size() != pb.size()) return false;
    auto sig = [](const CurveConfiguration& c, int i) {
        const auto& x = c.node(i);
        int deg = 0;
        for (int j = 0; j < c.size(); ++j)
            if (j != i && c.gram()[i][j] > 0) ++deg;
        return std::make_tuple(x.self_int, x.genus, x.mult, static_cast<int>(x.marker), deg);
    };
    auto edges_of = [](const auto& prof, int u, int v) -> const std::vector<std::pair<i64, i64>>* {
        auto it = prof.find({std::min(u, v), std::max(u, v)});
        return it == prof.end() ? nullptr : &it->second;
    };
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == n) {
            std::vector<int> ident(n);
            for (int k = 0; k < n; ++k) ident[k] = k;
            return detail::triple_profile(a, map) == detail::triple_profile(b, ident);
        }
        for (int j = 0; j < n; ++j) {
            if (used[j] || sig(a, i) != sig(b, j)) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) {
                const auto* ea = edges_of(pa, k, i);
                const auto* eb = edges_of(pb, map[k], j);
                if ((ea == nullptr) != (eb == nullptr)) ok = false;
                else if (ea && *ea != *eb) ok = false;
            }
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (go(i + 1)) return true;
            used[j] = 0;
        }
        map[i] = -1;
        return false;
    };
    return go(0);
}

inline std::optional<FiberType> recognize_fiber(const CurveConfiguration& cfg) {
    using K = FiberType::Kind;
    const int n = cfg.size();
    if (n == 0) return std::nullopt;
    std::vector<FiberType> candidates;
    if (n == 1) candidates = {{K::Smooth, 0}, {K::I, 1}, {K::II, 0}};
    else candidates.push_back({K::I, n});
    if (n == 2) candidates.push_back({K::III, 0});
    if (n == 3) candidates.push_back({K::IV, 0});
    if (n >= 5) candidates.push_back({K::IStar, n - 5});
    if (n == 7) candidates.push_back({K::IVStar, 0});
    if (n == 8) candidates.push_back({K::IIIStar, 0});
    if (n == 9) candidates.push_back({K::IIStar, 0});
    for (const auto& t : candidates) {
        if (!isomorphic(cfg, kodaira_configuration(t))) continue;
        const auto d = cfg.as_divisor();
        const auto v = cfg.vec(d);
        const auto pa = divisor_pa(cfg, d);
        if (cfg.dot(v, v) != 0 || !pa.determined || pa.value != 1)
            throw std::logic_error("recognised fibre " + t.name() + " fails F^2 = 0 or p_a = 1");
        return t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- from lattice classes

struct NamedClass {
    std::string label;
    DivisorClass cls;
    i64 mult = 1;
};

// Dual graph of distinct irreducible curves given by their classes.
inline CurveConfiguration configuration_from_classes(const std::vector<NamedClass>& curves) {
    std::vector<CurveNode> nodes;
    std::vector<CurveEdge> edges;
    for (size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        const i64 g = arithmetic_genus(c.cls);
        if (g < 0) throw Error("class of " + c.label + " has negative genus");
        nodes.push_back({c.label, self_intersection(c.cls), g, c.mult, Marker::None});
        for (size_t j = 0; j < i; ++j) {
            const i64 x = pair(curves[j].cls, c.cls);
            if (x < 0) throw Error(curves[j].label + " and " + c.label + " meet negatively");
            if (x > 0) edges.push_back({curves[j].label, c.label, x, 1});
        }
    }
    return CurveConfiguration(nodes, edges);
}

}  // namespace coble
