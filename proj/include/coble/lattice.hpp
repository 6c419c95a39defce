#pragma once

#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "checked.hpp"

namespace coble {

struct BaseKind {
    enum class Kind { P2, Hirzebruch };
    Kind kind = Kind::P2;
    i64 b = 0;

    static BaseKind p2() { return {Kind::P2, 0}; }
    static BaseKind hirzebruch(i64 b) {
        if (b < 0) throw Error("Hirzebruch parameter must be >= 0");
        return {Kind::Hirzebruch, b};
    }
    bool is_p2() const { return kind == Kind::P2; }
    std::string name() const { return is_p2() ? "P2" : "F" + std::to_string(b); }
    // number of basis vectors before the exceptional classes
    int base_rank() const { return is_p2() ? 1 : 2; }

    friend bool operator==(const BaseKind&, const BaseKind&) = default;
};

using Matrix = std::vector<std::vector<i64>>;

class IntersectionLattice {
public:
    IntersectionLattice(BaseKind base, int n_blowups) : base_(base), n_(n_blowups) {
        if (n_blowups < 0) throw Error("number of blow-ups must be >= 0");
        const int r = rank();
        gram_.assign(r, std::vector<i64>(r, 0));
        canonical_.assign(r, 0);
        if (base.is_p2()) {
            labels_.push_back("e0");
            gram_[0][0] = 1;
            canonical_[0] = -3;
        } else {
            labels_.push_back("f");
            labels_.push_back("s0");
            gram_[0][1] = gram_[1][0] = 1;
            gram_[1][1] = neg(base.b);
            canonical_[0] = neg(add(base.b, 2));
            canonical_[1] = -2;
        }
        const int off = base.base_rank();
        for (int i = 0; i < n_; ++i) {
            labels_.push_back("e" + std::to_string(i + 1));
            gram_[off + i][off + i] = -1;
            canonical_[off + i] = 1;
        }
    }

    const BaseKind& base() const { return base_; }
    int n_blowups() const { return n_; }
    int rank() const { return base_.base_rank() + n_; }
    const Matrix& gram() const { return gram_; }
    const std::vector<i64>& canonical() const { return canonical_; }
    const std::vector<std::string>& labels() const { return labels_; }
    // index of exceptional class e_i (1-based i) in the basis
    int exceptional_index(int i) const {
        if (i < 1 || i > n_) throw Error("exceptional index out of range: " + std::to_string(i));
        return base_.base_rank() + i - 1;
    }

    i64 form(const std::vector<i64>& a, const std::vector<i64>& b) const {
        if (static_cast<int>(a.size()) != rank() || static_cast<int>(b.size()) != rank())
            throw Error("vector length does not match lattice rank");
        i64 s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank(); ++j) {
                if (gram_[i][j] == 0 || b[j] == 0) continue;
                s = add(s, mul(a[i], mul(gram_[i][j], b[j])));
            }
        }
        return s;
    }

    i64 k_squared() const { return form(canonical_, canonical_); }

    friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
        return a.base_ == b.base_ && a.n_ == b.n_;
    }

private:
    BaseKind base_;
    int n_;
    Matrix gram_;
    std::vector<i64> canonical_;
    std::vector<std::string> labels_;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

inline LatticePtr make_lattice(BaseKind base, int n_blowups) {
    return std::make_shared<const IntersectionLattice>(base, n_blowups);
}

class DivisorClass {
public:
    DivisorClass(LatticePtr lat, std::vector<i64> coeffs) : lat_(std::move(lat)), c_(std::move(coeffs)) {
        if (!lat_) throw Error("null lattice");
        if (static_cast<int>(c_.size()) != lat_->rank())
            throw Error("coefficient vector has length " + std::to_string(c_.size()) + ", lattice rank is " +
                        std::to_string(lat_->rank()));
    }

    static DivisorClass zero(LatticePtr lat) {
        const int r = lat->rank();
        return DivisorClass(std::move(lat), std::vector<i64>(r, 0));
    }
    static DivisorClass basis(LatticePtr lat, int index) {
        auto z = zero(lat);
        if (index < 0 || index >= lat->rank()) throw Error("basis index out of range");
        z.c_[index] = 1;
        return z;
    }
    static DivisorClass canonical(LatticePtr lat) {
        auto k = lat->canonical();
        return DivisorClass(std::move(lat), std::move(k));
    }
    // e_i, 1-based
    static DivisorClass exceptional(LatticePtr lat, int i) {
        const int idx = lat->exceptional_index(i);
        return basis(std::move(lat), idx);
    }

    const LatticePtr& lattice() const { return lat_; }
    const std::vector<i64>& coeffs() const { return c_; }
    i64 operator[](int i) const { return c_.at(i); }
    int rank() const { return static_cast<int>(c_.size()); }
    bool is_zero() const {
        for (i64 v : c_)
            if (v != 0) return false;
        return true;
    }

    DivisorClass& operator+=(const DivisorClass& o) {
        require_same(o);
        for (int i = 0; i < rank(); ++i) c_[i] = add(c_[i], o.c_[i]);
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o) {
        require_same(o);
        for (int i = 0; i < rank(); ++i) c_[i] = sub(c_[i], o.c_[i]);
        return *this;
    }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(i64 k, DivisorClass a) {
        for (auto& v : a.c_) v = mul(k, v);
        return a;
    }
    friend DivisorClass operator-(DivisorClass a) { return -1 * std::move(a); }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return *a.lat_ == *b.lat_ && a.c_ == b.c_;
    }

    void require_same(const DivisorClass& o) const {
        if (!(*lat_ == *o.lat_)) throw Error("lattice mismatch");
    }

private:
    LatticePtr lat_;
    std::vector<i64> c_;
};

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& c) {
    os << "[";
    for (int i = 0; i < c.rank(); ++i) os << (i ? "," : "") << c[i];
    return os << "]";
}

// Human-readable form such as 6e0 - 2e1 - 2e2.
inline std::string to_string(const DivisorClass& c) {
    std::string s;
    const auto& labels = c.lattice()->labels();
    for (int i = 0; i < c.rank(); ++i) {
        const i64 v = c[i];
        if (v == 0) continue;
        if (s.empty())
            s += v < 0 ? "-" : "";
        else
            s += v < 0 ? " - " : " + ";
        const i64 a = v < 0 ? -v : v;
        if (a != 1) s += std::to_string(a);
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

inline i64 pair(const DivisorClass& a, const DivisorClass& b) {
    a.require_same(b);
    return a.lattice()->form(a.coeffs(), b.coeffs());
}

inline i64 self_intersection(const DivisorClass& a) { return pair(a, a); }

inline i64 k_dot(const DivisorClass& a) { return pair(DivisorClass::canonical(a.lattice()), a); }

// p_a with the h^0(O_C) term fixed to 1.
inline i64 arithmetic_genus(const DivisorClass& c) {
    const i64 s = add(self_intersection(c), k_dot(c));
    if (s % 2 != 0) throw Error("C^2 + K.C is odd (" + std::to_string(s) + "): not an algebraic class");
    return s / 2 + 1;
}

inline i64 riemann_roch_chi(const DivisorClass& d) {
    const i64 s = sub(self_intersection(d), k_dot(d));
    if (s % 2 != 0) throw Error("D^2 - D.K is odd (" + std::to_string(s) + ")");
    return 1 + s / 2;
}

inline DivisorClass reflect(const DivisorClass& x, const DivisorClass& root) {
    const i64 rr = self_intersection(root);
    if (rr != -2) throw Error("reflection root must have square -2, got " + std::to_string(rr));
    return x + pair(x, root) * root;
}

enum class SpecialShape { SmoothRational, Genus1Irreducible };

inline i64 special_h0(const DivisorClass& l, SpecialShape shape) {
    const i64 l2 = self_intersection(l);
    if (shape == SpecialShape::SmoothRational) {
        if (l2 < 0) throw Error("smooth rational case needs L^2 >= 0");
        return add(2, l2);
    }
    if (l2 < 1) throw Error("genus-1 case needs L^2 >= 1");
    if (arithmetic_genus(l) != 1) throw Error("genus-1 case needs p_a(L) = 1");
    return add(1, l2);
}

// Z-basis of the orthogonal complement of K (the lattice M_S).
// Column reduction of the row w = gram*K by unimodular operations.
inline std::vector<DivisorClass> canonical_orthogonal_basis(const LatticePtr& lat) {
    const int r = lat->rank();
    std::vector<i64> w(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) w[i] = add(w[i], mul(lat->gram()[i][j], lat->canonical()[j]));
    Matrix u(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i) u[i][i] = 1;
    auto colop = [&](int dst, int src, i64 q) {  // col dst -= q * col src
        w[dst] = sub(w[dst], mul(q, w[src]));
        for (int i = 0; i < r; ++i) u[i][dst] = sub(u[i][dst], mul(q, u[i][src]));
    };
    // gather the gcd into column 0
    for (int j = 1; j < r; ++j) {
        while (w[j] != 0) {
            colop(0, j, w[0] / w[j]);
            std::swap(w[0], w[j]);
            for (int i = 0; i < r; ++i) std::swap(u[i][0], u[i][j]);
        }
    }
    std::vector<DivisorClass> out;
    const int first = w[0] == 0 ? 0 : 1;
    for (int j = first; j < r; ++j) {
        std::vector<i64> col(r);
        for (int i = 0; i < r; ++i) col[i] = u[i][j];
        out.emplace_back(lat, col);
    }
    return out;
}

inline bool in_canonical_orthogonal(const DivisorClass& c) { return k_dot(c) == 0; }

}  // namespace coble
