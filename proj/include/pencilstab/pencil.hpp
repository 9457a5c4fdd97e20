#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pencilstab/homform.hpp"

namespace pencilstab {

/// Ordered pair of degree-6 monomial indices, (i,j) before (k,l) in the
/// canonical order (i<k) or (i=k and j<l). There are exactly 378 of these.
struct QuadrupleIndex {
    int i = 0, j = 0, k = 0, l = 0;
    friend auto operator<=>(const QuadrupleIndex&, const QuadrupleIndex&) = default;

    MonomialIndex first() const { return {i, j}; }
    MonomialIndex second() const { return {k, l}; }
};

constexpr int kQuadrupleCount = 378;

inline const std::vector<QuadrupleIndex>& quadruple_table() {
    static const std::vector<QuadrupleIndex> table = [] {
        std::vector<QuadrupleIndex> t;
        const auto& ms = sextic_monomials();
        for (size_t a = 0; a < ms.size(); ++a)
            for (size_t b = a + 1; b < ms.size(); ++b)
                t.push_back({ms[a].i, ms[a].j, ms[b].i, ms[b].j});
        return t;
    }();
    return table;
}

/// Rank of an ordered quadruple in the canonical 378-entry enumeration.
inline int quadruple_rank(const QuadrupleIndex& q) {
    int a = monomial_slot(q.first(), 6);
    int b = monomial_slot(q.second(), 6);
    if (a >= b) throw std::invalid_argument("quadruple not in canonical order");
    return a * kSexticMonomials - a * (a + 1) / 2 + (b - a - 1);
}

/// A pencil of plane sextics: two linearly independent degree-6 forms.
class Pencil {
public:
    Pencil(HomForm f, HomForm g) : f_(std::move(f)), g_(std::move(g)) {
        if (f_.degree() != 6 || g_.degree() != 6)
            throw std::invalid_argument("pencil generators must have degree 6");
        if (f_.is_zero() || g_.is_zero())
            throw std::invalid_argument("pencil generator is zero");
        if (proportional())
            throw std::invalid_argument("pencil generators are proportional");
    }

    const HomForm& f() const { return f_; }
    const HomForm& g() const { return g_; }

private:
    bool proportional() const {
        std::optional<Rational> ratio;
        for (auto m : sextic_monomials()) {
            const Rational& a = f_.at(m);
            const Rational& b = g_.at(m);
            if (a == 0 && b == 0) continue;
            if (a == 0 || b == 0) return false;
            Rational r = b / a;
            if (!ratio) ratio = r;
            else if (*ratio != r) return false;
        }
        return true;
    }

    HomForm f_, g_;
};

/// The 378 Pluecker coordinates m_ijkl = f_ij*g_kl - f_kl*g_ij of a pencil.
class PlueckerVector {
public:
    PlueckerVector() : entries_(kQuadrupleCount) {}

    const Rational& at(const QuadrupleIndex& q) const { return entries_[quadruple_rank(q)]; }
    Rational& at(const QuadrupleIndex& q) { return entries_[quadruple_rank(q)]; }

    /// Antisymmetric extension: m_klij = -m_ijkl and m_ijij = 0, derived on
    /// the fly rather than stored.
    Rational extended(MonomialIndex p, MonomialIndex q) const {
        if (p == q) return Rational(0);
        if (p < q) return at({p.i, p.j, q.i, q.j});
        return -at({q.i, q.j, p.i, p.j});
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;

private:
    std::vector<Rational> entries_;
};

inline PlueckerVector pluecker(const Pencil& p) {
    PlueckerVector v;
    for (const auto& q : quadruple_table())
        v.at(q) = p.f().at(q.first()) * p.g().at(q.second()) -
                  p.f().at(q.second()) * p.g().at(q.first());
    return v;
}

/// New generator pair (a*f+b*g, c*f+d*g); scales every minor by ad-bc.
inline Pencil change_pencil_basis(const Pencil& p, const Rational& a, const Rational& b,
                                  const Rational& c, const Rational& d) {
    if (a * d - b * c == 0)
        throw std::invalid_argument("pencil basis change has zero determinant");
    return Pencil(add(scale(p.f(), a), scale(p.g(), b)),
                  add(scale(p.f(), c), scale(p.g(), d)));
}

/// Normalized one-parameter subgroup data: either a single rational
/// a in [-1/2,1] (weights (1,a,-1-a)) or an integer triple with
/// a_x >= a_y >= a_z, a_x > 0, a_x + a_y + a_z = 0.
class WeightData {
public:
    struct Integral {
        long ax, ay, az;
    };

    static WeightData normalized(Rational a) {
        if (a < Rational(-1, 2) || a > 1)
            throw std::invalid_argument("normalized weight outside [-1/2,1]");
        return WeightData(std::move(a));
    }

    static WeightData integral(long ax, long ay, long az) {
        if (!(ax >= ay && ay >= az && ax > 0 && ax + ay + az == 0))
            throw std::invalid_argument("integral weights must satisfy ax>=ay>=az, ax>0, sum 0");
        return WeightData(Integral{ax, ay, az});
    }

    bool is_integral() const { return std::holds_alternative<Integral>(v_); }
    const Integral& as_integral() const { return std::get<Integral>(v_); }
    const Rational& as_normalized() const { return std::get<Rational>(v_); }

    /// Weight of a single degree-6 monomial under this subgroup.
    Rational monomial_weight(MonomialIndex m) const {
        int zk = 6 - m.i - m.j;
        if (is_integral()) {
            const auto& w = as_integral();
            return Rational(w.ax * m.i + w.ay * m.j + w.az * zk);
        }
        const Rational& a = as_normalized();
        return Rational(m.i) + a * m.j + (Rational(-1) - a) * zk;
    }

private:
    explicit WeightData(Rational a) : v_(std::move(a)) {}
    explicit WeightData(Integral w) : v_(w) {}
    std::variant<Rational, Integral> v_;
};

/// e_ijkl: integral form a_x(2i+2k+j+l-12) + a_y(2j+2l+i+k-12); normalized
/// form (2i+2k+j+l-12) + a(2j+2l+i+k-12). They agree up to the factor a_x.
inline Rational weight_exponent(const QuadrupleIndex& q, const WeightData& w) {
    long u = 2 * q.i + 2 * q.k + q.j + q.l - 12;
    long v = 2 * q.j + 2 * q.l + q.i + q.k - 12;
    if (w.is_integral()) {
        const auto& t = w.as_integral();
        return Rational(t.ax * u + t.ay * v);
    }
    return Rational(u) + w.as_normalized() * Rational(v);
}

/// Coefficient-wise torus action f_ij -> t^(w_ij) f_ij; the minors pick up
/// t^(e_ijkl).
inline Pencil diagonal_action(const Pencil& p, const WeightData& w, const Rational& t) {
    if (!w.is_integral())
        throw std::invalid_argument("diagonal_action requires integral weights");
    if (t == 0) throw std::invalid_argument("diagonal_action requires t != 0");
    const auto& iw = w.as_integral();
    auto act = [&](const HomForm& f) {
        HomForm out(6);
        for (auto m : f.support()) {
            long e = iw.ax * m.i + iw.ay * m.j + iw.az * (6 - m.i - m.j);
            out.set(m, f.at(m) * rational_pow(t, e));
        }
        return out;
    };
    return Pencil(act(p.f()), act(p.g()));
}

/// Hilbert-Mumford weight at a fixed frame: min of e_ijkl(a) over the
/// quadruples with nonzero minor. Iterates all 378 quadruples because minors
/// within one (r,s) class can vanish individually.
inline Rational compute_mu(const Pencil& p, const Rational& a) {
    PlueckerVector v = pluecker(p);
    WeightData w = WeightData::normalized(a);
    std::optional<Rational> best;
    for (const auto& q : quadruple_table()) {
        if (v.at(q) == 0) continue;
        Rational e = weight_exponent(q, w);
        if (!best || e < *best) best = std::move(e);
    }
    if (!best) throw std::logic_error("pencil with zero Pluecker vector");
    return *best;
}

/// Projective pencil equality: same 2-dimensional subspace, tested via
/// proportionality of Pluecker vectors.
inline bool same_pencil(const Pencil& a, const Pencil& b) {
    PlueckerVector va = pluecker(a), vb = pluecker(b);
    std::optional<Rational> ratio;
    for (const auto& q : quadruple_table()) {
        const Rational& x = va.at(q);
        const Rational& y = vb.at(q);
        if (x == 0 && y == 0) continue;
        if (x == 0 || y == 0) return false;
        Rational r = y / x;
        if (!ratio) ratio = r;
        else if (*ratio != r) return false;
    }
    return true;
}

inline Pencil transport(const Pencil& p, const LinearChange& frame) {
    return Pencil(substitute(p.f(), frame), substitute(p.g(), frame));
}

}  // namespace pencilstab
