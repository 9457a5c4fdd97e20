#pragma once

#include <array>
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pencilstab/monomial.hpp"
#include "pencilstab/rational.hpp"

namespace pencilstab {

/// Homogeneous form in x,y,z with exact rational coefficients, stored densely
/// over the (d+1)(d+2)/2 monomials of its degree (28 slots for sextics).
class HomForm {
public:
    HomForm() : degree_(0), coeffs_(1) {}
    explicit HomForm(int degree) : degree_(degree), coeffs_(monomial_count(degree)) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    int degree() const { return degree_; }

    const Rational& at(MonomialIndex m) const { return coeffs_[slot(m)]; }
    const Rational& at(int i, int j) const { return at(MonomialIndex{i, j}); }

    void set(MonomialIndex m, Rational v) { coeffs_[slot(m)] = std::move(v); }
    void set(int i, int j, Rational v) { set(MonomialIndex{i, j}, std::move(v)); }
    void add_to(MonomialIndex m, const Rational& v) { coeffs_[slot(m)] += v; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return c == 0; });
    }

    int term_count() const {
        return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                              [](const Rational& c) { return c != 0; }));
    }

    std::vector<MonomialIndex> support() const {
        std::vector<MonomialIndex> out;
        for (int s = 0; s < static_cast<int>(coeffs_.size()); ++s)
            if (coeffs_[s] != 0) out.push_back(slot_monomial(s, degree_));
        return out;
    }

    friend bool operator==(const HomForm& a, const HomForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// Exact evaluation at a point.
    Rational eval(const Rational& x, const Rational& y, const Rational& z) const {
        Rational total(0);
        for (int s = 0; s < static_cast<int>(coeffs_.size()); ++s) {
            if (coeffs_[s] == 0) continue;
            MonomialIndex m = slot_monomial(s, degree_);
            total += coeffs_[s] * rational_pow(x, m.i) * rational_pow(y, m.j) *
                     rational_pow(z, degree_ - m.i - m.j);
        }
        return total;
    }

private:
    int slot(MonomialIndex m) const {
        if (!valid_index(m, degree_))
            throw std::out_of_range("monomial index outside degree-" +
                                    std::to_string(degree_) + " range");
        return monomial_slot(m, degree_);
    }

    int degree_;
    std::vector<Rational> coeffs_;
};

inline HomForm monomial_form(int degree, MonomialIndex m, Rational c = Rational(1)) {
    HomForm f(degree);
    f.set(m, std::move(c));
    return f;
}

inline HomForm add(const HomForm& a, const HomForm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("cannot add forms of different degree");
    HomForm out(a.degree());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j + i <= a.degree(); ++j)
            out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

inline HomForm scale(const HomForm& a, const Rational& s) {
    HomForm out(a.degree());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j + i <= a.degree(); ++j) out.set(i, j, a.at(i, j) * s);
    return out;
}

/// Exact convolution product; result degree is the sum of the degrees.
inline HomForm multiply(const HomForm& a, const HomForm& b) {
    HomForm out(a.degree() + b.degree());
    for (auto ma : a.support())
        for (auto mb : b.support())
            out.add_to({ma.i + mb.i, ma.j + mb.j}, a.at(ma) * b.at(mb));
    return out;
}

/// Invertible rational 3x3 coordinate change.
struct LinearChange {
    std::array<std::array<Rational, 3>, 3> m;

    static LinearChange identity() {
        LinearChange c{};
        for (int i = 0; i < 3; ++i) c.m[i][i] = 1;
        return c;
    }

    /// Permutation sending variable slot k to variable slot perm[k].
    static LinearChange permutation(const std::array<int, 3>& perm) {
        LinearChange c{};
        for (int k = 0; k < 3; ++k) c.m[perm[k]][k] = 1;
        return c;
    }

    Rational det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    friend bool operator==(const LinearChange&, const LinearChange&) = default;
};

inline LinearChange compose(const LinearChange& a, const LinearChange& b) {
    LinearChange c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c.m[i][j] += a.m[i][k] * b.m[k][j];
    return c;
}

/// f composed with the coordinate change: variable k is replaced by the linear
/// form given by column k of the matrix, i.e. the row vector (x,y,z) maps to
/// (x,y,z)·M. With this convention substitute(substitute(f,M),N) equals
/// substitute(f, compose(N,M)).
inline HomForm substitute(const HomForm& f, const LinearChange& chg) {
    if (chg.det() == 0) throw std::invalid_argument("non-invertible coordinate change");
    int d = f.degree();
    // linear forms that replace x, y, z
    std::array<HomForm, 3> var;
    for (int k = 0; k < 3; ++k) {
        HomForm lf(1);
        lf.set(1, 0, chg.m[0][k]);
        lf.set(0, 1, chg.m[1][k]);
        lf.set(0, 0, chg.m[2][k]);  // z has index (0,0) in degree 1
        var[k] = lf;
    }
    // cached powers up to degree d
    std::array<std::vector<HomForm>, 3> pows;
    for (int k = 0; k < 3; ++k) {
        pows[k].resize(d + 1);
        pows[k][0] = HomForm(0);
        pows[k][0].set(0, 0, Rational(1));
        for (int e = 1; e <= d; ++e) pows[k][e] = multiply(pows[k][e - 1], var[k]);
    }
    HomForm out(d);
    for (auto m : f.support()) {
        int zk = d - m.i - m.j;
        HomForm term = multiply(multiply(pows[0][m.i], pows[1][m.j]), pows[2][zk]);
        for (auto t : term.support()) out.add_to(t, f.at(m) * term.at(t));
    }
    return out;
}

// --- exact gcd machinery for common_factor_degree ---------------------------

namespace detail {

/// Dense univariate polynomial over the rationals (coeff of y^k at index k).
using UPoly = std::vector<Rational>;

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    utrim(c);
    return c;
}

inline UPoly uscale(UPoly a, const Rational& s) {
    for (auto& c : a) c *= s;
    utrim(a);
    return a;
}

/// Remainder of a by b over the rational field.
inline UPoly urem(UPoly a, const UPoly& b) {
    utrim(a);
    while (udeg(a) >= udeg(b) && !a.empty()) {
        Rational q = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
        utrim(a);
    }
    return a;
}

/// Exact quotient (throws if division is not exact).
inline UPoly udiv_exact(UPoly a, const UPoly& b) {
    utrim(a);
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (udeg(a) >= udeg(b) && !a.empty()) {
        Rational c = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        q[shift] = c;
        for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
        utrim(a);
    }
    if (!a.empty()) throw std::domain_error("inexact polynomial division");
    utrim(q);
    return q;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = uscale(a, Rational(1) / a.back());  // monic
    return a;
}

/// Polynomial in x with UPoly (rational y-polynomial) coefficients.
using XYPoly = std::vector<UPoly>;

inline void xytrim(XYPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

inline int xdeg(const XYPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly content(const XYPoly& p) {
    UPoly c;
    for (const auto& coef : p)
        if (!coef.empty()) c = c.empty() ? coef : ugcd(c, coef);
    if (!c.empty()) c = uscale(c, Rational(1) / c.back());
    return c;
}

inline XYPoly primitive_part(XYPoly p) {
    UPoly c = content(p);
    if (c.empty()) return {};
    for (auto& coef : p)
        if (!coef.empty()) coef = udiv_exact(coef, c);
    return p;
}

inline XYPoly xyscale(XYPoly p, const UPoly& s) {
    for (auto& coef : p) coef = umul(coef, s);
    xytrim(p);
    return p;
}

/// Pseudo-remainder of a by b in (Q[y])[x].
inline XYPoly pseudo_rem(XYPoly a, const XYPoly& b) {
    xytrim(a);
    int db = xdeg(b);
    const UPoly& lb = b.back();
    while (xdeg(a) >= db && !a.empty()) {
        UPoly la = a.back();
        int shift = xdeg(a) - db;
        // a := lb*a - la*x^shift*b
        a = xyscale(std::move(a), lb);
        for (int k = 0; k <= db; ++k) {
            UPoly t = umul(la, b[k]);
            UPoly& dst = a[k + shift];
            size_t n = std::max(dst.size(), t.size());
            dst.resize(n);
            for (size_t idx = 0; idx < t.size(); ++idx) dst[idx] -= t[idx];
            utrim(dst);
        }
        xytrim(a);
    }
    return a;
}

/// Primitive PRS gcd in Q[x,y].
inline XYPoly xygcd(XYPoly a, XYPoly b) {
    xytrim(a);
    xytrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly cont_gcd = ugcd(content(a), content(b));
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (xdeg(a) < xdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        XYPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    a = primitive_part(std::move(a));
    // multiply back the y-content gcd
    XYPoly out = xyscale(std::move(a), cont_gcd);
    return out;
}

inline int total_degree(const XYPoly& p) {
    int td = -1;
    for (int xi = 0; xi < static_cast<int>(p.size()); ++xi)
        for (int yi = 0; yi < static_cast<int>(p[xi].size()); ++yi)
            if (p[xi][yi] != 0) td = std::max(td, xi + yi);
    return td;
}

/// Dehomogenize at z=1 after pulling out the z-power content; returns the
/// bivariate polynomial and the extracted z-exponent.
inline std::pair<XYPoly, int> dehomogenize_z(const HomForm& f) {
    int zmin = f.degree();
    for (auto m : f.support()) zmin = std::min(zmin, f.degree() - m.i - m.j);
    XYPoly p;
    for (auto m : f.support()) {
        if (static_cast<int>(p.size()) <= m.i) p.resize(m.i + 1);
        UPoly& row = p[m.i];
        if (static_cast<int>(row.size()) <= m.j) row.resize(m.j + 1);
        row[m.j] = f.at(m);
    }
    xytrim(p);
    return {std::move(p), zmin};
}

}  // namespace detail

/// Degree of gcd(f,g), computed exactly; 0 means the pencil (f,g) is proper.
inline int common_factor_degree(const HomForm& f, const HomForm& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("common_factor_degree requires nonzero forms");
    auto [pf, zf] = detail::dehomogenize_z(f);
    auto [pg, zg] = detail::dehomogenize_z(g);
    detail::XYPoly gg = detail::xygcd(std::move(pf), std::move(pg));
    int td = detail::total_degree(gg);
    return std::min(zf, zg) + std::max(td, 0);
}

}  // namespace pencilstab
