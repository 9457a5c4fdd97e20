#pragma once

#include <random>

#include "pencilstab/pencilstab.hpp"

namespace testsupport {

using namespace pencilstab;

inline Rational rnd_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int n;
    do {
        n = num(rng);
    } while (nonzero && n == 0);
    return Rational(n, den(rng));
}

/// Random form with roughly `terms` nonzero coefficients (at least one).
inline HomForm rnd_form(std::mt19937_64& rng, int degree, int terms) {
    HomForm f(degree);
    std::uniform_int_distribution<int> ipick(0, degree);
    for (int t = 0; t < terms; ++t) {
        int i = ipick(rng);
        std::uniform_int_distribution<int> jpick(0, degree - i);
        f.set(i, jpick(rng), rnd_rational(rng, true));
    }
    if (f.is_zero()) f.set(0, 0, Rational(1));
    return f;
}

inline Pencil rnd_pencil(std::mt19937_64& rng, int terms = 8) {
    for (;;) {
        HomForm f = rnd_form(rng, 6, terms);
        HomForm g = rnd_form(rng, 6, terms);
        try {
            return Pencil(f, g);
        } catch (const std::invalid_argument&) {
        }
    }
}

inline LinearChange rnd_invertible(std::mt19937_64& rng) {
    for (;;) {
        LinearChange c{};
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) c.m[r][col] = rnd_rational(rng);
        if (c.det() != 0) return c;
    }
}

/// Evaluate f on the affine line t -> A*t + B (used as an independent route
/// against substitute/gcd computations).
inline detail::UPoly restrict_to_line(const HomForm& f, const std::array<Rational, 3>& A,
                                      const std::array<Rational, 3>& B) {
    detail::UPoly total;
    for (auto m : f.support()) {
        detail::UPoly term{f.at(m)};
        int exps[3] = {m.i, m.j, f.degree() - m.i - m.j};
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < exps[v]; ++e) term = detail::umul(term, {B[v], A[v]});
        if (term.size() > total.size()) total.resize(term.size());
        for (size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    }
    detail::utrim(total);
    return total;
}

/// Degree of gcd via restriction to random lines whose direction avoids both
/// forms; a probabilistically exact upper bound, used as the test oracle.
inline int gcd_degree_by_lines(const HomForm& f, const HomForm& g, std::mt19937_64& rng,
                               int lines = 8) {
    int best = std::min(f.degree(), g.degree());
    for (int trial = 0; trial < lines; ++trial) {
        std::array<Rational, 3> A, B;
        do {
            for (auto& c : A) c = rnd_rational(rng);
        } while (f.eval(A[0], A[1], A[2]) == 0 || g.eval(A[0], A[1], A[2]) == 0);
        for (auto& c : B) c = rnd_rational(rng);
        detail::UPoly rf = restrict_to_line(f, A, B);
        detail::UPoly rg = restrict_to_line(g, A, B);
        if (rf.empty() || rg.empty()) continue;
        best = std::min(best, detail::udeg(detail::ugcd(rf, rg)));
    }
    return best;
}

}  // namespace testsupport
