#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "pencilstab/pencil.hpp"

namespace pencilstab {

/// Class of minors with i+k = r and j+l = s. There are 91 classes.
struct PairClass {
    int r = 0, s = 0;
    friend auto operator<=>(const PairClass&, const PairClass&) = default;
};

inline const std::vector<PairClass>& all_pair_classes() {
    static const std::vector<PairClass> table = [] {
        std::vector<PairClass> t;
        for (int r = 0; r <= 12; ++r)
            for (int s = 0; s + r <= 12; ++s) t.push_back({r, s});
        return t;
    }();
    return table;
}

/// 2r+s-12 + a(2s+r-12): the weight e_ijkl of any quadruple in the class.
inline Rational class_weight(PairClass c, const Rational& a) {
    return Rational(2 * c.r + c.s - 12) + a * Rational(2 * c.s + c.r - 12);
}

/// Either a single rational witness value (strict side) or an open interval
/// (non-strict side).
struct Witness {
    bool is_interval = false;
    Rational lo;          // the value itself when not an interval
    Rational hi;

    friend bool operator==(const Witness&, const Witness&) = default;

    std::string str() const {
        if (!is_interval) return to_string(lo);
        return "(" + to_string(lo) + "," + to_string(hi) + ")";
    }
};

/// Set of (r,s) classes whose minors must all vanish, with the side of the
/// criterion it certifies (strict < 0 for non-stability, <= 0 for
/// unstability) and where on [-1/2,1] the set is realized.
struct VanishingPattern {
    std::set<PairClass> pairs;
    bool strict = false;
    std::vector<Witness> witnesses;

    bool contains(PairClass c) const { return pairs.count(c) > 0; }
};

/// Exact solution set of class_weight(c,a) relop 0 over the 91 classes.
inline VanishingPattern pattern_at(const Rational& a, bool strict) {
    if (a < Rational(-1, 2) || a > 1)
        throw std::invalid_argument("pattern_at: a outside [-1/2,1]");
    VanishingPattern p;
    p.strict = strict;
    p.witnesses.push_back({false, a, a});
    for (PairClass c : all_pair_classes()) {
        Rational w = class_weight(c, a);
        if (strict ? w < 0 : w <= 0) p.pairs.insert(c);
    }
    return p;
}

struct CriticalSubdivision {
    std::vector<Rational> breakpoints;          // sorted roots in [-1/2,1]
    std::vector<VanishingPattern> minimal_patterns;  // case order = witness order
};

/// All roots of class_weight(c,.) in [-1/2,1], sorted and deduplicated. The
/// endpoints -1/2 and 1 appear as roots (of the r=4 resp. r+s=8 classes).
inline std::vector<Rational> critical_breakpoints() {
    std::set<Rational> roots;
    for (PairClass c : all_pair_classes()) {
        long A = 2 * c.r + c.s - 12;
        long B = 2 * c.s + c.r - 12;
        if (B == 0) continue;
        Rational root = Rational(-A) / Rational(B);
        if (root >= Rational(-1, 2) && root <= 1) roots.insert(root);
    }
    return {roots.begin(), roots.end()};
}

/// Derive the critical subdivision of [-1/2,1] and the inclusion-minimal
/// vanishing patterns. Non-strict minimal patterns live on open cells between
/// breakpoints (pattern content is constant there); strict minimal patterns
/// live at the breakpoints themselves.
inline CriticalSubdivision derive_subdivision(bool strict) {
    CriticalSubdivision out;
    out.breakpoints = critical_breakpoints();

    struct Realized {
        std::set<PairClass> pairs;
        std::vector<Witness> witnesses;
    };
    std::vector<Realized> realized;
    auto record = [&](std::set<PairClass> pairs, Witness w) {
        for (auto& r : realized)
            if (r.pairs == pairs) {
                r.witnesses.push_back(std::move(w));
                return;
            }
        realized.push_back({std::move(pairs), {std::move(w)}});
    };

    if (strict) {
        for (const Rational& b : out.breakpoints)
            record(pattern_at(b, true).pairs, Witness{false, b, b});
    } else {
        for (size_t k = 0; k + 1 < out.breakpoints.size(); ++k) {
            const Rational& lo = out.breakpoints[k];
            const Rational& hi = out.breakpoints[k + 1];
            Rational mid = (lo + hi) / 2;
            record(pattern_at(mid, false).pairs, Witness{true, lo, hi});
        }
    }

    // inclusion-minimal representatives
    for (const auto& r : realized) {
        bool minimal = true;
        for (const auto& o : realized) {
            if (&o == &r) continue;
            if (std::includes(r.pairs.begin(), r.pairs.end(), o.pairs.begin(), o.pairs.end()) &&
                o.pairs != r.pairs) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        VanishingPattern p;
        p.pairs = r.pairs;
        p.strict = strict;
        p.witnesses = r.witnesses;
        out.minimal_patterns.push_back(std::move(p));
    }
    std::sort(out.minimal_patterns.begin(), out.minimal_patterns.end(),
              [](const VanishingPattern& a, const VanishingPattern& b) {
                  return a.witnesses.front().lo < b.witnesses.front().lo;
              });
    return out;
}

struct CheckResult {
    bool satisfied = false;
    std::optional<QuadrupleIndex> violating;  // first violator in canonical order
};

/// A pencil satisfies a pattern when every minor whose class lies in the
/// pattern vanishes. Basis-invariant: a basis change scales all minors by the
/// same nonzero determinant.
inline CheckResult check_pattern(const Pencil& p, const VanishingPattern& pat) {
    PlueckerVector v = pluecker(p);
    for (const auto& q : quadruple_table()) {
        if (!pat.contains({q.i + q.k, q.j + q.l})) continue;
        if (v.at(q) != 0) return {false, q};
    }
    return {true, std::nullopt};
}

inline std::string pattern_to_string(const VanishingPattern& p) {
    std::ostringstream os;
    bool first = true;
    for (PairClass c : p.pairs) {
        if (!first) os << " ";
        os << c.r << "," << c.s;
        first = false;
    }
    return os.str();
}

}  // namespace pencilstab
