#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pencilstab {

/// Exponent pair (i,j) of a monomial x^i y^j z^(d-i-j); the z-exponent is
/// implied by the ambient degree. Canonical order is lexicographic on (i,j).
struct MonomialIndex {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
};

inline bool valid_index(MonomialIndex m, int degree) {
    return m.i >= 0 && m.j >= 0 && m.i + m.j <= degree;
}

inline int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// Rank of (i,j) in the lex-ascending enumeration of degree-d indices.
inline int monomial_slot(MonomialIndex m, int degree) {
    return m.i * (degree + 1) - m.i * (m.i - 1) / 2 + m.j;
}

inline MonomialIndex slot_monomial(int slot, int degree) {
    int i = 0;
    while (slot >= degree + 1 - i) {
        slot -= degree + 1 - i;
        ++i;
    }
    return {i, slot};
}

constexpr int kSexticMonomials = 28;

inline const std::vector<MonomialIndex>& sextic_monomials() {
    static const std::vector<MonomialIndex> table = [] {
        std::vector<MonomialIndex> t;
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j + i <= 6; ++j) t.push_back({i, j});
        return t;
    }();
    return table;
}

/// Compact name like "x3y2z" for a degree-d index ("1" for the empty product).
inline std::string monomial_name(MonomialIndex m, int degree) {
    int k = degree - m.i - m.j;
    std::string out;
    auto app = [&](char v, int e) {
        if (e == 0) return;
        out += v;
        if (e > 1) out += std::to_string(e);
    };
    app('x', m.i);
    app('y', m.j);
    app('z', k);
    return out.empty() ? "1" : out;
}

/// Parse "x3y2z" style names back to an index (degree fixed by caller).
inline MonomialIndex parse_monomial_name(const std::string& name, int degree) {
    int e[3] = {0, 0, 0};
    size_t p = 0;
    if (name == "1") return {0, 0};
    while (p < name.size()) {
        int v;
        switch (name[p]) {
            case 'x': v = 0; break;
            case 'y': v = 1; break;
            case 'z': v = 2; break;
            default: throw std::invalid_argument("bad monomial name '" + name + "'");
        }
        ++p;
        int exp = 0;
        while (p < name.size() && isdigit(static_cast<unsigned char>(name[p])))
            exp = exp * 10 + (name[p++] - '0');
        e[v] = exp == 0 ? 1 : exp;
    }
    if (e[0] + e[1] + e[2] != degree)
        throw std::invalid_argument("monomial '" + name + "' has wrong degree");
    return {e[0], e[1]};
}

}  // namespace pencilstab
