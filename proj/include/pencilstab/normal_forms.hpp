#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pencilstab/catalog_data.hpp"
#include "pencilstab/criterion.hpp"

namespace pencilstab {

/// Bitmask over the 28 degree-6 monomial slots.
using MonomialMask = std::uint32_t;

inline MonomialMask mask_of(MonomialIndex m) {
    return MonomialMask(1) << monomial_slot(m, 6);
}

inline bool mask_has(MonomialMask mask, MonomialIndex m) { return mask & mask_of(m); }

inline std::vector<MonomialIndex> mask_indices(MonomialMask mask) {
    std::vector<MonomialIndex> out;
    for (auto m : sextic_monomials())
        if (mask_has(mask, m)) out.push_back(m);
    return out;
}

/// One leaf of the case-splitting search: coefficients of the two generators
/// forced to zero, coefficients assumed nonzero along the branch, the pivot
/// used for the one-per-generator basis normalization, and the minor
/// equations left unresolved as bilinear conditions.
struct ConstraintState {
    MonomialMask zeroF = 0, zeroG = 0;
    MonomialMask nonzeroF = 0, nonzeroG = 0;
    std::optional<MonomialIndex> pivotF, pivotG;
    std::vector<QuadrupleIndex> residual_minors;

    MonomialMask f_support() const { return ~zeroF & ((MonomialMask(1) << 28) - 1); }
    MonomialMask g_support() const { return ~zeroG & ((MonomialMask(1) << 28) - 1); }
};

/// All ordered quadruples whose (r,s) class lies in the pattern, in
/// lexicographic (i,j,k,l) order.
inline std::vector<QuadrupleIndex> enumerate_quadruples(const VanishingPattern& pat) {
    std::vector<QuadrupleIndex> out;
    for (const auto& q : quadruple_table())
        if (pat.contains({q.i + q.k, q.j + q.l})) out.push_back(q);
    return out;
}

namespace detail {

struct SplitEngine {
    std::vector<QuadrupleIndex> eqs;
    std::vector<ConstraintState> leaves;

    void run(const ConstraintState& st, size_t idx) {
        if (idx == eqs.size()) {
            leaves.push_back(st);
            return;
        }
        const QuadrupleIndex& q = eqs[idx];
        MonomialIndex p1 = q.first(), p2 = q.second();
        bool t1zero = mask_has(st.zeroF, p1) || mask_has(st.zeroG, p2);  // f_p1 g_p2
        bool t2zero = mask_has(st.zeroF, p2) || mask_has(st.zeroG, p1);  // f_p2 g_p1
        if (t1zero && t2zero) {
            run(st, idx + 1);
            return;
        }
        if (t1zero || t2zero) {
            // single surviving product f_a * g_b = 0
            MonomialIndex a = t1zero ? p2 : p1;
            MonomialIndex b = t1zero ? p1 : p2;
            bool fa_nonzero = mask_has(st.nonzeroF, a);
            bool gb_nonzero = mask_has(st.nonzeroG, b);
            if (fa_nonzero && gb_nonzero) return;  // contradictory leaf, prune
            if (fa_nonzero) {
                force_zero_g(st, b, idx);
                return;
            }
            if (gb_nonzero) {
                force_zero_f(st, a, idx);
                return;
            }
            force_zero_f(st, a, idx);
            force_zero_g(st, b, idx);
            return;
        }
        // Both products live; three-way branch on the lesser column p1,
        // mirroring the proof's split f=g=0 / g!=0 / f!=0 at that index.
        if (!mask_has(st.nonzeroF, p1) && !mask_has(st.nonzeroG, p1)) {
            ConstraintState both = st;
            both.zeroF |= mask_of(p1);
            both.zeroG |= mask_of(p1);
            run(both, idx + 1);
        }
        branch_pivot(st, p1, p2, idx, /*in_g=*/true);
        branch_pivot(st, p1, p2, idx, /*in_g=*/false);
    }

    void force_zero_f(const ConstraintState& st, MonomialIndex m, size_t idx) {
        if (mask_has(st.nonzeroF, m)) return;  // prune
        ConstraintState next = st;
        next.zeroF |= mask_of(m);
        run(next, idx + 1);
    }

    void force_zero_g(const ConstraintState& st, MonomialIndex m, size_t idx) {
        if (mask_has(st.nonzeroG, m)) return;
        ConstraintState next = st;
        next.zeroG |= mask_of(m);
        run(next, idx + 1);
    }

    // Assume the p-coefficient of one generator is nonzero. When that
    // generator still has its basis-normalization pivot available (and the
    // normalization cannot disturb previously forced zeros), apply it: the
    // other generator's p- and q-coefficients vanish. Otherwise keep the
    // equation as a residual bilinear condition under the assumption.
    void branch_pivot(const ConstraintState& st, MonomialIndex p, MonomialIndex q, size_t idx,
                      bool in_g) {
        ConstraintState next = st;
        MonomialMask& nz = in_g ? next.nonzeroG : next.nonzeroF;
        const MonomialMask zero_other = in_g ? st.zeroF : st.zeroG;
        const MonomialMask zero_same = in_g ? st.zeroG : st.zeroF;
        auto& pivot = in_g ? next.pivotG : next.pivotF;
        nz |= mask_of(p);
        bool pivot_ok = !pivot.has_value() && (zero_other & ~zero_same) == 0;
        MonomialMask forced = mask_of(p) | mask_of(q);
        bool conflict = (in_g ? st.nonzeroF : st.nonzeroG) & forced;
        if (pivot_ok && !conflict) {
            pivot = p;
            if (in_g)
                next.zeroF |= forced;
            else
                next.zeroG |= forced;
            run(next, idx + 1);
        } else {
            next.residual_minors.push_back(eqs[idx]);
            run(next, idx + 1);
        }
    }
};

inline bool residual_trivial(const QuadrupleIndex& q, MonomialMask zf, MonomialMask zg) {
    bool t1 = mask_has(zf, q.first()) || mask_has(zg, q.second());
    bool t2 = mask_has(zf, q.second()) || mask_has(zg, q.first());
    return t1 && t2;
}

}  // namespace detail

/// Depth-first case splitting over the pattern's minor equations, following
/// the branching rule of the translation algorithm. Returns the leaves after
/// pruning contradictions, dropping residuals that later zeros made trivial,
/// and merging leaves whose constraints subsume one another. Leaf orientation
/// (which generator is f) is preserved; mirrored duplicates survive here and
/// are identified by canonical_leaves().
inline std::vector<ConstraintState> case_split(const VanishingPattern& pat) {
    detail::SplitEngine engine;
    engine.eqs = enumerate_quadruples(pat);
    engine.run(ConstraintState{}, 0);

    std::vector<ConstraintState> cleaned;
    for (auto& leaf : engine.leaves) {
        std::vector<QuadrupleIndex> res;
        for (const auto& q : leaf.residual_minors)
            if (!detail::residual_trivial(q, leaf.zeroF, leaf.zeroG)) res.push_back(q);
        std::sort(res.begin(), res.end());
        res.erase(std::unique(res.begin(), res.end()), res.end());
        leaf.residual_minors = std::move(res);
        bool dup = false;
        for (const auto& other : cleaned)
            if (other.zeroF == leaf.zeroF && other.zeroG == leaf.zeroG &&
                other.residual_minors == leaf.residual_minors) {
                dup = true;
                break;
            }
        if (!dup) cleaned.push_back(std::move(leaf));
    }

    auto subset = [](const std::vector<QuadrupleIndex>& a, const std::vector<QuadrupleIndex>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<ConstraintState> out;
    for (const auto& leaf : cleaned) {
        bool dominated = false;
        for (const auto& other : cleaned) {
            if (&other == &leaf) continue;
            if ((other.zeroF & ~leaf.zeroF) == 0 && (other.zeroG & ~leaf.zeroG) == 0 &&
                subset(other.residual_minors, leaf.residual_minors)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(leaf);
    }
    return out;
}

/// Support-set view of a leaf with the f/g orientation canonicalized, so a
/// leaf and its mirror compare equal as data.
struct CanonicalCase {
    MonomialMask zeroA = 0, zeroB = 0;
    std::vector<QuadrupleIndex> residual;
    friend auto operator<=>(const CanonicalCase&, const CanonicalCase&) = default;
};

inline CanonicalCase canonicalize(const ConstraintState& leaf) {
    CanonicalCase a{leaf.zeroF, leaf.zeroG, leaf.residual_minors};
    CanonicalCase b{leaf.zeroG, leaf.zeroF, leaf.residual_minors};
    return std::min(a, b);
}

inline std::vector<CanonicalCase> canonical_leaves(const std::vector<ConstraintState>& leaves) {
    std::vector<CanonicalCase> out;
    for (const auto& l : leaves) {
        CanonicalCase c = canonicalize(l);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- the transcribed normal-form catalog ------------------------------------

enum class Verdict { kUnstable, kNotStable };

/// One catalog entry: monomial-support constraints on the generators plus any
/// residual minor conditions, the table case it certifies against, and
/// whether the source statement is an equivalence or necessary-only.
struct NormalFormCase {
    std::string id;
    Verdict verdict = Verdict::kUnstable;
    MonomialMask f_support = 0;
    MonomialMask f_required = 0;   // '!'-marked coefficients
    MonomialMask g_zero = 0;
    std::vector<QuadrupleIndex> residual_minors;
    bool pattern_strict = false;
    int pattern_case = 0;          // 1-based case in the corresponding table
    bool iff_direction = true;     // false: necessary condition only
};

/// Catalog fixture, one case per block: id and verdict, "F:" support list
/// with '!' marking required-nonzero coefficients, "G0:" forced-zero list,
/// "RM:" residual quadruples, "PAT:" associated table case, "DIR:" direction.
/// The text lives in catalog_data.hpp.
inline std::vector<NormalFormCase> parse_catalog_fixture(const std::string& text) {
    std::vector<NormalFormCase> out;
    std::istringstream in(text);
    std::string line;
    NormalFormCase cur;
    bool open = false;
    auto flush = [&] {
        if (open) out.push_back(cur);
        cur = NormalFormCase{};
        open = false;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "case") {
            flush();
            open = true;
            std::string verdict;
            ls >> cur.id >> verdict;
            if (verdict == "unstable") cur.verdict = Verdict::kUnstable;
            else if (verdict == "not-stable") cur.verdict = Verdict::kNotStable;
            else throw std::runtime_error("bad verdict in catalog fixture: " + verdict);
        } else if (kw == "F:") {
            std::string tok;
            while (ls >> tok) {
                bool required = !tok.empty() && tok.back() == '!';
                if (required) tok.pop_back();
                MonomialIndex m = parse_monomial_name(tok, 6);
                cur.f_support |= mask_of(m);
                if (required) cur.f_required |= mask_of(m);
            }
        } else if (kw == "G0:") {
            std::string tok;
            while (ls >> tok) cur.g_zero |= mask_of(parse_monomial_name(tok, 6));
        } else if (kw == "RM:") {
            std::string tok;
            while (ls >> tok) {
                QuadrupleIndex q;
                if (std::sscanf(tok.c_str(), "%d,%d,%d,%d", &q.i, &q.j, &q.k, &q.l) != 4)
                    throw std::runtime_error("bad residual quadruple: " + tok);
                cur.residual_minors.push_back(q);
            }
        } else if (kw == "PAT:") {
            std::string mode;
            ls >> mode >> cur.pattern_case;
            cur.pattern_strict = mode == "strict";
        } else if (kw == "DIR:") {
            std::string dir;
            ls >> dir;
            cur.iff_direction = dir == "iff";
        } else {
            throw std::runtime_error("bad catalog fixture line: " + line);
        }
    }
    flush();
    return out;
}

inline const std::vector<NormalFormCase>& normal_form_catalog() {
    static const std::vector<NormalFormCase> cat =
        parse_catalog_fixture(catalog_fixture_text());
    return cat;
}

inline const NormalFormCase& find_case(const std::string& id) {
    for (const auto& c : normal_form_catalog())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown case id '" + id + "'");
}

/// The minimal pattern a catalog case verifies against.
inline const VanishingPattern& case_pattern(const NormalFormCase& c) {
    static const CriticalSubdivision ns = derive_subdivision(false);
    static const CriticalSubdivision st = derive_subdivision(true);
    const auto& pats = (c.pattern_strict ? st : ns).minimal_patterns;
    return pats.at(static_cast<size_t>(c.pattern_case - 1));
}

// --- forward verification ----------------------------------------------------

struct ForwardReport {
    std::string id;
    int trials = 0;
    int passes = 0;
    int failures = 0;
    int skips = 0;  // samples where the residual system had no solution
    bool applicable = true;
    std::string note;
    std::optional<QuadrupleIndex> counterexample_minor;
    std::string counterexample;
};

namespace detail {

inline Rational random_rational(std::mt19937_64& rng, bool nonzero = true) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int n = 0;
    do {
        n = num(rng);
    } while (nonzero && n == 0);
    return Rational(n, den(rng));
}

/// Sample one (f,g) respecting the case constraints; residual minors are
/// imposed by solving for free g-coefficients (they are linear in g once f is
/// drawn). Returns nothing when the drawn sample admits no solution.
inline std::optional<std::pair<HomForm, HomForm>> sample_case(const NormalFormCase& c,
                                                              std::mt19937_64& rng) {
    HomForm f(6);
    for (auto m : mask_indices(c.f_support)) f.set(m, random_rational(rng));
    std::map<MonomialIndex, Rational> g;
    for (auto m : mask_indices(c.g_zero)) g[m] = Rational(0);
    for (const auto& eq : c.residual_minors) {
        MonomialIndex p = eq.first(), q = eq.second();
        const Rational a = f.at(p);  // equation: a*g_q - b*g_p = 0
        const Rational b = f.at(q);
        bool pa = g.count(p), qa = g.count(q);
        if (pa && qa) {
            if (a * g[q] - b * g[p] != 0) return std::nullopt;
        } else if (pa) {
            if (a != 0) g[q] = b * g[p] / a;
            else if (b * g[p] != 0) return std::nullopt;
        } else if (qa) {
            if (b != 0) g[p] = a * g[q] / b;
            else if (a * g[q] != 0) return std::nullopt;
        } else {
            if (a != 0) {
                g[p] = random_rational(rng);
                g[q] = b * g[p] / a;
            } else if (b != 0) {
                g[p] = Rational(0);
            }
        }
    }
    HomForm gf(6);
    for (auto m : sextic_monomials()) {
        auto it = g.find(m);
        gf.set(m, it != g.end() ? it->second : random_rational(rng));
    }
    return std::make_pair(std::move(f), std::move(gf));
}

}  // namespace detail

/// Sample `trials` random pencils of the case's shape and check each against
/// the case's associated pattern. Unsolvable residual draws are skipped and
/// reported; necessary-only cases are reported as not forward-verifiable.
inline ForwardReport verify_forward(const std::string& id, int trials,
                                    std::uint64_t seed = 0x5ead5eed) {
    if (trials < 1) throw std::invalid_argument("verify_forward needs trials >= 1");
    const NormalFormCase& c = find_case(id);
    ForwardReport rep;
    rep.id = id;
    rep.trials = trials;
    if (!c.iff_direction) {
        rep.applicable = false;
        rep.note = "necessary condition only; forward sampling not applicable";
        return rep;
    }
    const VanishingPattern& pat = case_pattern(c);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto sample = detail::sample_case(c, rng);
        if (!sample) {
            ++rep.skips;
            continue;
        }
        try {
            Pencil p(sample->first, sample->second);
            CheckResult res = check_pattern(p, pat);
            if (res.satisfied) {
                ++rep.passes;
            } else {
                ++rep.failures;
                if (!rep.counterexample_minor) {
                    rep.counterexample_minor = res.violating;
                    std::ostringstream os;
                    os << "f,g sample violates class (" << res.violating->i + res.violating->k
                       << "," << res.violating->j + res.violating->l << ") via minor {"
                       << res.violating->i << "," << res.violating->j << ","
                       << res.violating->k << "," << res.violating->l << "}";
                    rep.counterexample = os.str();
                }
            }
        } catch (const std::invalid_argument&) {
            ++rep.skips;  // degenerate draw (proportional generators)
        }
    }
    return rep;
}

// --- inverse lookup ----------------------------------------------------------

namespace detail {

inline bool satisfies_case(const HomForm& f, const HomForm& g, const NormalFormCase& c) {
    for (auto m : sextic_monomials()) {
        if (!mask_has(c.f_support, m) && f.at(m) != 0) return false;
        if (mask_has(c.f_required, m) && f.at(m) == 0) return false;
        if (mask_has(c.g_zero, m) && g.at(m) != 0) return false;
    }
    for (const auto& q : c.residual_minors)
        if (f.at(q.first()) * g.at(q.second()) - f.at(q.second()) * g.at(q.first()) != 0)
            return false;
    return true;
}

}  // namespace detail

/// Every catalog case the pencil satisfies in the given coordinates, testing
/// both generator orders and allowing one basis-reduction pivot
/// u -> u - (u_p/v_p) v.
inline std::vector<std::string> match_catalog(const Pencil& pen) {
    std::vector<std::string> out;
    for (const auto& c : normal_form_catalog()) {
        bool hit = false;
        const HomForm* pair[2][2] = {{&pen.f(), &pen.g()}, {&pen.g(), &pen.f()}};
        for (int ord = 0; ord < 2 && !hit; ++ord) {
            const HomForm& u = *pair[ord][0];
            const HomForm& v = *pair[ord][1];
            if (detail::satisfies_case(u, v, c)) {
                hit = true;
                break;
            }
            for (auto p : u.support()) {
                if (v.at(p) == 0) continue;
                HomForm reduced = add(u, scale(v, -u.at(p) / v.at(p)));
                if (reduced.is_zero()) continue;
                if (detail::satisfies_case(reduced, v, c)) {
                    hit = true;
                    break;
                }
            }
        }
        if (hit) out.push_back(c.id);
    }
    return out;
}

}  // namespace pencilstab
