#include "doctest.h"
#include "support.hpp"

using namespace pencilstab;
using namespace testsupport;

namespace {

const VanishingPattern& strict_case(int n) {
    static const CriticalSubdivision st = derive_subdivision(true);
    return st.minimal_patterns[n - 1];
}

MonomialMask mask_from(std::initializer_list<MonomialIndex> ms) {
    MonomialMask m = 0;
    for (auto idx : ms) m |= mask_of(idx);
    return m;
}

MonomialMask x_divisible(int min_i) {
    MonomialMask m = 0;
    for (auto idx : sextic_monomials())
        if (idx.i >= min_i) m |= mask_of(idx);
    return m;
}

}  // namespace

TEST_CASE("enumerate_quadruples on the first strict table case") {
    std::vector<QuadrupleIndex> qs = enumerate_quadruples(strict_case(1));

    // independent brute-force count, nested loops with no shared machinery
    int brute = 0;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j + i <= 6; ++j)
            for (int k = 0; k <= 6; ++k)
                for (int l = 0; l + k <= 6; ++l) {
                    if (!(i < k || (i == k && j < l))) continue;
                    if (strict_case(1).contains({i + k, j + l})) ++brute;
                }
    CHECK(brute == 171);  // frozen from the oracle before the engine existed
    CHECK(qs.size() == 171);

    CHECK(qs.front() == QuadrupleIndex{0, 0, 0, 1});
    CHECK(qs[1] == QuadrupleIndex{0, 0, 0, 2});
    CHECK(std::find(qs.begin(), qs.end(), QuadrupleIndex{0, 0, 3, 3}) != qs.end());
    CHECK(qs.back() == QuadrupleIndex{1, 5, 2, 4});

    for (size_t k = 0; k + 1 < qs.size(); ++k) CHECK(qs[k] < qs[k + 1]);
    for (const auto& q : qs) CHECK(strict_case(1).contains({q.i + q.k, q.j + q.l}));
}

TEST_CASE("enumerate_quadruples on the empty pattern") {
    VanishingPattern empty;
    CHECK(enumerate_quadruples(empty).empty());
}

TEST_CASE("case_split: single-equation pattern gives the three proof leaves") {
    VanishingPattern pat;
    pat.pairs.insert({0, 1});
    auto leaves = case_split(pat);
    REQUIRE(leaves.size() == 3);

    auto has_leaf = [&](MonomialMask zf, MonomialMask zg) {
        for (const auto& l : leaves)
            if (l.zeroF == zf && l.zeroG == zg && l.residual_minors.empty()) return true;
        return false;
    };
    MonomialMask m00 = mask_of({0, 0}), m01 = mask_of({0, 1});
    CHECK(has_leaf(m00, m00));        // f00 = g00 = 0
    CHECK(has_leaf(m00 | m01, 0));    // g00 != 0, normalized: f00 = f01 = 0
    CHECK(has_leaf(0, m00 | m01));    // the f/g-mirrored leaf
}

TEST_CASE("case_split: empty pattern gives one unconstrained leaf") {
    VanishingPattern empty;
    auto leaves = case_split(empty);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].zeroF == 0);
    CHECK(leaves[0].zeroG == 0);
    CHECK(leaves[0].residual_minors.empty());
}

TEST_CASE("case_split reproduces the three translation cases") {
    auto leaves = case_split(strict_case(1));
    auto canon = canonical_leaves(leaves);
    REQUIRE(canon.size() == 3);

    MonomialMask all = (MonomialMask(1) << 28) - 1;
    MonomialMask x2 = x_divisible(2), x3 = x_divisible(3), x4 = x_divisible(4);
    MonomialMask yz_pure = 0;
    for (auto m : sextic_monomials())
        if (m.i == 0) yz_pure |= mask_of(m);
    MonomialMask x01 = all & ~x2;  // monomials with x-exponent 0 or 1

    std::vector<CanonicalCase> expected;
    expected.push_back(canonicalize({~x4 & all, 0, 0, 0, {}, {}, {}}));       // f in x^4·Q
    expected.push_back(canonicalize({~x3 & all, yz_pure, 0, 0, {}, {}, {}})); // f x^3-divisible
    expected.push_back(canonicalize({x01, x01, 0, 0, {}, {}, {}}));           // both x^2-divisible
    std::sort(expected.begin(), expected.end());
    CHECK(canon == expected);
}

TEST_CASE("case_split leaves are sound: admissible samples satisfy the pattern") {
    auto leaves = case_split(strict_case(1));
    std::mt19937_64 rng(97);
    for (const auto& leaf : leaves) {
        REQUIRE(leaf.residual_minors.empty());
        for (int t = 0; t < 20; ++t) {
            HomForm f(6), g(6);
            for (auto m : sextic_monomials()) {
                if (!mask_has(leaf.zeroF, m)) f.set(m, rnd_rational(rng, true));
                if (!mask_has(leaf.zeroG, m)) g.set(m, rnd_rational(rng, true));
            }
            Pencil p(f, g);
            CHECK(check_pattern(p, strict_case(1)).satisfied);
        }
    }
}

TEST_CASE("case_split completeness at small scale") {
    auto leaves = case_split(strict_case(1));
    std::mt19937_64 rng(101);
    auto satisfies_leaf = [](const HomForm& f, const HomForm& g, const ConstraintState& l) {
        for (auto m : sextic_monomials()) {
            if (mask_has(l.zeroF, m) && f.at(m) != 0) return false;
            if (mask_has(l.zeroG, m) && g.at(m) != 0) return false;
        }
        return true;
    };
    int found = 0;
    for (int t = 0; t < 200; ++t) {
        const ConstraintState& leaf = leaves[t % leaves.size()];
        HomForm f(6), g(6);
        for (auto m : sextic_monomials()) {
            if (!mask_has(leaf.zeroF, m)) f.set(m, rnd_rational(rng, true));
            if (!mask_has(leaf.zeroG, m)) g.set(m, rnd_rational(rng, true));
        }
        Pencil base(f, g);
        Rational a, b, c, d;
        do {
            a = rnd_rational(rng);
            b = rnd_rational(rng);
            c = rnd_rational(rng);
            d = rnd_rational(rng);
        } while (a * d - b * c == 0);
        Pencil mixed = change_pencil_basis(base, a, b, c, d);

        // match against the leaf set, allowing one basis-reduction pivot
        bool matched = false;
        const HomForm* pair[2][2] = {{&mixed.f(), &mixed.g()}, {&mixed.g(), &mixed.f()}};
        for (int ord = 0; ord < 2 && !matched; ++ord) {
            const HomForm& u = *pair[ord][0];
            const HomForm& v = *pair[ord][1];
            for (const auto& leaf2 : leaves) {
                if (satisfies_leaf(u, v, leaf2)) {
                    matched = true;
                    break;
                }
                for (auto pvt : u.support()) {
                    if (v.at(pvt) == 0) continue;
                    HomForm red = add(u, scale(v, -u.at(pvt) / v.at(pvt)));
                    if (!red.is_zero() && satisfies_leaf(red, v, leaf2)) {
                        matched = true;
                        break;
                    }
                }
                if (matched) break;
            }
        }
        if (matched) ++found;
    }
    CHECK(found == 200);
}

TEST_CASE("catalog: parsed fixture shape") {
    const auto& cat = normal_form_catalog();
    CHECK(cat.size() == 46);
    CHECK(find_case("Thm3.1-case1").verdict == Verdict::kNotStable);
    CHECK(find_case("Thm3.6-case5").verdict == Verdict::kUnstable);
    CHECK(find_case("Thm3.4-c2").residual_minors.size() == 4);
    CHECK(find_case("Thm3.5-e4").residual_minors.size() == 32);
    CHECK(!find_case("Thm3.9").iff_direction);
    CHECK_THROWS_AS(find_case("Thm3.6-case10"), std::invalid_argument);

    // unstable cases verify against non-strict patterns, not-stable against strict
    for (const auto& c : cat)
        CHECK(c.pattern_strict == (c.verdict == Verdict::kNotStable));

    // the translation-case supports, as data
    CHECK(find_case("Thm3.6-case1").f_support ==
          mask_from({{5, 0}, {5, 1}, {6, 0}}));
    CHECK(find_case("Thm3.1-case3").f_support == x_divisible(2));
}

TEST_CASE("verify_forward: direct-support cases pass 100/100") {
    for (const char* id : {"Thm3.1-case1", "Thm3.1-case2", "Thm3.1-case3", "Thm3.6-case1",
                           "Thm3.6-case5", "Thm3.6-case9", "Thm3.7-a1", "Thm3.7-b",
                           "Thm3.7-c", "Thm3.8-a", "Thm3.8-e"}) {
        ForwardReport rep = verify_forward(id, 100);
        CAPTURE(id);
        CHECK(rep.passes == 100);
        CHECK(rep.failures == 0);
        CHECK(rep.skips == 0);
    }
}

TEST_CASE("verify_forward: residual-minor cases have no failures among solvable samples") {
    for (const char* id : {"Thm3.4-c2", "Thm3.4-d2", "Thm3.4-d3", "Thm3.5-c3", "Thm3.5-d1",
                           "Thm3.5-d2", "Thm3.5-d3", "Thm3.5-e1", "Thm3.5-e2", "Thm3.5-e3",
                           "Thm3.5-e4"}) {
        ForwardReport rep = verify_forward(id, 100);
        CAPTURE(id);
        CHECK(rep.failures == 0);
        CHECK(rep.passes + rep.skips == 100);
        CHECK(rep.passes > 0);
    }
}

TEST_CASE("verify_forward: the two shear-dependent printed cases fail over Q") {
    // Their destabilizing frame exists over the complex numbers but needs an
    // irrational shear for generic rational samples; the violating minor
    // always lies in the weight-zero class (4,4). Documented discrepancy.
    for (const char* id : {"Thm3.7-a2", "Thm3.8-f"}) {
        ForwardReport rep = verify_forward(id, 100);
        CAPTURE(id);
        CHECK(rep.passes == 0);
        CHECK(rep.failures == 100);
        REQUIRE(rep.counterexample_minor.has_value());
        const QuadrupleIndex& q = *rep.counterexample_minor;
        CHECK(q.i + q.k == 4);
        CHECK(q.j + q.l == 4);
    }
}

TEST_CASE("verify_forward: necessary-only case reports inapplicability") {
    ForwardReport rep = verify_forward("Thm3.9", 10);
    CHECK(!rep.applicable);
    CHECK(rep.passes == 0);
    CHECK_THROWS_AS(verify_forward("nonsense", 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_forward("Thm3.9", 0), std::invalid_argument);
}

TEST_CASE("match_catalog: the quintuple-line and tangent-conic pencils") {
    HomForm B17 = parse_form("x^5*(x - z)", {}, 6);
    HomForm C17 = parse_form("y^2*z - x*(x-z)*(x-a*z)", {{'a', Rational(2)}}, 3);
    Pencil p17(B17, multiply(C17, C17));
    auto ids17 = match_catalog(p17);
    CHECK(std::find(ids17.begin(), ids17.end(), "Thm3.6-case1") != ids17.end());

    HomForm B16 = parse_form("x^4*(y^2 + x*z)", {}, 6);
    HomForm C16 = parse_form("x^3 + x*z^2 + y^2*z", {}, 3);
    Pencil p16(B16, multiply(C16, C16));
    auto ids16 = match_catalog(p16);
    CHECK(std::find(ids16.begin(), ids16.end(), "Thm3.6-case2") != ids16.end());

    std::mt19937_64 rng(103);
    for (int t = 0; t < 10; ++t) CHECK(match_catalog(rnd_pencil(rng, 14)).empty());
}
