#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "pencilstab/criterion.hpp"

namespace pencilstab {

/// One block of the printed-table fixture: "case <n> strict|nonstrict witness
/// <a or (lo,hi)>" followed by whitespace-separated "r,s" pairs.
struct TableFixtureCase {
    int number = 0;
    bool strict = false;
    Witness witness;
    std::set<PairClass> pairs;
};

/// The published critical-value tables, embedded verbatim as a fixture. The
/// derivation never reads these; they exist only to be diffed against the
/// regenerated subdivision. Known discrepancy: every strict list omits (2,2)
/// although its class weight -6(1+a) is negative throughout [-1/2,1].
inline const char* paper_tables_fixture_text() {
    return R"FIX(case 1 nonstrict witness (-1/3,-2/7)
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 0,12 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 1,10 1,11 2,0 2,1 2,2 2,3 2,4 2,5 2,6 2,7 2,8 2,9 2,10 3,0 3,1 3,2 3,3 3,4 3,5 3,6 3,7 3,8 4,0 4,1 4,2 4,3 4,4

case 2 nonstrict witness (-2/7,-1/5)
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 0,12 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 1,10 1,11 2,0 2,1 2,2 2,3 2,4 2,5 2,6 2,7 2,8 2,9 2,10 3,0 3,1 3,2 3,3 3,4 3,5 3,6 3,7 4,0 4,1 4,2 4,3 4,4 5,0

case 3 nonstrict witness (-1/11,0)
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 0,12 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 1,10 2,0 2,1 2,2 2,3 2,4 2,5 2,6 2,7 2,8 3,0 3,1 3,2 3,3 3,4 3,5 3,6 4,0 4,1 4,2 4,3 4,4 5,0 5,1

case 4 nonstrict witness (1/7,1/4)
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 2,0 2,1 2,2 2,3 2,4 2,5 2,6 2,7 3,0 3,1 3,2 3,3 3,4 3,5 4,0 4,1 4,2 4,3 4,4 5,0 5,1 5,2 6,0

case 5 nonstrict witness (1/4,2/5)
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 2,0 2,1 2,2 2,3 2,4 2,5 2,6 3,0 3,1 3,2 3,3 3,4 3,5 4,0 4,1 4,2 4,3 4,4 5,0 5,1 5,2 6,0 6,1

case 6 nonstrict witness (1/2,1)
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 2,0 2,1 2,2 2,3 2,4 2,5 2,6 3,0 3,1 3,2 3,3 3,4 3,5 4,0 4,1 4,2 4,3 4,4 5,0 5,1 5,2 6,0 6,1 7,0

case 1 strict witness -1/2
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 0,12 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 1,10 1,11 2,0 2,1 2,3 2,4 2,5 2,6 2,7 2,8 2,9 2,10 3,0 3,1 3,2 3,3 3,4 3,5 3,6 3,7 3,8 3,9

case 2 strict witness -2/7
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 0,12 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 1,10 1,11 2,0 2,1 2,3 2,4 2,5 2,6 2,7 2,8 2,9 2,10 3,0 3,1 3,2 3,3 3,4 3,5 3,6 3,7 4,0 4,1 4,2 4,3

case 3 strict witness -1/5
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 0,12 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 1,10 1,11 2,0 2,1 2,3 2,4 2,5 2,6 2,7 2,8 2,9 3,0 3,1 3,2 3,3 3,4 3,5 3,6 4,0 4,1 4,2 4,3 5,0

case 4 strict witness 0
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 0,10 0,11 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 1,9 2,0 2,1 2,3 2,4 2,5 2,6 2,7 3,0 3,1 3,2 3,3 3,4 3,5 4,0 4,1 4,2 4,3 5,0 5,1

case 5 strict witness 1/4
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 1,8 2,0 2,1 2,3 2,4 2,5 2,6 3,0 3,1 3,2 3,3 3,4 3,5 4,0 4,1 4,2 4,3 5,0 5,1 5,2 6,0

case 6 strict witness 2/5
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 0,8 0,9 1,0 1,1 1,2 1,3 1,4 1,5 1,6 1,7 2,0 2,1 2,3 2,4 2,5 2,6 3,0 3,1 3,2 3,3 3,4 3,5 4,0 4,1 4,2 4,3 5,0 5,1 5,2 6,0 6,1

case 7 strict witness 1
0,0 0,1 0,2 0,3 0,4 0,5 0,6 0,7 1,0 1,1 1,2 1,3 1,4 1,5 1,6 2,0 2,1 2,3 2,4 2,5 3,0 3,1 3,2 3,3 3,4 4,0 4,1 4,2 4,3 5,0 5,1 5,2 6,0 6,1 7,0
)FIX";
}

inline std::vector<TableFixtureCase> parse_table_fixture(const std::string& text) {
    std::vector<TableFixtureCase> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream hs(line);
        std::string kw, mode, wkw, wtext;
        TableFixtureCase c;
        hs >> kw >> c.number >> mode >> wkw >> wtext;
        if (kw != "case" || (mode != "strict" && mode != "nonstrict") || wkw != "witness")
            throw std::runtime_error("bad fixture header: " + line);
        c.strict = mode == "strict";
        if (!wtext.empty() && wtext.front() == '(') {
            auto comma = wtext.find(',');
            c.witness.is_interval = true;
            c.witness.lo = parse_rational(wtext.substr(1, comma - 1));
            c.witness.hi = parse_rational(wtext.substr(comma + 1, wtext.size() - comma - 2));
        } else {
            c.witness.is_interval = false;
            c.witness.lo = c.witness.hi = parse_rational(wtext);
        }
        if (!std::getline(in, line)) throw std::runtime_error("fixture truncated");
        std::istringstream ps(line);
        std::string tok;
        while (ps >> tok) {
            auto comma = tok.find(',');
            c.pairs.insert({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// Result of diffing the regenerated tables against the printed fixture.
struct TableDiffReport {
    bool witnesses_match = false;     // six intervals and seven values, exactly
    bool nonstrict_clean = false;     // non-strict lists identical
    bool strict_clean = false;        // strict diffs are exactly the known ones
    std::vector<std::string> known_discrepancies;
    std::vector<std::string> unexpected;
    std::string status;
};

/// Regenerate the subdivision and diff it against the embedded printed
/// tables. The only tolerated difference is the documented "+(2,2)" in each
/// strict list; anything else lands in `unexpected`.
inline TableDiffReport paper_tables_regression() {
    TableDiffReport rep;
    auto fixture = parse_table_fixture(paper_tables_fixture_text());
    CriticalSubdivision ns = derive_subdivision(false);
    CriticalSubdivision st = derive_subdivision(true);

    std::vector<TableFixtureCase> fns, fst;
    for (auto& c : fixture) (c.strict ? fst : fns).push_back(c);

    rep.witnesses_match = true;
    auto diff_side = [&](const std::vector<TableFixtureCase>& fix,
                         const std::vector<VanishingPattern>& gen, bool strict) {
        bool clean = true;
        if (fix.size() != gen.size()) {
            rep.unexpected.push_back(std::string(strict ? "strict" : "nonstrict") +
                                     ": case count mismatch (" + std::to_string(gen.size()) +
                                     " regenerated vs " + std::to_string(fix.size()) +
                                     " printed)");
            rep.witnesses_match = false;
            return false;
        }
        for (size_t k = 0; k < fix.size(); ++k) {
            const auto& f = fix[k];
            const auto& g = gen[k];
            std::string label = (strict ? "strict case " : "nonstrict case ") +
                                std::to_string(f.number);
            if (g.witnesses.size() != 1 || !(g.witnesses.front() == f.witness)) {
                rep.unexpected.push_back(label + ": witness mismatch (regenerated " +
                                         g.witnesses.front().str() + " vs printed " +
                                         f.witness.str() + ")");
                rep.witnesses_match = false;
            }
            for (PairClass c : g.pairs)
                if (!f.pairs.count(c)) {
                    std::string msg = label + ": +(" + std::to_string(c.r) + "," +
                                      std::to_string(c.s) + ")";
                    if (strict && c.r == 2 && c.s == 2)
                        rep.known_discrepancies.push_back(msg);
                    else {
                        rep.unexpected.push_back(msg);
                        clean = false;
                    }
                }
            for (PairClass c : f.pairs)
                if (!g.pairs.count(c)) {
                    rep.unexpected.push_back(label + ": -(" + std::to_string(c.r) + "," +
                                             std::to_string(c.s) + ")");
                    clean = false;
                }
        }
        return clean;
    };

    rep.nonstrict_clean = diff_side(fns, ns.minimal_patterns, false);
    rep.strict_clean = diff_side(fst, st.minimal_patterns, true) &&
                       rep.known_discrepancies.size() == 7;
    std::ostringstream os;
    os << "witnesses " << (rep.witnesses_match ? "match" : "MISMATCH") << "; nonstrict "
       << (rep.nonstrict_clean ? "zero diff" : "DIFFS") << "; strict "
       << (rep.strict_clean ? "known +(2,2) only" : "UNEXPECTED DIFFS") << " ("
       << rep.known_discrepancies.size() << " known discrepancies, "
       << rep.unexpected.size() << " unexpected)";
    rep.status = os.str();
    return rep;
}

}  // namespace pencilstab
