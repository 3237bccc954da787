/*
   Copyright 2026 The whf contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance checks. Usage: whf_acceptance [criterion ...]; no arguments runs
// all seven. Each criterion prints its diagnostics followed by a single
// "criterion <n>: PASS|FAIL ..." line. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boost_ref.hpp"
#include "reference_tables.hpp"
#include "test_util.hpp"

using namespace whf;
using namespace whf::testing;

namespace {

// Pinned tolerances.
const Rational kTableRel = makeRational(1, 1000000);        // table columns
const Rational kRoundedRel = makeRational(1, 1000);         // rounded accuracy values
const Rational kListingAbs = makeRational(1, 100000000);    // listing coefficients
constexpr int kCompareDigits = 10;                          // ours is rounded to this before comparing
constexpr int kMaxMissesShown = 60;

std::string sci(const Rational& x, int digits = 10) { return toScientific(x, digits); }

std::string sci(const std::optional<UpperBound>& b) { return b ? sci(b->value) : std::string("-"); }

// Printed value within max(kTableRel, one unit in its last place) of ours
// rounded to ten digits.
bool agrees(const Rational& ours, const char* printed) {
    const Rational r = roundSignificant(ours, kCompareDigits);
    const Rational p = decimalLiteral(printed);
    if (sgn(p) == 0) return sgn(r) == 0;
    Rational tol = kTableRel;
    const int d = printedDigits(printed);
    Rational ulp = Rational(1) / Rational(pow10(static_cast<unsigned>(std::max(d - 1, 0))));
    if (ulp > tol) tol = ulp;
    return abs(r - p) <= tol * abs(p);
}

struct Tally {
    int checked = 0;
    std::vector<std::string> misses;

    void compare(const std::string& column, int N, const std::optional<Rational>& ours, const char* printed) {
        if (!printed) return;
        ++checked;
        if (!ours) {
            misses.push_back(column + " N=" + std::to_string(N) + ": printed " + printed + ", not computed");
        } else if (!agrees(*ours, printed)) {
            misses.push_back(column + " N=" + std::to_string(N) + ": printed " + printed + ", ours " + sci(*ours));
        }
    }

    void print(const char* what) const {
        std::printf("  %s: %d cells compared, %zu disagree\n", what, checked, misses.size());
        for (size_t i = 0; i < misses.size() && i < kMaxMissesShown; ++i) std::printf("    %s\n", misses[i].c_str());
        if (misses.size() > kMaxMissesShown) std::printf("    ... %zu more\n", misses.size() - kMaxMissesShown);
    }
};

// Printed cells that contradict other printed cells of the same table. Each
// entry's evidence is recomputed from the printed data before it is used;
// `use` == nullptr drops the cell from the comparison.
struct Erratum {
    int table;
    int N;
    size_t col;
    const char* use;
    const char* reason;
    std::function<bool()> evidence;
};

Rational printedAt(const std::vector<reference::Row>& t, int N, size_t col) {
    return decimalLiteral(t.at(static_cast<size_t>(N - 1)).at(col));
}

bool near(const Rational& a, const Rational& b, const Rational& rel) { return abs(a - b) <= rel * abs(b); }

const std::vector<Erratum>& errata() {
    static const std::vector<Erratum> list = {
        {1, 13, 5, "1.900e-2", "gamma_13 printed 1.890e-2; gamma_12 delta_13 / delta_12 from the same table is 1.900e-2",
         [] {
             const auto& t = reference::table1();
             const Rational est = printedAt(t, 12, 5) * printedAt(t, 13, 1) / printedAt(t, 12, 1);
             return near(est, decimalLiteral("1.900e-2"), kRoundedRel) &&
                    !near(est, decimalLiteral("1.890e-2"), kRoundedRel);
         }},
        {1, 28, 4, "1.178e-16",
         "q_28 printed 1.1783e-16 (five digits); delta_28 times the printed norms is 1.1780e-16",
         [] {
             const auto& t = reference::table1();
             const Rational est = printedAt(t, 28, 1) * printedAt(t, 28, 2) * printedAt(t, 28, 3);
             return near(est, decimalLiteral("1.178e-16"), kRoundedRel) &&
                    !near(est, decimalLiteral("1.1783e-16"), makeRational(1, 10000));
         }},
        {3, 5, 6, "3.112260817e-3", "distance to a_30 at N=5 printed with exponent e-2; the a_40 column reads e-3",
         [] {
             const auto& t = reference::table3();
             return std::string(t[4][7]) == "3.112260817e-3";
         }},
        {3, 23, 4, "6.475e-8", "q_23 printed 6.475e-7; delta_23 times the printed norms is 6.475e-8",
         [] {
             const auto& t = reference::table3();
             const Rational est = printedAt(t, 23, 1) * printedAt(t, 23, 2) * printedAt(t, 23, 3);
             return near(est, decimalLiteral("6.475e-8"), kRoundedRel);
         }},
        {3, 8, 2, nullptr, "norm_inv_plus at N=8 repeats the N=7 entry digit for digit",
         [] {
             const auto& t = reference::table3();
             return std::string(t[7][2]) == t[6][2];
         }},
    };
    return list;
}

// The table with the errata applied; lists them once per table.
std::vector<reference::Row> effectiveTable(int id) {
    std::vector<reference::Row> t = id == 1 ? reference::table1() : id == 3 ? reference::table3() : reference::table5();
    for (const Erratum& e : errata()) {
        if (e.table != id) continue;
        const bool ok = e.evidence();
        std::printf("  erratum ex6%d table N=%d: %s; %s\n", id == 1 ? 1 : id == 3 ? 2 : 3, e.N, e.reason,
                    ok ? (e.use ? "using the corrected value" : "cell dropped") : "evidence not found, kept as printed");
        if (ok) t.at(static_cast<size_t>(e.N - 1)).at(e.col) = e.use;
    }
    return t;
}

std::optional<Rational> val(const std::optional<UpperBound>& b) {
    if (!b) return std::nullopt;
    return b->value;
}

int rowN(const reference::Row& r) { return std::stoi(r[0]); }

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Reproductions are shared between criteria run in the same process.
const Reproduction& reproduction(const std::string& key, const ExampleFamily& family) {
    static std::map<std::string, Reproduction> cache;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ReproductionOptions opt;
    opt.nMax = 30;
    opt.nAlt = 30;
    opt.nRef = 40;
    auto t0 = std::chrono::steady_clock::now();
    Reproduction r = reproduce(family, opt);
    std::printf("  [%s reproduced N=1..30 against a_40 in %.1f s]\n", key.c_str(), seconds(t0));
    return cache.emplace(key, std::move(r)).first->second;
}

const Reproduction& ex61() { return reproduction("ex61", defaultFamily(FamilyId::ex61)); }
const Reproduction& ex62() { return reproduction("ex62", defaultFamily(FamilyId::ex62)); }
const Reproduction& ex63() { return reproduction("ex63", defaultFamily(FamilyId::ex63)); }

const ReproductionRow& row(const Reproduction& r, int N) { return r.rows.at(static_cast<size_t>(N - 1)); }

std::optional<int> firstGammaAtMostOne(const Reproduction& r) {
    for (const auto& x : r.rows)
        if (x.accuracy.gammaN && x.accuracy.gammaN->value <= 1) return x.criterion.N;
    return std::nullopt;
}

std::string firstText(const std::optional<int>& n) { return n ? std::to_string(*n) : std::string("none"); }

bool indicesFrom(const Reproduction& r, int from, int rho1, int rho2, std::string& note) {
    for (const auto& x : r.rows) {
        if (x.criterion.N < from) continue;
        if (x.criterion.rho1 != rho1 || x.criterion.rho2 != rho2) {
            note = "N=" + std::to_string(x.criterion.N) + " has (" + std::to_string(x.criterion.rho1) + "," +
                   std::to_string(x.criterion.rho2) + ")";
            return false;
        }
    }
    return true;
}

bool report(int c, bool ok, const std::string& summary) {
    std::printf("criterion %d: %s %s\n", c, ok ? "PASS" : "FAIL", summary.c_str());
    std::fflush(stdout);
    return ok;
}

bool criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    const Reproduction& r = ex61();
    Tally t;
    for (const auto& p : effectiveTable(1)) {
        const int N = rowN(p);
        if (N > 30) continue;
        const ReproductionRow& x = row(r, N);
        t.compare("delta_N", N, x.criterion.deltaN.value, p[1]);
        t.compare("norm_inv_plus", N, val(x.criterion.normInvPlus), p[2]);
        t.compare("norm_inv_minus", N, val(x.criterion.normInvMinus), p[3]);
        t.compare("q_N", N, val(x.criterion.qN), p[4]);
        t.compare("gamma_N", N, val(x.accuracy.gammaN), p[5]);
    }
    t.print("ex61 reference table (delta_N, norms, q_N, gamma_N)");
    std::string note;
    const bool idx = indicesFrom(r, 1, 0, 0, note);
    const auto first = firstCertified([&] {
        std::vector<CriterionReport> v;
        for (const auto& x : r.rows) v.push_back(x.criterion);
        return v;
    }());
    std::printf("  indices (0,0) for all N: %s %s\n", idx ? "yes" : "no", note.c_str());
    std::printf("  first certified N = %s (expected 6)\n", firstText(first).c_str());
    const double secs = seconds(t0);
    std::printf("  runtime %.1f s (limit 300 s)\n", secs);
    return report(1, t.misses.empty() && idx && first == 6 && secs < 300,
                  "ex61 reference table, first certification N=" + firstText(first));
}

bool criterion2() {
    const Reproduction& r = ex61();
    const AccuracyReport& a = row(r, 15).accuracy;
    bool ok = a.deltaPlus && a.deltaMinus;
    auto roundedMatch = [&](const std::optional<UpperBound>& b, const char* printed) {
        if (!b) return false;
        const Rational rounded = roundSignificant(b->value, 4);
        const Rational p = decimalLiteral(printed);
        const bool m = abs(rounded - p) <= kRoundedRel * p;
        std::printf("  %s: ours %s, rounded %s, printed %s: %s\n", printed == std::string("1.275e-3") ? "delta_plus(15)" : "delta_minus(15)",
                    sci(b->value).c_str(), sci(rounded, 4).c_str(), printed, m ? "match" : "differ");
        return m;
    };
    ok = roundedMatch(a.deltaPlus, "1.275e-3") && ok;
    ok = roundedMatch(a.deltaMinus, "3.490e-4") && ok;
    const auto g = firstGammaAtMostOne(r);
    std::printf("  gamma_N <= 1 first at N = %s (expected 11)\n", firstText(g).c_str());
    ok = ok && g == 11;
    int sandwiches = 0;
    std::vector<std::string> broken;
    for (const auto& x : r.rows) {
        auto check = [&](const char* side, const std::optional<UpperBound>& dist, const std::optional<UpperBound>& bound) {
            if (!dist || !bound) return;
            ++sandwiches;
            if (dist->value > bound->value)
                broken.push_back(std::string(side) + " N=" + std::to_string(x.criterion.N) + ": " + sci(dist->value) +
                                 " > " + sci(bound->value));
        };
        check("plus", x.plusToRef, x.accuracy.deltaPlus);
        check("minus", x.minusToRef, x.accuracy.deltaMinus);
    }
    std::printf("  sandwich ||a_pm^(40) - a_pm^(N)|| <= delta_pm^(N): %d checked, %zu violated\n", sandwiches,
                broken.size());
    for (const auto& b : broken) std::printf("    %s\n", b.c_str());
    Tally t;
    for (const auto& p : reference::table2()) {
        const int N = rowN(p);
        if (N > 30) continue;
        const ReproductionRow& x = row(r, N);
        t.compare("plus_to_a40", N, val(x.plusToRef), p[3]);
        t.compare("minus_to_a40", N, val(x.minusToRef), p[4]);
    }
    t.print("ex61 factor distance table (informational)");
    ok = ok && broken.empty() && sandwiches > 0;
    return report(2, ok, "ex61 factor accuracy at N=15, gamma threshold, sandwich");
}

bool criterion3() {
    const ExampleFamily f = defaultFamily(FamilyId::ex61);
    const FactorisationResult n = pNormalise(rightFactorise(truncate(f.streams, 15)));
    std::vector<ListingEntry> listing = ex61FactorListing();
    const CoefficientCheckReport asPrinted = factorCoefficientCheck(n, listing);
    std::printf("  as printed: max deviation %s, unlisted nonzero coefficients %d\n",
                sci(asPrinted.maxDeviation.value, 4).c_str(), asPrinted.unlisted);
    // Two typesetting errors in the listing; every other entry is used verbatim.
    int corrected = 0;
    for (auto& e : listing) {
        if (e.row == 1 && e.col == 1 && e.power == -4 && std::string(e.value) == "-0.1000600220e-4") {
            e.value = "-0.1000600220e-3";
            std::printf("  correction: (1,1) t^-4 printed -0.1000600220e-4, exponent read as e-3\n");
            ++corrected;
        }
        if (e.row == 2 && e.col == 1 && e.power == -7 && !e.imaginary) {
            e.imaginary = true;
            std::printf("  correction: (2,1) t^-7 printed without its factor i\n");
            ++corrected;
        }
    }
    const CoefficientCheckReport c = factorCoefficientCheck(n, listing);
    std::printf("  corrected: %zu coefficients, max deviation %s, unlisted nonzero coefficients %d\n", c.items.size(),
                sci(c.maxDeviation.value, 4).c_str(), c.unlisted);
    const bool ok = corrected == 2 && c.maxDeviation.value <= kListingAbs && c.unlisted == 0;
    return report(3, ok, "ex61 normalised a_-^(15) listing within 1e-8");
}

bool criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    const Reproduction& r = ex62();
    Tally t;
    int skipped = 0;
    for (const auto& p : effectiveTable(3)) {
        const int N = rowN(p);
        if (N > 30) continue;
        const ReproductionRow& x = row(r, N);
        t.compare("delta_N", N, x.criterion.deltaN.value, p[1]);
        t.compare("norm_inv_plus", N, val(x.criterion.normInvPlus), p[2]);
        t.compare("norm_inv_minus", N, val(x.criterion.normInvMinus), p[3]);
        if (x.criterion.qN) {
            t.compare("q_N", N, val(x.criterion.qN), p[4]);
            t.compare("gamma_N", N, val(x.accuracy.gammaN), p[5]);
        } else {
            skipped += (p[4] != nullptr) + (p[5] != nullptr);
        }
        t.compare("dist_a30", N, x.distAlt.value, p[6]);
        t.compare("dist_a40", N, x.distRef.value, p[7]);
    }
    t.print("ex62 reference table");
    if (skipped)
        std::printf("  %d printed q_N/gamma_N cells belong to unstable truncations and are not computed\n", skipped);
    std::string note;
    const bool idx = indicesFrom(r, 3, 3, 3, note);
    std::printf("  indices (3,3) for N >= 3: %s %s\n", idx ? "yes" : "no", note.c_str());
    std::vector<CriterionReport> v;
    for (const auto& x : r.rows) v.push_back(x.criterion);
    const auto first = firstCertified(v);
    std::printf("  first certified N = %s (expected 12)\n", firstText(first).c_str());
    const AccuracyReport& a30 = row(r, 30).accuracy;
    // The stated limits are printed to four digits; ours is compared after the same rounding.
    const bool plusOk = a30.deltaPlus && roundSignificant(a30.deltaPlus->value, 4) <= decimalLiteral("3.012e-3");
    const bool minusOk = a30.deltaMinus && roundSignificant(a30.deltaMinus->value, 4) <= decimalLiteral("5.474e-7");
    std::printf("  delta_plus(30) = %s (<= 3.012e-3 at 4 digits: %s)\n", sci(a30.deltaPlus).c_str(),
                plusOk ? "yes" : "no");
    std::printf("  delta_minus(30) = %s (<= 5.474e-7 at 4 digits: %s)\n", sci(a30.deltaMinus).c_str(),
                minusOk ? "yes" : "no");
    std::printf("  gamma_N <= 1 first at N = %s\n", firstText(firstGammaAtMostOne(r)).c_str());
    const double secs = seconds(t0);
    std::printf("  runtime %.1f s (limit 900 s)\n", secs);
    return report(4, t.misses.empty() && idx && first == 12 && plusOk && minusOk && secs < 900,
                  "ex62 reference table, first certification N=" + firstText(first));
}

void table5Compare(const Reproduction& r, Tally& t) {
    for (const auto& p : reference::table5()) {
        const int N = rowN(p);
        if (N > 30) continue;
        const ReproductionRow& x = row(r, N);
        t.compare("delta_N", N, x.criterion.deltaN.value, p[1]);
        t.compare("norm_inv_plus", N, val(x.criterion.normInvPlus), p[2]);
        t.compare("norm_inv_minus", N, val(x.criterion.normInvMinus), p[3]);
        t.compare("q_N", N, val(x.criterion.qN), p[4]);
        t.compare("dist_a30", N, x.distAlt.value, p[5]);
        t.compare("dist_a40", N, x.distRef.value, p[6]);
    }
}

bool criterion5() {
    const Reproduction& r = ex63();
    Tally t;
    table5Compare(r, t);
    t.print("ex63 reference table at k1=1, k2=1/2");
    std::string note;
    const bool idx = indicesFrom(r, 3, -4, -3, note);
    std::printf("  indices (-4,-3) for N >= 3: %s %s\n", idx ? "yes" : "no", note.c_str());
    std::vector<CriterionReport> v;
    for (const auto& x : r.rows) v.push_back(x.criterion);
    const auto first = firstCertified(v);
    std::printf("  first certified N = %s (expected 24)\n", firstText(first).c_str());
    bool unavailable = true;
    for (const auto& x : r.rows) unavailable = unavailable && x.accuracy.availableFlags() == "none";
    std::printf("  factor accuracy unavailable for every N: %s (%s)\n", unavailable ? "yes" : "no",
                row(r, 30).accuracy.reason.c_str());

    // Diagnostic: the printed norms and distances fit k1=1/5, k2=1, while the
    // printed delta_N is the closed form at k1=1, k2=1/2.
    const Reproduction& h = reproduction("ex63 k1=1/5 k2=1", ex63Streams(makeRational(1, 5), Rational(1), -7));
    Tally th;
    std::optional<int> hybridFirst;
    for (const auto& p : reference::table5()) {
        const int N = rowN(p);
        if (N > 30) continue;
        const ReproductionRow& x = row(h, N);
        th.compare("norm_inv_plus", N, val(x.criterion.normInvPlus), p[2]);
        th.compare("norm_inv_minus", N, val(x.criterion.normInvMinus), p[3]);
        th.compare("dist_a30", N, x.distAlt.value, p[5]);
        th.compare("dist_a40", N, x.distRef.value, p[6]);
        if (x.criterion.normInvPlus) {
            const UpperBound q = qN(row(r, N).criterion.deltaN, *x.criterion.normInvPlus, *x.criterion.normInvMinus,
                                    sigmaOf(-7));
            th.compare("hybrid q_N", N, q.value, p[4]);
            if (!hybridFirst && q.value < 1) hybridFirst = N;
        }
    }
    th.print("diagnostic: ex63 reference table against k1=1/5, k2=1 norms and distances with the k1=1, k2=1/2 delta_N");
    std::printf("  diagnostic: that combination first gives q_N < 1 at N = %s\n", firstText(hybridFirst).c_str());
    return report(5, t.misses.empty() && idx && first == 24 && unavailable,
                  "ex63 reference table, first certification N=" + firstText(first));
}

bool criterion6() {
    bool ok = true;
    struct Case {
        const char* name;
        const Reproduction* r;
        const std::vector<reference::Row>* table;
        size_t a30, a40;
    };
    const std::vector<reference::Row> t1 = effectiveTable(1), t3 = effectiveTable(3), t5 = effectiveTable(5);
    const Case cases[] = {{"ex61", &ex61(), &t1, 6, 7}, {"ex62", &ex62(), &t3, 6, 7}, {"ex63", &ex63(), &t5, 5, 6}};
    for (const Case& c : cases) {
        int violated = 0;
        for (const auto& x : c.r->rows)
            if (x.distRef.value > x.criterion.deltaN.value) {
                ++violated;
                std::printf("    %s N=%d: ||a_40 - a_N|| = %s > delta_N = %s\n", c.name, x.criterion.N,
                            sci(x.distRef.value).c_str(), sci(x.criterion.deltaN.value).c_str());
            }
        std::printf("  %s: ||a_40 - a_N|| <= delta_N for N=1..30: %s\n", c.name, violated ? "no" : "yes");
        Tally t;
        for (const auto& p : *c.table) {
            const int N = rowN(p);
            if (N > 30) continue;
            t.compare("dist_a30", N, row(*c.r, N).distAlt.value, p[c.a30]);
            t.compare("dist_a40", N, row(*c.r, N).distRef.value, p[c.a40]);
        }
        t.print((std::string(c.name) + " distance columns").c_str());
        ok = ok && violated == 0 && t.misses.empty();
    }
    std::printf("  e.g. ex61 N=1: %s\n", sci(row(ex61(), 1).distRef.value).c_str());
    return report(6, ok, "truncation sandwich and distance columns for all three families");
}

// Property suite.

LaurentMatrix2 withIndices(Generator& g, int r1, int r2) {
    LaurentMatrix2 minus = LaurentMatrix2(g.invertibleConstant()) * g.elementary(-2, 0) * g.elementary(-2, 0);
    LaurentMatrix2 plus = g.elementary(0, 2) * g.elementary(0, 2) * LaurentMatrix2(g.invertibleConstant());
    return minus * LaurentMatrix2::diagMonomial(r1, r2) * plus;
}

LaurentMatrix2 randomTwist(Generator& g, bool equal) {
    if (equal) return LaurentMatrix2(g.invertibleConstant());
    return LaurentMatrix2(g.nonzero(), LaurentScalar(-1, {g.nonzero(), g.nonzero()}), 0, g.nonzero());
}

bool criterion7() {
    Generator g(20260101);
    bool ok = true;

    int refactored = 0, lawOk = 0;
    for (int n = 0; n < 200; ++n) {
        const LaurentMatrix2 a = g.monomialDetMatrix(6);
        const FactorisationResult r = rightFactorise(a);
        if (verifyFactorisation(a, r).passed() && r.product() == a) ++refactored;
        bool law = true;
        for (const auto& d : indexDimensionProfile(a, r.rho1 - 2, r.rho2 + 2))
            law = law && d.dimension == expectedKernelDimension(r.rho1, r.rho2, d.k);
        lawOk += law;
    }
    std::printf("  refactorisation identity: %d / 200\n", refactored);
    std::printf("  kernel-dimension law: %d / 200\n", lawOk);
    ok = ok && refactored == 200 && lawOk == 200;

    const std::pair<int, int> patterns[] = {{0, 0}, {3, 3}, {-2, -1}, {0, 1}};
    for (auto [r1, r2] : patterns) {
        const FactorisationResult r = rightFactorise(withIndices(g, r1, r2));
        const FactorisationResult ref = pNormalise(r);
        int same = 0;
        for (int k = 0; k < 100; ++k) {
            const FactorisationResult n = pNormalise(ambiguityTwist(r, randomTwist(g, r1 == r2)));
            same += n.aMinus == ref.aMinus && n.aPlus == ref.aPlus;
        }
        std::printf("  normalisation uniqueness, indices (%d,%d): %d / 100 twists\n", r1, r2, same);
        ok = ok && same == 100 && r.rho1 == r1 && r.rho2 == r2;
    }

    int models = 0, monotone = 0;
    for (int n = 0; n < 20; ++n) {
        const Rational k1 = makeRational(g.uniform(1, 9), 10);
        const Rational k2 = makeRational(g.uniform(11, 60), 10);
        ExampleFamily f = n % 3 == 0 ? ex61Streams(k1, k2)
                        : n % 3 == 1 ? ex62Streams(k1, k2, g.uniform(0, 3))
                                     : ex63Streams(k1, k2, g.uniform(-5, 5));
        const BoundContext ctx{(1 + k1) / 2, n % 3 == 0 ? k2 : (1 + k2) / 2, makeRational(1, 100)};
        Rational prev = deltaN(f.streams, 1, ctx).value;
        bool mono = true;
        for (int N = 2; N <= 25; ++N) {
            const Rational d = deltaN(f.streams, N, ctx).value;
            mono = mono && d <= prev;
            prev = d;
        }
        ++models;
        monotone += mono;
    }
    for (int n = 0; n < 10; ++n) {
        std::vector<GaussianRational> a, b;
        for (int k = 0; k < 8; ++k) a.push_back(g.uniform(0, 1) ? g.nonzero() : GaussianRational());
        for (int k = 0; k < 8; ++k) b.push_back(g.uniform(0, 1) ? g.nonzero() : GaussianRational());
        StreamModel m{CoefficientStream::finite(StreamSide::plus, a), CoefficientStream::finite(StreamSide::minus, b), 0};
        const BoundContext ctx{makeRational(1, 2), Rational(2), makeRational(1, 100)};
        Rational prev = deltaN(m, 1, ctx).value;
        bool mono = true;
        for (int N = 2; N <= 10; ++N) {
            const Rational d = deltaN(m, N, ctx).value;
            mono = mono && d <= prev;
            prev = d;
        }
        mono = mono && prev == 0;
        ++models;
        monotone += mono;
    }
    std::printf("  delta_N nonincreasing in N: %d / %d stream models\n", monotone, models);
    ok = ok && monotone == models;

    int enclosed = 0;
    for (int n = 0; n < 1000; ++n) {
        const Rational tol = Rational(1) / Rational(pow10(static_cast<unsigned>(g.uniform(3, 30))));
        const Rational x = makeRational(g.uniform(-4000, 4000), g.uniform(1, 997));
        bool in = false;
        switch (n % 3) {
            case 0: {
                const Rational q = abs(x);
                in = encloses(sqrtUpperBound(q, tol), sqrt(toRef(q)));
                break;
            }
            case 1: {
                const Rational e = x / 40;
                in = encloses(expUpperBound(e, tol), exp(toRef(e)));
                break;
            }
            default: {
                const Rational y = makeRational(g.uniform(-4000, 4000), g.uniform(1, 997));
                in = encloses(absUpperBound(GaussianRational(x, y), tol), sqrt(toRef(x * x + y * y)));
            }
        }
        enclosed += in;
    }
    std::printf("  sqrt/exp/abs enclosures against 50-digit references: %d / 1000\n", enclosed);
    ok = ok && enclosed == 1000;
    return report(7, ok, "property suite");
}

}  // namespace

int main(int argc, char** argv) {
    const std::function<bool()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                              criterion5, criterion6, criterion7};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
    if (which.empty())
        for (int c = 1; c <= 7; ++c) which.push_back(c);
    bool all = true;
    for (int c : which) {
        if (c < 1 || c > 7) {
            std::fprintf(stderr, "no criterion %d\n", c);
            return 2;
        }
        try {
            all = criteria[c - 1]() && all;
        } catch (const std::exception& e) {
            all = report(c, false, std::string("error: ") + e.what()) && all;
        }
    }
    return all ? 0 : 1;
}
