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

#include <doctest.h>

#include "test_util.hpp"

using namespace whf;
using namespace whf::testing;

namespace {

UpperBound ex(long p, long q = 1) { return UpperBound::exact(makeRational(p, q)); }

}  // namespace

TEST_CASE("exact data gives zero errors") {
    AccuracyReport r = cor51Bounds(ex(0), ex(3), ex(2), ex(5), ex(4));
    REQUIRE(r.deltaPlus);
    CHECK(r.deltaPlus->value == 0);
    CHECK(r.deltaMinus->value == 0);
    CHECK(r.deltaInvPlus->value == 0);
    CHECK(r.gammaN->value == 0);
    CHECK(r.availableFlags() == "delta_inv_plus;delta_minus;delta_plus");

    AccuracyReport g = generalCanonicalBounds(ex(3), ex(1), ex(2), ex(2), ex(2), ex(0), ex(1, 2));
    REQUIRE(g.deltaPlus);
    CHECK(g.deltaPlus->value == 0);
    CHECK(perturbedInverseBound(ex(2), ex(0), ex(1, 2))->value == 0);
    CHECK_FALSE(perturbedInverseBound(ex(2), ex(1), ex(1)).has_value());
}

TEST_CASE("thresholds") {
    // q = 1/10 * 2 * 5 = 1
    AccuracyReport big = cor51Bounds(ex(1, 10), ex(3), ex(2), ex(5), ex(4));
    CHECK_FALSE(big.deltaMinus.has_value());
    CHECK(big.availableFlags() == "none");
    CHECK_FALSE(big.reason.empty());
    // q = 1/100 but gamma = 4 * 1/1000 * 4 * 100 > 1
    AccuracyReport mid = cor51Bounds(ex(1, 1000), ex(3), ex(2), ex(5), ex(4));
    CHECK(mid.deltaMinus.has_value());
    CHECK_FALSE(mid.deltaPlus.has_value());
    CHECK(mid.gammaN->value == makeRational(8, 5));

    AccuracyReport odd = factorAccuracy(-7, ex(0), ex(1), ex(1), ex(1), ex(1));
    CHECK(odd.availableFlags() == "none");
    CHECK(odd.reason.find("odd") != std::string::npos);
    CHECK(factorAccuracy(6, ex(0), ex(1), ex(1), ex(1), ex(1)).shift == 3);
}

TEST_CASE("bounds grow with delta_N") {
    Rational prev = 0;
    for (long k = 1; k <= 10; ++k) {
        AccuracyReport r = cor51Bounds(ex(k, 100000), ex(3), ex(2), ex(5), ex(4));
        REQUIRE(r.deltaPlus);
        CHECK(r.deltaPlus->value > prev);
        CHECK(r.deltaMinus->value < r.deltaPlus->value * 100);
        prev = r.deltaPlus->value;
    }
}

TEST_CASE("first family at N = 15") {
    ExampleFamily f = defaultFamily(FamilyId::ex61);
    CertifyOptions opt;
    opt.nFrom = opt.nTo = 15;
    opt.context = f.referenceContext;
    CriterionReport c = certifyStability(f.streams, opt).at(0);
    AccuracyReport r = factorAccuracy(0, c.deltaN, wienerNormUpperBound(c.aN), *c.normInvPlus, *c.normInvMinus,
                                      wienerNormUpperBound(c.factors.aPlus));
    REQUIRE(r.deltaPlus);
    // Printed to four digits; 3.4905e-4 sits on the rounding boundary.
    CHECK(abs(roundSignificant(r.deltaPlus->value, 4) - decimalLiteral("1.275e-3")) <= decimalLiteral("1.275e-6"));
    CHECK(abs(roundSignificant(r.deltaMinus->value, 4) - decimalLiteral("3.490e-4")) <= decimalLiteral("3.490e-7"));
    CHECK(r.gammaN->value < 1);
}
