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

#include "boost_ref.hpp"
#include "reference_tables.hpp"
#include "test_util.hpp"
#include "whf/errors.hpp"

using namespace whf;
using namespace whf::testing;

namespace {

bool close(const Rational& a, const Rational& b, const Rational& rel) { return abs(a - b) <= rel * abs(b); }

}  // namespace

TEST_CASE("zero and finite streams") {
    CoefficientStream z = CoefficientStream::zeroStream(StreamSide::minus);
    TailBounds t = tailNormBounds(z, makeRational(1, 2), 3);
    CHECK(t.norm.value == 0);
    CHECK(t.tail.value == 0);
    CHECK(truncateStream(z, 4).isZero());

    CoefficientStream f = CoefficientStream::finite(StreamSide::plus, {1, 0, GaussianRational(3, 4)});
    CHECK(truncateStream(f, 1) == LaurentScalar(1));
    CHECK(truncateStream(f, 5) == LaurentScalar(0, {1, 0, GaussianRational(3, 4)}));
    CHECK(tailNormBounds(f, Rational(2), 1).tail.value == 5);
    CHECK(tailNormBounds(f, Rational(2), 2).tail.value == 0);
    CHECK(tailNormBounds(f, Rational(2), 0).norm.value == 6);

    CoefficientStream b = CoefficientStream::finite(StreamSide::minus, {GaussianRational(0, 2), 1});
    CHECK(truncateStream(b, 2) == LaurentScalar(-2, {1, GaussianRational(0, 2)}));

    StreamModel m{f, b, 0};
    const BoundContext ctx{makeRational(1, 2), Rational(2), makeRational(1, 100)};
    CHECK(deltaN(m, 2, ctx).value == 0);
    CHECK(deltaN(m, 1, ctx).value == 27);
    // det of every truncation is t^theta
    for (int N = 1; N <= 3; ++N) CHECK(det2(truncate(m, N)) == LaurentScalar(1));
    m.alpha.approximationBudget = makeRational(1, 1000);
    m.beta.approximationBudget = makeRational(1, 1000);
    // 2/1000 (1 + 6) + 3/1000 (1 + 3 + 2/1000)
    CHECK(deltaN(m, 2, ctx).value == makeRational(13003, 500000));
}

TEST_CASE("majorants of the example families") {
    ExampleFamily f3 = defaultFamily(FamilyId::ex63);
    UpperBound M = f3.streams.beta.majorant(makeRational(1, 10), makeRational(1, 1000000000));
    CHECK(encloses(M, 10 * exp(Ref(10))));
    CHECK_FALSE(f3.streams.beta.admissible(Rational(0)));
    CHECK(f3.streams.beta.admissible(makeRational(1, 1000)));
    CHECK_THROWS_AS(tailNormBounds(f3.streams.alpha, Rational(1), 3), InadmissibleRadius);

    ExampleFamily f1 = defaultFamily(FamilyId::ex61);
    CHECK(f1.streams.alpha.admissible(Rational(5)));
    CHECK_FALSE(f1.streams.alpha.admissible(makeRational(51, 10)));
    CHECK(f1.streams.beta.admissible(makeRational(1, 5)));
    CHECK_FALSE(f1.streams.beta.admissible(makeRational(1, 6)));

    ExampleFamily f2 = defaultFamily(FamilyId::ex62);
    CHECK_FALSE(f2.streams.beta.admissible(makeRational(1, 5)));
    CHECK(f2.streams.alpha.admissible(Rational(1000)));
}

TEST_CASE("delta_N against the closed forms") {
    const Rational rel = makeRational(1, 1000000000000LL);
    for (FamilyId id : {FamilyId::ex61, FamilyId::ex62, FamilyId::ex63}) {
        ExampleFamily f = defaultFamily(id);
        REQUIRE(f.closedFormDelta);
        for (int N : {1, 6, 12, 24}) {
            UpperBound d = deltaN(f.streams, N, f.referenceContext);
            CHECK(close(d.value, f.closedFormDelta(N, defaultTolerance()).value, rel));
        }
    }
    ExampleFamily f1 = defaultFamily(FamilyId::ex61);
    for (int N : {6, 12, 24}) {
        const char* printed = reference::table1()[static_cast<size_t>(N - 1)][1];
        CHECK(matchesPrinted(deltaN(f1.streams, N, f1.referenceContext).value, printed));
    }
}

TEST_CASE("delta_N decreases in N") {
    for (FamilyId id : {FamilyId::ex61, FamilyId::ex62, FamilyId::ex63}) {
        ExampleFamily f = defaultFamily(id);
        Rational prev = deltaN(f.streams, 1, f.referenceContext).value;
        for (int N = 2; N <= 30; ++N) {
            Rational d = deltaN(f.streams, N, f.referenceContext).value;
            CHECK(d < prev);
            prev = d;
        }
    }
}

TEST_CASE("zeta search") {
    ExampleFamily f1 = defaultFamily(FamilyId::ex61);
    ZetaChoice z = optimizeZeta(f1.streams, 10, makeRational(1, 100));
    CHECK(z.zeta1 == makeRational(1, 5));
    CHECK(z.zeta2 == 5);
    CHECK(z.delta.value <= deltaN(f1.streams, 10, BoundContext{makeRational(1, 2), Rational(2), makeRational(1, 100)}).value);
    CHECK_THROWS_AS(optimizeZeta(f1.streams, 10, Rational(0)), DomainError);

    ExampleFamily f3 = defaultFamily(FamilyId::ex63);
    ZetaChoice z3 = optimizeZeta(f3.streams, 20, makeRational(1, 100));
    CHECK(z3.delta.value <= deltaN(f3.streams, 20, f3.referenceContext).value);
    CHECK(z3.zeta2 <= 16);
}

TEST_CASE("truncation distances") {
    ExampleFamily f1 = defaultFamily(FamilyId::ex61);
    const LaurentMatrix2 a30 = truncate(f1.streams, 30);
    CHECK(matchesPrinted(truncationDistance(a30, truncate(f1.streams, 1)).value, "3.252250175e-1"));
    CHECK(det2(truncate(f1.streams, 7)) == LaurentScalar(1));

    ExampleFamily f2 = defaultFamily(FamilyId::ex62);
    CHECK(det2(truncate(f2.streams, 5)) == mono(1, 6));
    CHECK(matchesPrinted(truncationDistance(truncate(f2.streams, 30), truncate(f2.streams, 12)).value,
                         "3.854190119e-9"));
    CHECK_THROWS_AS(truncateStream(f2.streams.alpha, -1), DomainError);
}
