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
#include "whf/errors.hpp"

using namespace whf;
using namespace whf::testing;

namespace {

LaurentMatrix2 ex61A1() { return LaurentMatrix2(1, mono(I(1), -1), 5, LaurentScalar(-1, {I(5), 1})); }

std::vector<int> profile(const LaurentMatrix2& a, int from, int to) {
    std::vector<int> d;
    for (const auto& x : indexDimensionProfile(a, from, to)) d.push_back(x.dimension);
    return d;
}

}  // namespace

TEST_CASE("kernel slices") {
    CHECK(kernelSlice(LaurentMatrix2::identity(), 0, 0).dimension() == 2);
    for (int k = 0; k <= 3; ++k) CHECK(kernelSlice(LaurentMatrix2::identity(), k, k + 1).dimension() == 2 * (k + 1));
    CHECK(kernelSlice(LaurentMatrix2::diagMonomial(-1, 1), -1, 0).dimension() == 1);
}

TEST_CASE("index dimension profiles") {
    CHECK(profile(LaurentMatrix2::identity(), -2, 2) == std::vector<int>{0, 0, 2, 4, 6});
    CHECK(profile(ex61A1(), -1, 1) == std::vector<int>{0, 2, 4});
    CHECK(profile(LaurentMatrix2::diagMonomial(-1, 1), -2, 1) == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("rightFactorise on small inputs") {
    FactorisationResult id = rightFactorise(LaurentMatrix2::identity());
    CHECK(id.rho1 == 0);
    CHECK(id.rho2 == 0);
    CHECK(id.aMinus == LaurentMatrix2::identity());
    CHECK(id.aPlus == LaurentMatrix2::identity());

    FactorisationResult d = rightFactorise(LaurentMatrix2::diagMonomial(1, -1));
    CHECK(d.rho1 == -1);
    CHECK(d.rho2 == 1);
    CHECK_FALSE(d.stable());
    CHECK(d.product() == LaurentMatrix2::diagMonomial(1, -1));

    FactorisationResult r = rightFactorise(ex61A1());
    CHECK(r.rho1 == 0);
    CHECK(r.rho2 == 0);
    CHECK(r.stable());
    CHECK(verifyFactorisation(ex61A1(), r).passed());

    CHECK_THROWS_AS(rightFactorise(LaurentMatrix2(mono(1, 1) + 1, 0, 0, 1)), NotMonomialDet);
}

TEST_CASE("verification catches broken candidates") {
    LaurentMatrix2 a = LaurentMatrix2::diagMonomial(-1, 1) * LaurentMatrix2(1, mono(1, 1), 0, 1);
    FactorisationResult r = rightFactorise(a);
    CHECK(verifyFactorisation(a, r).passed());

    // Factors of diag(t^-1, t) * [[1, t], [0, 1]] with the two sides exchanged.
    FactorisationResult swapped;
    swapped.aMinus = LaurentMatrix2(1, mono(1, 1), 0, 1);
    swapped.aPlus = LaurentMatrix2::identity();
    swapped.rho1 = -1;
    swapped.rho2 = 1;
    CHECK_FALSE(verifyFactorisation(a, swapped).supports);

    FactorisationResult tampered = r;
    tampered.aPlus(0, 0) += mono(makeRational(1, 1000), 0);
    CHECK_FALSE(verifyFactorisation(a, tampered).productIdentity);
}

TEST_CASE("random monomial-determinant corpus: refactorisation and kernel law") {
    Generator g(424242);
    for (int n = 0; n < 40; ++n) {
        LaurentMatrix2 a = g.monomialDetMatrix(6);
        FactorisationResult r = rightFactorise(a);
        REQUIRE(verifyFactorisation(a, r).passed());
        CHECK(r.rho1 <= r.rho2);
        CHECK(r.rho1 + r.rho2 == monomialWinding(det2(a)).winding);
        for (const auto& d : indexDimensionProfile(a, r.rho1 - 2, r.rho2 + 2))
            CHECK(d.dimension == expectedKernelDimension(r.rho1, r.rho2, d.k));
    }
}

TEST_CASE("indices are invariant under unimodular one-sided factors") {
    Generator g(99);
    for (int n = 0; n < 20; ++n) {
        LaurentMatrix2 a = g.monomialDetMatrix(4);
        FactorisationResult r = rightFactorise(a);
        LaurentMatrix2 left = g.elementary(-3, 0) * LaurentMatrix2(g.invertibleConstant());
        LaurentMatrix2 right = g.elementary(0, 3);
        FactorisationResult s = rightFactorise(left * a * right);
        CHECK(s.rho1 == r.rho1);
        CHECK(s.rho2 == r.rho2);
    }
}
