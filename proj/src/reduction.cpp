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

#include "whf/reduction.hpp"

#include "whf/errors.hpp"

namespace whf {

ReductionResult reduceToAForm(const LaurentMatrix2& A, const ScalarFactorisationData& s) {
    if (A(0, 0).isZero()) throw DomainError("a11 vanishes identically");
    const LaurentScalar delta = det2(A);
    if (delta.isZero()) throw DomainError("det A vanishes identically");
    if (!(s.a11Minus * s.a11Plus.shifted(s.kappa) == A(0, 0)))
        throw DomainError("scalar data does not reproduce a11");
    if (!(s.deltaMinus * s.deltaPlus.shifted(s.theta + 2 * s.kappa) == delta))
        throw DomainError("scalar data does not reproduce det A");
    if (!s.a11Minus.isZero() && s.a11Minus.pmax() > 0) throw DomainError("a11Minus has positive powers");
    if (!s.deltaMinus.isZero() && s.deltaMinus.pmax() > 0) throw DomainError("deltaMinus has positive powers");
    if (!s.a11Plus.isZero() && s.a11Plus.pmin() < 0) throw DomainError("a11Plus has negative powers");
    if (!s.deltaPlus.isZero() && s.deltaPlus.pmin() < 0) throw DomainError("deltaPlus has negative powers");

    const LaurentScalar alpha = divideExact(s.a11Minus * A(1, 0), (s.deltaMinus * s.a11Plus).shifted(s.kappa));
    const LaurentScalar beta = divideExact(s.a11Plus * A(0, 1), (s.deltaPlus * s.a11Minus).shifted(s.kappa));
    const LaurentScalar m22 =
        divideExact(A(1, 1) * s.a11Minus * s.a11Plus, (s.deltaMinus * s.deltaPlus).shifted(s.kappa));

    // The (2,1) and (1,2) entries of a need the strictly negative parts.
    const LaurentScalar alphaMinus = alpha.projectMinusZero();
    const LaurentScalar betaPlus = beta.projectPlus();

    ReductionResult r;
    r.kappa = s.kappa;
    r.theta = s.theta;
    const LaurentMatrix2 middle(1, beta, alpha, m22);
    r.a = LaurentMatrix2(1, 0, -alphaMinus, 1) * middle * LaurentMatrix2(1, -betaPlus, 0, 1);
    r.alphaPlus = alpha.projectPlus();
    r.betaMinus = beta.projectMinusZero();

    const LaurentMatrix2 expected(1, r.betaMinus, r.alphaPlus,
                                  LaurentScalar::monomial(1, s.theta) + r.alphaPlus * r.betaMinus);
    if (!(r.a == expected)) throw VerificationFailed("reduced matrix is not of the expected shape");

    r.outerMinus = LaurentMatrix2(s.a11Minus, 0, divideExact(s.deltaMinus * alphaMinus, s.a11Minus),
                                  divideExact(s.deltaMinus, s.a11Minus));
    r.outerPlus = LaurentMatrix2(s.a11Plus, divideExact(s.deltaPlus * betaPlus, s.a11Plus), 0,
                                 divideExact(s.deltaPlus, s.a11Plus));
    if (!((r.outerMinus * r.a * r.outerPlus).shifted(s.kappa) == A))
        throw VerificationFailed("reduction does not reassemble A");
    return r;
}

std::pair<int, int> recomposeIndices(int kappa, int rho1, int rho2) { return {kappa + rho1, kappa + rho2}; }

std::pair<int, int> stablePattern(int theta) {
    int nu = theta >= 0 ? theta / 2 : -((-theta + 1) / 2);
    return theta - 2 * nu == 0 ? std::make_pair(nu, nu) : std::make_pair(nu, nu + 1);
}

}  // namespace whf
