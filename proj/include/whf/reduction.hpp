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

#pragma once

#include <utility>

#include "whf/laurent.hpp"

namespace whf {

// Scalar factorisations a11 = a11Minus t^kappa a11Plus and
// det A = deltaMinus t^{theta + 2 kappa} deltaPlus, supplied by the caller.
struct ScalarFactorisationData {
    LaurentScalar a11Minus = 1;
    LaurentScalar a11Plus = 1;
    int kappa = 0;
    LaurentScalar deltaMinus = 1;
    LaurentScalar deltaPlus = 1;
    int theta = 0;
};

struct ReductionResult {
    LaurentMatrix2 a;  // [[1, betaMinus], [alphaPlus, t^theta + alphaPlus betaMinus]]
    int kappa = 0;
    int theta = 0;
    LaurentMatrix2 outerMinus;
    LaurentMatrix2 outerPlus;
    LaurentScalar alphaPlus;
    LaurentScalar betaMinus;
};

// A = t^kappa outerMinus a outerPlus. Divisions are exact or throw
// NonExactDivision; inconsistent scalar data throws DomainError.
ReductionResult reduceToAForm(const LaurentMatrix2& A, const ScalarFactorisationData& s);

// (kappa + rho1, kappa + rho2).
std::pair<int, int> recomposeIndices(int kappa, int rho1, int rho2);

// theta = 2 nu -> (nu, nu); theta = 2 nu + 1 -> (nu, nu + 1).
std::pair<int, int> stablePattern(int theta);

}  // namespace whf
