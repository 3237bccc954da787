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

#include <string>
#include <vector>

#include "whf/laurent.hpp"

namespace whf {

enum class Normalisation { raw, minusAtInfinityIdentity, I2, J2 };

std::string toString(Normalisation n);

// a = aMinus * diag(t^rho1, t^rho2) * aPlus.
struct FactorisationResult {
    LaurentMatrix2 aMinus;
    int rho1 = 0;
    int rho2 = 0;
    LaurentMatrix2 aPlus;
    Normalisation normalisation = Normalisation::raw;

    bool stable() const { return rho2 - rho1 <= 1; }
    LaurentMatrix2 product() const;
};

struct VerificationReport {
    bool productIdentity = false;
    bool supports = false;
    bool constantDeterminants = false;
    bool indexSum = false;

    bool passed() const { return productIdentity && supports && constantDeterminants && indexSum; }
    std::string describe() const;
};

using VectorPoly = std::array<LaurentScalar, 2>;

struct KernelSlice {
    int level = 0;
    int degreeCap = 0;
    std::vector<VectorPoly> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Polynomial vectors phi of degree <= D such that a*phi has no powers in
// (k, pmax(a) + D]. Exact Gaussian elimination over Q(i).
KernelSlice kernelSlice(const LaurentMatrix2& a, int k, int degreeCap);

// Degree cap that makes kernelSlice(a, k, cap) the full kernel at level k.
int kernelDegreeCap(const LaurentMatrix2& a, int k);

struct KernelDimension {
    int k = 0;
    int dimension = 0;
};

std::vector<KernelDimension> indexDimensionProfile(const LaurentMatrix2& a, int kFrom, int kTo);

// sum_i max(0, k - rho_i + 1).
int expectedKernelDimension(int rho1, int rho2, int k);

// Exact right factorisation by column reduction of t^q a. Indices sorted,
// result verified; throws NotMonomialDet / VerificationFailed.
FactorisationResult rightFactorise(const LaurentMatrix2& a);

VerificationReport verifyFactorisation(const LaurentMatrix2& a, const FactorisationResult& r);

}  // namespace whf
