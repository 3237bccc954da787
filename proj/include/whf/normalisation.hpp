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

#include "whf/factor_engine.hpp"

namespace whf {

enum class PermutationType { I2, J2 };

struct LUPair {
    Matrix2 L0;  // unit lower-triangular
    Matrix2 U0;  // invertible upper-triangular
    PermutationType permutation = PermutationType::I2;
};

// I2: L0 U0 = A0. J2: L0 U0 = J A0 with J = [[0,1],[1,0]].
// Throws NormalisationUnavailable on a zero pivot.
LUPair luDecompose(const Matrix2& A0, PermutationType mode);

enum class NormaliseMode { automatic, i2, j2, minusInfinityIdentity, none };

NormaliseMode parseNormaliseMode(const std::string& s);
std::string toString(NormaliseMode m);

// Unique factors for a stable factorisation. Equal indices: aMinus(inf) = I.
// Indices differing by one: I2 (or J2) normalisation built from the LU
// factors of aMinus(inf). Automatic mode picks I2 when its pivot is nonzero.
FactorisationResult pNormalise(const FactorisationResult& r, NormaliseMode mode = NormaliseMode::automatic);

// (aMinus H, D^{-1} H^{-1} D aPlus). Equal indices need a constant invertible
// H; indices differing by one need H = [[a, c + b/t], [0, d]] with a, d != 0.
FactorisationResult ambiguityTwist(const FactorisationResult& r, const LaurentMatrix2& H);

}  // namespace whf
