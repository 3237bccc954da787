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

#include "whf/normalisation.hpp"

#include "whf/errors.hpp"

namespace whf {

namespace {

const Matrix2 kJ = Matrix2::of(0, 1, 1, 0);

// X(i,j) t^{rho_j - rho_i}, i.e. D^{-1} X D.
LaurentMatrix2 conjugateByIndices(const LaurentMatrix2& x, int rho1, int rho2) {
    int rho[2] = {rho1, rho2};
    LaurentMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = x(i, j).shifted(rho[j] - rho[i]);
    return r;
}

FactorisationResult checked(const FactorisationResult& original, FactorisationResult r) {
    if (!(r.product() == original.product()) || !r.aMinus.isMinusType() || !r.aPlus.isPlusType())
        throw VerificationFailed("normalised factors do not reproduce the input");
    return r;
}

bool isConstant(const LaurentScalar& s) { return s.isZero() || (s.pmin() == 0 && s.pmax() == 0); }

}  // namespace

LUPair luDecompose(const Matrix2& A0, PermutationType mode) {
    Matrix2 B = mode == PermutationType::J2 ? kJ * A0 : A0;
    if (B(0, 0).isZero())
        throw NormalisationUnavailable(mode == PermutationType::J2 ? "J2 pivot (A0)21 is zero"
                                                                   : "I2 pivot (A0)11 is zero");
    GaussianRational l = B(1, 0) / B(0, 0);
    LUPair lu;
    lu.permutation = mode;
    lu.L0 = Matrix2::of(1, 0, l, 1);
    lu.U0 = Matrix2::of(B(0, 0), B(0, 1), 0, B(1, 1) - l * B(0, 1));
    if (lu.U0(1, 1).isZero()) throw NormalisationUnavailable("limiting matrix is singular");
    return lu;
}

NormaliseMode parseNormaliseMode(const std::string& s) {
    if (s == "auto") return NormaliseMode::automatic;
    if (s == "i2") return NormaliseMode::i2;
    if (s == "j2") return NormaliseMode::j2;
    if (s == "minus-infinity-identity") return NormaliseMode::minusInfinityIdentity;
    if (s == "none") return NormaliseMode::none;
    throw ParseError("unknown normalisation mode '" + s + "'");
}

std::string toString(NormaliseMode m) {
    switch (m) {
        case NormaliseMode::automatic: return "auto";
        case NormaliseMode::i2: return "i2";
        case NormaliseMode::j2: return "j2";
        case NormaliseMode::minusInfinityIdentity: return "minus-infinity-identity";
        case NormaliseMode::none: return "none";
    }
    return "auto";
}

FactorisationResult pNormalise(const FactorisationResult& r, NormaliseMode mode) {
    if (mode == NormaliseMode::none) return r;
    if (!r.stable()) throw NormalisationUnavailable("indices differ by more than one");
    const Matrix2 A0 = valueAtInfinity(r.aMinus);
    FactorisationResult out = r;
    if (r.rho1 == r.rho2) {
        out.aMinus = r.aMinus * LaurentMatrix2(A0.inverse());
        out.aPlus = LaurentMatrix2(A0) * r.aPlus;
        out.normalisation = Normalisation::minusAtInfinityIdentity;
        return checked(r, std::move(out));
    }
    if (mode == NormaliseMode::minusInfinityIdentity)
        throw NormalisationUnavailable("aMinus(inf) = I needs equal indices");
    PermutationType perm = PermutationType::I2;
    if (mode == NormaliseMode::j2 || (mode == NormaliseMode::automatic && A0(0, 0).isZero()))
        perm = PermutationType::J2;
    const LUPair lu = luDecompose(A0, perm);
    const LaurentMatrix2 B = perm == PermutationType::J2 ? LaurentMatrix2(kJ) * r.aMinus : r.aMinus;
    const Matrix2 B0 = B.coefficient(0), B1 = B.coefficient(-1);
    const Matrix2 Uinv = lu.U0.inverse();
    const GaussianRational c = -((B1 * Uinv)(0, 1) / B0(0, 0));
    LaurentMatrix2 Q(Uinv);
    Q(0, 1) += LaurentScalar::monomial(c, -1);
    out.aMinus = r.aMinus * Q;
    out.aPlus = conjugateByIndices(invertUnimodular(Q), r.rho1, r.rho2) * r.aPlus;
    out.normalisation = perm == PermutationType::J2 ? Normalisation::J2 : Normalisation::I2;
    return checked(r, std::move(out));
}

FactorisationResult ambiguityTwist(const FactorisationResult& r, const LaurentMatrix2& H) {
    if (r.rho1 == r.rho2) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!isConstant(H(i, j))) throw DomainError("equal-index twist must be constant");
    } else if (r.rho2 == r.rho1 + 1) {
        bool ok = H(1, 0).isZero() && isConstant(H(0, 0)) && isConstant(H(1, 1)) && !H(0, 0).isZero() &&
                  !H(1, 1).isZero() && (H(0, 1).isZero() || (H(0, 1).pmin() >= -1 && H(0, 1).pmax() <= 0));
        if (!ok) throw DomainError("twist must be [[a, c + b/t], [0, d]] with a, d != 0");
    } else {
        throw DomainError("twists are defined for stable index pairs only");
    }
    FactorisationResult out = r;
    out.aMinus = r.aMinus * H;
    out.aPlus = conjugateByIndices(invertMonomialDet(H), r.rho1, r.rho2) * r.aPlus;
    out.normalisation = Normalisation::raw;
    if (!out.aPlus.isPlusType()) throw DomainError("twist does not preserve the plus factor");
    return checked(r, std::move(out));
}

}  // namespace whf
