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

#include <functional>
#include <optional>

#include "whf/bounds.hpp"
#include "whf/laurent.hpp"

namespace whf {

enum class StreamSide { plus, minus };

// Power series alpha_+(t) = sum_{n>=0} c_n t^n (plus side) or
// beta_-(t) = sum_{n>=1} c_n t^{-n} (minus side), analytic on an annulus and
// bounded there by a certified majorant M(zeta).
struct CoefficientStream {
    StreamSide side = StreamSide::plus;
    // plus: n >= 0 gives the t^n coefficient; minus: n >= 1 gives the t^{-n} one.
    std::function<GaussianRational(int)> coefficient;
    // plus: r2, nullopt meaning infinity; minus: r1 >= 0.
    std::optional<Rational> radius;
    // zeta may sit on the radius itself.
    bool closed = false;
    std::function<UpperBound(const Rational& zeta, const Rational& relTol)> majorant;
    // Set when coefficient() returns approximations within this distance of
    // the true coefficients.
    std::optional<Rational> approximationBudget;
    bool zero = false;
    // Last nonzero index of a finite series; the tails are then summed exactly.
    std::optional<int> support;

    static CoefficientStream zeroStream(StreamSide side);
    // Finite series: plus coefficients from t^0 upward, minus from t^{-1} downward.
    static CoefficientStream finite(StreamSide side, std::vector<GaussianRational> coeffs);

    bool admissible(const Rational& zeta) const;
};

struct StreamModel {
    CoefficientStream alpha;  // plus side
    CoefficientStream beta;   // minus side
    int theta = 0;
};

struct BoundContext {
    Rational zeta1{1, 2};
    Rational zeta2{2};
    Rational epsilon{1, 100};
};

// Powers 0..N of alpha and -N..-1 of beta.
LaurentScalar truncateStream(const CoefficientStream& s, int N);

// [[1, beta_N], [alpha_N, t^theta + alpha_N beta_N]].
LaurentMatrix2 truncate(const StreamModel& m, int N);

struct TailBounds {
    UpperBound norm;  // ||stream||_W
    UpperBound tail;  // ||stream - stream_N||_W
};

TailBounds tailNormBounds(const CoefficientStream& s, const Rational& zeta, int N,
                          const Rational& relTol = defaultTolerance());

// Certified bound on ||a - a_N||_W.
UpperBound deltaN(const StreamModel& m, int N, const BoundContext& ctx, const Rational& relTol = defaultTolerance());

struct GridSpec {
    int coarse = 32;
    int refine = 9;
    int rounds = 2;
    Rational zeta2Cap{16};
};

struct ZetaChoice {
    Rational zeta1;
    Rational zeta2;
    UpperBound delta;
};

// Best grid point of [lo1, 1 - eps] x [1 + eps, hi2]; endpoints at closed
// radii are included, open ones are pulled in by eps.
ZetaChoice optimizeZeta(const StreamModel& m, int N, const Rational& epsilon, const GridSpec& grid = {},
                        const Rational& relTol = defaultTolerance());

// ||aN0 - aN||_W.
UpperBound truncationDistance(const LaurentMatrix2& aN0, const LaurentMatrix2& aN,
                              const Rational& relTol = defaultTolerance());

}  // namespace whf
