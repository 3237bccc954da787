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

#include <optional>
#include <string>
#include <vector>

#include "whf/normalisation.hpp"
#include "whf/tail_bounds.hpp"

namespace whf {

enum class Verdict { certifiedStable, notCertified, unstableTruncation };

std::string toString(Verdict v);

struct CriterionReport {
    int N = 0;
    UpperBound deltaN;
    Rational zeta1, zeta2;
    std::optional<UpperBound> normInvPlus;   // absent for unstable truncations
    std::optional<UpperBound> normInvMinus;
    int sigma = 1;
    std::optional<UpperBound> qN;
    int rho1 = 0, rho2 = 0;
    Verdict verdict = Verdict::notCertified;
    FactorisationResult factors;  // normalised when the mode allows
    LaurentMatrix2 aN;
};

// 1 for even theta, 2 for odd.
int sigmaOf(int theta);

UpperBound qN(const UpperBound& deltaN, const UpperBound& normInvPlus, const UpperBound& normInvMinus, int sigma);

struct CertifyOptions {
    int nFrom = 1;
    int nTo = 30;
    // Fixed (zeta1, zeta2); when absent zeta is optimised per N.
    std::optional<BoundContext> context;
    Rational epsilon{1, 100};
    GridSpec grid;
    NormaliseMode normalise = NormaliseMode::automatic;
    Rational relTol = defaultTolerance();
    int jobs = 1;
};

// truncate -> factorise -> index pattern -> inverse norms -> q_N, per N.
std::vector<CriterionReport> certifyStability(const StreamModel& m, const CertifyOptions& opt);

std::optional<int> firstCertified(const std::vector<CriterionReport>& reports);

// Header: N,delta_N,norm_inv_plus,norm_inv_minus,sigma,q_N,rho1,rho2,verdict
std::string criterionCsv(const std::vector<CriterionReport>& reports, int digits = 10);

// Decimal rendering used in every CSV: value rounded up to `digits`
// significant digits so the printed number is still an upper bound.
std::string formatBound(const UpperBound& b, int digits = 10);

}  // namespace whf
