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

#include "whf/bounds.hpp"

namespace whf {

struct AccuracyReport {
    std::optional<UpperBound> deltaInvPlus;  // ||a_+^{-1} - (a_+^{(N)})^{-1}||
    std::optional<UpperBound> deltaMinus;    // ||a_- - a_-^{(N)}||
    std::optional<UpperBound> deltaPlus;     // ||a_+ - a_+^{(N)}||
    std::optional<UpperBound> gammaN;
    std::optional<UpperBound> qPlusN;
    int shift = 0;       // nu when the bounds were taken for t^{-nu} a
    std::string reason;  // why items are missing

    std::string availableFlags() const;
};

// ||A^{-1} - A~^{-1}|| <= ||A^{-1}||^2 ||A - A~|| / (1 - q); nullopt unless q < 1.
std::optional<UpperBound> perturbedInverseBound(const UpperBound& normAinv, const UpperBound& normDiff,
                                                const UpperBound& q);

// Perturbation bounds for a canonical factorisation A = A_- A_+ with
// A_-(inf) = A0, valid while ||A - A~|| ||A_+^{-1}|| ||A_-^{-1}|| <= q < 1.
// deltaInvPlus, deltaMinus and deltaPlus carry items (i), (ii), (iii).
AccuracyReport generalCanonicalBounds(const UpperBound& normA, const UpperBound& normA0,
                                      const UpperBound& normAplusInv, const UpperBound& normAminusInv,
                                      const UpperBound& normAplus, const UpperBound& normDiff, const UpperBound& q);

// Bounds for the factors of a from those of a_N (equal indices, aMinus(inf) = I).
AccuracyReport cor51Bounds(const UpperBound& deltaN, const UpperBound& normAN, const UpperBound& normInvPlus,
                           const UpperBound& normInvMinus, const UpperBound& normPlus);

AccuracyReport oddThetaAccuracy(int theta);

// Even theta: cor51Bounds tagged with nu = theta/2. Odd theta: unavailable.
AccuracyReport factorAccuracy(int theta, const UpperBound& deltaN, const UpperBound& normAN,
                              const UpperBound& normInvPlus, const UpperBound& normInvMinus,
                              const UpperBound& normPlus);

struct AccuracyRow {
    int N = 0;
    AccuracyReport report;
};

// Header: N,delta_plus,delta_minus,gamma_N,q_plus_N,available_flags
std::string accuracyCsv(const std::vector<AccuracyRow>& rows, int digits = 10);

}  // namespace whf
