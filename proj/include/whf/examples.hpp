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
#include <string>
#include <vector>

#include "whf/accuracy.hpp"
#include "whf/criterion.hpp"

namespace whf {

enum class FamilyId { ex61, ex62, ex63 };

FamilyId parseFamilyId(const std::string& s);
std::string toString(FamilyId id);

struct ExampleFamily {
    FamilyId id = FamilyId::ex61;
    Rational k1, k2;
    int theta = 0;
    StreamModel streams;
    // The (zeta1, zeta2) used for the published tables.
    BoundContext referenceContext;
    // delta_N at referenceContext in closed form; only for the default parameters.
    std::function<UpperBound(int N, const Rational& relTol)> closedFormDelta;
};

// alpha = sqrt(k2^2 - t^2), beta = t^{-2} sqrt(k1^2 - t^2), theta = 0.
ExampleFamily ex61Streams(const Rational& k1, const Rational& k2);
// alpha = e^{k2 t}, beta = (k1^2 + t^2)^{-1/2}, theta = 2 nu.
ExampleFamily ex62Streams(const Rational& k1, const Rational& k2, int nu);
// alpha = e^{k2 t}, beta = t^{-1} e^{k1 / t}.
ExampleFamily ex63Streams(const Rational& k1, const Rational& k2, int theta);

ExampleFamily defaultFamily(FamilyId id);

struct ReproductionOptions {
    int nMax = 30;
    int nAlt = 30;  // second reference truncation for the distance columns
    int nRef = 40;
    std::optional<BoundContext> context;  // referenceContext when absent
    bool optimizeZeta = false;            // per-N zeta search instead of a fixed pair
    Rational epsilon{1, 100};
    NormaliseMode normalise = NormaliseMode::automatic;
    Rational relTol = defaultTolerance();
    int jobs = 1;
};

struct ReproductionRow {
    CriterionReport criterion;
    AccuracyReport accuracy;
    UpperBound normAN;
    std::optional<UpperBound> normPlus;
    UpperBound distAlt;  // ||a_nAlt - a_N||
    UpperBound distRef;  // ||a_nRef - a_N||
    std::optional<UpperBound> plusToRef, minusToRef;  // ||a_pm^(nRef) - a_pm^(N)||
    std::optional<UpperBound> plusStep, minusStep;    // ||a_pm^(N) - a_pm^(N-1)||
};

struct Reproduction {
    ExampleFamily family;
    ReproductionOptions options;
    BoundContext context;
    std::vector<ReproductionRow> rows;
    FactorisationResult reference;  // normalised factors of a_nRef
};

Reproduction reproduce(const ExampleFamily& family, const ReproductionOptions& options);

// criterion.csv, accuracy.csv, distances.csv, factor_distances.csv and
// plot_<column>.csv (N, log10 value). Each file starts with the given
// '#'-prefixed provenance lines.
std::vector<std::string> writeReproduction(const Reproduction& r, const std::string& outDir,
                                           const std::vector<std::string>& provenance);

// One listed coefficient: entry (row, col), coefficient of t^power.
struct ListingEntry {
    int row;
    int col;
    int power;
    const char* value;  // decimal as printed
    bool imaginary;
};

// Normalised a_-^(15) of the first family at the default parameters, 10 digits.
const std::vector<ListingEntry>& ex61FactorListing();

struct CoefficientComparison {
    ListingEntry entry;
    GaussianRational listed;
    GaussianRational computed;
    UpperBound deviation;
};

struct CoefficientCheckReport {
    std::vector<CoefficientComparison> items;
    UpperBound maxDeviation;
    // Nonzero computed coefficients that the listing does not mention.
    int unlisted = 0;
};

GaussianRational listingValue(const ListingEntry& e);

CoefficientCheckReport factorCoefficientCheck(const FactorisationResult& normalised,
                                              const std::vector<ListingEntry>& listing);
CoefficientCheckReport factorCoefficientCheck(FamilyId id, int N);

}  // namespace whf
