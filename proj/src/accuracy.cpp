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

#include "whf/accuracy.hpp"

#include <sstream>

#include "whf/criterion.hpp"

namespace whf {

namespace {

const UpperBound kOne = UpperBound::exact(1);

}  // namespace

std::string AccuracyReport::availableFlags() const {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ';';
        s += name;
    };
    add(deltaInvPlus.has_value(), "delta_inv_plus");
    add(deltaMinus.has_value(), "delta_minus");
    add(deltaPlus.has_value(), "delta_plus");
    return s.empty() ? "none" : s;
}

std::optional<UpperBound> perturbedInverseBound(const UpperBound& normAinv, const UpperBound& normDiff,
                                                const UpperBound& q) {
    if (!(q.value < 1)) return std::nullopt;
    return normAinv * normAinv * normDiff / (kOne - q);
}

AccuracyReport generalCanonicalBounds(const UpperBound& normA, const UpperBound& normA0,
                                      const UpperBound& normAplusInv, const UpperBound& normAminusInv,
                                      const UpperBound& normAplus, const UpperBound& normDiff, const UpperBound& q) {
    AccuracyReport rep;
    const UpperBound nn = normAplusInv * normAminusInv;
    if (!(q.value < 1) || sgn(q.lower()) <= 0) {
        rep.reason = "q must satisfy 0 < q < 1";
        return rep;
    }
    if ((normDiff * nn).value > q.lower()) {
        rep.reason = "perturbation exceeds q / (||A_+^{-1}|| ||A_-^{-1}||)";
        return rep;
    }
    const UpperBound oneMinusQ = kOne - q;
    const UpperBound nn2 = nn * nn;
    rep.deltaInvPlus = normA0 * nn2 * normDiff / oneMinusQ;
    rep.deltaMinus = (normAplusInv + normA0 * normA * nn2 / oneMinusQ + q * normA0 * nn / oneMinusQ) * normDiff;
    // Item (iii) needs the smaller radius.
    const UpperBound radius = q * oneMinusQ / (nn * normA0 * normAminusInv * normAplus * normAplusInv);
    if (normDiff.value <= radius.lower()) {
        rep.deltaPlus = normA0 * normAplus * normAplus * nn2 * normDiff / (oneMinusQ * oneMinusQ);
    } else {
        rep.reason = "perturbation exceeds the radius required for ||A_+ - A~_+||";
    }
    return rep;
}

AccuracyReport cor51Bounds(const UpperBound& deltaN, const UpperBound& normAN, const UpperBound& normInvPlus,
                           const UpperBound& normInvMinus, const UpperBound& normPlus) {
    AccuracyReport rep;
    const UpperBound nn = normInvPlus * normInvMinus;
    const UpperBound nn2 = nn * nn;
    const UpperBound q = deltaN * nn;
    rep.gammaN = Rational(4) * (deltaN * normPlus * nn2);
    if (!(q.value < 1)) {
        rep.reason = "q_N >= 1";
        return rep;
    }
    const UpperBound oneMinusQ = kOne - q;
    rep.deltaInvPlus = nn2 * deltaN / oneMinusQ;
    rep.deltaMinus = (normInvPlus + normAN * nn2 / oneMinusQ + q * nn / oneMinusQ) * deltaN;
    const UpperBound oneMinusGamma = kOne - *rep.gammaN;
    if (sgn(oneMinusGamma.lower()) <= 0) {
        rep.reason = "gamma_N > 1";
        return rep;
    }
    rep.qPlusN = Rational(1, 2) * (kOne - sqrtUpperBound(oneMinusGamma));
    const UpperBound oneMinusQPlus = kOne - *rep.qPlusN;
    rep.deltaPlus = normPlus * normPlus * nn2 * deltaN / (oneMinusQPlus * oneMinusQPlus);
    return rep;
}

AccuracyReport oddThetaAccuracy(int theta) {
    AccuracyReport rep;
    rep.reason = "odd theta = " + std::to_string(theta) + ": no factor accuracy bounds for unequal indices";
    return rep;
}

AccuracyReport factorAccuracy(int theta, const UpperBound& deltaN, const UpperBound& normAN,
                              const UpperBound& normInvPlus, const UpperBound& normInvMinus,
                              const UpperBound& normPlus) {
    if (theta % 2 != 0) return oddThetaAccuracy(theta);
    AccuracyReport rep = cor51Bounds(deltaN, normAN, normInvPlus, normInvMinus, normPlus);
    // t^{-nu} is an isometry of W, so the numbers carry over unchanged.
    rep.shift = theta / 2;
    return rep;
}

std::string accuracyCsv(const std::vector<AccuracyRow>& rows, int digits) {
    std::ostringstream os;
    os << "N,delta_plus,delta_minus,gamma_N,q_plus_N,available_flags\n";
    auto opt = [&](const std::optional<UpperBound>& b) { return b ? formatBound(*b, digits) : std::string(); };
    for (const auto& r : rows)
        os << r.N << ',' << opt(r.report.deltaPlus) << ',' << opt(r.report.deltaMinus) << ','
           << opt(r.report.gammaN) << ',' << opt(r.report.qPlusN) << ',' << r.report.availableFlags() << '\n';
    return os.str();
}

}  // namespace whf
