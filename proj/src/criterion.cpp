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

#include "whf/criterion.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "whf/errors.hpp"
#include "whf/reduction.hpp"

namespace whf {

std::string toString(Verdict v) {
    switch (v) {
        case Verdict::certifiedStable: return "CERTIFIED_STABLE";
        case Verdict::notCertified: return "NOT_CERTIFIED";
        case Verdict::unstableTruncation: return "UNSTABLE_TRUNCATION";
    }
    return "NOT_CERTIFIED";
}

int sigmaOf(int theta) { return theta % 2 == 0 ? 1 : 2; }

UpperBound qN(const UpperBound& deltaN, const UpperBound& normInvPlus, const UpperBound& normInvMinus, int sigma) {
    return Rational(sigma) * (deltaN * normInvPlus * normInvMinus);
}

static CriterionReport certifyOne(const StreamModel& m, int N, const CertifyOptions& opt) {
    CriterionReport rep;
    rep.N = N;
    rep.sigma = sigmaOf(m.theta);
    rep.aN = truncate(m, N);
    if (opt.context) {
        rep.zeta1 = opt.context->zeta1;
        rep.zeta2 = opt.context->zeta2;
        rep.deltaN = deltaN(m, N, *opt.context, opt.relTol);
    } else {
        ZetaChoice z = optimizeZeta(m, N, opt.epsilon, opt.grid, opt.relTol);
        rep.zeta1 = z.zeta1;
        rep.zeta2 = z.zeta2;
        rep.deltaN = z.delta;
    }
    FactorisationResult r = rightFactorise(rep.aN);
    rep.rho1 = r.rho1;
    rep.rho2 = r.rho2;
    if (!r.stable() || std::make_pair(r.rho1, r.rho2) != stablePattern(m.theta)) {
        rep.factors = r;
        rep.verdict = Verdict::unstableTruncation;
        return rep;
    }
    rep.factors = pNormalise(r, opt.normalise);
    rep.normInvPlus = wienerNormUpperBound(invertUnimodular(rep.factors.aPlus), opt.relTol);
    rep.normInvMinus = wienerNormUpperBound(invertUnimodular(rep.factors.aMinus), opt.relTol);
    rep.qN = qN(rep.deltaN, *rep.normInvPlus, *rep.normInvMinus, rep.sigma);
    rep.verdict = rep.qN->value < 1 ? Verdict::certifiedStable : Verdict::notCertified;
    return rep;
}

std::vector<CriterionReport> certifyStability(const StreamModel& m, const CertifyOptions& opt) {
    if (opt.nFrom < 0 || opt.nTo < opt.nFrom) throw DomainError("empty N range");
    std::vector<CriterionReport> out(static_cast<size_t>(opt.nTo - opt.nFrom + 1));
    const int jobs = std::max(1, opt.jobs);
    // Strided assignment keeps the expensive large-N rows spread over workers.
    std::vector<std::future<void>> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [&, w] {
            for (int N = opt.nFrom + w; N <= opt.nTo; N += jobs)
                out[static_cast<size_t>(N - opt.nFrom)] = certifyOne(m, N, opt);
        }));
    }
    for (auto& f : workers) f.get();
    return out;
}

std::optional<int> firstCertified(const std::vector<CriterionReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::certifiedStable) return r.N;
    return std::nullopt;
}

std::string formatBound(const UpperBound& b, int digits) { return toScientific(b.value, digits, Rounding::up); }

std::string criterionCsv(const std::vector<CriterionReport>& reports, int digits) {
    std::ostringstream os;
    os << "N,delta_N,norm_inv_plus,norm_inv_minus,sigma,q_N,rho1,rho2,verdict\n";
    auto opt = [&](const std::optional<UpperBound>& b) { return b ? formatBound(*b, digits) : std::string(); };
    for (const auto& r : reports) {
        os << r.N << ',' << formatBound(r.deltaN, digits) << ',' << opt(r.normInvPlus) << ','
           << opt(r.normInvMinus) << ',' << r.sigma << ',' << opt(r.qN) << ',' << r.rho1 << ',' << r.rho2 << ','
           << toString(r.verdict) << '\n';
    }
    return os.str();
}

}  // namespace whf
