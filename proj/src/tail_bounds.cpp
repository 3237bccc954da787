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

#include "whf/tail_bounds.hpp"

#include <memory>

#include "whf/errors.hpp"

namespace whf {

namespace {

UpperBound exactQ(const Rational& x) { return UpperBound::exact(x); }

void requireAdmissible(const CoefficientStream& s, const Rational& zeta) {
    if (!s.admissible(zeta))
        throw InadmissibleRadius(std::string(s.side == StreamSide::plus ? "zeta2" : "zeta1") + " = " +
                                 toString(zeta) + " is outside the admissible interval");
}

std::vector<Rational> gridPoints(const Rational& lo, const Rational& hi, int count) {
    std::vector<Rational> pts;
    if (count <= 1 || lo == hi) return {lo};
    for (int i = 0; i < count; ++i) {
        Rational p = lo + (hi - lo) * Rational(i, count - 1);
        p.canonicalize();
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

CoefficientStream CoefficientStream::zeroStream(StreamSide side) {
    CoefficientStream s;
    s.side = side;
    s.coefficient = [](int) { return GaussianRational(); };
    s.radius = side == StreamSide::plus ? std::nullopt : std::optional<Rational>(Rational(0));
    s.majorant = [](const Rational&, const Rational&) { return UpperBound::exact(0); };
    s.zero = true;
    return s;
}

CoefficientStream CoefficientStream::finite(StreamSide side, std::vector<GaussianRational> coeffs) {
    bool allZero = true;
    for (const auto& c : coeffs) allZero = allZero && c.isZero();
    if (allZero) return zeroStream(side);
    CoefficientStream s;
    s.side = side;
    auto shared = std::make_shared<std::vector<GaussianRational>>(std::move(coeffs));
    const int offset = side == StreamSide::plus ? 0 : 1;
    s.coefficient = [shared, offset](int n) {
        size_t i = static_cast<size_t>(n - offset);
        return n >= offset && i < shared->size() ? (*shared)[i] : GaussianRational();
    };
    s.radius = side == StreamSide::plus ? std::nullopt : std::optional<Rational>(Rational(0));
    for (size_t i = 0; i < shared->size(); ++i)
        if (!(*shared)[i].isZero()) s.support = static_cast<int>(i) + offset;
    // max over |t| = zeta of |sum c_n t^{+-n}| <= sum |c_n| zeta^{+-n}.
    s.majorant = [shared, side, offset](const Rational& zeta, const Rational& relTol) {
        UpperBound sum = UpperBound::exact(0);
        for (size_t i = 0; i < shared->size(); ++i) {
            if ((*shared)[i].isZero()) continue;
            long n = static_cast<long>(i) + offset;
            sum = sum + pow(zeta, side == StreamSide::plus ? n : -n) * absUpperBound((*shared)[i], relTol);
        }
        return sum;
    };
    return s;
}

bool CoefficientStream::admissible(const Rational& zeta) const {
    if (zero) return true;
    if (side == StreamSide::plus) {
        if (zeta <= 1) return false;
        if (!radius) return true;
        return zeta < *radius || (closed && zeta == *radius);
    }
    Rational r1 = radius.value_or(Rational(0));
    if (sgn(zeta) <= 0 || zeta >= 1) return false;
    return zeta > r1 || (closed && zeta == r1 && sgn(r1) > 0);
}

LaurentScalar truncateStream(const CoefficientStream& s, int N) {
    if (N < 0) throw DomainError("truncation order must be nonnegative");
    if (s.zero) return {};
    std::vector<GaussianRational> c;
    if (s.side == StreamSide::plus) {
        for (int n = 0; n <= N; ++n) c.push_back(s.coefficient(n));
        return LaurentScalar(0, std::move(c));
    }
    for (int n = N; n >= 1; --n) c.push_back(s.coefficient(n));
    return LaurentScalar(-N, std::move(c));
}

LaurentMatrix2 truncate(const StreamModel& m, int N) {
    if (m.alpha.side != StreamSide::plus || m.beta.side != StreamSide::minus)
        throw DomainError("stream model needs a plus alpha and a minus beta");
    LaurentScalar alpha = truncateStream(m.alpha, N), beta = truncateStream(m.beta, N);
    LaurentMatrix2 a(1, beta, alpha, LaurentScalar::monomial(1, m.theta) + alpha * beta);
    auto d = det2(a).asMonomial();
    if (!d || d->second != m.theta || !(d->first == GaussianRational(1)))
        throw VerificationFailed("truncation determinant is not t^theta");
    return a;
}

TailBounds tailNormBounds(const CoefficientStream& s, const Rational& zeta, int N, const Rational& relTol) {
    if (s.zero) return {exactQ(0), exactQ(0)};
    requireAdmissible(s, zeta);
    if (s.support) {
        TailBounds t{exactQ(0), exactQ(0)};
        for (int n = s.side == StreamSide::plus ? 0 : 1; n <= *s.support; ++n) {
            const GaussianRational c = s.coefficient(n);
            if (c.isZero()) continue;
            const UpperBound a = absUpperBound(c, relTol);
            t.norm = t.norm + a;
            if (n > N) t.tail = t.tail + a;
        }
        return t;
    }
    const UpperBound M = s.majorant(zeta, relTol);
    if (s.side == StreamSide::plus) {
        const Rational gap = zeta - 1;
        return {(zeta / gap) * M, (1 / (pow(zeta, N) * gap)) * M};
    }
    const Rational gap = 1 - zeta;
    return {(zeta / gap) * M, (pow(zeta, N + 1) / gap) * M};
}

UpperBound deltaN(const StreamModel& m, int N, const BoundContext& ctx, const Rational& relTol) {
    const TailBounds a = tailNormBounds(m.alpha, ctx.zeta2, N, relTol);
    const TailBounds b = tailNormBounds(m.beta, ctx.zeta1, N, relTol);
    const UpperBound one = exactQ(1);
    UpperBound delta = (one + a.norm) * b.tail + (one + b.norm) * a.tail;
    // Approximate coefficients: a_N - a~_N adds
    // e_beta (1 + ||alpha||) + e_alpha (1 + ||beta|| + e_beta).
    if (m.alpha.approximationBudget || m.beta.approximationBudget) {
        UpperBound ea = exactQ(m.alpha.approximationBudget.value_or(0) * (N + 1));
        UpperBound eb = exactQ(m.beta.approximationBudget.value_or(0) * N);
        delta = delta + eb * (one + a.norm) + ea * (one + b.norm + eb);
    }
    return delta;
}

ZetaChoice optimizeZeta(const StreamModel& m, int N, const Rational& epsilon, const GridSpec& grid,
                        const Rational& relTol) {
    if (sgn(epsilon) <= 0) throw DomainError("epsilon must be positive");
    const CoefficientStream& a = m.alpha;
    const CoefficientStream& b = m.beta;
    Rational r1 = b.radius.value_or(Rational(0));
    Rational lo1 = (b.closed && sgn(r1) > 0) ? r1 : r1 + epsilon;
    Rational hi1 = 1 - epsilon;
    Rational lo2 = 1 + epsilon;
    Rational hi2 = !a.radius ? grid.zeta2Cap : (a.closed ? *a.radius : *a.radius - epsilon);
    if (b.zero) lo1 = hi1 = Rational(1, 2);
    if (a.zero) lo2 = hi2 = Rational(2);
    if (lo1 > hi1 || lo2 > hi2) throw DomainError("empty zeta rectangle for this epsilon");

    const Rational searchTol = makeRational(1, 1000000);
    auto eval = [&](const Rational& z1, const Rational& z2) {
        return deltaN(m, N, BoundContext{z1, z2, epsilon}, searchTol).value;
    };
    Rational best1 = lo1, best2 = lo2, bestVal = eval(lo1, lo2);
    auto scan = [&](const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
        for (const auto& x : xs)
            for (const auto& y : ys) {
                Rational v = eval(x, y);
                if (v < bestVal) {
                    bestVal = v;
                    best1 = x;
                    best2 = y;
                }
            }
    };
    scan(gridPoints(lo1, hi1, grid.coarse), gridPoints(lo2, hi2, grid.coarse));
    Rational h1 = (hi1 - lo1) / std::max(1, grid.coarse - 1);
    Rational h2 = (hi2 - lo2) / std::max(1, grid.coarse - 1);
    for (int round = 0; round < grid.rounds; ++round) {
        Rational a1 = std::max(lo1, Rational(best1 - h1)), b1 = std::min(hi1, Rational(best1 + h1));
        Rational a2 = std::max(lo2, Rational(best2 - h2)), b2 = std::min(hi2, Rational(best2 + h2));
        scan(gridPoints(a1, b1, grid.refine), gridPoints(a2, b2, grid.refine));
        h1 = 2 * h1 / std::max(1, grid.refine - 1);
        h2 = 2 * h2 / std::max(1, grid.refine - 1);
    }
    return {best1, best2, deltaN(m, N, BoundContext{best1, best2, epsilon}, relTol)};
}

UpperBound truncationDistance(const LaurentMatrix2& aN0, const LaurentMatrix2& aN, const Rational& relTol) {
    return wienerNormUpperBound(aN0 - aN, relTol);
}

}  // namespace whf
