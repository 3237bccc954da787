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

#include "whf/bounds.hpp"

#include <algorithm>
#include <utility>

#include "whf/errors.hpp"

namespace whf {

namespace {

unsigned bitLength(const Integer& z) { return static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

unsigned bitLength(const Rational& x) {
    return std::max(bitLength(x.get_num()), bitLength(x.get_den()));
}

// Bits b with 2^-b <= relTol.
unsigned toleranceBits(const Rational& relTol) {
    if (sgn(relTol) <= 0) throw DomainError("tolerance must be positive");
    return bitLength(ceilOf(1 / relTol)) + 1;
}

bool isPerfectSquare(const Integer& z) { return mpz_perfect_square_p(z.get_mpz_t()) != 0; }

Integer isqrt(const Integer& z) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

Rational dyadic(const Integer& m, long shift) {
    Rational r(m);
    if (shift >= 0)
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(shift));
    else
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-shift));
    return r;
}

// [lo, hi] around sqrt(q), q > 0, with hi - lo <= 2^-k.
std::pair<Rational, Rational> sqrtEnclosure(const Rational& q, long k) {
    Rational scaled = q;
    if (2 * k >= 0)
        mpq_mul_2exp(scaled.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(2 * k));
    else
        mpq_div_2exp(scaled.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-2 * k));
    Integer s = isqrt(floorOf(scaled));
    return {dyadic(s, k), dyadic(s + 1, k)};
}

// [lo, hi] around exp(x) for x >= 0, working at `bits` bits.
std::pair<Rational, Rational> expEnclosure(const Rational& x, unsigned bits) {
    // Halve until y <= 1/2, then square back.
    unsigned s = 0;
    Rational y = x;
    while (y > Rational(1, 2)) {
        mpq_div_2exp(y.get_mpq_t(), y.get_mpq_t(), 1);
        ++s;
    }
    const unsigned work = bits + 2 * s + 16;
    Rational eps = dyadic(Integer(1), static_cast<long>(work));
    // Lower and upper partial sums; the periodic rounding goes outward on each.
    Rational sumLo = 1, termLo = 1, sumHi = 1, termHi = 1;
    long n = 0;
    while (true) {
        ++n;
        termLo *= y;
        termLo /= n;
        termHi *= y;
        termHi /= n;
        sumLo += termLo;
        sumHi += termHi;
        // Remainder after degree n: y^{n+1}/(n+1)! / (1 - y/(n+2)).
        Rational next = termHi * y / (n + 1);
        Rational rem = next / (1 - y / (n + 2));
        if (rem <= eps) {
            Rational lo = roundDown(sumLo, work), hi = roundUp(sumHi + rem, work);
            for (unsigned i = 0; i < s; ++i) {
                lo = roundDown(lo * lo, work);
                hi = roundUp(hi * hi, work);
            }
            return {lo, hi};
        }
        if (n % 8 == 0) {
            sumLo = roundDown(sumLo, work + 8);
            termLo = roundDown(termLo, work + 8);
            sumHi = roundUp(sumHi, work + 8);
            termHi = roundUp(termHi, work + 8);
        }
    }
}

}  // namespace

std::string toString(BoundKind k) {
    switch (k) {
        case BoundKind::exact: return "exact";
        case BoundKind::sqrt: return "sqrt";
        case BoundKind::exp: return "exp";
        case BoundKind::abs: return "abs";
        case BoundKind::composite: return "composite";
    }
    return "composite";
}

UpperBound UpperBound::enclosure(const Rational& lo, const Rational& hi, BoundKind k) {
    if (hi < lo) throw DomainError("inverted enclosure");
    if (hi == lo) return {hi, Rational(0), BoundKind::exact};
    return {hi, hi - lo, k};
}

Rational defaultTolerance() { return makeRational(Integer(1), pow10(15)); }

UpperBound sqrtUpperBound(const Rational& q, const Rational& relTol) {
    if (sgn(q) < 0) throw DomainError("sqrt of a negative number");
    if (sgn(q) == 0) return UpperBound::exact(0);
    if (isPerfectSquare(q.get_num()) && isPerfectSquare(q.get_den()))
        return UpperBound::exact(makeRational(isqrt(q.get_num()), isqrt(q.get_den())));
    long lq = static_cast<long>(bitLength(q.get_num())) - static_cast<long>(bitLength(q.get_den()));
    // sqrt(q) >= 2^((lq - 2) / 2 - 1).
    long k = static_cast<long>(toleranceBits(relTol)) - (lq - 2) / 2 + 2;
    while (true) {
        auto [lo, hi] = sqrtEnclosure(q, k);
        if (sgn(lo) > 0 && hi - lo <= relTol * lo) return UpperBound::enclosure(lo, hi, BoundKind::sqrt);
        ++k;
    }
}

UpperBound sqrtUpperBound(const UpperBound& q, const Rational& relTol) {
    if (q.isExact()) return sqrtUpperBound(q.value, relTol);
    UpperBound hi = sqrtUpperBound(q.value, relTol);
    Rational lo = q.lower();
    Rational loRoot = sgn(lo) <= 0 ? Rational(0) : sqrtUpperBound(lo, relTol).lower();
    return UpperBound::enclosure(loRoot, hi.value, BoundKind::composite);
}

UpperBound expUpperBound(const Rational& x, const Rational& relTol) {
    if (sgn(x) == 0) return UpperBound::exact(1);
    unsigned bits = toleranceBits(relTol) + 8;
    while (true) {
        Rational lo, hi;
        if (sgn(x) > 0) {
            std::tie(lo, hi) = expEnclosure(x, bits);
        } else {
            auto [l, h] = expEnclosure(-x, bits);
            lo = roundDown(1 / h, bits + 16);
            hi = roundUp(1 / l, bits + 16);
        }
        if (hi - lo <= relTol * lo) return UpperBound::enclosure(lo, hi, BoundKind::exp);
        bits += 32;
    }
}

UpperBound absUpperBound(const GaussianRational& z, const Rational& relTol) {
    if (z.isReal()) return UpperBound::exact(abs(z.re()));
    if (sgn(z.re()) == 0) return UpperBound::exact(abs(z.im()));
    UpperBound r = sqrtUpperBound(z.normSquared(), relTol);
    if (!r.isExact()) r.kind = BoundKind::abs;
    return r;
}

UpperBound compact(const UpperBound& a, unsigned bits) {
    Rational lo = a.lower();
    bool big = bitLength(a.value) > bits + 64 || bitLength(lo) > bits + 64;
    if (!big) return a;
    UpperBound r = UpperBound::enclosure(roundDown(lo, bits), roundUp(a.value, bits),
                                         a.kind == BoundKind::exact ? BoundKind::composite : a.kind);
    return r;
}

static BoundKind combine(const UpperBound& a, const UpperBound& b) {
    if (a.isExact() && b.isExact()) return BoundKind::exact;
    return BoundKind::composite;
}

UpperBound operator+(const UpperBound& a, const UpperBound& b) {
    return compact(UpperBound::enclosure(a.lower() + b.lower(), a.value + b.value, combine(a, b)));
}

UpperBound operator-(const UpperBound& a, const UpperBound& b) {
    return compact(UpperBound::enclosure(a.lower() - b.value, a.value - b.lower(), combine(a, b)));
}

UpperBound operator*(const UpperBound& a, const UpperBound& b) {
    Rational la = a.lower(), lb = b.lower();
    if (sgn(la) < 0) la = 0;
    if (sgn(lb) < 0) lb = 0;
    return compact(UpperBound::enclosure(la * lb, a.value * b.value, combine(a, b)));
}

UpperBound operator/(const UpperBound& a, const UpperBound& b) {
    Rational lb = b.lower();
    if (sgn(lb) <= 0) throw DomainError("divisor enclosure is not strictly positive");
    Rational la = a.lower();
    if (sgn(la) < 0) la = 0;
    return compact(UpperBound::enclosure(la / b.value, a.value / lb, combine(a, b)));
}

UpperBound operator*(const Rational& c, const UpperBound& a) {
    if (sgn(c) < 0) throw DomainError("negative scale of an upper bound");
    return compact(UpperBound{c * a.value, c * a.tolerance, a.kind});
}

UpperBound powBound(const UpperBound& a, unsigned e) {
    UpperBound r = UpperBound::exact(1);
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

}  // namespace whf
