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

#include "whf/rational.hpp"

#include <cctype>
#include <cstdio>

#include "whf/errors.hpp"

namespace whf {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// floor(log10 |x|) for x != 0.
long decimalExponent(const Rational& ax) {
    long e = static_cast<long>(mpz_sizeinbase(ax.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(ax.get_den_mpz_t(), 10));
    auto tenTo = [](long k) {
        return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                      : Rational(Integer(1), pow10(static_cast<unsigned>(-k)));
    };
    while (ax >= tenTo(e + 1)) ++e;
    while (ax < tenTo(e)) --e;
    return e;
}

Rational scaleByTen(const Rational& x, long k) {
    if (k >= 0) return x * Rational(pow10(static_cast<unsigned>(k)));
    Rational r = x / Rational(pow10(static_cast<unsigned>(-k)));
    r.canonicalize();
    return r;
}

Integer roundMagnitude(const Rational& ax, Rounding mode, bool negative) {
    switch (mode) {
        case Rounding::up:
            return negative ? floorOf(ax) : ceilOf(ax);
        case Rounding::down:
            return negative ? ceilOf(ax) : floorOf(ax);
        case Rounding::nearest:
        default:
            return floorOf(ax + Rational(1, 2));
    }
}

}  // namespace

Rational makeRational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational makeRational(long num, long den) { return makeRational(Integer(num), Integer(den)); }

std::string toString(const Rational& x) { return x.get_str(); }

Rational parseRational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!allDigits(num) || !allDigits(den))
        throw ParseError("not an exact rational literal: '" + std::string(text) + "'");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    if (negative) n = -n;
    return makeRational(n, d);
}

Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw DomainError("negative power of zero");
        return pow(makeRational(x.get_den(), x.get_num()), -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return makeRational(n, d);
}

Integer pow10(unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Integer floorOf(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceilOf(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

static Rational roundDyadic(const Rational& x, unsigned bits, bool up) {
    if (x == 0) return x;
    long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    long s = static_cast<long>(bits) - e;
    Rational scaled = x;
    if (s >= 0)
        mpq_mul_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(s));
    else
        mpq_div_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-s));
    Integer m = up ? ceilOf(scaled) : floorOf(scaled);
    Rational r(m);
    if (s >= 0)
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(s));
    else
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-s));
    return r;
}

Rational roundUp(const Rational& x, unsigned bits) { return roundDyadic(x, bits, true); }
Rational roundDown(const Rational& x, unsigned bits) { return roundDyadic(x, bits, false); }

Rational roundSignificant(const Rational& x, int digits, Rounding mode) {
    if (x == 0) return x;
    bool negative = sgn(x) < 0;
    Rational ax = abs(x);
    long e = decimalExponent(ax);
    Integer m = roundMagnitude(scaleByTen(ax, digits - 1 - e), mode, negative);
    Rational r = scaleByTen(Rational(m), e - (digits - 1));
    return negative ? Rational(-r) : r;
}

std::string toScientific(const Rational& x, int digits, Rounding mode) {
    if (digits < 1) digits = 1;
    if (x == 0) {
        std::string s = "0";
        if (digits > 1) s += "." + std::string(static_cast<size_t>(digits - 1), '0');
        return s + "e+00";
    }
    bool negative = sgn(x) < 0;
    Rational ax = abs(x);
    long e = decimalExponent(ax);
    Integer m = roundMagnitude(scaleByTen(ax, digits - 1 - e), mode, negative);
    if (m == pow10(static_cast<unsigned>(digits))) {
        m /= 10;
        ++e;
    }
    std::string ms = m.get_str();
    std::string out = negative ? "-" : "";
    out += ms.substr(0, 1);
    if (ms.size() > 1) out += "." + ms.substr(1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return out + buf;
}

Rational decimalLiteral(std::string_view text) {
    std::string s(text);
    long exponent = 0;
    if (auto p = s.find_first_of("eE"); p != std::string::npos) {
        exponent = std::stol(s.substr(p + 1));
        s = s.substr(0, p);
    }
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        exponent -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (!allDigits(s)) throw ParseError("bad decimal literal: '" + std::string(text) + "'");
    Rational r = scaleByTen(Rational(Integer(s, 10)), exponent);
    return negative ? Rational(-r) : r;
}

double toDouble(const Rational& x) { return x.get_d(); }

}  // namespace whf
