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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace whf {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical p/q, q > 0.
Rational makeRational(const Integer& num, const Integer& den);
Rational makeRational(long num, long den = 1);

// "[-]num/den", den omitted when 1.
std::string toString(const Rational& x);

// Accepts "p", "p/q", optional sign. Decimal points and exponents are
// rejected so that every input is exact.
Rational parseRational(std::string_view text);

Rational pow(const Rational& x, long e);
Integer pow10(unsigned e);

Integer floorOf(const Rational& x);
Integer ceilOf(const Rational& x);

// Dyadic rounding keeping `bits` significant bits.
Rational roundUp(const Rational& x, unsigned bits = 96);
Rational roundDown(const Rational& x, unsigned bits = 96);

enum class Rounding { nearest, up, down };

// d.ddd...e+XX with `digits` significant digits, rounded exactly.
std::string toScientific(const Rational& x, int digits, Rounding mode = Rounding::nearest);

// Round to `digits` significant decimal digits; returns the rounded value.
Rational roundSignificant(const Rational& x, int digits, Rounding mode = Rounding::nearest);

// Exact decimal literal ("1.275e-3", "-0.5") as a rational. Only used for
// reference data, never for user input.
Rational decimalLiteral(std::string_view text);

double toDouble(const Rational& x);

}  // namespace whf
