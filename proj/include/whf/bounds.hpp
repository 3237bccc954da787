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

#include <string>

#include "whf/gaussian.hpp"
#include "whf/rational.hpp"

namespace whf {

enum class BoundKind { exact, sqrt, exp, abs, composite };

std::string toString(BoundKind k);

// Certified one-sided bound: the true quantity x satisfies
//   value - tolerance <= x <= value.
// Only `value` is ever reported; the lower end is used for denominators.
struct UpperBound {
    Rational value{0};
    Rational tolerance{0};
    BoundKind kind = BoundKind::exact;

    static UpperBound exact(const Rational& v) { return {v, Rational(0), BoundKind::exact}; }
    static UpperBound enclosure(const Rational& lo, const Rational& hi, BoundKind k);

    Rational lower() const { return value - tolerance; }
    bool isExact() const { return sgn(tolerance) == 0; }
    double approx() const { return toDouble(value); }
};

// 1e-15, relative.
Rational defaultTolerance();

UpperBound sqrtUpperBound(const Rational& q, const Rational& relTol = defaultTolerance());
UpperBound expUpperBound(const Rational& x, const Rational& relTol = defaultTolerance());
UpperBound absUpperBound(const GaussianRational& z, const Rational& relTol = defaultTolerance());

// sqrt of an enclosed nonnegative quantity.
UpperBound sqrtUpperBound(const UpperBound& q, const Rational& relTol = defaultTolerance());

// Interval arithmetic on the enclosures. Products assume nonnegative
// operands; division requires a strictly positive lower end of the divisor.
UpperBound operator+(const UpperBound& a, const UpperBound& b);
UpperBound operator-(const UpperBound& a, const UpperBound& b);
UpperBound operator*(const UpperBound& a, const UpperBound& b);
UpperBound operator/(const UpperBound& a, const UpperBound& b);
UpperBound operator*(const Rational& c, const UpperBound& a);
UpperBound powBound(const UpperBound& a, unsigned e);

// Round the enclosure outward once its rationals get long.
UpperBound compact(const UpperBound& a, unsigned bits = 192);

}  // namespace whf
