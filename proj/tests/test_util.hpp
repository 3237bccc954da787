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

// Generators and comparison helpers shared by the unit and acceptance tests.

#pragma once

#include <random>
#include <string>

#include "whf/examples.hpp"

namespace whf::testing {

inline LaurentScalar mono(const GaussianRational& c, int k) { return LaurentScalar::monomial(c, k); }

inline GaussianRational I(long im) { return GaussianRational(0, im); }

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // Small nonzero Gaussian integer over a small denominator.
    GaussianRational nonzero() {
        while (true) {
            GaussianRational z(makeRational(uniform(-3, 3), uniform(1, 2)), makeRational(uniform(-1, 1), 1));
            if (!z.isZero()) return z;
        }
    }

    LaurentScalar poly(int lo, int hi) {
        std::vector<GaussianRational> c;
        for (int k = lo; k <= hi; ++k) c.push_back(uniform(0, 2) == 0 ? GaussianRational() : nonzero());
        return LaurentScalar(lo, std::move(c));
    }

    // Unipotent triangular factor with an off-diagonal entry supported in [lo, hi].
    LaurentMatrix2 elementary(int lo, int hi) {
        LaurentScalar p = poly(lo, hi);
        return uniform(0, 1) ? LaurentMatrix2(1, p, 0, 1) : LaurentMatrix2(1, 0, p, 1);
    }

    Matrix2 invertibleConstant() {
        while (true) {
            Matrix2 m = Matrix2::of(nonzero(), uniform(0, 1) ? nonzero() : GaussianRational(),
                                    uniform(0, 1) ? nonzero() : GaussianRational(), nonzero());
            if (!m.det().isZero()) return m;
        }
    }

    // Monomial-determinant matrix with support in [-bound, bound].
    LaurentMatrix2 monomialDetMatrix(int bound = 6) {
        while (true) {
            LaurentMatrix2 a(invertibleConstant());
            const int factors = uniform(1, 3);
            for (int f = 0; f < factors; ++f) {
                a = a * elementary(-2, 2);
                if (uniform(0, 1)) a = a * LaurentMatrix2::diagMonomial(uniform(-2, 2), uniform(-2, 2));
            }
            if (!a.isZero() && a.pmin() >= -bound && a.pmax() <= bound) return a;
        }
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

// Significant digits in a printed decimal such as "3.252250175e-1".
inline int printedDigits(const std::string& s) {
    std::string m = s.substr(0, s.find_first_of("eE"));
    int n = 0;
    bool leading = true;
    for (char c : m) {
        if (c < '0' || c > '9') continue;
        if (leading && c == '0') continue;
        leading = false;
        ++n;
    }
    return n;
}

// |value - printed| within relative 1e-6 or one unit in the last printed place.
inline bool matchesPrinted(const Rational& value, const std::string& printed) {
    const Rational p = decimalLiteral(printed);
    if (sgn(p) == 0) return sgn(value) == 0;
    const int d = printedDigits(printed);
    Rational tol = makeRational(1, 1000000);
    Rational ulp = makeRational(1, 1) / Rational(pow10(static_cast<unsigned>(std::max(d - 1, 0))));
    if (ulp > tol) tol = ulp;
    return abs(value - p) <= tol * abs(p);
}

}  // namespace whf::testing
