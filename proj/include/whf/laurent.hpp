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

#include <array>
#include <optional>
#include <vector>

#include "whf/bounds.hpp"
#include "whf/gaussian.hpp"

namespace whf {

// Laurent polynomial over Q(i), stored densely on its support window.
// Canonical form: no zero coefficient at either end; the zero polynomial
// has an empty coefficient vector.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(const GaussianRational& c);
    LaurentScalar(long c) : LaurentScalar(GaussianRational(c)) {}
    LaurentScalar(int pmin, std::vector<GaussianRational> coeffs);

    static LaurentScalar monomial(const GaussianRational& c, int power);

    bool isZero() const { return c_.empty(); }
    // Meaningful only for nonzero values; zero reports pmin = pmax + 1 = 0.
    int pmin() const { return pmin_; }
    int pmax() const { return pmin_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& coeff(int k) const;

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    LaurentScalar& operator*=(const LaurentScalar& o);
    LaurentScalar& operator*=(const GaussianRational& c);

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator*(const GaussianRational& c, LaurentScalar a) { return a *= c; }
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.c_ == b.c_ && (a.c_.empty() || a.pmin_ == b.pmin_);
    }

    // Multiply by t^m.
    LaurentScalar shifted(int m) const;
    // Keep powers in [lo, hi].
    LaurentScalar window(int lo, int hi) const;

    LaurentScalar projectPlus() const;       // powers >= 0
    LaurentScalar projectMinus() const;      // powers <= 0
    LaurentScalar projectMinusZero() const;  // powers <= -1

    // c t^k if this is a single nonzero term.
    std::optional<std::pair<GaussianRational, int>> asMonomial() const;

private:
    void trim();

    int pmin_ = 0;
    std::vector<GaussianRational> c_;
};

// Exact quotient a / b; throws NonExactDivision when b does not divide a.
LaurentScalar divideExact(const LaurentScalar& a, const LaurentScalar& b);

// Constant 2x2 matrix over Q(i).
struct Matrix2 {
    std::array<GaussianRational, 4> e{};

    static Matrix2 identity();
    static Matrix2 of(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);

    GaussianRational& operator()(int i, int j) { return e[static_cast<size_t>(2 * i + j)]; }
    const GaussianRational& operator()(int i, int j) const { return e[static_cast<size_t>(2 * i + j)]; }

    GaussianRational det() const;
    Matrix2 inverse() const;
    bool isZero() const;

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2& a, const Matrix2& b) { return a.e == b.e; }
};

class LaurentMatrix2 {
public:
    LaurentMatrix2() = default;
    LaurentMatrix2(LaurentScalar a11, LaurentScalar a12, LaurentScalar a21, LaurentScalar a22);
    explicit LaurentMatrix2(const Matrix2& m);

    static LaurentMatrix2 identity();
    static LaurentMatrix2 diagMonomial(int r1, int r2);

    LaurentScalar& operator()(int i, int j) { return e_[static_cast<size_t>(2 * i + j)]; }
    const LaurentScalar& operator()(int i, int j) const { return e_[static_cast<size_t>(2 * i + j)]; }

    bool isZero() const;
    // Support over all nonzero entries; both 0 for the zero matrix.
    int pmin() const;
    int pmax() const;
    Matrix2 coefficient(int k) const;

    LaurentMatrix2& operator+=(const LaurentMatrix2& o);
    LaurentMatrix2& operator-=(const LaurentMatrix2& o);
    friend LaurentMatrix2 operator+(LaurentMatrix2 a, const LaurentMatrix2& b) { return a += b; }
    friend LaurentMatrix2 operator-(LaurentMatrix2 a, const LaurentMatrix2& b) { return a -= b; }
    friend LaurentMatrix2 operator*(const LaurentMatrix2& a, const LaurentMatrix2& b);
    friend LaurentMatrix2 operator*(const GaussianRational& c, const LaurentMatrix2& a);
    friend bool operator==(const LaurentMatrix2& a, const LaurentMatrix2& b) { return a.e_ == b.e_; }

    LaurentMatrix2 transposed() const;
    LaurentMatrix2 shifted(int m) const;
    LaurentMatrix2 projectPlus() const;
    LaurentMatrix2 projectMinus() const;
    LaurentMatrix2 projectMinusZero() const;

    bool isMinusType() const { return isZero() || pmax() <= 0; }
    bool isPlusType() const { return isZero() || pmin() >= 0; }

private:
    std::array<LaurentScalar, 4> e_{};
};

LaurentScalar det2(const LaurentMatrix2& a);

struct MonomialDet {
    GaussianRational coeff;
    int winding = 0;
};

// d = c t^theta, c != 0; throws NotMonomialDet otherwise.
MonomialDet monomialWinding(const LaurentScalar& d);

// Inverse of a matrix with monomial determinant (adjugate / (c t^theta)).
LaurentMatrix2 invertMonomialDet(const LaurentMatrix2& a);
// Inverse of a matrix with nonzero constant determinant.
LaurentMatrix2 invertUnimodular(const LaurentMatrix2& a);

// t^0 coefficient of a minus-type matrix.
Matrix2 valueAtInfinity(const LaurentMatrix2& a);
// t^0 coefficient of a plus-type matrix.
Matrix2 valueAtZero(const LaurentMatrix2& a);

// sum_k max column sum of |A_k|.
UpperBound wienerNormUpperBound(const LaurentMatrix2& a, const Rational& relTol = defaultTolerance());
UpperBound wienerNormUpperBound(const LaurentScalar& a, const Rational& relTol = defaultTolerance());

}  // namespace whf
