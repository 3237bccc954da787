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

#include "whf/laurent.hpp"

#include <algorithm>

#include "whf/errors.hpp"

namespace whf {

namespace {

const GaussianRational& zeroCoeff() {
    static const GaussianRational z;
    return z;
}

}  // namespace

LaurentScalar::LaurentScalar(const GaussianRational& c) {
    if (!c.isZero()) c_.push_back(c);
}

LaurentScalar::LaurentScalar(int pmin, std::vector<GaussianRational> coeffs) : pmin_(pmin), c_(std::move(coeffs)) {
    trim();
}

LaurentScalar LaurentScalar::monomial(const GaussianRational& c, int power) {
    LaurentScalar r(c);
    if (!r.isZero()) r.pmin_ = power;
    return r;
}

void LaurentScalar::trim() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].isZero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        pmin_ = 0;
        return;
    }
    size_t end = c_.size();
    while (c_[end - 1].isZero()) --end;
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(end), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    pmin_ += static_cast<int>(lead);
}

const GaussianRational& LaurentScalar::coeff(int k) const {
    if (c_.empty() || k < pmin_ || k > pmax()) return zeroCoeff();
    return c_[static_cast<size_t>(k - pmin_)];
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
    if (o.isZero()) return *this;
    if (isZero()) return *this = o;
    int lo = std::min(pmin_, o.pmin_), hi = std::max(pmax(), o.pmax());
    if (lo < pmin_) c_.insert(c_.begin(), static_cast<size_t>(pmin_ - lo), GaussianRational());
    c_.resize(static_cast<size_t>(hi - lo + 1));
    pmin_ = lo;
    for (size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<size_t>(o.pmin_ - lo) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

namespace {

// Coefficients over a common denominator: c_k = (re_k + i im_k) / den.
struct IntegerPoly {
    std::vector<Integer> re, im;
    Integer den = 1;
    bool hasIm = false;
};

IntegerPoly toIntegerPoly(const std::vector<GaussianRational>& c) {
    IntegerPoly p;
    for (const auto& x : c) {
        mpz_lcm(p.den.get_mpz_t(), p.den.get_mpz_t(), x.re().get_den_mpz_t());
        mpz_lcm(p.den.get_mpz_t(), p.den.get_mpz_t(), x.im().get_den_mpz_t());
        p.hasIm = p.hasIm || sgn(x.im()) != 0;
    }
    p.re.resize(c.size());
    if (p.hasIm) p.im.resize(c.size());
    Integer q;
    for (size_t k = 0; k < c.size(); ++k) {
        mpz_divexact(q.get_mpz_t(), p.den.get_mpz_t(), c[k].re().get_den_mpz_t());
        p.re[k] = c[k].re().get_num() * q;
        if (p.hasIm) {
            mpz_divexact(q.get_mpz_t(), p.den.get_mpz_t(), c[k].im().get_den_mpz_t());
            p.im[k] = c[k].im().get_num() * q;
        }
    }
    return p;
}

Rational over(const Integer& n, const Integer& d) {
    Rational r;
    mpz_set(mpq_numref(r.get_mpq_t()), n.get_mpz_t());
    mpz_set(mpq_denref(r.get_mpq_t()), d.get_mpz_t());
    r.canonicalize();
    return r;
}

void convolve(std::vector<Integer>& out, const std::vector<Integer>& x, const std::vector<Integer>& y, bool subtract) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (sgn(y[j]) == 0) continue;
            if (subtract)
                mpz_submul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
            else
                mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
        }
    }
}

}  // namespace

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.isZero() || b.isZero()) return {};
    const size_t n = a.c_.size() + b.c_.size() - 1;
    IntegerPoly x = toIntegerPoly(a.c_), y = toIntegerPoly(b.c_);
    std::vector<Integer> re(n), im;
    convolve(re, x.re, y.re, false);
    if (x.hasIm && y.hasIm) convolve(re, x.im, y.im, true);
    if (x.hasIm || y.hasIm) {
        im.resize(n);
        if (y.hasIm) convolve(im, x.re, y.im, false);
        if (x.hasIm) convolve(im, x.im, y.re, false);
    }
    const Integer den = x.den * y.den;
    std::vector<GaussianRational> out(n);
    for (size_t k = 0; k < n; ++k)
        out[k] = GaussianRational(over(re[k], den), im.empty() ? Rational(0) : over(im[k], den));
    return LaurentScalar(a.pmin_ + b.pmin_, std::move(out));
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar& LaurentScalar::operator*=(const GaussianRational& c) {
    if (c.isZero()) {
        c_.clear();
        pmin_ = 0;
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

LaurentScalar LaurentScalar::shifted(int m) const {
    LaurentScalar r = *this;
    if (!r.isZero()) r.pmin_ += m;
    return r;
}

LaurentScalar LaurentScalar::window(int lo, int hi) const {
    if (isZero() || hi < lo) return {};
    int a = std::max(lo, pmin_), b = std::min(hi, pmax());
    if (b < a) return {};
    std::vector<GaussianRational> c(c_.begin() + (a - pmin_), c_.begin() + (b - pmin_ + 1));
    return LaurentScalar(a, std::move(c));
}

LaurentScalar LaurentScalar::projectPlus() const { return window(0, std::max(0, pmax())); }
LaurentScalar LaurentScalar::projectMinus() const { return window(std::min(0, pmin_), 0); }
LaurentScalar LaurentScalar::projectMinusZero() const { return window(std::min(-1, pmin_), -1); }

std::optional<std::pair<GaussianRational, int>> LaurentScalar::asMonomial() const {
    if (c_.size() != 1) return std::nullopt;
    return std::make_pair(c_[0], pmin_);
}

LaurentScalar divideExact(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.isZero()) throw DomainError("division by the zero Laurent polynomial");
    if (a.isZero()) return {};
    int qlo = a.pmin() - b.pmin(), qhi = a.pmax() - b.pmax();
    if (qhi < qlo) throw NonExactDivision("divisor does not divide dividend");
    std::vector<GaussianRational> r = a.coeffs();  // indexed from a.pmin()
    std::vector<GaussianRational> q(static_cast<size_t>(qhi - qlo + 1));
    const GaussianRational lead = b.coeffs().back();
    const int bn = static_cast<int>(b.coeffs().size());
    for (int k = qhi; k >= qlo; --k) {
        // Coefficient of t^{k + b.pmax} sits at index k + b.pmax - a.pmin.
        size_t top = static_cast<size_t>(k + b.pmax() - a.pmin());
        if (r[top].isZero()) continue;
        GaussianRational c = r[top] / lead;
        for (int j = 0; j < bn; ++j) r[top - static_cast<size_t>(bn - 1 - j)].subProduct(c, b.coeffs()[static_cast<size_t>(j)]);
        q[static_cast<size_t>(k - qlo)] = c;
    }
    for (const auto& x : r)
        if (!x.isZero()) throw NonExactDivision("nonzero remainder in Laurent division");
    return LaurentScalar(qlo, std::move(q));
}

Matrix2 Matrix2::identity() { return of(1, 0, 0, 1); }

Matrix2 Matrix2::of(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
    Matrix2 m;
    m.e = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return m;
}

GaussianRational Matrix2::det() const { return e[0] * e[3] - e[1] * e[2]; }

Matrix2 Matrix2::inverse() const {
    GaussianRational d = det();
    if (d.isZero()) throw DomainError("singular constant matrix");
    GaussianRational inv = d.inverse();
    return of(e[3] * inv, -e[1] * inv, -e[2] * inv, e[0] * inv);
}

bool Matrix2::isZero() const {
    return std::all_of(e.begin(), e.end(), [](const GaussianRational& z) { return z.isZero(); });
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

LaurentMatrix2::LaurentMatrix2(LaurentScalar a11, LaurentScalar a12, LaurentScalar a21, LaurentScalar a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

LaurentMatrix2::LaurentMatrix2(const Matrix2& m) : e_{m.e[0], m.e[1], m.e[2], m.e[3]} {}

LaurentMatrix2 LaurentMatrix2::identity() { return {1, 0, 0, 1}; }

LaurentMatrix2 LaurentMatrix2::diagMonomial(int r1, int r2) {
    return {LaurentScalar::monomial(1, r1), 0, 0, LaurentScalar::monomial(1, r2)};
}

bool LaurentMatrix2::isZero() const {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentScalar& s) { return s.isZero(); });
}

int LaurentMatrix2::pmin() const {
    std::optional<int> r;
    for (const auto& s : e_)
        if (!s.isZero()) r = r ? std::min(*r, s.pmin()) : s.pmin();
    return r.value_or(0);
}

int LaurentMatrix2::pmax() const {
    std::optional<int> r;
    for (const auto& s : e_)
        if (!s.isZero()) r = r ? std::max(*r, s.pmax()) : s.pmax();
    return r.value_or(0);
}

Matrix2 LaurentMatrix2::coefficient(int k) const {
    Matrix2 m;
    for (size_t i = 0; i < 4; ++i) m.e[i] = e_[i].coeff(k);
    return m;
}

LaurentMatrix2& LaurentMatrix2::operator+=(const LaurentMatrix2& o) {
    for (size_t i = 0; i < 4; ++i) e_[i] += o.e_[i];
    return *this;
}

LaurentMatrix2& LaurentMatrix2::operator-=(const LaurentMatrix2& o) {
    for (size_t i = 0; i < 4; ++i) e_[i] -= o.e_[i];
    return *this;
}

LaurentMatrix2 operator*(const LaurentMatrix2& a, const LaurentMatrix2& b) {
    LaurentMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

LaurentMatrix2 operator*(const GaussianRational& c, const LaurentMatrix2& a) {
    LaurentMatrix2 r = a;
    for (auto& s : r.e_) s *= c;
    return r;
}

LaurentMatrix2 LaurentMatrix2::transposed() const { return {e_[0], e_[2], e_[1], e_[3]}; }

LaurentMatrix2 LaurentMatrix2::shifted(int m) const {
    LaurentMatrix2 r;
    for (size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].shifted(m);
    return r;
}

LaurentMatrix2 LaurentMatrix2::projectPlus() const {
    LaurentMatrix2 r;
    for (size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].projectPlus();
    return r;
}

LaurentMatrix2 LaurentMatrix2::projectMinus() const {
    LaurentMatrix2 r;
    for (size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].projectMinus();
    return r;
}

LaurentMatrix2 LaurentMatrix2::projectMinusZero() const {
    LaurentMatrix2 r;
    for (size_t i = 0; i < 4; ++i) r.e_[i] = e_[i].projectMinusZero();
    return r;
}

LaurentScalar det2(const LaurentMatrix2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

MonomialDet monomialWinding(const LaurentScalar& d) {
    auto m = d.asMonomial();
    if (!m) throw NotMonomialDet("determinant is not of the form c t^theta");
    return {m->first, m->second};
}

LaurentMatrix2 invertMonomialDet(const LaurentMatrix2& a) {
    MonomialDet md = monomialWinding(det2(a));
    GaussianRational inv = md.coeff.inverse();
    LaurentMatrix2 adj(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0));
    return (inv * adj).shifted(-md.winding);
}

LaurentMatrix2 invertUnimodular(const LaurentMatrix2& a) {
    MonomialDet md = monomialWinding(det2(a));
    if (md.winding != 0) throw DomainError("determinant is not a nonzero constant");
    return invertMonomialDet(a);
}

Matrix2 valueAtInfinity(const LaurentMatrix2& a) {
    if (!a.isMinusType()) throw DomainError("valueAtInfinity needs a minus-type matrix");
    return a.coefficient(0);
}

Matrix2 valueAtZero(const LaurentMatrix2& a) {
    if (!a.isPlusType()) throw DomainError("valueAtZero needs a plus-type matrix");
    return a.coefficient(0);
}

namespace {

struct AbsSum {
    Rational lo{0}, hi{0};
    bool exact = true;
    void add(const GaussianRational& z, const Rational& relTol) {
        if (z.isZero()) return;
        if (z.isReal() || sgn(z.re()) == 0) {
            Rational a = z.isReal() ? abs(z.re()) : abs(z.im());
            lo += a;
            hi += a;
            return;
        }
        UpperBound b = absUpperBound(z, relTol);
        lo += b.lower();
        hi += b.value;
        if (!b.isExact()) exact = false;
    }
};

UpperBound toBound(const AbsSum& s) {
    if (s.exact) return UpperBound::exact(s.hi);
    return compact(UpperBound::enclosure(s.lo, s.hi, s.exact ? BoundKind::exact : BoundKind::composite));
}

}  // namespace

UpperBound wienerNormUpperBound(const LaurentMatrix2& a, const Rational& relTol) {
    if (a.isZero()) return UpperBound::exact(0);
    AbsSum total;
    for (int k = a.pmin(); k <= a.pmax(); ++k) {
        AbsSum best;
        for (int j = 0; j < 2; ++j) {
            AbsSum col;
            col.add(a(0, j).coeff(k), relTol);
            col.add(a(1, j).coeff(k), relTol);
            if (col.hi > best.hi) best.hi = col.hi;
            if (col.lo > best.lo) best.lo = col.lo;
            best.exact = best.exact && col.exact;
        }
        total.lo += best.lo;
        total.hi += best.hi;
        total.exact = total.exact && best.exact;
    }
    return toBound(total);
}

UpperBound wienerNormUpperBound(const LaurentScalar& a, const Rational& relTol) {
    AbsSum s;
    for (const auto& c : a.coeffs()) s.add(c, relTol);
    return toBound(s);
}

}  // namespace whf
