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

#include "whf/gaussian.hpp"

#include "whf/errors.hpp"

namespace whf {

GaussianRational GaussianRational::inverse() const {
    Rational n = normSquared();
    if (n == 0) throw DomainError("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.isZero()) throw DomainError("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational& GaussianRational::addProduct(const GaussianRational& a, const GaussianRational& b) {
    bool ar = sgn(a.im_) == 0, br = sgn(b.im_) == 0;
    if (ar && br) {
        if (sgn(a.re_) != 0 && sgn(b.re_) != 0) re_ += a.re_ * b.re_;
        return *this;
    }
    return *this += a * b;
}

GaussianRational& GaussianRational::subProduct(const GaussianRational& a, const GaussianRational& b) {
    bool ar = sgn(a.im_) == 0, br = sgn(b.im_) == 0;
    if (ar && br) {
        if (sgn(a.re_) != 0 && sgn(b.re_) != 0) re_ -= a.re_ * b.re_;
        return *this;
    }
    return *this -= a * b;
}

std::string toString(const GaussianRational& z) {
    if (z.isReal()) return toString(z.re());
    std::string im = z.im() == 1 ? "" : z.im() == -1 ? "-" : toString(z.im());
    if (sgn(z.re()) == 0) return im + "i";
    std::string sep = sgn(z.im()) > 0 ? "+" : "";
    return toString(z.re()) + sep + im + "i";
}

}  // namespace whf
