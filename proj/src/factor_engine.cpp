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

#include "whf/factor_engine.hpp"

#include <algorithm>

#include "whf/errors.hpp"

namespace whf {

namespace {

using Row = std::vector<GaussianRational>;

// Basis of {x : M x = 0} from the reduced row echelon form.
std::vector<Row> nullspace(std::vector<Row> m, size_t ncols) {
    std::vector<long> pivotCol;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c].isZero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        GaussianRational inv = m[r][c].inverse();
        for (size_t j = c; j < ncols; ++j)
            if (!m[r][j].isZero()) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].isZero()) continue;
            GaussianRational f = m[i][c];
            for (size_t j = c; j < ncols; ++j)
                if (!m[r][j].isZero()) m[i][j].subProduct(f, m[r][j]);
        }
        pivotCol.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<bool> isPivot(ncols, false);
    for (long c : pivotCol) isPivot[static_cast<size_t>(c)] = true;
    std::vector<Row> basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (isPivot[f]) continue;
        Row v(ncols);
        v[f] = 1;
        for (size_t i = 0; i < pivotCol.size(); ++i) v[static_cast<size_t>(pivotCol[i])] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

int columnDegree(const LaurentMatrix2& p, int j) {
    int d = -1;
    for (int i = 0; i < 2; ++i)
        if (!p(i, j).isZero()) d = std::max(d, p(i, j).pmax());
    return d;
}

}  // namespace

std::string toString(Normalisation n) {
    switch (n) {
        case Normalisation::raw: return "raw";
        case Normalisation::minusAtInfinityIdentity: return "minus-infinity-identity";
        case Normalisation::I2: return "I2";
        case Normalisation::J2: return "J2";
    }
    return "raw";
}

LaurentMatrix2 FactorisationResult::product() const {
    return aMinus * LaurentMatrix2::diagMonomial(rho1, rho2) * aPlus;
}

std::string VerificationReport::describe() const {
    std::string s;
    auto item = [&](const char* name, bool ok) {
        if (!s.empty()) s += ", ";
        s += name;
        s += ok ? "=pass" : "=FAIL";
    };
    item("product", productIdentity);
    item("supports", supports);
    item("determinants", constantDeterminants);
    item("indexSum", indexSum);
    return s;
}

KernelSlice kernelSlice(const LaurentMatrix2& a, int k, int degreeCap) {
    if (degreeCap < 0) throw DomainError("degree cap must be nonnegative");
    const int p = a.pmax();
    const int D = degreeCap;
    const size_t ncols = static_cast<size_t>(2 * (D + 1));
    std::vector<Row> rows;
    for (int r = 0; r < 2; ++r) {
        for (int m = k + 1; m <= p + D; ++m) {
            Row row(ncols);
            bool any = false;
            for (int j = 0; j < 2; ++j)
                for (int d = 0; d <= D; ++d) {
                    const GaussianRational& c = a(r, j).coeff(m - d);
                    if (c.isZero()) continue;
                    row[static_cast<size_t>(j * (D + 1) + d)] = c;
                    any = true;
                }
            if (any) rows.push_back(std::move(row));
        }
    }
    KernelSlice slice{k, D, {}};
    for (auto& v : nullspace(std::move(rows), ncols)) {
        VectorPoly phi;
        for (int j = 0; j < 2; ++j)
            phi[static_cast<size_t>(j)] =
                LaurentScalar(0, Row(v.begin() + j * (D + 1), v.begin() + (j + 1) * (D + 1)));
        slice.basis.push_back(std::move(phi));
    }
    return slice;
}

int kernelDegreeCap(const LaurentMatrix2& a, int k) {
    // deg a_+^{-1} <= pmax - rho1 and rho1 >= pmin.
    return std::max(0, a.pmax() - 2 * a.pmin() + k);
}

std::vector<KernelDimension> indexDimensionProfile(const LaurentMatrix2& a, int kFrom, int kTo) {
    std::vector<KernelDimension> out;
    for (int k = kFrom; k <= kTo; ++k) out.push_back({k, kernelSlice(a, k, kernelDegreeCap(a, k)).dimension()});
    return out;
}

int expectedKernelDimension(int rho1, int rho2, int k) {
    return std::max(0, k - rho1 + 1) + std::max(0, k - rho2 + 1);
}

FactorisationResult rightFactorise(const LaurentMatrix2& a) {
    const MonomialDet md = monomialWinding(det2(a));
    const int q = -a.pmin();
    LaurentMatrix2 p = a.shifted(q);
    LaurentMatrix2 v = LaurentMatrix2::identity();
    // Invariant: t^q a = p * v with v unimodular polynomial.
    while (true) {
        int cd[2] = {columnDegree(p, 0), columnDegree(p, 1)};
        Matrix2 h;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) h(i, j) = p(i, j).coeff(cd[j]);
        if (!h.det().isZero()) break;
        const int j = cd[1] >= cd[0] ? 1 : 0, l = 1 - j;
        const int i = h(0, l).isZero() ? 1 : 0;
        const GaussianRational lambda = h(i, j) / h(i, l);
        const int s = cd[j] - cd[l];
        for (int r = 0; r < 2; ++r) p(r, j) -= (lambda * p(r, l)).shifted(s);
        for (int c = 0; c < 2; ++c) v(l, c) += (lambda * v(j, c)).shifted(s);
    }
    int cd[2] = {columnDegree(p, 0), columnDegree(p, 1)};
    FactorisationResult r;
    r.aMinus = p;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.aMinus(i, j) = p(i, j).shifted(-cd[j]);
    r.aPlus = v;
    r.rho1 = cd[0] - q;
    r.rho2 = cd[1] - q;
    if (r.rho1 > r.rho2) {
        std::swap(r.rho1, r.rho2);
        r.aMinus = LaurentMatrix2(r.aMinus(0, 1), r.aMinus(0, 0), r.aMinus(1, 1), r.aMinus(1, 0));
        r.aPlus = LaurentMatrix2(r.aPlus(1, 0), r.aPlus(1, 1), r.aPlus(0, 0), r.aPlus(0, 1));
    }
    (void)md;
    VerificationReport rep = verifyFactorisation(a, r);
    if (!rep.passed()) throw VerificationFailed("factorisation check failed: " + rep.describe());
    return r;
}

VerificationReport verifyFactorisation(const LaurentMatrix2& a, const FactorisationResult& r) {
    VerificationReport rep;
    rep.supports = r.aMinus.isMinusType() && r.aPlus.isPlusType();
    auto constantDet = [](const LaurentMatrix2& m) {
        auto d = det2(m).asMonomial();
        return d && d->second == 0;
    };
    rep.constantDeterminants = constantDet(r.aMinus) && constantDet(r.aPlus);
    try {
        rep.indexSum = monomialWinding(det2(a)).winding == r.rho1 + r.rho2;
    } catch (const NotMonomialDet&) {
        rep.indexSum = false;
    }
    rep.productIdentity = r.product() == a;
    return rep;
}

}  // namespace whf
