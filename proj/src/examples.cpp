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

#include "whf/examples.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "whf/errors.hpp"

namespace whf {

namespace {

Integer doubleFactorial(long n) {
    Integer r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational rat(const Integer& n, const Integer& d) { return makeRational(n, d); }

CoefficientStream plusStream(std::function<GaussianRational(int)> c, std::optional<Rational> r2, bool closed,
                             std::function<UpperBound(const Rational&, const Rational&)> M) {
    CoefficientStream s;
    s.side = StreamSide::plus;
    s.coefficient = std::move(c);
    s.radius = std::move(r2);
    s.closed = closed;
    s.majorant = std::move(M);
    return s;
}

CoefficientStream minusStream(std::function<GaussianRational(int)> c, Rational r1, bool closed,
                              std::function<UpperBound(const Rational&, const Rational&)> M) {
    CoefficientStream s;
    s.side = StreamSide::minus;
    s.coefficient = std::move(c);
    s.radius = std::move(r1);
    s.closed = closed;
    s.majorant = std::move(M);
    return s;
}

// log10 of a positive rational, good to double precision at any magnitude.
double log10Of(const Rational& x) {
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
    return std::log10(mn / md) + static_cast<double>(en - ed) * std::log10(2.0);
}

std::string optBound(const std::optional<UpperBound>& b) { return b ? formatBound(*b) : std::string(); }

}  // namespace

FamilyId parseFamilyId(const std::string& s) {
    if (s == "ex61") return FamilyId::ex61;
    if (s == "ex62") return FamilyId::ex62;
    if (s == "ex63") return FamilyId::ex63;
    throw ParseError("unknown family '" + s + "' (expected ex61, ex62 or ex63)");
}

std::string toString(FamilyId id) {
    switch (id) {
        case FamilyId::ex61: return "ex61";
        case FamilyId::ex62: return "ex62";
        case FamilyId::ex63: return "ex63";
    }
    return "ex61";
}

ExampleFamily ex61Streams(const Rational& k1, const Rational& k2) {
    if (!(sgn(k1) > 0 && k1 < 1 && k2 > 1)) throw DomainError("ex61 needs 0 < k1 < 1 < k2");
    ExampleFamily f;
    f.id = FamilyId::ex61;
    f.k1 = k1;
    f.k2 = k2;
    f.theta = 0;
    // sqrt(k2^2 - t^2) = k2 (1 - sum_{n>=1} (2n-3)!!/(2n)!! (t/k2)^{2n}).
    f.streams.alpha = plusStream(
        [k2](int n) -> GaussianRational {
            if (n == 0) return k2;
            if (n % 2 != 0) return 0;
            long m = n / 2;
            return Rational(-k2 * rat(doubleFactorial(2 * m - 3), doubleFactorial(2 * m)) / pow(k2, 2 * m));
        },
        k2, true,
        [k2](const Rational& z, const Rational& tol) { return sqrtUpperBound(Rational(k2 * k2 + z * z), tol); });
    // t^{-2} sqrt(k1^2 - t^2) = i t^{-1} (1 - sum_{n>=1} (2n-3)!!/(2n)!! (k1/t)^{2n}).
    f.streams.beta = minusStream(
        [k1](int n) -> GaussianRational {
            if (n % 2 == 0) return 0;
            if (n == 1) return GaussianRational::i();
            long m = (n - 1) / 2;
            return {0, -rat(doubleFactorial(2 * m - 3), doubleFactorial(2 * m)) * pow(k1, 2 * m)};
        },
        k1, true,
        [k1](const Rational& z, const Rational& tol) {
            return Rational(1 / (z * z)) * sqrtUpperBound(Rational(k1 * k1 + z * z), tol);
        });
    f.streams.theta = 0;
    f.referenceContext = BoundContext{k1, k2, Rational(1, 100)};
    if (k1 == Rational(1, 5) && k2 == 5) {
        f.closedFormDelta = [](int N, const Rational& tol) {
            UpperBound c = UpperBound::exact(15) + Rational(2) * sqrtUpperBound(Rational(2), tol);
            return pow(Rational(5), 1 - N) / 4 * c;
        };
    }
    return f;
}

ExampleFamily ex62Streams(const Rational& k1, const Rational& k2, int nu) {
    if (!(sgn(k1) > 0 && k1 < 1)) throw DomainError("ex62 needs 0 < k1 < 1");
    ExampleFamily f;
    f.id = FamilyId::ex62;
    f.k1 = k1;
    f.k2 = k2;
    f.theta = 2 * nu;
    Rational ak2 = abs(k2);
    f.streams.alpha = plusStream([k2](int n) -> GaussianRational { return Rational(pow(k2, n) / factorial(n)); },
                                 std::nullopt, false,
                                 [ak2](const Rational& z, const Rational& tol) { return expUpperBound(ak2 * z, tol); });
    // (k1^2 + t^2)^{-1/2} = sum_n (-1)^n (2n-1)!!/(2n)!! k1^{2n} t^{-(2n+1)}.
    f.streams.beta = minusStream(
        [k1](int n) -> GaussianRational {
            if (n % 2 == 0) return 0;
            long m = (n - 1) / 2;
            Rational c = rat(doubleFactorial(2 * m - 1), doubleFactorial(2 * m)) * pow(k1, 2 * m);
            return m % 2 == 0 ? c : Rational(-c);
        },
        k1, false,
        [k1](const Rational& z, const Rational& tol) {
            return UpperBound::exact(1) / sqrtUpperBound(Rational(z * z - k1 * k1), tol);
        });
    f.streams.theta = f.theta;
    f.referenceContext = BoundContext{Rational(1, 4), Rational(4), Rational(1, 100)};
    if (k1 == Rational(1, 5) && k2 == 1) {
        f.closedFormDelta = [](int N, const Rational& tol) {
            UpperBound c = Rational(109) * expUpperBound(Rational(4), tol) + UpperBound::exact(60);
            return pow(Rational(4), -N) / 27 * c;
        };
    }
    return f;
}

ExampleFamily ex63Streams(const Rational& k1, const Rational& k2, int theta) {
    ExampleFamily f;
    f.id = FamilyId::ex63;
    f.k1 = k1;
    f.k2 = k2;
    f.theta = theta;
    Rational ak1 = abs(k1), ak2 = abs(k2);
    f.streams.alpha = plusStream([k2](int n) -> GaussianRational { return Rational(pow(k2, n) / factorial(n)); },
                                 std::nullopt, false,
                                 [ak2](const Rational& z, const Rational& tol) { return expUpperBound(ak2 * z, tol); });
    f.streams.beta = minusStream(
        [k1](int n) -> GaussianRational { return Rational(pow(k1, n - 1) / factorial(n - 1)); }, Rational(0), false,
        [ak1](const Rational& z, const Rational& tol) {
            return Rational(1 / z) * expUpperBound(Rational(ak1 / z), tol);
        });
    f.streams.theta = theta;
    f.referenceContext = BoundContext{Rational(1, 10), Rational(10), Rational(1, 100)};
    if (k1 == 1 && k2 == Rational(1, 2)) {
        f.closedFormDelta = [](int N, const Rational& tol) {
            UpperBound c = Rational(10, 9) * expUpperBound(Rational(10), tol) +
                           Rational(110, 81) * expUpperBound(Rational(15), tol) +
                           Rational(1, 9) * expUpperBound(Rational(5), tol);
            return pow(Rational(10), -N) * c;
        };
    }
    return f;
}

ExampleFamily defaultFamily(FamilyId id) {
    switch (id) {
        case FamilyId::ex61: return ex61Streams(Rational(1, 5), Rational(5));
        case FamilyId::ex62: return ex62Streams(Rational(1, 5), Rational(1), 3);
        case FamilyId::ex63: return ex63Streams(Rational(1), Rational(1, 2), -7);
    }
    throw DomainError("unknown family");
}

Reproduction reproduce(const ExampleFamily& family, const ReproductionOptions& options) {
    if (options.nMax < 1 || options.nRef < options.nMax || options.nAlt < 1)
        throw DomainError("reproduction needs 1 <= nMax <= nRef");
    Reproduction out;
    out.family = family;
    out.options = options;
    out.context = options.context.value_or(family.referenceContext);

    CertifyOptions co;
    co.nFrom = 1;
    co.nTo = options.nMax;
    if (!options.optimizeZeta) co.context = out.context;
    co.epsilon = options.epsilon;
    co.normalise = options.normalise;
    co.relTol = options.relTol;
    co.jobs = options.jobs;
    std::vector<CriterionReport> reports = certifyStability(family.streams, co);

    const LaurentMatrix2 aRef = truncate(family.streams, options.nRef);
    const LaurentMatrix2 aAlt = truncate(family.streams, options.nAlt);
    FactorisationResult ref = rightFactorise(aRef);
    bool refUsable = ref.stable() && options.normalise != NormaliseMode::none;
    if (refUsable) ref = pNormalise(ref, options.normalise);
    out.reference = ref;

    const ReproductionRow* prev = nullptr;
    for (auto& rep : reports) {
        ReproductionRow row;
        row.normAN = wienerNormUpperBound(rep.aN, options.relTol);
        row.distAlt = truncationDistance(aAlt, rep.aN, options.relTol);
        row.distRef = truncationDistance(aRef, rep.aN, options.relTol);
        const bool factored = rep.normInvPlus.has_value();
        const bool unique = factored && rep.factors.normalisation != Normalisation::raw;
        if (factored) {
            row.normPlus = wienerNormUpperBound(rep.factors.aPlus, options.relTol);
            row.accuracy = factorAccuracy(family.theta, rep.deltaN, row.normAN, *rep.normInvPlus,
                                          *rep.normInvMinus, *row.normPlus);
        } else {
            row.accuracy.reason = "truncation has no stable factorisation";
        }
        if (unique && refUsable && ref.normalisation == rep.factors.normalisation &&
            ref.rho1 == rep.factors.rho1) {
            row.plusToRef = wienerNormUpperBound(ref.aPlus - rep.factors.aPlus, options.relTol);
            row.minusToRef = wienerNormUpperBound(ref.aMinus - rep.factors.aMinus, options.relTol);
        }
        if (unique && prev && prev->criterion.normInvPlus &&
            prev->criterion.factors.normalisation == rep.factors.normalisation &&
            prev->criterion.factors.rho1 == rep.factors.rho1) {
            row.plusStep = wienerNormUpperBound(rep.factors.aPlus - prev->criterion.factors.aPlus, options.relTol);
            row.minusStep = wienerNormUpperBound(rep.factors.aMinus - prev->criterion.factors.aMinus, options.relTol);
        }
        row.criterion = std::move(rep);
        out.rows.push_back(std::move(row));
        prev = &out.rows.back();
    }
    return out;
}

std::vector<std::string> writeReproduction(const Reproduction& r, const std::string& outDir,
                                           const std::vector<std::string>& provenance) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outDir, ec);
    if (ec) throw Error("cannot create directory " + outDir + ": " + ec.message());
    std::vector<std::string> written;
    auto open = [&](const std::string& name) {
        std::string path = (fs::path(outDir) / name).string();
        auto os = std::make_unique<std::ofstream>(path);
        if (!*os) throw Error("cannot write " + path);
        for (const auto& line : provenance) *os << line << '\n';
        written.push_back(path);
        return os;
    };

    std::vector<CriterionReport> crit;
    std::vector<AccuracyRow> acc;
    for (const auto& row : r.rows) {
        crit.push_back(row.criterion);
        acc.push_back({row.criterion.N, row.accuracy});
    }
    *open("criterion.csv") << criterionCsv(crit);
    *open("accuracy.csv") << accuracyCsv(acc);
    {
        auto os = open("distances.csv");
        *os << "N,distance_to_a" << r.options.nAlt << ",distance_to_a" << r.options.nRef << '\n';
        for (const auto& row : r.rows)
            *os << row.criterion.N << ',' << formatBound(row.distAlt) << ',' << formatBound(row.distRef) << '\n';
    }
    {
        auto os = open("factor_distances.csv");
        *os << "N,plus_to_ref,minus_to_ref,plus_step,minus_step\n";
        for (const auto& row : r.rows)
            *os << row.criterion.N << ',' << optBound(row.plusToRef) << ',' << optBound(row.minusToRef) << ','
                << optBound(row.plusStep) << ',' << optBound(row.minusStep) << '\n';
    }

    using Getter = std::function<std::optional<UpperBound>(const ReproductionRow&)>;
    const std::vector<std::pair<std::string, Getter>> columns = {
        {"delta_N", [](const ReproductionRow& w) { return std::optional<UpperBound>(w.criterion.deltaN); }},
        {"q_N", [](const ReproductionRow& w) { return w.criterion.qN; }},
        {"norm_inv_plus", [](const ReproductionRow& w) { return w.criterion.normInvPlus; }},
        {"norm_inv_minus", [](const ReproductionRow& w) { return w.criterion.normInvMinus; }},
        {"distance_to_ref", [](const ReproductionRow& w) { return std::optional<UpperBound>(w.distRef); }},
        {"delta_plus", [](const ReproductionRow& w) { return w.accuracy.deltaPlus; }},
        {"delta_minus", [](const ReproductionRow& w) { return w.accuracy.deltaMinus; }},
        {"plus_to_ref", [](const ReproductionRow& w) { return w.plusToRef; }},
        {"minus_to_ref", [](const ReproductionRow& w) { return w.minusToRef; }},
    };
    for (const auto& [name, get] : columns) {
        auto os = open("plot_" + name + ".csv");
        *os << "N,log10_" << name << '\n';
        for (const auto& row : r.rows) {
            auto v = get(row);
            if (!v || sgn(v->value) <= 0) continue;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.9f", log10Of(v->value));
            *os << row.criterion.N << ',' << buf << '\n';
        }
    }
    return written;
}

GaussianRational listingValue(const ListingEntry& e) {
    Rational v = decimalLiteral(e.value);
    return e.imaginary ? GaussianRational(0, v) : GaussianRational(v);
}

CoefficientCheckReport factorCoefficientCheck(const FactorisationResult& normalised,
                                              const std::vector<ListingEntry>& listing) {
    CoefficientCheckReport rep;
    rep.maxDeviation = UpperBound::exact(0);
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& e : listing) {
        GaussianRational listed = listingValue(e);
        GaussianRational computed = normalised.aMinus(e.row - 1, e.col - 1).coeff(e.power);
        UpperBound dev = absUpperBound(computed - listed);
        if (dev.value > rep.maxDeviation.value) rep.maxDeviation = dev;
        rep.items.push_back({e, listed, computed, dev});
        seen.insert({e.row, e.col, e.power});
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const LaurentScalar& s = normalised.aMinus(i, j);
            for (int k = s.pmin(); !s.isZero() && k <= s.pmax(); ++k)
                if (!s.coeff(k).isZero() && !seen.count({i + 1, j + 1, k})) ++rep.unlisted;
        }
    return rep;
}

CoefficientCheckReport factorCoefficientCheck(FamilyId id, int N) {
    if (id != FamilyId::ex61 || N != 15) throw DomainError("a reference listing exists for ex61, N = 15 only");
    ExampleFamily f = defaultFamily(id);
    FactorisationResult r = pNormalise(rightFactorise(truncate(f.streams, N)));
    return factorCoefficientCheck(r, ex61FactorListing());
}

}  // namespace whf
