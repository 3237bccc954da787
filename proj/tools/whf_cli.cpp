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

// whf: command-line front end.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "whf/errors.hpp"
#include "whf/examples.hpp"
#include "whf/stream_spec.hpp"

using namespace whf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitNotMonomial = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitNotCertified = 10;

struct RunConfig {
    std::string command;
    std::string input;
    std::string scalars;
    std::string spec;
    std::string family = "ex61";
    std::string k1, k2;
    std::optional<int> theta;
    int nmin = 1;
    int nmax = 30;
    std::optional<int> n;
    int nref = 40;
    int nalt = 30;
    std::string zeta1, zeta2;
    bool optimize = false;
    std::string epsilon = "1/100";
    std::string normalise = "auto";
    std::string tol = "1/1000000000000000";
    std::string out;
    std::string format = "csv";
    int jobs = 1;
    bool noTimestamp = false;
};

// Validated view of a RunConfig.
struct Resolved {
    StreamModel model;
    std::optional<ExampleFamily> family;
    std::optional<BoundContext> context;  // empty: optimise per N
    Rational epsilon;
    Rational relTol;
    NormaliseMode normalise = NormaliseMode::automatic;
    std::vector<std::string> provenance;
};

std::string timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

Resolved resolve(const RunConfig& c) {
    Resolved r;
    r.epsilon = parseRational(c.epsilon);
    r.relTol = parseRational(c.tol);
    if (sgn(r.epsilon) <= 0 || r.epsilon >= Rational(1, 2)) throw DomainError("--epsilon must lie in (0, 1/2)");
    if (sgn(r.relTol) <= 0) throw DomainError("--tol must be positive");
    r.normalise = parseNormaliseMode(c.normalise);

    std::string what;
    if (!c.spec.empty()) {
        StreamSpec s = loadStreamSpec(c.spec);
        r.model = s.model;
        r.family = s.family;
        what = "spec=" + c.spec + " family=" + s.name;
    } else {
        const FamilyId id = parseFamilyId(c.family);
        ExampleFamily d = defaultFamily(id);
        Rational k1 = c.k1.empty() ? d.k1 : parseRational(c.k1);
        Rational k2 = c.k2.empty() ? d.k2 : parseRational(c.k2);
        int theta = c.theta.value_or(d.theta);
        switch (id) {
            case FamilyId::ex61:
                if (theta != 0) throw DomainError("ex61 has theta = 0");
                r.family = ex61Streams(k1, k2);
                break;
            case FamilyId::ex62:
                if (theta % 2 != 0) throw DomainError("ex62 needs an even theta");
                r.family = ex62Streams(k1, k2, theta / 2);
                break;
            case FamilyId::ex63: r.family = ex63Streams(k1, k2, theta); break;
        }
        r.model = r.family->streams;
        what = "family=" + c.family;
    }
    if (r.family)
        what += " k1=" + toString(r.family->k1) + " k2=" + toString(r.family->k2) +
                " theta=" + std::to_string(r.family->theta);
    else
        what += " theta=" + std::to_string(r.model.theta);

    std::string zeta;
    if (c.optimize) {
        zeta = "zeta=optimize epsilon=" + toString(r.epsilon);
    } else {
        BoundContext ctx = r.family ? r.family->referenceContext : BoundContext{};
        bool given = !c.zeta1.empty() || !c.zeta2.empty();
        if (!r.family && !given) {
            zeta = "zeta=optimize epsilon=" + toString(r.epsilon);
        } else {
            if (!c.zeta1.empty()) ctx.zeta1 = parseRational(c.zeta1);
            if (!c.zeta2.empty()) ctx.zeta2 = parseRational(c.zeta2);
            ctx.epsilon = r.epsilon;
            r.context = ctx;
            zeta = "zeta=fixed zeta1=" + toString(ctx.zeta1) + " zeta2=" + toString(ctx.zeta2);
        }
    }
    r.provenance.push_back("# whf " + c.command);
    r.provenance.push_back("# " + what);
    r.provenance.push_back("# " + zeta);
    r.provenance.push_back("# normalise=" + toString(r.normalise) + " tol=" + toString(r.relTol));
    if (!c.noTimestamp) r.provenance.push_back("# generated=" + timestamp());
    return r;
}

// CSV text (header + rows) as {"provenance": [...], "rows": [{...}]}.
Json csvToJson(const std::string& csv, const std::vector<std::string>& provenance) {
    auto split = [](const std::string& line) {
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string x;
        while (std::getline(ss, x, ',')) f.push_back(x);
        if (!line.empty() && line.back() == ',') f.emplace_back();
        return f;
    };
    std::stringstream in(csv);
    std::string line;
    std::getline(in, line);
    const auto header = split(line);
    Json rows = Json::array();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line);
        Json row = Json::object();
        for (size_t i = 0; i < header.size(); ++i) {
            const std::string v = i < f.size() ? f[i] : "";
            if (v.empty())
                row[header[i]] = nullptr;
            else
                row[header[i]] = v;
        }
        rows.push_back(std::move(row));
    }
    Json prov = Json::array();
    for (const auto& p : provenance) prov.push_back(p.substr(2));
    return Json{{"provenance", prov}, {"rows", rows}};
}

void emit(const RunConfig& c, const std::vector<std::string>& provenance, const std::string& csv) {
    std::ostringstream body;
    if (c.format == "json") {
        body << csvToJson(csv, provenance).dump(2) << '\n';
    } else {
        for (const auto& p : provenance) body << p << '\n';
        body << csv;
    }
    if (c.out.empty()) {
        std::cout << body.str();
        return;
    }
    std::ofstream os(c.out);
    if (!os) throw Error("cannot write " + c.out);
    os << body.str();
}

// Human-readable lines go to stdout only when stdout is not carrying data.
std::ostream& summaryStream(const RunConfig& c) { return c.out.empty() ? std::cerr : std::cout; }

Json readJson(const std::string& path) {
    std::ifstream f;
    std::istream* in = &std::cin;
    if (path != "-") {
        f.open(path);
        if (!f) throw Error("cannot read " + path);
        in = &f;
    }
    Json j;
    try {
        *in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void writeText(const RunConfig& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(c.out);
    if (!os) throw Error("cannot write " + c.out);
    os << text;
}

int cmdFactor(const RunConfig& c) {
    const LaurentMatrix2 a = matrixFromJson(readJson(c.input));
    const NormaliseMode mode = parseNormaliseMode(c.normalise);
    FactorisationResult r = rightFactorise(a);
    if (r.stable() && mode != NormaliseMode::none) r = pNormalise(r, mode);
    const VerificationReport v = verifyFactorisation(a, r);
    if (!v.passed()) throw VerificationFailed("factorisation check failed: " + v.describe());
    Json outj{{"rho1", r.rho1},
              {"rho2", r.rho2},
              {"stable", r.stable()},
              {"normalisation", toString(r.normalisation)},
              {"aMinus", toJson(r.aMinus)},
              {"aPlus", toJson(r.aPlus)},
              {"verification",
               {{"product", v.productIdentity},
                {"supports", v.supports},
                {"determinants", v.constantDeterminants},
                {"indexSum", v.indexSum}}}};
    writeText(c, outj.dump(2) + "\n");
    return kExitOk;
}

int cmdReduce(const RunConfig& c) {
    const LaurentMatrix2 A = matrixFromJson(readJson(c.input));
    const ScalarFactorisationData s = c.scalars.empty() ? ScalarFactorisationData{} : scalarDataFromJson(readJson(c.scalars));
    const ReductionResult r = reduceToAForm(A, s);
    Json outj{{"kappa", r.kappa},
              {"theta", r.theta},
              {"alphaPlus", toJson(r.alphaPlus)},
              {"betaMinus", toJson(r.betaMinus)},
              {"a", toJson(r.a)},
              {"outerMinus", toJson(r.outerMinus)},
              {"outerPlus", toJson(r.outerPlus)}};
    writeText(c, outj.dump(2) + "\n");
    return kExitOk;
}

CertifyOptions certifyOptions(const RunConfig& c, const Resolved& r, int from, int to) {
    CertifyOptions co;
    co.nFrom = from;
    co.nTo = to;
    co.context = r.context;
    co.epsilon = r.epsilon;
    co.normalise = r.normalise;
    co.relTol = r.relTol;
    co.jobs = c.jobs;
    return co;
}

int cmdCertify(const RunConfig& c) {
    Resolved r = resolve(c);
    r.provenance.insert(r.provenance.begin() + 4, "# N=" + std::to_string(c.nmin) + ".." + std::to_string(c.nmax));
    auto reports = certifyStability(r.model, certifyOptions(c, r, c.nmin, c.nmax));
    emit(c, r.provenance, criterionCsv(reports));
    if (auto n = firstCertified(reports)) {
        summaryStream(c) << "CERTIFIED at N=" << *n << '\n';
        return kExitOk;
    }
    summaryStream(c) << "NOT CERTIFIED for N=" << c.nmin << ".." << c.nmax << '\n';
    return kExitNotCertified;
}

int cmdBounds(const RunConfig& c) {
    Resolved r = resolve(c);
    const int from = c.n.value_or(c.nmin), to = c.n.value_or(c.nmax);
    r.provenance.insert(r.provenance.begin() + 4, "# N=" + std::to_string(from) + ".." + std::to_string(to));
    auto reports = certifyStability(r.model, certifyOptions(c, r, from, to));
    std::vector<AccuracyRow> rows;
    for (const auto& rep : reports) {
        AccuracyRow row{rep.N, {}};
        if (rep.normInvPlus) {
            UpperBound normAN = wienerNormUpperBound(rep.aN, r.relTol);
            UpperBound normPlus = wienerNormUpperBound(rep.factors.aPlus, r.relTol);
            row.report = factorAccuracy(r.model.theta, rep.deltaN, normAN, *rep.normInvPlus, *rep.normInvMinus,
                                        normPlus);
        } else {
            row.report.reason = "truncation has no stable factorisation";
        }
        rows.push_back(std::move(row));
    }
    emit(c, r.provenance, accuracyCsv(rows));
    return kExitOk;
}

int cmdOptimizeZeta(const RunConfig& c) {
    Resolved r = resolve(c);
    const int from = c.n.value_or(c.nmin), to = c.n.value_or(c.nmax);
    r.provenance[2] = "# zeta=optimize epsilon=" + toString(r.epsilon);
    r.provenance.insert(r.provenance.begin() + 4, "# N=" + std::to_string(from) + ".." + std::to_string(to));
    std::ostringstream csv;
    csv << "N,zeta1,zeta2,delta_N\n";
    for (int N = from; N <= to; ++N) {
        ZetaChoice z = optimizeZeta(r.model, N, r.epsilon, GridSpec{}, r.relTol);
        csv << N << ',' << toString(z.zeta1) << ',' << toString(z.zeta2) << ',' << formatBound(z.delta) << '\n';
    }
    emit(c, r.provenance, csv.str());
    return kExitOk;
}

int cmdReproduce(const RunConfig& c) {
    Resolved r = resolve(c);
    if (!r.family) throw DomainError("reproduce needs one of the named families");
    ReproductionOptions o;
    o.nMax = c.nmax;
    o.nAlt = c.nalt;
    o.nRef = c.nref;
    o.context = r.context;
    o.optimizeZeta = !r.context.has_value();
    o.epsilon = r.epsilon;
    o.normalise = r.normalise;
    o.relTol = r.relTol;
    o.jobs = c.jobs;
    r.provenance.insert(r.provenance.begin() + 4, "# N=1.." + std::to_string(c.nmax) + " nalt=" +
                                                       std::to_string(c.nalt) + " nref=" + std::to_string(c.nref));
    Reproduction rep = reproduce(*r.family, o);
    const std::string dir = c.out.empty() ? "reproduce_" + toString(r.family->id) : c.out;
    for (const auto& path : writeReproduction(rep, dir, r.provenance)) std::cout << path << '\n';
    std::vector<CriterionReport> crit;
    for (const auto& row : rep.rows) crit.push_back(row.criterion);
    if (auto n = firstCertified(crit)) {
        std::cout << "CERTIFIED at N=" << *n << '\n';
        return kExitOk;
    }
    std::cout << "NOT CERTIFIED for N=1.." << c.nmax << '\n';
    return kExitNotCertified;
}

void addModelOptions(CLI::App* s, RunConfig& c) {
    s->add_option("--family", c.family, "ex61, ex62 or ex63")->capture_default_str();
    s->add_option("--spec", c.spec, "stream spec JSON file (overrides --family)");
    s->add_option("--k1", c.k1, "rational p/q");
    s->add_option("--k2", c.k2, "rational p/q");
    s->add_option("--theta", c.theta, "winding of det a");
    s->add_option("--zeta1", c.zeta1, "rational in (0,1)");
    s->add_option("--zeta2", c.zeta2, "rational > 1");
    s->add_flag("--optimize-zeta", c.optimize, "search (zeta1, zeta2) per N");
    s->add_option("--epsilon", c.epsilon, "distance kept from the circle and open radii")->capture_default_str();
    s->add_option("--normalise", c.normalise, "auto, i2, j2, minus-infinity-identity or none")
        ->capture_default_str();
    s->add_option("--tol", c.tol, "relative width of irrational enclosures")->capture_default_str();
    s->add_option("--jobs", c.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_flag("--no-timestamp", c.noTimestamp, "omit the generated= provenance line");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified stable Wiener-Hopf factorisation of 2x2 matrix functions"};
    app.require_subcommand(1);
    RunConfig c;

    auto* factor = app.add_subcommand("factor", "exact factorisation of a Laurent matrix polynomial");
    factor->add_option("--input", c.input, "LMP-JSON file, - for stdin")->required();
    factor->add_option("--normalise", c.normalise, "auto, i2, j2, minus-infinity-identity or none")
        ->capture_default_str();
    factor->add_option("--out", c.out, "output file (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "reduce A to the two-stream form given scalar factorisation data");
    reduce->add_option("--input", c.input, "LMP-JSON file for A, - for stdin")->required();
    reduce->add_option("--scalars", c.scalars, "scalar factorisation data JSON (default: all trivial)");
    reduce->add_option("--out", c.out, "output file (default stdout)");

    auto* certify = app.add_subcommand("certify", "q_N < 1 scan over truncations");
    addModelOptions(certify, c);
    certify->add_option("--nmin", c.nmin)->capture_default_str()->check(CLI::PositiveNumber);
    certify->add_option("--nmax", c.nmax)->capture_default_str()->check(CLI::PositiveNumber);
    certify->add_option("--out", c.out, "output file (default stdout)");
    certify->add_option("--format", c.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

    auto* bounds = app.add_subcommand("bounds", "factor accuracy bounds");
    addModelOptions(bounds, c);
    bounds->add_option("--n", c.n, "single N (default: the --nmin..--nmax range)")->check(CLI::PositiveNumber);
    bounds->add_option("--nmin", c.nmin)->capture_default_str()->check(CLI::PositiveNumber);
    bounds->add_option("--nmax", c.nmax)->capture_default_str()->check(CLI::PositiveNumber);
    bounds->add_option("--out", c.out, "output file (default stdout)");
    bounds->add_option("--format", c.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

    auto* opt = app.add_subcommand("optimize-zeta", "best (zeta1, zeta2) for delta_N");
    addModelOptions(opt, c);
    opt->add_option("--n", c.n, "single N (default: the --nmin..--nmax range)")->check(CLI::PositiveNumber);
    opt->add_option("--nmin", c.nmin)->capture_default_str()->check(CLI::PositiveNumber);
    opt->add_option("--nmax", c.nmax)->capture_default_str()->check(CLI::PositiveNumber);
    opt->add_option("--out", c.out, "output file (default stdout)");
    opt->add_option("--format", c.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

    auto* repro = app.add_subcommand("reproduce", "tables and plot data for a named family");
    addModelOptions(repro, c);
    repro->add_option("--nmax", c.nmax)->capture_default_str()->check(CLI::PositiveNumber);
    repro->add_option("--nalt", c.nalt, "second reference truncation")->capture_default_str();
    repro->add_option("--nref", c.nref, "reference truncation")->capture_default_str();
    repro->add_option("--out", c.out, "output directory (default reproduce_<family>)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        if (c.command == "factor") return cmdFactor(c);
        if (c.command == "reduce") return cmdReduce(c);
        if (c.command == "certify") return cmdCertify(c);
        if (c.command == "bounds") return cmdBounds(c);
        if (c.command == "optimize-zeta") return cmdOptimizeZeta(c);
        return cmdReproduce(c);
    } catch (const NotMonomialDet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotMonomial;
    } catch (const VerificationFailed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InadmissibleRadius& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NormalisationUnavailable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
