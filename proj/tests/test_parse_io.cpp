#include <gtest/gtest.h>

#include <sstream>

#include "generators.hpp"

using namespace zsr;
using namespace zsr::testing;

namespace {

ParseDiagnostic diagnostic_of(const std::string& src, std::size_t n, ErrorKind expected) {
    try {
        (void)parse_polynomial(src, n);
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), expected) << src;
        return e.diagnostic();
    }
    ADD_FAILURE() << "no error for '" << src << "'";
    return {};
}

// Random source text: signed terms with optional rational coefficients and powers,
// random spacing, possibly repeated variables and like terms.
std::string random_source(Rng& rng, std::size_t n) {
    const int terms = uniform_int(rng, 1, 5);
    std::string s;
    auto space = [&] { return std::string(static_cast<std::size_t>(uniform_int(rng, 0, 2)), ' '); };
    for (int t = 0; t < terms; ++t) {
        const bool neg = uniform_int(rng, 0, 1) == 1;
        if (t == 0) {
            if (neg) s += "-";
        } else {
            s += space() + (neg ? "-" : "+") + space();
        }
        bool need_star = false;
        const int kind = uniform_int(rng, 0, 2);
        if (kind != 1) {
            s += std::to_string(uniform_int(rng, 0, 30));
            if (uniform_int(rng, 0, 2) == 0) s += "/" + std::to_string(uniform_int(rng, 1, 12));
            need_star = true;
        }
        const int factors = kind == 0 ? uniform_int(rng, 0, 2) : uniform_int(rng, 1, 3);
        for (int f = 0; f < factors; ++f) {
            if (need_star) s += space() + "*" + space();
            s += "x" + std::to_string(uniform_int(rng, 1, static_cast<int>(n)));
            if (uniform_int(rng, 0, 1) == 1) s += "^" + std::to_string(uniform_int(rng, 1, 4));
            need_star = true;
        }
    }
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Parse, Examples) {
    const Polynomial p = parse_polynomial("-x1^2 + x1*x2 + x1", 3);
    Polynomial expected(3);
    expected.add_term(MultiIndex({2, 0, 0}), Rational(-1));
    expected.add_term(MultiIndex({1, 1, 0}), Rational(1));
    expected.add_term(MultiIndex({1, 0, 0}), Rational(1));
    EXPECT_EQ(p, expected);
    EXPECT_TRUE(parse_polynomial("0", 3).is_zero());
    EXPECT_EQ(parse_polynomial(" 3 / 6 * x2 ^ 2 ", 2), Polynomial::monomial(MultiIndex({0, 2}), Rational(1, 2)));
    EXPECT_EQ(parse_polynomial("x1*x1 - x1^2", 1), Polynomial(1));
}

TEST(Parse, VariableOutOfRange) {
    const auto d = diagnostic_of("x4", 3, ErrorKind::VariableOutOfRange);
    EXPECT_EQ(d.offset, 0u);
    EXPECT_EQ(d.column, 1u);
    diagnostic_of("x1 + x0", 3, ErrorKind::VariableOutOfRange);
}

TEST(Parse, SyntaxErrors) {
    for (const char* bad : {"", "x1 +", "x1 ** x2", "x1^0", "x1^-1", "1/0", "2x1", "x", "x1 x2", "3.5", "x1^"}) {
        const auto d = diagnostic_of(bad, 3, ErrorKind::SyntaxError);
        EXPECT_LE(d.offset, std::string(bad).size()) << bad;
        EXPECT_FALSE(d.message.empty());
    }
}

TEST(Parse, DiagnosticPosition) {
    const auto d = diagnostic_of("x1 + 2*x2\n  + x3 ^ ", 3, ErrorKind::SyntaxError);
    EXPECT_EQ(d.line, 2u);
    EXPECT_GT(d.column, 1u);
    const auto e = diagnostic_of("x1 + @", 3, ErrorKind::SyntaxError);
    EXPECT_EQ(e.offset, 5u);
    EXPECT_EQ(e.fragment.substr(0, 1), "@");
}

TEST(Parse, DimensionMustBePositive) { EXPECT_THROW((void)parse_polynomial("1", 0), Error); }

TEST(Print, RationalsHavePositiveDenominators) {
    EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
    EXPECT_EQ(to_string(make_rational(4, -2)), "-2");
    EXPECT_EQ(to_string(make_rational(0, -7)), "0");
    EXPECT_THROW((void)make_rational(1, 0), Error);
    EXPECT_EQ(to_string(parse_polynomial("-2/4*x1", 1)), "-1/2*x1");
}

// ---- properties ------------------------------------------------------------

TEST(ParseProperty, RoundTrip) {
    Rng rng(51);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const std::string src = random_source(rng, n);
        const Polynomial p = parse_polynomial(src, n);
        const std::string printed = to_string(p);
        ASSERT_EQ(parse_polynomial(printed, n), p) << src << " -> " << printed;
        ASSERT_EQ(to_string(parse_polynomial(printed, n)), printed);
    }
}

TEST(ParseProperty, RandomPolynomialsPrintAndReparse) {
    Rng rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Polynomial p = random_poly(rng, n, 4, 9, 0.3);
        p *= random_rational(rng, 7) + Rational(1, 100);
        ASSERT_EQ(parse_polynomial(to_string(p), n), p);
    }
}

// ---- JSON -------------------------------------------------------------------

TEST(Io, LoadFixtures) {
    const SystemFile c1 = load_system(std::string(ZSR_FIXTURES) + "/case1.json");
    EXPECT_EQ(c1.n, 3u);
    EXPECT_EQ(c1.kind, SystemKind::Payoff);
    EXPECT_TRUE(c1.payoff.is_constant());
    const SystemFile e2 = load_system(std::string(ZSR_FIXTURES) + "/quadratic_field.json");
    EXPECT_EQ(e2.kind, SystemKind::Field);
    EXPECT_EQ(e2.field, vec(3, {"-x1^2 + x1*x2 + x1", "-2*x1^2", "-x1^2"}));
    EXPECT_EQ(e2.increment(), e2.field);
    EXPECT_EQ(c1.increment(), build_h(c1.payoff));
}

TEST(Io, SystemRoundTrip) {
    for (const char* name : {"case1", "case2", "case3", "case4", "quadratic_field", "rps"}) {
        const SystemFile s = load_system(std::string(ZSR_FIXTURES) + "/" + name + ".json");
        const SystemFile back = system_from_json(Json::parse(to_json(s).dump()));
        EXPECT_EQ(back.payoff, s.payoff) << name;
        EXPECT_EQ(back.field, s.field) << name;
        EXPECT_EQ(back.name, s.name);
    }
}

TEST(Io, KindIsInferred) {
    const Json j = Json::parse(R"({"n": 2, "field": ["x2", "-x1"]})");
    EXPECT_EQ(system_from_json(j).kind, SystemKind::Field);
}

TEST(Io, BadSystemFiles) {
    auto kind_of = [](const std::string& text) {
        try {
            (void)system_from_json(Json::parse(text));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind_of(R"([1, 2])"), ErrorKind::InvalidFile);
    EXPECT_EQ(kind_of(R"({"n": 0, "field": []})"), ErrorKind::InvalidFile);
    EXPECT_EQ(kind_of(R"({"n": 2, "kind": "payoff"})"), ErrorKind::InvalidFile);
    EXPECT_EQ(kind_of(R"({"n": 2, "kind": "game", "field": ["0", "0"]})"), ErrorKind::InvalidFile);
    EXPECT_EQ(kind_of(R"({"n": 2, "field": ["x1"]})"), ErrorKind::InvalidFile);
    EXPECT_EQ(kind_of(R"({"n": 2, "field": ["x3", "0"]})"), ErrorKind::VariableOutOfRange);
    EXPECT_EQ(kind_of(R"({"n": 2, "field": ["x1 +", "0"]})"), ErrorKind::SyntaxError);
}

TEST(Io, ParseErrorsCarryJsonPath) {
    try {
        (void)system_from_json(Json::parse(R"({"n": 2, "payoff": [["0", "1"], ["x1 ^", "0"]]})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("payoff[1][0]"), std::string::npos) << e.what();
    }
}

TEST(Io, ReportVerifies) {
    const auto rep = decompose(vec(3, {"-x1^2 + x1*x2 + x1", "-2*x1^2", "-x1^2"}));
    const Json j = to_json(rep);
    EXPECT_EQ(j["certificate"]["remainder"], Json::parse(R"(["0", "0", "0"])"));
    EXPECT_EQ(j["certificate"]["divisor"], "-x1 - x2 - x3 + 1");
    const VerifyResult r = verify_report(Json::parse(j.dump()));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checks.size(), 5u);
}

TEST(Io, ReportRejectsPerturbation) {
    const auto rep = decompose(vec(3, {"-x1^2 + x1*x2 + x1", "-2*x1^2", "-x1^2"}));
    Json j = to_json(rep);
    // Skew-preserving perturbation: still rejected by the certificate identity.
    PolyMatrix a = rep.A.matrix();
    a(0, 1) += Polynomial::constant(3, Rational(1));
    a(1, 0) -= Polynomial::constant(3, Rational(1));
    j["A"] = to_json(a);
    const VerifyResult r = verify_report(j);
    EXPECT_FALSE(r.ok());
    for (const auto& c : r.checks)
        if (c.name == "certificate_identity") {
            EXPECT_FALSE(c.passed);
        }
}

TEST(Io, VerifyRejectsMalformed) {
    EXPECT_THROW((void)verify_report(Json::parse(R"({"n": 3})")), Error);
    EXPECT_THROW((void)verify_report(Json::parse(R"([])")), Error);
}

TEST(IoProperty, VerifyAcceptsCorpusAndRejectsSingleCoefficientPerturbations) {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const SkewPolyMatrix a0 = random_skew(rng, n, 2, 5, 0.3);
        const PolyVector g = apply_to_x(a0.matrix()) + simplex_form(n) * random_vector(rng, n, 1, 5, 0.3);
        const auto rep = decompose(g);
        Json j = to_json(rep);
        ASSERT_TRUE(verify_report(Json::parse(j.dump())).ok());

        // Change one coefficient of one entry of A (or add one where A is zero).
        PolyMatrix a = rep.A.matrix();
        const std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        if (a(i, k).is_zero())
            a(i, k).add_term(MultiIndex(n), Rational(1));
        else
            a(i, k).add_term(a(i, k).terms().begin()->first, Rational(1, 3));
        j["A"] = to_json(a);
        ASSERT_FALSE(verify_report(j).ok());
    }
}

// ---- numeric output ---------------------------------------------------------

TEST(Io, FormatFixedHasNoNegativeZero) {
    EXPECT_EQ(format_fixed(-0.0000001, 2), "0.00");
    EXPECT_EQ(format_fixed(-1.5, 1), "-1.5");
    EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Io, TrajectoryCsv) {
    std::vector<std::vector<Rational>> rps{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    const Trajectory t = integrate(make_system(PayoffMatrix::constant(rps)), {0.2, 0.3, 0.5}, 0.5, 0.1);
    std::ostringstream a, b;
    write_trajectory_csv(a, t);
    write_trajectory_csv(b, t);
    EXPECT_EQ(a.str(), b.str());
    std::istringstream lines(a.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "t,x1,x2,x3,sum_err");
    std::size_t rows = 0;
    while (std::getline(lines, line)) ++rows;
    EXPECT_EQ(rows, 6u);
}

TEST(Io, PlotSamples) {
    EXPECT_TRUE(plot_samples(0).empty());
    EXPECT_EQ(plot_samples(3), (std::vector<std::size_t>{0, 1, 2}));
    const auto s = plot_samples(1001, 400);
    EXPECT_LE(s.size(), 401u);
    EXPECT_EQ(s.back(), 1000u);
}

TEST(Io, PortraitSvg) {
    std::vector<std::vector<Rational>> rps{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    const PhasePortrait pp = phase_portrait(make_system(PayoffMatrix::constant(rps)), 4, 2.0, 1e-2);
    std::ostringstream svg, csv;
    write_portrait_svg(svg, pp, "rps");
    write_portrait_csv(csv, pp);
    const std::string s = svg.str();
    EXPECT_EQ(s.rfind("<svg", 0) == 0 || s.rfind("<?xml", 0) == 0, true);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
    std::size_t polylines = 0;
    for (std::size_t p = s.find("<polyline"); p != std::string::npos; p = s.find("<polyline", p + 1)) ++polylines;
    EXPECT_EQ(polylines, pp.trajectories.size());
    EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "traj,t,x1,x2,x3,px,py");
}

TEST(Io, FixtureFilesAreReadable) { EXPECT_FALSE(slurp(std::string(ZSR_FIXTURES) + "/rps.json").empty()); }
