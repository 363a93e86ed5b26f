#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "sqm/expr.hpp"

using sqm::Expression;
using sqm::Jet2;
using sqm::parse;

namespace {

const std::map<std::string, double> kNoParams;

// Value-only recursive evaluator, independent of the jet path; the
// finite-difference oracle below is built on it.
double plain_eval(const sqm::ExprNode& n, double s1, double s2,
                  const std::map<std::string, double>& params) {
    using sqm::ExprKind;
    switch (n.kind) {
        case ExprKind::Number: return n.number;
        case ExprKind::Variable:
            if (n.name == "s1") return s1;
            if (n.name == "s2") return s2;
            return params.at(n.name);
        case ExprKind::Unary: return -plain_eval(*n.args[0], s1, s2, params);
        case ExprKind::Binary: {
            const double a = plain_eval(*n.args[0], s1, s2, params);
            const double b = plain_eval(*n.args[1], s1, s2, params);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            return 0;
        }
        case ExprKind::Call: {
            const double a = plain_eval(*n.args[0], s1, s2, params);
            using sqm::FnId;
            switch (n.fn) {
                case FnId::Sin: return std::sin(a);
                case FnId::Cos: return std::cos(a);
                case FnId::Tan: return std::tan(a);
                case FnId::Sinh: return std::sinh(a);
                case FnId::Cosh: return std::cosh(a);
                case FnId::Tanh: return std::tanh(a);
                case FnId::Exp: return std::exp(a);
                case FnId::Log: return std::log(a);
                case FnId::Sqrt: return std::sqrt(a);
                case FnId::Abs: return std::abs(a);
                case FnId::Atan2:
                    return std::atan2(a, plain_eval(*n.args[1], s1, s2, params));
            }
            return 0;
        }
    }
    return 0;
}

struct FiniteDifferenceJet {
    double v, d1, d2, d11, d12, d22;
};

FiniteDifferenceJet fd_oracle(const Expression& e, double s1, double s2, double h,
                              const std::map<std::string, double>& params) {
    auto F = [&](double a, double b) { return plain_eval(e.root(), a, b, params); };
    FiniteDifferenceJet r;
    r.v = F(s1, s2);
    r.d1 = (F(s1 + h, s2) - F(s1 - h, s2)) / (2 * h);
    r.d2 = (F(s1, s2 + h) - F(s1, s2 - h)) / (2 * h);
    r.d11 = (F(s1 + h, s2) - 2 * r.v + F(s1 - h, s2)) / (h * h);
    r.d22 = (F(s1, s2 + h) - 2 * r.v + F(s1, s2 - h)) / (h * h);
    r.d12 = (F(s1 + h, s2 + h) - F(s1 + h, s2 - h) - F(s1 - h, s2 + h) + F(s1 - h, s2 - h)) /
            (4 * h * h);
    return r;
}

} // namespace

TEST_CASE("atomic variable") {
    const Expression e = parse("s1");
    const Jet2 j = e.eval_jet2(4.25, 0.0, kNoParams);
    CHECK(j.v == 4.25);
    CHECK(j.d1 == 1.0);
    CHECK(j.d2 == 0.0);
}

TEST_CASE("(2+1)*s2 evaluates to 15 at s2=5") {
    const Expression e = parse("(2+1)*s2");
    CHECK(e.eval_jet2(0.0, 5.0, kNoParams).v == 15.0);
}

TEST_CASE("pythagorean identity") {
    const Expression e = parse("sin(s1)^2 + cos(s1)^2");
    CHECK(e.eval_jet2(0.7, 0.0, kNoParams).v == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("exp(s1*s2) cross derivative at (1,2): d12 = 3 e^2") {
    const Expression e = parse("exp(s1*s2)");
    const Jet2 j = e.eval_jet2(1.0, 2.0, kNoParams);
    const double expected = 3.0 * std::exp(2.0);
    CHECK(j.d12 == doctest::Approx(expected).epsilon(1e-14));
    // finite-difference oracle at the spec'd step and tolerance
    const FiniteDifferenceJet fd = fd_oracle(e, 1.0, 2.0, 1e-5, kNoParams);
    CHECK(std::abs(fd.d12 - j.d12) / std::abs(j.d12) <= 1e-6);
}

TEST_CASE("precedence and associativity") {
    CHECK(parse("2+3*4").eval_jet2(0, 0, kNoParams).v == 14.0);
    CHECK(parse("2*3^2").eval_jet2(0, 0, kNoParams).v == 18.0);
    CHECK(parse("2^3^2").eval_jet2(0, 0, kNoParams).v == 512.0);  // right-assoc
    CHECK(parse("-2^2").eval_jet2(0, 0, kNoParams).v == -4.0);    // ^ binds tighter
    CHECK(parse("2^-1").eval_jet2(0, 0, kNoParams).v == 0.5);
    CHECK(parse("1-2-3").eval_jet2(0, 0, kNoParams).v == -4.0);
    CHECK(parse("8/4/2").eval_jet2(0, 0, kNoParams).v == 1.0);
    CHECK(parse("pi").eval_jet2(0, 0, kNoParams).v == doctest::Approx(3.14159265358979).epsilon(1e-14));
}

TEST_CASE("parameters bind as constants") {
    const Expression e = parse("R*cos(s1)");
    const Jet2 j = e.eval_jet2(0.0, 0.0, {{"R", 2.5}});
    CHECK(j.v == 2.5);
    CHECK(j.d1 == 0.0);
    CHECK(j.d11 == -2.5);
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse("s1 + * s2");
        FAIL("expected ParseError");
    } catch (const sqm::ParseError& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse("sin(s1"), sqm::ParseError);
    CHECK_THROWS_AS(parse("(s1+s2"), sqm::ParseError);
    CHECK_THROWS_AS(parse("s1 s2"), sqm::ParseError);
    CHECK_THROWS_AS(parse(""), sqm::ParseError);
    CHECK_THROWS_AS(parse("1..2"), sqm::ParseError);
}

TEST_CASE("unknown functions and wrong arity are parse errors") {
    CHECK_THROWS_AS(parse("foo(s1)"), sqm::ParseError);
    CHECK_THROWS_AS(parse("sin(s1, s2)"), sqm::ParseError);
    CHECK_THROWS_AS(parse("atan2(s1)"), sqm::ParseError);
    CHECK_THROWS(parse("atan2(s1, s2, s1)"));
}

TEST_CASE("validate_symbols lists every offender at once") {
    const Expression e = parse("s1 + R + Q*s3");
    CHECK_NOTHROW(parse("s1+R").validate_symbols({"R"}));
    try {
        e.validate_symbols({});
        FAIL("expected SymbolError");
    } catch (const sqm::SymbolError& err) {
        REQUIRE(err.symbols.size() == 3);
        CHECK(err.symbols[0] == "R");
        CHECK(err.symbols[1] == "Q");
        CHECK(err.symbols[2] == "s3");
    }
    CHECK_THROWS_AS(parse("s3").validate_symbols({}), sqm::SymbolError);
}

TEST_CASE("domain errors name the offending subexpression") {
    try {
        parse("log(s1 - 2)").eval_jet2(1.0, 0.0, kNoParams);
        FAIL("expected EvalError");
    } catch (const sqm::EvalError& e) {
        CHECK(e.subexpr.find("log") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("1/(s1-1)").eval_jet2(1.0, 0.0, kNoParams), sqm::EvalError);
    CHECK_THROWS_AS(parse("x").eval_jet2(0, 0, kNoParams), sqm::EvalError);
}

TEST_CASE("serialize round-trips to an identical AST") {
    const char* cases[] = {
        "s1",
        "(2+1)*s2",
        "sin(s1)^2 + cos(s1)^2",
        "-s1^2 + atan2(s2, s1+1)",
        "R*cos(s1)*(1 - tanh(s2/2))",
        "sqrt(abs(s1)+1e-3) / (2^s2)",
        "exp(-(s1-1.5)^2)",
    };
    for (const char* text : cases) {
        const Expression a = parse(text);
        const Expression b = parse(a.serialize());
        CHECK(a.equals(b));
        CHECK(a.serialize() == b.serialize());
    }
}

TEST_CASE("random expression trees match the finite-difference oracle") {
    // safe function set and guarded division keep values and derivatives tame
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> point(0.2, 1.3);
    std::uniform_int_distribution<int> pick(0, 9);

    std::function<std::string(int)> make_tree = [&](int depth) -> std::string {
        if (depth == 0) {
            switch (pick(rng) % 4) {
                case 0: return "s1";
                case 1: return "s2";
                case 2: return "a";
                default: {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.3f", point(rng));
                    return buf;
                }
            }
        }
        const std::string lhs = make_tree(depth - 1);
        const std::string rhs = make_tree(depth - 1);
        switch (pick(rng)) {
            case 0: return "(" + lhs + "+" + rhs + ")";
            case 1: return "(" + lhs + "-" + rhs + ")";
            case 2: return "(" + lhs + "*" + rhs + ")";
            case 3: return "(" + lhs + "/(2+cos(" + rhs + ")))";
            case 4: return "sin(" + lhs + ")";
            case 5: return "cos(" + lhs + ")";
            case 6: return "tanh(" + lhs + ")";
            case 7: return "(" + lhs + "^2)";
            case 8: return "sqrt(4+(" + lhs + "^2))";
            default: return "atan2(" + lhs + ", 2+cos(" + rhs + "))";
        }
    };

    const std::map<std::string, double> params{{"a", 0.8}};
    int tested = 0;
    while (tested < 60) {
        const std::string text = make_tree(1 + int(pick(rng)) % 4);
        const Expression e = parse(text);
        const double s1 = point(rng), s2 = point(rng);
        const Jet2 j = e.eval_jet2(s1, s2, params);

        // larger step for the second-difference slots: their roundoff term
        // eps/h^2 would swamp the 1e-5 tolerance at h = 1e-5
        const FiniteDifferenceJet fd1 = fd_oracle(e, s1, s2, 1e-5, params);
        const FiniteDifferenceJet fd2 = fd_oracle(e, s1, s2, 2e-4, params);

        auto close = [](double jet, double fd, double scale) {
            return std::abs(jet - fd) <= 1e-5 * std::max({1.0, std::abs(jet), scale});
        };
        const double scale = std::max(std::abs(j.v), 1.0);
        CHECK(close(j.d1, fd1.d1, scale));
        CHECK(close(j.d2, fd1.d2, scale));
        CHECK(close(j.d11, fd2.d11, scale));
        CHECK(close(j.d12, fd2.d12, scale));
        CHECK(close(j.d22, fd2.d22, scale));
        ++tested;
    }
}
