#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "z3qg/expr.hpp"
#include "z3qg/hopf.hpp"
#include "z3qg/presentation_io.hpp"
#include "z3qg/presets.hpp"

#include <random>

using namespace z3qg;

namespace {
const CycScalar q = CycScalar::q();

std::string norm(const std::string& s, const char* preset) {
    auto p = get_preset(preset);
    return render_value(parse_expr(s, p), p);
}

size_t error_pos(const std::string& s, const char* preset) {
    try {
        parse_expr(s, get_preset(preset));
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}
}  // namespace

TEST_CASE("normalize examples") {
    CHECK(norm("d*a", "Mq2") == "a*d - (q - 1)*beta*gamma");
    CHECK(norm("q^2 * phi * theta", "plane") == "theta*phi");
    CHECK(norm("theta^3", "plane") == "0");
    CHECK(norm("2*(a + d) - a - a", "Mq2") == "2*d");
    CHECK(norm("a/2 - a/2", "Mq2") == "0");
    CHECK(norm("-q^-1*a", "Mq2") == "-q^2*a");
    CHECK(norm("U^-1*U", "Uqgl2") == "1");
    CHECK(norm("Xp*U", "Uqgl2") == "q*U*Xp");
    CHECK(norm("lambda", "Mq2") == norm("q - q^2", "Mq2"));
}

TEST_CASE("precedence") {
    // ^ binds tighter than unary minus and *.
    CHECK(norm("-a^2", "Mq2") == "-a^2");
    CHECK(norm("2*a^2", "Mq2") == "2*a^2");
    // ox sits between * and +.
    auto p = get_preset("Mq2");
    Value dbeta = parse_expr("a ox beta + beta ox d", p);
    CHECK(value_equal(dbeta, Value(make_coproduct(p).apply(p->gen("beta")))));
    CHECK(value_equal(parse_expr("delta(beta)", p), dbeta));
    CHECK(value_equal(parse_expr("q*a ox beta", p), parse_expr("q*(a ox beta)", p)));
}

TEST_CASE("named elements and maps") {
    CHECK(norm("Dq", "Mq2") == "a*d - q*beta*gamma");
    CHECK(norm("Dq - 1", "SLq2") == "0");
    CHECK(norm("vartheta", "free-plane") == "theta*phi - q^2*phi*theta");
    CHECK(norm("vartheta", "plane") == "0");
    CHECK(norm("epsilon(d*a)", "Mq2") == "1");
    CHECK(norm("delta(Dq) - Dq ox Dq", "Mq2") == "0");
    CHECK(norm("antipode(gamma)", "Mq2") == "-q*gamma*Dq^-1");
    CHECK(norm("antipode(Dq)", "Mq2") == "Dq^-1");
    CHECK(norm("Dq^-1*Dq", "Mq2") == "1");
    CHECK(norm("antipode(antipode(a))", "Mq2") == "a");
    CHECK(norm("star(gamma)", "SLq2") == "q*gamma");
    CHECK(norm("deltaL(theta)", "plane") == "a ox theta + beta ox phi");
    CHECK(norm("deltaR(phi)", "plane") == "theta ox beta + phi ox d");
    CHECK(norm("delta(U)", "Uqgl2") == "U ox U");
}

TEST_CASE("grades") {
    auto p = get_preset("Mq2");
    CHECK(value_grade(parse_expr("beta*gamma", p), p) == 0);
    CHECK(value_grade(parse_expr("gamma", p), p) == 1);
    CHECK(value_grade(parse_expr("a + gamma", p), p) == std::nullopt);
    CHECK(value_grade(parse_expr("a ox beta", p), p) == 2);
    CHECK(value_grade(parse_expr("gamma*Dq^-1", p), p) == 1);
}

TEST_CASE("errors carry positions") {
    CHECK(error_pos("a + foo", "Mq2") == 4);
    CHECK(error_pos("a +", "Mq2") == 3);
    CHECK(error_pos("(a", "Mq2") == 2);
    CHECK(error_pos("a $ d", "Mq2") == 2);
    CHECK(error_pos("a^-1", "Mq2") == 0);
    CHECK(error_pos("a / d", "Mq2") == 4);
    CHECK(error_pos("delta(theta)", "plane") == 0);
    CHECK(error_pos("a + a ox d", "Mq2") == 2);
    CHECK(error_pos("", "Mq2") == 0);
    CHECK(error_pos("theta", "Mq2") == 0);
    CHECK(error_pos("delta", "Mq2") == 0);
    CHECK(error_pos("epsilon(a", "Mq2") == 9);
}

TEST_CASE("parse after render is the identity on normal forms") {
    std::mt19937 rng(2718);
    for (const char* name : {"plane", "dual-plane", "Mq2", "SLq2", "Uqgl2", "free-plane"}) {
        auto p = get_preset(name);
        for (int i = 0; i < 300; ++i) {
            Poly x = oracle::random_element(*p, rng, 3);
            CycScalar c(mpq_class(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 4) + 1));
            c += CycScalar::q() * CycScalar(mpq_class(static_cast<long>(rng() % 5) - 2, 3));
            x = x * c;
            std::string s = p->render(x);
            CAPTURE(s);
            CHECK(parse_poly(s, p) == x);
        }
    }
    auto m = get_preset("Mq2");
    Coproduct delta = make_coproduct(m);
    Antipode s = make_antipode();
    std::mt19937 rng2(99);
    for (int i = 0; i < 200; ++i) {
        Poly x = oracle::random_element(*m, rng2, 2);
        TensorPoly t = delta.apply(x);
        CAPTURE(t.render());
        CAPTURE(render_value(parse_expr(t.render(), m), m));
        CHECK(value_equal(parse_expr(t.render(), m), Value(t)));
        LocalizedElement l = s.apply(x);
        CHECK(value_equal(parse_expr(l.render(), m), Value(l)));
    }
}

TEST_CASE("presentation text round trip") {
    for (const auto& name : preset_names()) {
        auto p = get_preset(name);
        std::string text = write_presentation(*p);
        CAPTURE(text);
        auto back = read_presentation(text);
        CHECK(back->name() == name);
        CHECK(write_presentation(*back) == text);
        CHECK(back->rules().size() == p->rules().size());
        CHECK(back->check_local_confluence().pass == p->check_local_confluence().pass);
        CHECK(back->dimension_census(3) == p->dimension_census(3));
    }
    CHECK(write_presentation(*get_preset("plane")) ==
          "presentation plane\ntheta 1 nilpotent 3\nphi 2 nilpotent 3\nphi*theta -> q*theta*phi\n");
}

TEST_CASE("presentation text errors") {
    CHECK_THROWS_AS(read_presentation("x 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_presentation("x 0\ny 0\ny*z -> x\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_presentation("x 0\ny 1\ny*x -> x*x\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_presentation("x 0\ny 0\ny*x -> x*\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_presentation("# nothing\n"), std::invalid_argument);
    auto p = read_presentation("presentation toy\nx 0\ny 1 nilpotent 2\ny*x -> q*x*y  # comment\n");
    CHECK(p->render(p->mul(p->gen("y"), p->gen("x"))) == "q*x*y");
    CHECK(p->pow(p->gen("y"), 2).is_zero());
}
