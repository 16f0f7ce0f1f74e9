#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "z3qg/scalar.hpp"

#include <array>
#include <random>

using z3qg::CycScalar;

namespace {

// Oracle: Q[x]/(x^3 - 1) with cyclic convolution, projected to {1, q} only at the end.
using Cyclic = std::array<mpq_class, 3>;

Cyclic cyc_mul_oracle(const Cyclic& x, const Cyclic& y) {
    Cyclic r{0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[(i + j) % 3] += x[i] * y[j];
    return r;
}

CycScalar project(const Cyclic& c) { return CycScalar(c[0] - c[2], c[1] - c[2]); }

mpq_class small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Cyclic random_cyclic(std::mt19937& rng) { return {small_rational(rng), small_rational(rng), small_rational(rng)}; }

}  // namespace

TEST_CASE("field basics") {
    CycScalar q = CycScalar::q();
    CHECK(q + q * q == CycScalar(-1));
    CHECK(CycScalar(0) + q == q);
    CHECK((CycScalar(1) + q) + (CycScalar(1) + q) == CycScalar(2, 2));
    CHECK(q * (q * q) == CycScalar(1));
    CHECK(q * q == CycScalar(-1, -1));
    CHECK((q - q * q) * (q - q * q) == CycScalar(-3));
    CHECK(CycScalar::lambda() == q - q * q);
}

TEST_CASE("inverse and conjugation") {
    CycScalar q = CycScalar::q();
    CHECK(q.inv() == q * q);
    CHECK((q - q * q).inv() == (q * q - q) / CycScalar(3));
    CHECK(CycScalar(2).inv() == CycScalar(mpq_class(1, 2)));
    CHECK_THROWS_AS(CycScalar(0).inv(), std::domain_error);
    CHECK(q.conj() == q * q);
    CHECK((q - 1).conj() == q * q - 1);
    CHECK(z3qg::cyc_conj(z3qg::cyc_conj(CycScalar(3, -2))) == CycScalar(3, -2));
}

TEST_CASE("q powers") {
    CHECK(z3qg::q_power(3).is_one());
    CHECK(z3qg::q_power(-1) == CycScalar::q() * CycScalar::q());
    CHECK(z3qg::q_power(4) == CycScalar::q());
    CHECK(z3qg::mod3(-4) == 2);
}

TEST_CASE("rendering and parsing") {
    CycScalar q = CycScalar::q();
    CHECK(CycScalar(0).str() == "0");
    CHECK((q * q).str() == "-1 - q");
    CHECK(CycScalar(2, 2).str() == "2 + 2*q");
    CHECK(CycScalar(mpq_class(1, 2)).str() == "1/2");
    CHECK(CycScalar(mpq_class(-3, 4), 1).str() == "-3/4 + q");
    CHECK(CycScalar::parse("q^2") == q * q);
    CHECK(CycScalar::parse("-1/2 + 3*q") == CycScalar(mpq_class(-1, 2), 3));
    CHECK(CycScalar::parse("2 - q") == CycScalar(2, -1));
    CHECK(CycScalar::parse("q^-1") == q * q);
    CHECK(CycScalar::parse("-q") == -q);
    CHECK_THROWS_AS(CycScalar::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(CycScalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(CycScalar::parse("2 x"), std::invalid_argument);
}

TEST_CASE("randomized field laws against the cyclic oracle") {
    std::mt19937 rng(20261019);
    int cases = 0;
    for (int i = 0; i < 2000; ++i) {
        Cyclic x = random_cyclic(rng), y = random_cyclic(rng);
        CycScalar a = project(x), b = project(y);
        CHECK(a * b == project(cyc_mul_oracle(x, y)));
        CHECK(z3qg::cyc_conj(a * b) == a.conj() * b.conj());
        CHECK(z3qg::cyc_conj(a + b) == a.conj() + b.conj());
        CHECK((a * a.conj()) == CycScalar(a.norm()));
        CHECK((a.norm() == 0) == a.is_zero());
        if (!a.is_zero()) CHECK(a * z3qg::cyc_inv(a) == CycScalar(1));
        CHECK(CycScalar::parse(a.str()) == a);
        long k = static_cast<long>(rng() % 21) - 10, m = static_cast<long>(rng() % 21) - 10;
        CHECK(z3qg::q_power(k) * z3qg::q_power(m) == z3qg::q_power(k + m));
        ++cases;
    }
    CHECK(cases >= 1000);
}
