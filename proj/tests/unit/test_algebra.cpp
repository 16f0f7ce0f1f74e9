#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "z3qg/algebra.hpp"

#include <random>

using namespace z3qg;

namespace {

const CycScalar q = CycScalar::q();
const CycScalar q2 = q * q;

Poly word(std::initializer_list<int> gens) {
    std::vector<Letter> w;
    for (int g : gens) w.push_back(Letter{g, 1});
    return Poly(Monomial::from_letters(w));
}

Rule swap(int x, int y, const Poly& rhs) { return Rule{{Letter{x, 1}, Letter{y, 1}}, rhs}; }

std::shared_ptr<Presentation> plane() {
    return std::make_shared<Presentation>(
        "plane", std::vector<Generator>{{"theta", 1, 3, false}, {"phi", 2, 3, false}},
        std::vector<Rule>{swap(1, 0, word({0, 1}) * q)});
}

enum { A, B, G, D };

std::shared_ptr<Presentation> mq2() {
    std::vector<Generator> gens{{"a", 0, {}, false}, {"beta", 2, {}, false}, {"gamma", 1, {}, false},
                                {"d", 0, {}, false}};
    std::vector<Rule> rules{
        swap(B, A, word({A, B})),
        swap(G, A, word({A, G}) * q2),
        swap(D, A, word({A, D}) - word({B, G}) * (q - 1)),
        swap(G, B, word({B, G})),
        swap(D, B, word({B, D})),
        swap(D, G, word({G, D}) * q2),
    };
    return std::make_shared<Presentation>("Mq2", gens, rules);
}

Poly random_homogeneous(const Presentation& p, std::mt19937& rng, int grade, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, static_cast<int>(p.generators().size()) - 1);
    Poly out;
    for (int t = 0; t < 3; ++t) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            std::vector<Letter> w;
            int n = len(rng);
            for (int i = 0; i < n; ++i) w.push_back(Letter{gen(rng), 1});
            Monomial m = Monomial::from_letters(w);
            if (p.grade(m) != grade) continue;
            out += p.reduce(Poly(m)) * oracle::random_scalar(rng);
            break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("monomials") {
    Monomial m = Monomial::from_letters({{0, 1}, {0, 1}, {1, 1}, {1, -1}, {2, -1}});
    CHECK(m.syllables() == std::vector<Syllable>{{0, 2}, {2, -1}});
    CHECK(m.degree() == 3);
    CHECK(m.reversed().syllables().front().gen == 2);
    CHECK(Monomial{} < m);
}

TEST_CASE("plane reductions") {
    auto p = plane();
    CHECK(p->reduce(word({1, 0})) == word({0, 1}) * q);
    CHECK(p->reduce(word({0, 0, 0})).is_zero());
    CHECK(p->reduce(word({1, 1, 0, 1})).is_zero());
    CHECK(p->dimension_census(4) == std::vector<long>{1, 2, 3, 2, 1});
    CHECK(p->dimension_census(5).back() == 0);
    auto rep = p->check_local_confluence();
    CHECK(rep.pass);
    CHECK(!rep.ambiguities.empty());
    CHECK(p->relations().size() == 3);
    CHECK(p->render(p->reduce(word({1, 0}))) == "q*theta*phi");
}

TEST_CASE("plane words against the inversion-count oracle") {
    auto p = plane();
    for (int len = 0; len <= 6; ++len) {
        for (const auto& w : oracle::all_words(2, len)) {
            int inversions = 0, phis = 0, thetas = 0;
            for (Letter l : w) {
                if (l.gen == 1) ++phis;
                else {
                    ++thetas;
                    inversions += phis;
                }
            }
            Poly expect;
            if (thetas < 3 && phis < 3)
                expect = Poly(Monomial({{0, thetas}, {1, phis}}), q_power(inversions));
            CHECK(p->reduce(Poly(Monomial::from_letters(w))) == expect);
        }
    }
}

TEST_CASE("broken presentation is detected") {
    auto p = std::make_shared<Presentation>(
        "broken", std::vector<Generator>{{"theta", 1, 3, false}, {"phi", 2, 3, false}},
        std::vector<Rule>{swap(1, 0, word({0, 1})), swap(1, 0, word({0, 1}) * q)});
    CHECK_FALSE(p->check_local_confluence().pass);
}

TEST_CASE("Mq2 relations orient and reduce") {
    auto p = mq2();
    CHECK(p->reduce(word({D, A})) == word({A, D}) - word({B, G}) * (q - 1));
    CHECK(p->reduce(word({D, G})) == word({G, D}) * q2);
    CHECK(p->render(p->reduce(word({D, A}))) == "a*d - (q - 1)*beta*gamma");
    CHECK(p->reduce(word({A, B, G})) == word({A, B, G}));
    CHECK(p->relations().size() == 6);
    for (const auto& r : p->relations()) CHECK(p->reduce(r.element).is_zero());
    CHECK(p->check_local_confluence().pass);
    CHECK(p->dimension_census(2) == std::vector<long>{1, 4, 10});
    CHECK(p->grade_of(word({B, G})) == 0);
    CHECK(p->grade_of(word({A}) + word({B, G})) == 0);
    CHECK_FALSE(p->grade_of(word({A}) + word({G})).has_value());
    CHECK(p->grade_of(Poly{}) == 0);
    CHECK(p->mul(p->reduce(word({A, D})), p->reduce(word({A, D}))) == p->reduce(word({A, D, A, D})));
}

TEST_CASE("Mq2 normal forms agree with the ideal-span oracle") {
    auto p = mq2();
    std::vector<Poly> rels;
    for (const auto& r : p->relations()) rels.push_back(r.element);
    for (int deg = 1; deg <= 3; ++deg) {
        oracle::Span ideal = oracle::ideal_span(rels, 4, deg);
        long total = 1;
        for (int i = 0; i < deg; ++i) total *= 4;
        CHECK(total - static_cast<long>(ideal.rank()) == p->dimension_census(deg).back());
        for (const auto& w : oracle::all_words(4, deg)) {
            Poly x(Monomial::from_letters(w));
            CHECK(ideal.contains(oracle::to_vec(x - p->reduce(x))));
        }
    }
}

TEST_CASE("Laurent generators") {
    std::vector<Generator> gens{{"U", 0, {}, true}, {"X", 2, {}, false}};
    auto p = std::make_shared<Presentation>("laurent", gens,
                                            std::vector<Rule>{swap(1, 0, word({0, 1}) * q)});
    Poly u = p->gen("U"), ui = p->gen("U", -1), x = p->gen("X");
    CHECK(p->mul(u, ui) == p->one());
    CHECK(p->mul(x, ui) == p->mul(ui, x) * q2);
    CHECK(p->check_local_confluence().pass);
    CHECK(p->render(p->mul(x, ui)) == "q^2*U^-1*X");
    CHECK(p->dimension_census(2) == std::vector<long>{1, 3, 5});
}

TEST_CASE("construction errors and the step guard") {
    using Gs = std::vector<Generator>;
    CHECK_THROWS_AS(Presentation("dup", Gs{{"a", 0}, {"a", 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation("both", Gs{{"a", 0, 2, true}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Presentation("grade", Gs{{"a", 0}, {"b", 1}}, {swap(1, 0, word({0}))}),
                    std::invalid_argument);
    Presentation loop("loop", Gs{{"a", 0}, {"b", 0}}, {swap(1, 0, word({0, 1})), swap(0, 1, word({1, 0}))});
    loop.set_max_steps(1000);
    CHECK_THROWS_AS(loop.reduce(word({1, 0})), RewriteLimitError);
    CHECK_THROWS_AS(loop.check_local_confluence(), RewriteLimitError);
}

TEST_CASE("randomized algebra properties") {
    auto p = mq2();
    auto pl = plane();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gr(0, 2);
    int cases = 0;
    for (int i = 0; i < 1000; ++i) {
        const Presentation& P = (i % 2) ? *p : *pl;
        int gx = gr(rng), gy = gr(rng), gz = gr(rng);
        Poly x = random_homogeneous(P, rng, gx, 4);
        Poly y = random_homogeneous(P, rng, gy, 4);
        Poly z = random_homogeneous(P, rng, gz, 3);
        CHECK(P.mul(x, P.mul(y, z)) == P.mul(P.mul(x, y), z));
        CHECK(P.reduce(x) == x);
        CHECK(P.mul(x, y + z) == P.mul(x, y) + P.mul(x, z));
        Poly xy = P.mul(x, y);
        if (!xy.is_zero()) CHECK(P.grade_of(xy) == mod3(gx + gy));
        CycScalar c = oracle::random_scalar(rng);
        CHECK(P.reduce(x * c + y) == P.reduce(x) * c + P.reduce(y));
        ++cases;
    }
    CHECK(cases >= 1000);
}
