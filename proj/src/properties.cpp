#include "z3qg/properties.hpp"

#include "z3qg/comodule.hpp"
#include "z3qg/hopf.hpp"
#include "z3qg/localization.hpp"
#include "z3qg/presets.hpp"

namespace z3qg {

namespace {

CycScalar random_scalar(std::mt19937& rng) {
    static const CycScalar pool[] = {
        CycScalar(1), CycScalar(-1), CycScalar(2), CycScalar(mpq_class(1, 2)), CycScalar::q(),
        CycScalar::q() * CycScalar::q(), CycScalar::q() - CycScalar(1), CycScalar(3) + CycScalar::q() * CycScalar(-2),
    };
    return pool[std::uniform_int_distribution<size_t>(0, std::size(pool) - 1)(rng)];
}

std::vector<Letter> random_word(const Presentation& p, std::mt19937& rng, int len) {
    const auto& gens = p.generators();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
    std::vector<Letter> w;
    for (int k = 0; k < len; ++k) {
        int g = pick(rng);
        int sign = gens[g].invertible && (rng() & 1) ? -1 : 1;
        w.push_back({g, sign});
    }
    return w;
}

TensorPoly random_tensor(const TensorSpacePtr& sp, std::mt19937& rng, int max_len) {
    TensorPoly out(sp);
    for (int t = 1 + static_cast<int>(rng() % 2); t > 0; --t) {
        std::vector<Poly> factors;
        for (const auto& slot : sp->slots()) factors.push_back(random_poly(*slot, rng, max_len, 2));
        out += TensorPoly::pure(sp, factors);
    }
    return out;
}

const std::vector<std::string>& confluent_presets() {
    static const std::vector<std::string> names{"plane", "dual-plane", "Mq2", "SLq2", "Uqgl2"};
    return names;
}

void summarize(CheckReport& rep, int cases) { rep.note(std::to_string(cases) + " randomized cases"); }

}  // namespace

Poly random_poly(const Presentation& p, std::mt19937& rng, int max_len, int terms) {
    std::uniform_int_distribution<int> len(0, max_len), cnt(1, terms);
    Poly out;
    for (int t = cnt(rng); t > 0; --t) out += p.reduce_word(random_word(p, rng, len(rng))) * random_scalar(rng);
    return out;
}

CheckReport property_associativity(const PropertyOptions& o) {
    CheckReport rep("property-associativity");
    std::mt19937 rng(o.seed);
    const auto& names = confluent_presets();
    for (int i = 0; i < o.cases; ++i) {
        auto p = get_preset(names[static_cast<size_t>(i) % names.size()]);
        Poly x = random_poly(*p, rng, 3), y = random_poly(*p, rng, 3), z = random_poly(*p, rng, 3);
        Poly r = p->mul(p->mul(x, y), z) - p->mul(x, p->mul(y, z));
        if (!r.is_zero())
            rep.fail(p->name() + ": (xy)z - x(yz) = " + p->render(r) + " for x = " + p->render(x) +
                     ", y = " + p->render(y) + ", z = " + p->render(z));
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_tensor_associativity(const PropertyOptions& o) {
    CheckReport rep("property-tensor-associativity");
    std::mt19937 rng(o.seed + 1);
    auto m = get_preset("Mq2");
    std::vector<TensorSpacePtr> spaces{make_space({m, m}), make_space({get_preset("plane"), m}),
                                       make_space({m, m}, Braiding::inverse)};
    for (int i = 0; i < o.cases; ++i) {
        const auto& sp = spaces[static_cast<size_t>(i) % spaces.size()];
        TensorPoly x = random_tensor(sp, rng, 2), y = random_tensor(sp, rng, 2), z = random_tensor(sp, rng, 2);
        TensorPoly r = tensor_mul(tensor_mul(x, y), z) - tensor_mul(x, tensor_mul(y, z));
        if (!r.is_zero()) rep.fail("(XY)Z - X(YZ) = " + r.render() + " for X = " + x.render());
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_grade_additivity(const PropertyOptions& o) {
    CheckReport rep("property-grade-additivity");
    std::mt19937 rng(o.seed + 2);
    const auto& names = confluent_presets();
    for (int i = 0; i < o.cases; ++i) {
        auto p = get_preset(names[static_cast<size_t>(i) % names.size()]);
        auto u = random_word(*p, rng, 1 + static_cast<int>(rng() % 3));
        auto v = random_word(*p, rng, 1 + static_cast<int>(rng() % 3));
        int gu = p->grade(Monomial::from_letters(u)), gv = p->grade(Monomial::from_letters(v));
        Poly x = p->reduce_word(u), y = p->reduce_word(v), xy = p->mul(x, y);
        auto check = [&](const Poly& e, int expected, const char* what) {
            auto g = p->grade_of(e);
            if (!e.is_zero() && g != expected)
                rep.fail(p->name() + ": " + what + " " + p->render(e) + " has grade " +
                         (g ? std::to_string(*g) : "mixed") + ", expected " + std::to_string(expected));
        };
        check(x, gu, "reduced word");
        check(xy, (gu + gv) % 3, "product");
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_reduce_idempotence(const PropertyOptions& o) {
    CheckReport rep("property-reduce-idempotence");
    std::mt19937 rng(o.seed + 3);
    const auto& names = confluent_presets();
    for (int i = 0; i < o.cases; ++i) {
        auto p = get_preset(names[static_cast<size_t>(i) % names.size()]);
        Poly raw, raw2;
        for (int t = 0; t < 3; ++t) {
            raw.add_term(Monomial::from_letters(random_word(*p, rng, static_cast<int>(rng() % 5))), random_scalar(rng));
            raw2.add_term(Monomial::from_letters(random_word(*p, rng, static_cast<int>(rng() % 5))), random_scalar(rng));
        }
        Poly r = p->reduce(raw);
        if (p->reduce(r) != r) rep.fail(p->name() + ": reduce not idempotent on " + p->render(r));
        for (const auto& [mono, c] : r.terms())
            if (!p->is_normal(mono)) rep.fail(p->name() + ": non-normal monomial " + p->render(mono) + " in a normal form");
        CycScalar a = random_scalar(rng), b = random_scalar(rng);
        Poly lin = p->reduce(raw * a + raw2 * b) - (r * a + p->reduce(raw2) * b);
        if (!lin.is_zero()) rep.fail(p->name() + ": reduce not linear, residue " + p->render(lin));
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_localization(const PropertyOptions& o) {
    CheckReport rep("property-localization");
    std::mt19937 rng(o.seed + 4);
    auto ring = gl_ring();
    const auto& p = *ring->presentation();
    for (int i = 0; i < o.cases; ++i) {
        Poly n = random_poly(p, rng, 2, 2);
        int m = static_cast<int>(rng() % 3), k = 1 + static_cast<int>(rng() % 2);
        LocalizedElement x(ring, n, m);
        // Same class written with a larger denominator.
        LocalizedElement x2(ring, p.mul(n, ring->central_power(k)), m + k);
        LocalizedElement y(ring, random_poly(p, rng, 2, 2), static_cast<int>(rng() % 3));
        auto expect = [&](bool ok, const std::string& what) {
            if (!ok) rep.fail(what + " for x = " + x.render() + ", y = " + y.render());
        };
        expect(x == x2 && x2 == x, "x != x * Dq^k / Dq^k");
        expect((x + y) - y == x, "(x + y) - y != x");
        expect(x + y == y + x, "x + y != y + x");
        expect(loc_mul(x, y) == loc_mul(x2, y), "product depends on the representative");
        expect(x.normalized() == x, "normalization changes the class");
        expect((x == y) == (y == x), "equality is not symmetric");
        LocalizedElement d(ring, ring->central(), 0);
        expect(loc_mul(LocalizedElement(ring, n, m + 1), d) == x, "x / Dq * Dq != x");
        if (!n.is_zero()) expect(!(x == x + LocalizedElement(ring, p.one(), 0)), "x == x + 1");
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_regularity(const PropertyOptions& o) {
    CheckReport rep("property-regularity");
    std::mt19937 rng(o.seed + 5);
    auto ring = gl_ring();
    const auto& p = *ring->presentation();
    int done = 0;
    while (done < o.cases) {
        Poly x = random_poly(p, rng, 4, 3);
        if (x.is_zero()) continue;
        ++done;
        Poly dx = p.mul(ring->central(), x);
        if (dx.is_zero()) {
            rep.fail("Dq annihilates " + p.render(x));
            continue;
        }
        auto back = ring->divide(dx);
        if (!back || *back != x) rep.fail("(Dq*x)/Dq != x for x = " + p.render(x));
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_coalgebra(const PropertyOptions& o) {
    CheckReport rep("property-coalgebra");
    std::mt19937 rng(o.seed + 6);
    auto m = get_preset("Mq2");
    Coproduct delta = make_coproduct(m);
    Counit eps = make_counit(m);
    for (int i = 0; i < o.cases; ++i) {
        Poly x = random_poly(*m, rng, 3);
        TensorPoly c = coassociativity_defect(delta, x);
        if (!c.is_zero()) rep.fail("coassociativity on " + m->render(x) + ": " + c.render());
        for (size_t slot : {0u, 1u}) {
            Poly e = counit_defect(delta, eps, x, slot);
            if (!e.is_zero()) rep.fail("counit on " + m->render(x) + ": " + m->render(e));
        }
    }
    summarize(rep, o.cases);
    return rep;
}

CheckReport property_comodule(const PropertyOptions& o) {
    CheckReport rep("property-comodule");
    std::mt19937 rng(o.seed + 7);
    auto plane = get_preset("plane");
    Coaction dl = make_left_coaction(plane), dr = make_right_coaction(plane);
    size_t left_bad = 0, right_bad = 0;
    for (int i = 0; i < o.cases; ++i) {
        Poly x = random_poly(*plane, rng, 2);
        if (!left_coassociativity_defect(dl, x).is_zero() || !left_counit_defect(dl, x).is_zero()) {
            if (left_bad++ < 5) rep.fail("left coaction axioms fail on " + plane->render(x));
        }
        TensorPoly rc = right_coassociativity_defect(dr, x);
        if (!rc.is_zero() || !right_counit_defect(dr, x).is_zero()) {
            if (right_bad++ < 5) rep.fail("right coaction axioms fail on " + plane->render(x) + ": " + rc.render());
        }
    }
    rep.note("left failures " + std::to_string(left_bad) + ", right failures " + std::to_string(right_bad));
    summarize(rep, o.cases);
    return rep;
}

}  // namespace z3qg
