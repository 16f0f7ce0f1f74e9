#include "z3qg/comodule.hpp"

#include "z3qg/presets.hpp"

namespace z3qg {

namespace {

const CycScalar kQ2 = CycScalar::q() * CycScalar::q();

Letter letter(const PresentationPtr& p, const char* g) { return Letter{p->index(g), 1}; }

Poly m(const char* g) { return get_preset("Mq2")->gen(g); }

TensorSpacePtr space_of(const Coaction& c) { return c.target().one.space(); }

}  // namespace

Coaction make_left_coaction(const PresentationPtr& plane, Braiding braid) {
    auto sp = make_space({get_preset("Mq2"), plane}, braid);
    Poly t = plane->gen("theta"), f = plane->gen("phi");
    std::map<Letter, TensorPoly> images{
        {letter(plane, "theta"), TensorPoly::pure(sp, {m("a"), t}) + TensorPoly::pure(sp, {m("beta"), f})},
        {letter(plane, "phi"), TensorPoly::pure(sp, {m("gamma"), t}) + TensorPoly::pure(sp, {m("d"), f})},
    };
    return Coaction("left-coaction", plane, tensor_target(sp), std::move(images));
}

Coaction make_right_coaction(const PresentationPtr& plane, Braiding braid) {
    auto sp = make_space({plane, get_preset("Mq2")}, braid);
    Poly t = plane->gen("theta"), f = plane->gen("phi");
    std::map<Letter, TensorPoly> images{
        {letter(plane, "theta"), TensorPoly::pure(sp, {t, m("a")}) + TensorPoly::pure(sp, {f, m("gamma")})},
        {letter(plane, "phi"), TensorPoly::pure(sp, {t, m("beta")}) + TensorPoly::pure(sp, {f, m("d")})},
    };
    return Coaction("right-coaction", plane, tensor_target(sp), std::move(images));
}

TensorPoly left_coassociativity_defect(const Coaction& dl, const Poly& x) {
    auto mq = get_preset("Mq2");
    auto braid = space_of(dl)->braiding();
    Coproduct delta = make_coproduct(mq);
    auto s3 = make_space({mq, mq, dl.source()}, braid);
    TensorPoly y = dl.apply(x);
    return splice_slot(y, 0, [&](const Monomial& u) { return delta.apply(Poly(u)); }, s3) -
           splice_slot(y, 1, [&](const Monomial& u) { return dl.apply(Poly(u)); }, s3);
}

Poly left_counit_defect(const Coaction& dl, const Poly& x) {
    auto braid = space_of(dl)->braiding();
    Counit eps = make_counit(get_preset("Mq2"));
    auto s0 = make_space({}, braid);
    auto s1 = make_space({dl.source()}, braid);
    TensorPoly y = splice_slot(dl.apply(x), 0, [&](const Monomial& u) { return TensorPoly(s0, eps.apply(Poly(u))); }, s1);
    return y.as_poly() - dl.source()->reduce(x);
}

TensorPoly right_coassociativity_defect(const Coaction& dr, const Poly& x) {
    auto mq = get_preset("Mq2");
    auto braid = space_of(dr)->braiding();
    Coproduct delta = make_coproduct(mq);
    auto s3 = make_space({dr.source(), mq, mq}, braid);
    TensorPoly y = dr.apply(x);
    return splice_slot(y, 0, [&](const Monomial& u) { return dr.apply(Poly(u)); }, s3) -
           splice_slot(y, 1, [&](const Monomial& u) { return delta.apply(Poly(u)); }, s3);
}

Poly right_counit_defect(const Coaction& dr, const Poly& x) {
    auto braid = space_of(dr)->braiding();
    Counit eps = make_counit(get_preset("Mq2"));
    auto s0 = make_space({}, braid);
    auto s1 = make_space({dr.source()}, braid);
    TensorPoly y = splice_slot(dr.apply(x), 1, [&](const Monomial& u) { return TensorPoly(s0, eps.apply(Poly(u))); }, s1);
    return y.as_poly() - dr.source()->reduce(x);
}

CheckReport check_coaction_homomorphism() {
    auto plane = get_preset("plane");
    return combine("coaction-homomorphism",
                   {make_left_coaction(plane).check_preserves_relations("left-coaction-relations"),
                    make_right_coaction(plane).check_preserves_relations("right-coaction-relations")});
}

CheckReport right_coaction_braiding_report() {
    auto plane = get_preset("plane");
    CheckReport rep("right-coaction-braidings");
    rep.status = Status::report;
    for (Braiding b : {Braiding::standard, Braiding::inverse, Braiding::plain}) {
        Coaction dr = make_right_coaction(plane, b);
        CheckReport rel = dr.check_preserves_relations();
        Poly tf = plane->mul(plane->gen("theta"), plane->gen("phi"));
        bool axiom = right_coassociativity_defect(dr, tf).is_zero();
        rep.note(std::string(braiding_name(b)) + ": " +
                 (rel.passed() ? "relations preserved" : std::to_string(rel.residues.size()) + " relation residues nonzero") +
                 ", coassociativity on theta*phi " + (axiom ? "holds" : "fails"));
    }
    // Same matrix coordinates written with the algebra slot first.
    auto sp = make_space({get_preset("Mq2"), plane});
    Poly t = plane->gen("theta"), f = plane->gen("phi");
    Coaction swapped("right-coaction-swapped", plane, tensor_target(sp),
                     {{letter(plane, "theta"), TensorPoly::pure(sp, {m("a"), t}) + TensorPoly::pure(sp, {m("gamma"), f})},
                      {letter(plane, "phi"), TensorPoly::pure(sp, {m("beta"), t}) + TensorPoly::pure(sp, {m("d"), f})}});
    CheckReport rel = swapped.check_preserves_relations();
    rep.note(std::string("algebra slot first (a ox theta + gamma ox phi, beta ox theta + d ox phi): ") +
             (rel.passed() ? "relations preserved" : std::to_string(rel.residues.size()) + " relation residues nonzero"));
    for (const auto& r : rel.residues) rep.residues.push_back("algebra slot first: " + r);
    return rep;
}

CheckReport check_comodule_axioms() {
    auto plane = get_preset("plane");
    Coaction dl = make_left_coaction(plane), dr = make_right_coaction(plane);
    CheckReport rep("comodule-axioms");
    for (const char* g : {"theta", "phi"}) {
        Poly x = plane->gen(g);
        std::string n(g);
        TensorPoly lc = left_coassociativity_defect(dl, x), rc = right_coassociativity_defect(dr, x);
        Poly le = left_counit_defect(dl, x), re = right_counit_defect(dr, x);
        rep.expect_zero("(Delta ox id)dL(" + n + ") - (id ox dL)dL(" + n + ")", lc.is_zero(), lc.render());
        rep.expect_zero("m(eps ox id)dL(" + n + ") - " + n, le.is_zero(), plane->render(le));
        rep.expect_zero("(dR ox id)dR(" + n + ") - (id ox Delta)dR(" + n + ")", rc.is_zero(), rc.render());
        rep.expect_zero("m(id ox eps)dR(" + n + ") - " + n, re.is_zero(), plane->render(re));
    }
    return rep;
}

CheckReport manin_subcomodule_check() {
    auto free = get_preset("free-plane");
    Coaction dl = make_left_coaction(free);
    Poly vt = manin_element();
    Poly dq = quantum_determinant();
    CheckReport rep("manin-subcomodule");
    TensorPoly img = dl.apply(vt);
    TensorPoly r = img - TensorPoly::pure(space_of(dl), {dq, vt});
    rep.expect_zero("dL(vartheta) - Dq ox vartheta", r.is_zero(), r.render());
    Poly e = left_counit_defect(dl, vt);
    rep.expect_zero("m(eps ox id)dL(vartheta) - vartheta", e.is_zero(), free->render(e));
    Coaction quotient = make_left_coaction(get_preset("plane"));
    TensorPoly z = quotient.apply(vt);
    rep.expect_zero("dL(theta)dL(phi) - q^2 dL(phi)dL(theta) with plane relations", z.is_zero(), z.render());
    rep.note("dL(vartheta) = " + img.render());
    return rep;
}

CheckReport dual_plane_report() {
    auto dual = get_preset("dual-plane");
    auto mq = get_preset("Mq2");
    auto sp = make_space({mq, dual});
    Poly xi = dual->gen("xi"), x = dual->gen("x");
    Coaction dl("dual-coaction", dual, tensor_target(sp),
                {{letter(dual, "xi"), TensorPoly::pure(sp, {m("a"), xi}) + TensorPoly::pure(sp, {m("beta"), x})},
                 {letter(dual, "x"), TensorPoly::pure(sp, {m("gamma"), xi}) + TensorPoly::pure(sp, {m("d"), x})}});
    CheckReport rep("dual-plane");
    rep.status = Status::report;
    TensorPoly r = tensor_mul(dl.image("xi"), dl.image("x")) - tensor_mul(dl.image("x"), dl.image("xi"));
    rep.residues.push_back("xi'*x' - x'*xi' = " + r.render());
    for (const char* g : {"xi", "x"}) {
        Poly e = left_counit_defect(dl, dual->gen(g));
        rep.note(std::string("m(eps ox id)(") + g + "') " + (e.is_zero() ? "= " : "!= ") + g);
    }
    Poly src = dual->commutator(xi, x);
    rep.note("xi*x - x*xi reduces to " + dual->render(src) + " in the source");
    return rep;
}

}  // namespace z3qg
