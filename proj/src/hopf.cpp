#include "z3qg/hopf.hpp"

#include "z3qg/presets.hpp"

#include <array>
#include <stdexcept>

namespace z3qg {

namespace {

const CycScalar kQ = CycScalar::q();
const CycScalar kQ2 = kQ * kQ;

// Generator name at matrix position (i, k).
const std::array<std::array<const char*, 2>, 2> kEntry{{{"a", "beta"}, {"gamma", "d"}}};

Letter letter(const PresentationPtr& p, const std::string& g) { return Letter{p->index(g), 1}; }

std::map<Letter, TensorPoly> matrix_images(const PresentationPtr& p, const TensorMatrix& m) {
    std::map<Letter, TensorPoly> images;
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) images.emplace(letter(p, kEntry[i][k]), m(i, k));
    return images;
}

TensorSpacePtr pair_space(const Coproduct& delta) { return delta.target().one.space(); }

}  // namespace

Coproduct make_coproduct(const PresentationPtr& p, Braiding braid) {
    auto space = make_space({p, p}, braid);
    PolyMatrix t = coordinate_matrix(p);
    return Coproduct("coproduct", p, tensor_target(space), matrix_images(p, dot_tensor(t, t, space)));
}

Counit make_counit(const PresentationPtr& p) {
    std::map<Letter, CycScalar> images{{letter(p, "a"), CycScalar(1)},
                                       {letter(p, "beta"), CycScalar(0)},
                                       {letter(p, "gamma"), CycScalar(0)},
                                       {letter(p, "d"), CycScalar(1)}};
    return Counit("counit", p, scalar_target(), std::move(images));
}

Antipode make_antipode(MorphismMode mode) {
    auto ring = gl_ring();
    const auto& p = ring->presentation();
    PolyMatrix cof = cofactor_matrix();
    std::map<Letter, LocalizedElement> images;
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) images.emplace(letter(p, kEntry[i][k]), LocalizedElement(ring, cof(i, k), 1));
    return Antipode("antipode", p, localized_target(ring), std::move(images), mode);
}

LocalizedElement antipode_apply(const Antipode& s, const LocalizedElement& x) {
    auto ring = x.ring();
    LocalizedElement sd = s.apply(ring->central());
    if (!(loc_mul(sd, LocalizedElement(ring, ring->central())) == s.target().one))
        throw std::logic_error("antipode does not invert " + ring->central_name());
    return loc_mul(s.apply(x.numerator()), LocalizedElement(ring, ring->central_power(x.denominator_power())));
}

GradedMorphism<Poly> make_tilde_map() {
    auto p = get_preset("Mq2");
    PolyMatrix cof = cofactor_matrix();
    std::map<Letter, Poly> images;
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) images.emplace(letter(p, kEntry[i][k]), cof(i, k));
    return GradedMorphism<Poly>("tilde", p, poly_target(p), std::move(images), MorphismMode::homomorphism,
                                CoefficientTwist::conjugation);
}

GradedMorphism<Poly> make_star() {
    auto p = get_preset("SLq2");
    std::map<Letter, Poly> images{{letter(p, "a"), p->gen("a")},
                                  {letter(p, "beta"), p->gen("beta")},
                                  {letter(p, "gamma"), p->gen("gamma") * kQ},
                                  {letter(p, "d"), p->gen("d")}};
    return GradedMorphism<Poly>("star", p, poly_target(p), std::move(images), MorphismMode::anti_homomorphism,
                                CoefficientTwist::conjugation);
}

Poly star_apply(const Poly& x) {
    static const GradedMorphism<Poly> star = make_star();
    return star.apply(x);
}

TensorPoly coassociativity_defect(const Coproduct& delta, const Poly& x) {
    const auto& p = delta.source();
    auto s3 = make_space({p, p, p}, pair_space(delta)->braiding());
    TensorPoly dx = delta.apply(x);
    auto f = [&](const Monomial& m) { return delta.apply(Poly(m)); };
    return splice_slot(dx, 0, f, s3) - splice_slot(dx, 1, f, s3);
}

Poly counit_defect(const Coproduct& delta, const Counit& eps, const Poly& x, size_t slot) {
    const auto& p = delta.source();
    auto braid = pair_space(delta)->braiding();
    auto s0 = make_space({}, braid);
    auto s1 = make_space({p}, braid);
    auto f = [&](const Monomial& m) { return TensorPoly(s0, eps.apply(Poly(m))); };
    return splice_slot(delta.apply(x), slot, f, s1).as_poly() - p->reduce(x);
}

CheckReport check_coassociativity(const Coproduct& delta) {
    CheckReport rep("coassociativity");
    for (const auto& g : delta.source()->generators()) {
        TensorPoly r = coassociativity_defect(delta, delta.source()->gen(g.name));
        rep.expect_zero("(Delta ox id)Delta(" + g.name + ") - (id ox Delta)Delta(" + g.name + ")", r.is_zero(),
                        r.render());
    }
    return rep;
}

CheckReport check_counit(const Coproduct& delta, const Counit& eps) {
    CheckReport rep("counit");
    const auto& p = delta.source();
    for (const auto& g : p->generators()) {
        Poly x = p->gen(g.name);
        Poly l = counit_defect(delta, eps, x, 0);
        Poly r = counit_defect(delta, eps, x, 1);
        rep.expect_zero("m(eps ox id)Delta(" + g.name + ") - " + g.name, l.is_zero(), p->render(l));
        rep.expect_zero("m(id ox eps)Delta(" + g.name + ") - " + g.name, r.is_zero(), p->render(r));
    }
    return rep;
}

CheckReport check_noncocommutative(const Coproduct& delta) {
    CheckReport rep("noncocommutative");
    TensorPoly da = delta.image("a");
    TensorPoly flipped = graded_flip(da, 1);
    if (da == flipped)
        rep.fail("Delta(a) equals its graded flip: " + da.render());
    else
        rep.note("Delta(a) = " + da.render() + ", flipped: " + flipped.render());
    return rep;
}

CheckReport check_bialgebra(const PresentationPtr& p) {
    Coproduct delta = make_coproduct(p);
    Counit eps = make_counit(p);
    return combine("bialgebra-" + p->name(), {
                                                 delta.check_preserves_relations("coproduct-relations"),
                                                 delta.check_image_grades(),
                                                 eps.check_preserves_relations("counit-relations"),
                                                 check_coassociativity(delta),
                                                 check_counit(delta, eps),
                                                 check_noncocommutative(delta),
                                             });
}

CheckReport check_determinant_central() {
    auto p = get_preset("Mq2");
    Poly dq = quantum_determinant();
    CheckReport rep("determinant-central");
    for (const char* g : {"a", "beta", "gamma", "d"}) {
        Poly c = p->commutator(dq, p->gen(g));
        rep.expect_zero(std::string("Dq*") + g + " - " + g + "*Dq", c.is_zero(), p->render(c));
    }
    return rep;
}

CheckReport check_determinant_forms() {
    auto p = get_preset("Mq2");
    CheckReport rep("determinant-forms");
    Poly alt = p->reduce_word({letter(p, "d"), letter(p, "a")}) - p->reduce_word({letter(p, "beta"), letter(p, "gamma")});
    Poly diff = quantum_determinant() - alt;
    rep.expect_zero("(a*d - q*beta*gamma) - (d*a - beta*gamma)", diff.is_zero(), p->render(diff));
    return rep;
}

CheckReport check_determinant_grouplike() {
    auto p = get_preset("Mq2");
    Poly dq = quantum_determinant();
    CheckReport rep("determinant-grouplike");
    Coproduct delta = make_coproduct(p);
    TensorPoly dd = delta.apply(dq) - TensorPoly::pure(pair_space(delta), {dq, dq});
    rep.expect_zero("Delta(Dq) - Dq ox Dq", dd.is_zero(), dd.render());
    CycScalar e = make_counit(p).apply(dq) - CycScalar(1);
    rep.expect_zero("eps(Dq) - 1", e.is_zero(), e.str());
    return rep;
}

CheckReport determinant_checks() {
    return combine("determinant", {check_determinant_central(), check_determinant_forms(), check_determinant_grouplike()});
}

CheckReport check_determinant_multiplicative() {
    auto p = get_preset("Mq2");
    auto space = make_space({p, p});
    PolyMatrix t = coordinate_matrix(p);
    TensorMatrix prod = dot_tensor(t, t, space);
    GradedMorphism<TensorPoly> entries("product-entries", p, tensor_target(space), matrix_images(p, prod));
    CheckReport rel = entries.check_preserves_relations("product-relations");
    CheckReport det("product-determinant");
    Poly dq = quantum_determinant();
    TensorPoly r = tensor_mul(prod(0, 0), prod(1, 1)) - tensor_mul(prod(0, 1), prod(1, 0)) * kQ -
                   TensorPoly::pure(space, {dq, dq});
    det.expect_zero("XW - q*YZ - Dq ox Dq", r.is_zero(), r.render());
    return combine("determinant-multiplicative", {rel, det});
}

CheckReport check_antipode() {
    auto ring = gl_ring();
    auto p = ring->presentation();
    Poly dq = ring->central();

    CheckReport matrix("antipode-matrix");
    PolyMatrix t = coordinate_matrix(p), cof = cofactor_matrix();
    PolyMatrix di = to_poly_matrix(identity_matrix(2));
    for (size_t i = 0; i < 2; ++i) di(i, i) = dq;
    PolyMatrix tc = mul(t, cof, *p) - di, ct = mul(cof, t, *p) - di;
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k) {
            std::string ij = std::to_string(i + 1) + std::to_string(k + 1);
            matrix.expect_zero("(T*Ttilde)_" + ij + " - (Dq*I)_" + ij, tc(i, k).is_zero(), p->render(tc(i, k)));
            matrix.expect_zero("(Ttilde*T)_" + ij + " - (Dq*I)_" + ij, ct(i, k).is_zero(), p->render(ct(i, k)));
        }

    Antipode s = make_antipode();
    CheckReport defined = s.check_preserves_relations("antipode-relations");
    CheckReport plain = make_antipode(MorphismMode::anti_homomorphism).check_preserves_relations();
    defined.note("braided anti-homomorphism S(xy) = q^(t(x)t(y)) S(y)S(x)");
    defined.note(std::string("plain anti-homomorphism extension: ") +
                 (plain.passed() ? "also respects the relations"
                                 : std::to_string(plain.residues.size()) + " relation residues nonzero"));
    LocalizedElement sd = s.apply(dq);
    LocalizedElement inv(ring, Poly(CycScalar(1)), 1);
    defined.expect_zero("S(Dq) - Dq^-1", sd == inv, (sd - inv).normalized().render());

    CheckReport gens("antipode-generators");
    Coproduct delta = make_coproduct(p);
    Counit eps = make_counit(p);
    for (const auto& g : p->generators()) {
        LocalizedElement left(ring, Poly{}), right(ring, Poly{});
        for (const auto& [tm, c] : delta.image(g.name).terms()) {
            left += loc_mul(s.apply(Poly(tm[0])), LocalizedElement(ring, Poly(tm[1]))) * c;
            right += loc_mul(LocalizedElement(ring, Poly(tm[0])), s.apply(Poly(tm[1]))) * c;
        }
        LocalizedElement e(ring, Poly(eps.image(g.name)));
        left -= e;
        right -= e;
        gens.expect_zero("m(S ox id)Delta(" + g.name + ") - eps(" + g.name + ")", left.is_zero(),
                         left.normalized().render());
        gens.expect_zero("m(id ox S)Delta(" + g.name + ") - eps(" + g.name + ")", right.is_zero(),
                         right.normalized().render());
    }
    gens.note("slots multiplied with the plain product after applying S");
    return combine("antipode", {matrix, defined, gens});
}

CheckReport check_antipode_square() {
    CheckReport rep("antipode-square");
    auto ring = gl_ring();
    Antipode s = make_antipode();
    for (const auto& g : ring->presentation()->generators()) {
        LocalizedElement x(ring, ring->presentation()->gen(g.name));
        LocalizedElement s2 = antipode_apply(s, s.apply(x.numerator()));
        LocalizedElement diff = s2 - x;
        rep.expect_zero("S^2(" + g.name + ") - " + g.name, diff.is_zero(), diff.normalized().render());
        rep.note("S^2(" + g.name + ") = " + s2.normalized().render());
    }
    return rep;
}

CheckReport check_tilde_relations() {
    auto tilde = make_tilde_map();
    const auto& p = tilde.source();
    CheckReport rep("tilde-relations");
    for (const Relation& r : p->relations()) {
        Poly v = tilde.apply(r.element);
        rep.expect_zero("tilde of " + r.label + " with q -> q^2", v.is_zero(), p->render(v));
    }
    Poly at = tilde.image("a"), bt = tilde.image("beta"), gt = tilde.image("gamma"), dt = tilde.image("d");
    Poly alt = p->mul(at, dt) - p->mul(dt, at) - p->mul(bt, gt) * (CycScalar(1) - kQ2);
    rep.note("a~d~ - d~a~ - (1 - q^2)*beta~gamma~ = " + p->render(alt) +
             "; the q -> q^2 image of the a*d relation carries (q^2 - 1)");
    return rep;
}

CheckReport check_star() {
    auto star = make_star();
    const auto& p = star.source();
    CheckReport inv("star-involution");
    for (const auto& g : p->generators()) {
        Poly x = p->gen(g.name);
        Poly r = star.apply(star.apply(x)) - x;
        inv.expect_zero("star(star(" + g.name + ")) - " + g.name, r.is_zero(), p->render(r));
    }
    CheckReport ideal = star.check_preserves_relations("star-relations");
    return combine("star", {inv, ideal});
}

CheckReport check_star_coproduct() {
    auto star = make_star();
    const auto& p = star.source();
    Coproduct delta = make_coproduct(p);
    auto space = pair_space(delta);
    CheckReport rep("star-coproduct");
    rep.status = Status::report;
    for (int twisted = 0; twisted < 2; ++twisted) {
        std::vector<std::string> mismatched;
        for (const auto& g : p->generators()) {
            TensorPoly lhs = delta.apply(star.image(g.name));
            TensorPoly rhs(space);
            for (const auto& [tm, c] : delta.image(g.name).terms()) {
                long e = twisted ? static_cast<long>(p->grade(tm[0])) * p->grade(tm[1]) : 0;
                rhs += TensorPoly::pure(space, {star.apply(Poly(tm[0])), star.apply(Poly(tm[1]))}) *
                       (c.conj() * q_power(e));
            }
            if (!(lhs == rhs)) {
                mismatched.push_back(g.name);
                rep.residues.push_back(std::string(twisted ? "twisted" : "plain") + ": Delta(" + g.name +
                                       "*) - (* ox *)Delta(" + g.name + ") = " + (lhs - rhs).render());
            }
        }
        std::string conv = twisted ? "twisted (* ox *)(x ox y) = q^(t(x)t(y)) x* ox y*" : "plain (* ox *)(x ox y) = x* ox y*";
        std::string list;
        for (const auto& m : mismatched) list += (list.empty() ? "" : ", ") + m;
        rep.note(conv + ": " + (mismatched.empty() ? "compatible on all generators" : "mismatch on " + list));
    }
    return rep;
}

CheckReport check_localization_regularity(int max_degree) { return gl_ring()->regularity_check(max_degree); }

}  // namespace z3qg
