#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "z3qg/frt.hpp"
#include "z3qg/presets.hpp"

using namespace z3qg;

namespace {
const CycScalar q = CycScalar::q();
}

TEST_CASE("RTT residues") {
    auto m = get_preset("Mq2");
    for (const Poly& x : frt_residues(identity_matrix(4), m, literal_kron_convention())) CHECK(x.is_zero());
    for (const Poly& x : frt_residues(r_hat(), m, frt_convention())) CHECK(x.is_zero());
    size_t nz = 0;
    for (const Poly& x : frt_residues(r_hat(), m, literal_kron_convention())) nz += !x.is_zero();
    CHECK(nz > 0);
    CHECK(check_frt().status == Status::pass);
}

TEST_CASE("convention sweep") {
    auto sweep = frt_sweep(get_preset("Mq2"));
    CHECK(sweep.size() == 36);
    std::vector<KronConvention> passing;
    for (const auto& o : sweep)
        if (o.nonzero == 0) passing.push_back(o.convention);
    REQUIRE(passing.size() == 2);
    CHECK(passing[0] == frt_convention());
    CHECK(passing[1] == KronConvention{{2, 1}, -1, 2});
}

TEST_CASE("free residues span exactly the relations") {
    auto free = get_preset("free-Mq2");
    auto m = get_preset("Mq2");
    oracle::Span res, rel;
    for (const Poly& x : frt_residues(r_hat(), free, frt_convention())) res.add(oracle::to_vec(x));
    for (const Relation& r : m->relations()) rel.add(oracle::to_vec(r.element));
    CHECK(res.rank() == 6);
    CHECK(rel.rank() == 6);
    for (const Relation& r : m->relations()) CHECK(res.contains(oracle::to_vec(r.element)));
    for (const Poly& x : frt_residues(r_hat(), free, frt_convention())) CHECK(rel.contains(oracle::to_vec(x)));
    CHECK(check_frt_free_span().status == Status::pass);
}

TEST_CASE("R plus") {
    // P (P^-1 Rhat) P = Rhat P
    CHECK(r_plus() == r_hat() * graded_permutation({0, 1}));
    CHECK(r_plus({1, 2}) == r_hat() * graded_permutation({1, 2}));
    auto res = rll_residues(identity_matrix(4), KronConvention{{0, 0}, 1, 1});
    CHECK(res.size() == 48);
    // Plain embedding with R+ = I: L1 L2 = L2 L1 entrywise forces commuting entries, which fails.
    size_t nz = 0;
    for (const auto& r : res) nz += !r.residue.is_zero();
    CHECK(nz > 0);
}

TEST_CASE("RLL residues") {
    auto res = rll_residues(r_plus(), frt_convention());
    // The [11,11] entry involves only U: R+_{11,11} (U^2 - U^2).
    CHECK(res[0].label == "R+ L1+ L2+ - L2+ L1+ R+[11,11]");
    CHECK(res[0].residue.is_zero());
    CheckReport r = check_rll();
    CHECK(r.status == Status::fail);
    for (const auto& o : rll_sweep()) CHECK(o.nonzero > 0);
}

TEST_CASE("coproduct from L matrices") {
    auto p = get_preset("Uqgl2");
    Coproduct delta = make_l_coproduct();
    auto sp = make_space({p, p});
    CHECK(delta.image("U") == TensorPoly::pure(sp, {p->gen("U"), p->gen("U")}));
    CHECK(delta.image("Xp") ==
          TensorPoly::pure(sp, {p->gen("U"), p->gen("Xp")}) + TensorPoly::pure(sp, {p->gen("Xp"), p->gen("V")}));
    CHECK(delta.image("Xm").render() == "V^-1 ox Xm + Xm ox U^-1");
    CHECK(delta.image("U", -1) == TensorPoly::pure(sp, {p->gen("U", -1), p->gen("U", -1)}));
    // U Xp = q^2 Xp U survives the braided product.
    TensorPoly lhs = tensor_mul(delta.image("U"), delta.image("Xp"));
    TensorPoly rhs = tensor_mul(delta.image("Xp"), delta.image("U")) * (q * q);
    CHECK(lhs == rhs);
    CheckReport braided = check_l_coproduct();
    CHECK(braided.status == Status::fail);
    REQUIRE(braided.residues.size() == 1);
    CHECK(braided.residues[0].find("Xp*Xm") == 0);
    CHECK(make_l_coproduct(Braiding::plain).check_preserves_relations().status == Status::pass);
}
