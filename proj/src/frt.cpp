#include "z3qg/frt.hpp"

#include "z3qg/linalg.hpp"
#include "z3qg/presets.hpp"

#include <stdexcept>

namespace z3qg {

namespace {

std::string pair_label(size_t i, size_t j) {
    auto idx = [](size_t k) { return std::to_string(k / 2 + 1) + std::to_string(k % 2 + 1); };
    return "[" + idx(i) + "," + idx(j) + "]";
}

ScalarMatrix inverse4(const ScalarMatrix& m) {
    size_t n = m.rows();
    ScalarMatrix a = m, inv = identity_matrix(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        for (size_t j = 0; j < n; ++j) {
            std::swap(a(c, j), a(piv, j));
            std::swap(inv(c, j), inv(piv, j));
        }
        CycScalar s = a(c, c).inv();
        for (size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            CycScalar f = a(r, c);
            for (size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string list_passing(const std::vector<ConventionOutcome>& sweep, bool with_perm) {
    std::string out;
    for (const auto& o : sweep) {
        if (o.nonzero) continue;
        if (!out.empty()) out += "; ";
        out += o.convention.str();
        if (with_perm)
            out += " with permutation grades (" + std::to_string(o.permutation_grades[0]) + "," +
                   std::to_string(o.permutation_grades[1]) + ")";
    }
    return out.empty() ? "none" : out;
}

}  // namespace

std::vector<Poly> frt_residues(const ScalarMatrix& r, const PresentationPtr& p, const KronConvention& c) {
    PolyMatrix t = coordinate_matrix(p);
    PolyMatrix id = to_poly_matrix(identity_matrix(2));
    PolyMatrix t1 = graded_kron(t, id, *p, c), t2 = graded_kron(id, t, *p, c);
    PolyMatrix t12 = mul(t1, t2, *p);
    PolyMatrix diff = mul(r, t12) - mul(t12, r);
    std::vector<Poly> out;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) out.push_back(p->reduce(diff(i, j)));
    return out;
}

std::vector<KronConvention> all_conventions() {
    std::vector<KronConvention> out;
    for (int g0 = 0; g0 < 3; ++g0)
        for (int g1 = 0; g1 < 3; ++g1)
            for (int sign : {1, -1})
                for (int exponent : {1, 2}) out.push_back(KronConvention{{g0, g1}, sign, exponent});
    return out;
}

std::vector<ConventionOutcome> frt_sweep(const PresentationPtr& p) {
    std::vector<ConventionOutcome> out;
    ScalarMatrix r = r_hat();
    for (const auto& c : all_conventions()) {
        size_t nz = 0;
        for (const Poly& x : frt_residues(r, p, c)) nz += !x.is_zero();
        out.push_back({c, {0, 1}, nz});
    }
    return out;
}

CheckReport check_frt() {
    auto p = get_preset("Mq2");
    KronConvention c = frt_convention();
    CheckReport rep("frt");
    auto res = frt_residues(r_hat(), p, c);
    for (size_t k = 0; k < res.size(); ++k)
        rep.expect_zero("(Rhat T1 T2 - T1 T2 Rhat)" + pair_label(k / 4, k % 4), res[k].is_zero(), p->render(res[k]));
    rep.note("convention: " + c.str());
    rep.note("conventions with all residues zero: " + list_passing(frt_sweep(p), false));
    return rep;
}

CheckReport check_frt_free_span() {
    auto free = get_preset("free-Mq2");
    auto m = get_preset("Mq2");
    CheckReport rep("frt-free-span");
    LinearSpan<Monomial> residues, relations;
    for (const Poly& x : frt_residues(r_hat(), free, frt_convention())) residues.add(x.terms());
    // The relation elements are plain words in a, beta, gamma, d; both presets share the generator order.
    std::vector<Poly> rel;
    for (const Relation& r : m->relations()) {
        rel.push_back(r.element);
        relations.add(r.element.terms());
    }
    for (size_t i = 0; i < rel.size(); ++i)
        if (!residues.contains(rel[i].terms())) rep.fail("relation " + m->relations()[i].label + " not in residue span");
    for (const Poly& x : frt_residues(r_hat(), free, frt_convention()))
        if (!relations.contains(x.terms())) rep.fail("residue outside relation span: " + free->render(x));
    rep.note("residue span rank " + std::to_string(residues.rank()) + ", relation span rank " +
             std::to_string(relations.rank()));
    return rep;
}

ScalarMatrix r_plus(const std::array<int, 2>& permutation_grades) {
    ScalarMatrix pg = graded_permutation(permutation_grades);
    ScalarMatrix r = inverse4(pg) * r_hat();
    return pg * r * pg;
}

std::vector<LabelledResidue> rll_residues(const ScalarMatrix& rplus, const KronConvention& c) {
    auto p = get_preset("Uqgl2");
    PolyMatrix id = to_poly_matrix(identity_matrix(2));
    PolyMatrix lp = l_plus(), lm = l_minus();
    struct Case {
        const char* name;
        const PolyMatrix* a;
        const PolyMatrix* b;
    };
    std::vector<LabelledResidue> out;
    for (const Case& k : {Case{"R+ L1+ L2+ - L2+ L1+ R+", &lp, &lp}, Case{"R+ L1- L2- - L2- L1- R+", &lm, &lm},
                          Case{"R+ L1- L2+ - L2+ L1- R+", &lm, &lp}}) {
        PolyMatrix a1 = graded_kron(*k.a, id, *p, c), b2 = graded_kron(id, *k.b, *p, c);
        PolyMatrix diff = mul(rplus, mul(a1, b2, *p)) - mul(mul(b2, a1, *p), rplus);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                out.push_back({std::string(k.name) + pair_label(i, j), p->reduce(diff(i, j))});
    }
    return out;
}

std::vector<ConventionOutcome> rll_sweep() {
    std::vector<ConventionOutcome> out;
    for (std::array<int, 2> pg : {std::array<int, 2>{0, 1}, std::array<int, 2>{1, 2}}) {
        ScalarMatrix rp = r_plus(pg);
        for (const auto& c : all_conventions()) {
            size_t nz = 0;
            for (const auto& r : rll_residues(rp, c)) nz += !r.residue.is_zero();
            out.push_back({c, pg, nz});
        }
    }
    return out;
}

CheckReport check_rll() {
    auto p = get_preset("Uqgl2");
    KronConvention c = frt_convention();
    CheckReport rep("rll");
    for (const auto& r : rll_residues(r_plus(), c))
        rep.expect_zero(r.label, r.residue.is_zero(), p->render(r.residue));
    rep.note("convention: " + c.str() + ", permutation grades (0,1)");
    auto sweep = rll_sweep();
    size_t best = sweep.front().nonzero;
    for (const auto& o : sweep) best = std::min(best, o.nonzero);
    rep.note("conventions with all residues zero: " + list_passing(sweep, true) + " (" +
             std::to_string(sweep.size()) + " tried, fewest nonzero entries " + std::to_string(best) + ")");
    return rep;
}

Coproduct make_l_coproduct(Braiding braid) {
    auto p = get_preset("Uqgl2");
    auto space = make_space({p, p}, braid);
    PolyMatrix lp = l_plus(), lm = l_minus();
    TensorMatrix pp = dot_tensor(lp, lp, space), mm = dot_tensor(lm, lm, space);
    CycScalar inv_lambda = CycScalar::lambda().inv();
    std::map<Letter, TensorPoly> images{
        {Letter{p->index("U"), 1}, pp(0, 0)},
        {Letter{p->index("V"), 1}, pp(1, 1)},
        {Letter{p->index("Xp"), 1}, pp(0, 1) * inv_lambda},
        {Letter{p->index("U"), -1}, mm(0, 0)},
        {Letter{p->index("V"), -1}, mm(1, 1)},
        {Letter{p->index("Xm"), 1}, mm(1, 0) * inv_lambda},
    };
    return Coproduct("l-coproduct", p, tensor_target(space), std::move(images));
}

CheckReport check_l_coproduct() {
    Coproduct delta = make_l_coproduct();
    CheckReport rep = delta.check_preserves_relations("l-coproduct");
    rep.note("braided product on both slots (" + std::string(braiding_name(Braiding::standard)) + ")");
    CheckReport plain = make_l_coproduct(Braiding::plain).check_preserves_relations();
    rep.note(std::string("with the plain tensor product: ") +
             (plain.passed() ? "all relations preserved"
                             : std::to_string(plain.residues.size()) + " relation residues nonzero"));
    return rep;
}

}  // namespace z3qg
