#include "z3qg/suite.hpp"

#include "z3qg/comodule.hpp"
#include "z3qg/frt.hpp"
#include "z3qg/hopf.hpp"
#include "z3qg/matrix.hpp"
#include "z3qg/presets.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace z3qg {

namespace {

CheckReport all_confluence() {
    std::vector<CheckReport> parts;
    for (const char* n : {"plane", "dual-plane", "Mq2", "SLq2", "Uqgl2"}) parts.push_back(confluence_report(*get_preset(n)));
    return combine("confluence", parts);
}

CheckReport relations_engine() {
    auto p = get_preset("Mq2");
    CheckReport rep("relations-engine");
    auto w = [&](std::initializer_list<const char*> names) {
        std::vector<Letter> letters;
        for (const char* n : names) letters.push_back({p->index(n), 1});
        return letters;
    };
    Poly da = p->reduce_word(w({"d", "a"}));
    Poly expected = Poly(Monomial::from_letters(w({"a", "d"}))) -
                    Poly(Monomial::from_letters(w({"beta", "gamma"}))) * (CycScalar::q() - CycScalar(1));
    rep.expect_zero("reduce(d*a) - (a*d - (q - 1)*beta*gamma)", da == expected, p->render(da - expected));
    if (p->render(da) != "a*d - (q - 1)*beta*gamma") rep.fail("reduce(d*a) renders as " + p->render(da));
    for (const Relation& r : p->relations()) {
        Poly x = p->reduce(r.element);
        rep.expect_zero(r.label, x.is_zero(), p->render(x));
    }
    for (size_t i = 0; i < p->user_rule_count(); ++i) {
        const Rule& r = p->rules()[i];
        Poly x = p->reduce_word(r.lhs) - p->reduce(r.rhs);
        rep.expect_zero("rule " + p->render_letters(r.lhs) + " -> " + p->render(r.rhs), x.is_zero(), p->render(x));
    }
    auto census = p->dimension_census(2);
    // Brute force: words of length 2 that no rule rewrites, against exponent tuples summing to 2.
    std::set<Monomial> by_words, by_exponents;
    int n = static_cast<int>(p->generators().size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Monomial m = Monomial::from_letters({{i, 1}, {j, 1}});
            if (p->is_normal(m)) by_words.insert(m);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) by_exponents.insert(Monomial::from_letters({{i, 1}, {j, 1}}));
    auto listed = p->normal_monomials(2);
    std::set<Monomial> from_engine(listed.begin(), listed.end());
    if (census.back() != 10) rep.fail("dimension_census(Mq2, 2) = " + std::to_string(census.back()) + ", expected 10");
    if (by_words.size() != 10 || by_words != by_exponents || from_engine != by_exponents)
        rep.fail("normal monomials of degree 2 disagree with brute-force enumeration (" +
                 std::to_string(by_words.size()) + " normal words)");
    rep.note("dimension_census(Mq2, 2) = " + std::to_string(census.back()));
    return rep;
}

CheckReport mq2_coproduct_relations() {
    auto p = get_preset("Mq2");
    Coproduct delta = make_coproduct(p);
    return combine("coproduct-relations", {delta.check_preserves_relations(), delta.check_image_grades()});
}

std::vector<NamedCheck> build_catalog() {
    auto mq2 = [] { return get_preset("Mq2"); };
    auto fixed = [](CheckReport (*f)()) { return [f](const PropertyOptions&) { return f(); }; };
    std::vector<NamedCheck> c{
        {"antipode", "matrix form, well-definedness and generator axiom of S", fixed(check_antipode)},
        {"antipode-square", "S^2 on the generators", fixed(check_antipode_square)},
        {"bialgebra-SLq2", "coproduct and counit on the SLq2 quotient",
         [](const PropertyOptions&) { return check_bialgebra(get_preset("SLq2")); }},
        {"braid-relation", "plain braid relation of Rhat as 8x8 matrices",
         [](const PropertyOptions&) { return ybe_plain_check(r_hat()); }},
        {"braid-relation-graded", "braid relation through the graded embeddings",
         [](const PropertyOptions&) { return ybe_graded_report(r_hat(), frt_convention()); }},
        {"coaction-homomorphism", "plane coactions preserve the plane relations", fixed(check_coaction_homomorphism)},
        {"coassociativity", "coassociativity on the Mq2 generators",
         [mq2](const PropertyOptions&) { return check_coassociativity(make_coproduct(mq2())); }},
        {"comodule-axioms", "coaction axioms on theta and phi", fixed(check_comodule_axioms)},
        {"confluence", "local confluence of the catalog presentations", fixed(all_confluence)},
        {"coproduct-relations", "Delta preserves the Mq2 relations", fixed(mq2_coproduct_relations)},
        {"counit", "counit axiom on the Mq2 generators",
         [mq2](const PropertyOptions&) { return check_counit(make_coproduct(mq2()), make_counit(mq2())); }},
        {"counit-relations", "eps preserves the Mq2 relations",
         [mq2](const PropertyOptions&) { return make_counit(mq2()).check_preserves_relations("counit-relations"); }},
        {"determinant-central", "Dq commutes with the generators", fixed(check_determinant_central)},
        {"determinant-forms", "a*d - q*beta*gamma = d*a - beta*gamma", fixed(check_determinant_forms)},
        {"determinant-grouplike", "Delta(Dq) = Dq ox Dq, eps(Dq) = 1", fixed(check_determinant_grouplike)},
        {"determinant-multiplicative", "entries of T.T satisfy the relations with determinant Dq ox Dq",
         fixed(check_determinant_multiplicative)},
        {"dual-plane", "coaction on the dual plane", fixed(dual_plane_report)},
        {"frt", "RTT residues over Mq2", fixed(check_frt)},
        {"frt-free-span", "free RTT residues span the Mq2 relations", fixed(check_frt_free_span)},
        {"graded-permutation-cube", "P^3 = P for the graded flip", [](const PropertyOptions&) { return p_cube_check(); }},
        {"hecke", "Rhat^2 = (q - q^2) Rhat + I", [](const PropertyOptions&) { return hecke_check(r_hat()); }},
        {"l-coproduct", "Delta(L) = L ox L preserves the Uqgl2 relations", fixed(check_l_coproduct)},
        {"localization-regularity", "Dq is a non-zero-divisor up to degree 6",
         [](const PropertyOptions&) { return check_localization_regularity(6); }},
        {"manin-subcomodule", "dL(vartheta) = Dq ox vartheta", fixed(manin_subcomodule_check)},
        {"noncocommutative", "Delta(a) differs from its graded flip",
         [mq2](const PropertyOptions&) { return check_noncocommutative(make_coproduct(mq2())); }},
        {"property-associativity", "randomized (xy)z = x(yz)", property_associativity},
        {"property-coalgebra", "randomized coassociativity and counit", property_coalgebra},
        {"property-comodule", "randomized coaction axioms", property_comodule},
        {"property-grade-additivity", "randomized grade additivity", property_grade_additivity},
        {"property-localization", "randomized localized arithmetic", property_localization},
        {"property-reduce-idempotence", "randomized reduce idempotence and linearity", property_reduce_idempotence},
        {"property-regularity", "randomized Dq-regularity", property_regularity},
        {"property-tensor-associativity", "randomized braided tensor associativity", property_tensor_associativity},
        {"relations-engine", "Mq2 rewriting and degree-2 census", fixed(relations_engine)},
        {"right-coaction-braidings", "right coaction under each braiding", fixed(right_coaction_braiding_report)},
        {"rll", "RLL residues over Uqgl2", fixed(check_rll)},
        {"star", "star is involutive and preserves the SLq2 relations", fixed(check_star)},
        {"star-coproduct", "Delta against star", fixed(check_star_coproduct)},
        {"tilde-relations", "images of the tilde generators satisfy the relations", fixed(check_tilde_relations)},
    };
    std::sort(c.begin(), c.end(), [](const NamedCheck& a, const NamedCheck& b) { return a.name < b.name; });
    return c;
}

CheckReport guarded(const NamedCheck& c, const PropertyOptions& o) {
    try {
        CheckReport r = c.run(o);
        r.name = c.name;
        return r;
    } catch (const std::exception& e) {
        CheckReport r(c.name);
        r.fail(std::string("error: ") + e.what());
        return r;
    }
}

}  // namespace

const std::vector<NamedCheck>& check_catalog() {
    static const std::vector<NamedCheck> catalog = build_catalog();
    return catalog;
}

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& c : check_catalog()) out.push_back(c.name);
    return out;
}

CheckReport run_check(const std::string& name, const PropertyOptions& o) {
    for (const auto& c : check_catalog())
        if (c.name == name) return guarded(c, o);
    throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckReport> run_all(const PropertyOptions& o, unsigned threads) {
    const auto& cat = check_catalog();
    std::vector<CheckReport> out(cat.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cat.size()));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < cat.size();) out[i] = guarded(cat[i], o);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

CheckReport confluence_report(const Presentation& p) {
    CheckReport rep("confluence-" + p.name());
    ConfluenceReport c = p.check_local_confluence();
    size_t bad = 0;
    for (const Ambiguity& a : c.ambiguities) {
        if (a.residue.is_zero()) continue;
        ++bad;
        rep.expect_zero("overlap " + p.render_letters(a.word), false, p.render(a.residue));
    }
    rep.note(std::to_string(c.ambiguities.size()) + " ambiguities checked, " + std::to_string(bad) + " unresolved");
    return rep;
}

std::string render_text(const std::vector<CheckReport>& reports) {
    std::string out;
    size_t counts[3] = {0, 0, 0};
    for (const auto& r : reports) {
        ++counts[static_cast<int>(r.status)];
        out += std::string(status_name(r.status)) + "  " + r.name + "\n";
        for (const auto& s : r.residues) out += "    residue: " + s + "\n";
        for (const auto& n : r.notes) out += "    note: " + n + "\n";
    }
    out += std::to_string(reports.size()) + " checks: " + std::to_string(counts[0]) + " PASS, " +
           std::to_string(counts[1]) + " FAIL, " + std::to_string(counts[2]) + " REPORT\n";
    return out;
}

std::string render_machine(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    size_t counts[3] = {0, 0, 0};
    for (const auto& r : reports) {
        ++counts[static_cast<int>(r.status)];
        checks.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"residues", r.residues}, {"notes", r.notes}});
    }
    nlohmann::ordered_json doc{
        {"checks", checks},
        {"summary", {{"total", reports.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"report", counts[2]}}},
    };
    return doc.dump(2) + "\n";
}

int exit_code(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status == Status::fail) return 1;
    return 0;
}

}  // namespace z3qg
