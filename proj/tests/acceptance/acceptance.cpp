// One line per acceptance criterion; exits nonzero when any criterion fails.
#include "z3qg/suite.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace z3qg;

namespace {

struct Expect {
    std::string check;
    Status status = Status::pass;
};

struct Criterion {
    int id;
    const char* title;
    std::vector<Expect> expects;
};

std::vector<Expect> passing(std::initializer_list<const char*> names) {
    std::vector<Expect> out;
    for (const char* n : names) out.push_back({n, Status::pass});
    return out;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "confluence of plane, dual-plane, Mq2, SLq2, Uqgl2", passing({"confluence"})},
        {2, "relations engine and degree-2 census", passing({"relations-engine"})},
        {3, "both plane coactions preserve the plane relations", passing({"coaction-homomorphism"})},
        {4, "determinant: central, two forms, group-like, multiplicative",
         passing({"determinant-central", "determinant-forms", "determinant-grouplike", "determinant-multiplicative"})},
        {5, "bialgebra axioms on Mq2",
         passing({"coproduct-relations", "counit-relations", "coassociativity", "counit", "noncocommutative"})},
        {6, "tilde relations", passing({"tilde-relations"})},
        {7, "antipode axioms and S^2 = id on generators", passing({"antipode", "antipode-square"})},
        {8, "star involutive on SLq2, coproduct compatibility reported",
         {{"star", Status::pass}, {"star-coproduct", Status::report}}},
        {9, "comodule axioms and the Manin subcomodule", passing({"comodule-axioms", "manin-subcomodule"})},
        {10, "RTT residues and free residue span", passing({"frt", "frt-free-span"})},
        {11, "braid matrix identities",
         {{"graded-permutation-cube", Status::pass}, {"hecke", Status::pass}, {"braid-relation", Status::pass},
          {"braid-relation-graded", Status::report}}},
        {12, "RLL relations and L coproduct", passing({"rll", "l-coproduct"})},
        {13, "randomized property suites",
         passing({"property-associativity", "property-tensor-associativity", "property-grade-additivity",
                  "property-reduce-idempotence", "property-localization", "property-regularity",
                  "localization-regularity"})},
    };

    std::map<std::string, CheckReport> results;
    for (CheckReport& r : run_all()) results.emplace(r.name, std::move(r));

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        for (const Expect& e : c.expects) {
            const CheckReport& r = results.at(e.check);
            if (r.status == e.status) continue;
            detail += " [" + e.check + " " + status_name(r.status);
            if (!r.residues.empty()) detail += ": " + r.residues.front();
            if (r.residues.size() > 1) detail += " (+" + std::to_string(r.residues.size() - 1) + " more)";
            detail += "]";
        }
        bool ok = detail.empty();
        failed += !ok;
        std::printf("criterion %2d: %s  %s%s\n", c.id, ok ? "PASS" : "FAIL", c.title, detail.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
