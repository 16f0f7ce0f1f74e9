#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/properties.hpp"
#include "z3qg/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace z3qg {

struct NamedCheck {
    std::string name;
    std::string summary;
    std::function<CheckReport(const PropertyOptions&)> run;
};

// Every verification the suite knows, sorted by name.
const std::vector<NamedCheck>& check_catalog();
std::vector<std::string> check_names();

// Throws std::invalid_argument for an unknown name. Exceptions raised by the
// check itself become a FAIL record.
CheckReport run_check(const std::string& name, const PropertyOptions& o = {});
// All checks, sorted by name; `threads` = 0 picks the hardware concurrency.
std::vector<CheckReport> run_all(const PropertyOptions& o = {}, unsigned threads = 0);

// Local confluence of one presentation, with every nonzero ambiguity as a residue.
CheckReport confluence_report(const Presentation& p);

std::string render_text(const std::vector<CheckReport>& reports);
// JSON: {"checks": [{name, status, residues, notes}...], "summary": {...}}.
std::string render_machine(const std::vector<CheckReport>& reports);
// 1 if any record has status FAIL, else 0.
int exit_code(const std::vector<CheckReport>& reports);

}  // namespace z3qg
