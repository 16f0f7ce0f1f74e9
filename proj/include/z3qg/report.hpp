#pragma once

#include <string>
#include <vector>

namespace z3qg {

enum class Status { pass, fail, report };

const char* status_name(Status s);

// Outcome of one named verification. `residues` holds rendered nonzero
// differences (labelled); `notes` carries convention details.
struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    std::string name;
    Status status = Status::pass;
    std::vector<std::string> residues;
    std::vector<std::string> notes;

    // Records a labelled residue and marks the check failed when it is nonzero.
    void expect_zero(const std::string& label, bool is_zero, const std::string& rendered);
    void fail(const std::string& why);
    void note(std::string text) { notes.push_back(std::move(text)); }
    bool passed() const { return status != Status::fail; }
};

// Merges sub-reports: the result fails if any part failed.
CheckReport combine(std::string name, const std::vector<CheckReport>& parts);

}  // namespace z3qg
