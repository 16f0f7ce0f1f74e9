#include "z3qg/report.hpp"

namespace z3qg {

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::report: return "REPORT";
    }
    return "?";
}

void CheckReport::expect_zero(const std::string& label, bool is_zero, const std::string& rendered) {
    if (is_zero) return;
    residues.push_back(label + ": " + rendered);
    if (status != Status::report) status = Status::fail;
}

void CheckReport::fail(const std::string& why) {
    residues.push_back(why);
    if (status != Status::report) status = Status::fail;
}

CheckReport combine(std::string name, const std::vector<CheckReport>& parts) {
    CheckReport out{std::move(name)};
    for (const CheckReport& p : parts) {
        if (p.status == Status::fail) out.status = Status::fail;
        for (const auto& r : p.residues) out.residues.push_back(p.name + " " + r);
        for (const auto& n : p.notes) out.notes.push_back(p.name + ": " + n);
    }
    return out;
}

}  // namespace z3qg
