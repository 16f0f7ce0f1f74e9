#include "z3qg/expr.hpp"
#include "z3qg/presentation_io.hpp"
#include "z3qg/presets.hpp"
#include "z3qg/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace z3qg;

namespace {

py::dict to_dict(const CheckReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["status"] = status_name(r.status);
    d["residues"] = r.residues;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_z3qg, m) {
    m.doc() = "Exact computations in Z3-graded quantum matrix algebras";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<RewriteLimitError>(m, "RewriteLimitError", PyExc_RuntimeError);

    py::class_<Presentation, std::shared_ptr<Presentation>>(m, "Presentation")
        .def_property_readonly("name", &Presentation::name)
        .def_property_readonly("generators",
                               [](const Presentation& p) {
                                   std::vector<std::string> out;
                                   for (const auto& g : p.generators()) out.push_back(g.name);
                                   return out;
                               })
        .def("normalize",
             [](const PresentationPtr& p, const std::string& expr) { return render_value(parse_expr(expr, p), p); })
        .def("grade", [](const PresentationPtr& p, const std::string& expr) { return value_grade(parse_expr(expr, p), p); })
        .def("apply",
             [](const PresentationPtr& p, const std::string& map, const std::string& expr) {
                 return render_value(apply_map(map, parse_expr(expr, p), p), p);
             })
        .def("census", &Presentation::dimension_census, py::arg("max_degree"))
        .def("confluence", [](const Presentation& p) { return to_dict(confluence_report(p)); })
        .def("to_text", [](const Presentation& p) { return write_presentation(p); })
        .def("__repr__", [](const Presentation& p) { return "<Presentation " + p.name() + ">"; });

    m.def("preset_names", &preset_names);
    m.def("map_names", &map_names);
    m.def("check_names", &check_names);
    m.def(
        "load",
        [](const std::string& name_or_path) { return std::const_pointer_cast<Presentation>(load_presentation(name_or_path)); },
        py::arg("name_or_path"));
    m.def(
        "parse_presentation",
        [](const std::string& text) { return std::const_pointer_cast<Presentation>(read_presentation(text)); },
        py::arg("text"));
    m.def(
        "verify", [](const std::string& name) { return to_dict(run_check(name)); }, py::arg("check"));
    m.def(
        "verify_all",
        [] {
            std::vector<CheckReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_all();
            }
            py::list out;
            for (const auto& r : reports) out.append(to_dict(r));
            return out;
        });
    m.def("report_json", [](const std::vector<std::string>& names) {
        std::vector<CheckReport> reports;
        for (const auto& n : names) reports.push_back(run_check(n));
        return render_machine(reports);
    });
}
