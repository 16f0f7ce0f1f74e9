#include "z3qg/expr.hpp"
#include "z3qg/presentation_io.hpp"
#include "z3qg/presets.hpp"
#include "z3qg/suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace z3qg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

struct Options {
    std::string preset = "Mq2";
    std::string format = "text";
    long max_steps = Presentation::kDefaultMaxSteps;
    int degree = -1;
    std::string expr;
    std::string map;
    std::string check;
    std::string target;
    int census_degree = -1;
};

bool machine(const Options& o) { return o.format == "machine"; }

int emit_reports(const Options& o, const std::vector<CheckReport>& reports) {
    std::cout << (machine(o) ? render_machine(reports) : render_text(reports));
    return exit_code(reports);
}

int cmd_normalize(const Options& o, const PresentationPtr& p) {
    Value v = parse_expr(o.expr, p);
    std::string r = render_value(v, p);
    if (machine(o))
        std::cout << json{{"preset", p->name()}, {"input", o.expr}, {"result", r}}.dump() << "\n";
    else
        std::cout << r << "\n";
    return 0;
}

int cmd_grade(const Options& o, const PresentationPtr& p) {
    Value v = parse_expr(o.expr, p);
    auto g = value_grade(v, p);
    if (machine(o)) {
        json j{{"preset", p->name()}, {"input", o.expr}, {"grade", nullptr}};
        if (g) j["grade"] = *g;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (g ? std::to_string(*g) : "inhomogeneous") << "\n";
    }
    return 0;
}

int cmd_apply(const Options& o, const PresentationPtr& p) {
    Value x = parse_expr(o.expr, p);
    Value v = apply_map(o.map, x, p);
    std::string r = render_value(v, p);
    if (machine(o))
        std::cout << json{{"preset", p->name()}, {"map", o.map}, {"input", o.expr}, {"result", r}}.dump() << "\n";
    else
        std::cout << r << "\n";
    return 0;
}

int cmd_verify(const Options& o, const PresentationPtr& p, bool preset_given) {
    if (o.check == "all") return emit_reports(o, run_all());
    if (o.check == "confluence" && preset_given) return emit_reports(o, {confluence_report(*p)});
    return emit_reports(o, {run_check(o.check)});
}

int cmd_census(const Options& o, const PresentationPtr& p) {
    int deg = o.census_degree >= 0 ? o.census_degree : o.degree;
    if (deg < 0) throw CLI::ValidationError("census", "a degree is required");
    auto counts = p->dimension_census(deg);
    if (machine(o)) {
        std::cout << json{{"preset", p->name()}, {"degree", deg}, {"dimensions", counts}}.dump() << "\n";
        return 0;
    }
    for (size_t k = 0; k < counts.size(); ++k) std::cout << "degree " << k << ": " << counts[k] << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Z3-graded quantum matrix algebras", "z3qg"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("-p,--preset", o.preset, "Catalog preset or presentation file")->default_str("Mq2");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--max-steps", o.max_steps, "Rewrite step limit")->check(CLI::PositiveNumber);
    app.add_option("--degree", o.degree, "Census degree")->check(CLI::NonNegativeNumber);

    auto* normalize = app.add_subcommand("normalize", "Normal form of an expression");
    normalize->add_option("expr", o.expr)->required();
    auto* grade = app.add_subcommand("grade", "Z3 grade of an expression");
    grade->add_option("expr", o.expr)->required();
    auto* apply = app.add_subcommand("apply", "Apply a structure map");
    apply->add_option("map", o.map)->required()->check(CLI::IsMember(map_names()));
    apply->add_option("expr", o.expr)->required();
    auto* verify = app.add_subcommand("verify", "Run a named check or all of them");
    std::vector<std::string> checks = check_names();
    checks.push_back("all");
    verify->add_option("check", o.check)->required()->check(CLI::IsMember(checks));
    auto* confluence = app.add_subcommand("confluence", "Local confluence of a presentation");
    confluence->add_option("preset", o.target);
    auto* census = app.add_subcommand("census", "Dimensions of normal monomials per degree");
    census->add_option("preset", o.target);
    census->add_option("degree", o.census_degree)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        Presentation::set_global_step_limit(o.max_steps);
        bool preset_given = app.count("--preset") > 0;
        std::string source = o.target.empty() ? o.preset : o.target;
        PresentationPtr p = load_presentation(source);
        if (*normalize) return cmd_normalize(o, p);
        if (*grade) return cmd_grade(o, p);
        if (*apply) return cmd_apply(o, p);
        if (*verify) return cmd_verify(o, p, preset_given);
        if (*confluence) return emit_reports(o, {confluence_report(*p)});
        if (*census) return cmd_census(o, p);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
