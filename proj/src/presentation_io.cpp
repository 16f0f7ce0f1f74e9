#include "z3qg/presentation_io.hpp"

#include "z3qg/expr.hpp"
#include "z3qg/presets.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace z3qg {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

[[noreturn]] void fail(size_t line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

int to_int(const std::string& s, size_t line, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(line, std::string("bad ") + what + " '" + s + "'");
    }
}

std::vector<Letter> parse_lhs(const std::string& text, const std::vector<Generator>& gens, size_t line) {
    std::vector<Letter> out;
    std::string s = text;
    for (char& c : s)
        if (c == '*') c = ' ';
    for (const std::string& tok : split_ws(s)) {
        std::string name = tok;
        int exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            exp = to_int(tok.substr(caret + 1), line, "exponent");
        }
        int idx = -1;
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) idx = static_cast<int>(i);
        if (idx < 0) fail(line, "unknown generator '" + name + "'");
        if (exp == -1) {
            out.push_back({idx, -1});
            continue;
        }
        if (exp < 1) fail(line, "bad exponent in '" + tok + "'");
        out.insert(out.end(), static_cast<size_t>(exp), Letter{idx, 1});
    }
    if (out.empty()) fail(line, "empty left-hand side");
    return out;
}

}  // namespace

PresentationPtr read_presentation(const std::string& text) {
    std::string name = "custom";
    std::vector<Generator> gens;
    std::vector<std::pair<size_t, std::string>> rule_lines;
    std::istringstream in(text);
    size_t lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.find("->") != std::string::npos) {
            rule_lines.emplace_back(lineno, line);
            continue;
        }
        auto w = split_ws(line);
        if (w[0] == "presentation") {
            if (w.size() != 2) fail(lineno, "expected 'presentation NAME'");
            name = w[1];
            continue;
        }
        if (w.size() < 2) fail(lineno, "expected 'NAME GRADE [nilpotent M | invertible]'");
        Generator g{w[0], to_int(w[1], lineno, "grade"), std::nullopt, false};
        if (g.grade < 0 || g.grade > 2) fail(lineno, "grade must be 0, 1 or 2");
        if (w.size() == 3 && w[2] == "invertible") {
            g.invertible = true;
        } else if (w.size() == 4 && w[2] == "nilpotent") {
            g.nilpotency = to_int(w[3], lineno, "nilpotency");
            if (*g.nilpotency < 2) fail(lineno, "nilpotency must be at least 2");
        } else if (w.size() != 2) {
            fail(lineno, "unexpected '" + w[2] + "'");
        }
        for (const auto& h : gens)
            if (h.name == g.name) fail(lineno, "duplicate generator '" + g.name + "'");
        gens.push_back(g);
    }
    if (gens.empty()) throw std::invalid_argument("presentation declares no generators");

    // Right-hand sides are read as words over the bare generators.
    std::vector<Generator> bare = gens;
    for (auto& g : bare) g.nilpotency.reset();
    auto words = std::make_shared<Presentation>(name, bare, std::vector<Rule>{});
    std::vector<Rule> rules;
    for (const auto& [ln, line] : rule_lines) {
        size_t arrow = line.find("->");
        std::vector<Letter> lhs = parse_lhs(line.substr(0, arrow), gens, ln);
        Poly rhs;
        try {
            rhs = parse_poly(line.substr(arrow + 2), words);
        } catch (const ParseError& e) {
            fail(ln, e.what());
        }
        rules.push_back(Rule{lhs, rhs});
    }
    try {
        return std::make_shared<Presentation>(name, gens, rules);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("invalid presentation: ") + e.what());
    }
}

std::string write_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "presentation " << p.name() << "\n";
    for (const auto& g : p.generators()) {
        out << g.name << " " << g.grade;
        if (g.nilpotency) out << " nilpotent " << *g.nilpotency;
        if (g.invertible) out << " invertible";
        out << "\n";
    }
    for (size_t i = 0; i < p.user_rule_count(); ++i) {
        const Rule& r = p.rules()[i];
        bool power = r.lhs.size() > 2 || r.lhs[0] == r.lhs[1];
        if (power)
            out << p.generators()[r.lhs[0].gen].name << "^" << r.lhs.size();
        else
            out << p.render_letters(r.lhs);
        out << " -> " << p.render(r.rhs) << "\n";
    }
    return out.str();
}

PresentationPtr load_presentation(const std::string& name_or_path) {
    for (const auto& n : preset_names())
        if (n == name_or_path) return get_preset(n);
    if (!std::filesystem::is_regular_file(name_or_path)) return get_preset(name_or_path);
    std::ifstream f(name_or_path);
    std::stringstream buf;
    buf << f.rdbuf();
    return read_presentation(buf.str());
}

}  // namespace z3qg
