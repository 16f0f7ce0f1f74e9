#include "z3qg/presets.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace z3qg {

namespace {

const CycScalar kQ = CycScalar::q();
const CycScalar kQ2 = kQ * kQ;

// Builds words and rules by generator name.
class Builder {
public:
    explicit Builder(std::vector<Generator> gens) : gens_(std::move(gens)) {}

    Letter letter(const std::string& tok) const {
        std::string name = tok;
        int sign = 1;
        if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
            name.resize(name.size() - 3);
            sign = -1;
        }
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return Letter{static_cast<int>(i), sign};
        throw std::logic_error("preset refers to unknown generator " + name);
    }
    std::vector<Letter> letters(std::initializer_list<const char*> toks) const {
        std::vector<Letter> w;
        for (const char* t : toks) w.push_back(letter(t));
        return w;
    }
    Poly w(std::initializer_list<const char*> toks, CycScalar c = 1) const {
        return Poly(Monomial::from_letters(letters(toks)), c);
    }
    Rule rule(std::initializer_list<const char*> lhs, Poly rhs) const { return Rule{letters(lhs), std::move(rhs)}; }

    const std::vector<Generator>& gens() const { return gens_; }

private:
    std::vector<Generator> gens_;
};

Relation relation(const std::string& label, Poly element) { return Relation{label, std::move(element)}; }

PresentationPtr make_plane() {
    Builder b({{"theta", 1, 3, false}, {"phi", 2, 3, false}});
    return std::make_shared<Presentation>("plane", b.gens(),
                                          std::vector<Rule>{b.rule({"phi", "theta"}, b.w({"theta", "phi"}, kQ))});
}

PresentationPtr make_dual_plane() {
    Builder b({{"xi", 2, {}, false}, {"x", 0, {}, false}});
    return std::make_shared<Presentation>("dual-plane", b.gens(),
                                          std::vector<Rule>{b.rule({"x", "xi"}, b.w({"xi", "x"}))});
}

PresentationPtr make_free_plane() {
    Builder b({{"theta", 1, {}, false}, {"phi", 2, {}, false}});
    return std::make_shared<Presentation>("free-plane", b.gens(), std::vector<Rule>{});
}

std::vector<Generator> matrix_generators() {
    return {{"a", 0, {}, false}, {"beta", 2, {}, false}, {"gamma", 1, {}, false}, {"d", 0, {}, false}};
}

// a beta = beta a, beta gamma = gamma beta, d beta = beta d,
// a gamma = q gamma a, d gamma = q^2 gamma d, a d = d a + (q - 1) beta gamma.
std::vector<Relation> matrix_relations(const Builder& b) {
    return {
        relation("a*beta = beta*a", b.w({"a", "beta"}) - b.w({"beta", "a"})),
        relation("beta*gamma = gamma*beta", b.w({"beta", "gamma"}) - b.w({"gamma", "beta"})),
        relation("d*beta = beta*d", b.w({"d", "beta"}) - b.w({"beta", "d"})),
        relation("a*gamma = q*gamma*a", b.w({"a", "gamma"}) - b.w({"gamma", "a"}, kQ)),
        relation("d*gamma = q^2*gamma*d", b.w({"d", "gamma"}) - b.w({"gamma", "d"}, kQ2)),
        relation("a*d = d*a + (q - 1)*beta*gamma",
                 b.w({"a", "d"}) - b.w({"d", "a"}) - b.w({"beta", "gamma"}, kQ - 1)),
    };
}

PresentationPtr make_mq2() {
    Builder b(matrix_generators());
    std::vector<Rule> rules{
        b.rule({"beta", "a"}, b.w({"a", "beta"})),
        b.rule({"gamma", "a"}, b.w({"a", "gamma"}, kQ2)),
        b.rule({"d", "a"}, b.w({"a", "d"}) - b.w({"beta", "gamma"}, kQ - 1)),
        b.rule({"gamma", "beta"}, b.w({"beta", "gamma"})),
        b.rule({"d", "beta"}, b.w({"beta", "d"})),
        b.rule({"d", "gamma"}, b.w({"gamma", "d"}, kQ2)),
    };
    return std::make_shared<Presentation>("Mq2", b.gens(), rules, matrix_relations(b));
}

PresentationPtr make_free_mq2() {
    Builder b(matrix_generators());
    return std::make_shared<Presentation>("free-Mq2", b.gens(), std::vector<Rule>{});
}

// Order a < d < beta < gamma; normal words a^i beta^j gamma^k or d^l beta^j gamma^k.
PresentationPtr make_slq2() {
    Builder b({{"a", 0, {}, false}, {"d", 0, {}, false}, {"beta", 2, {}, false}, {"gamma", 1, {}, false}});
    std::vector<Rule> rules{
        b.rule({"d", "a"}, Poly(CycScalar(1)) + b.w({"beta", "gamma"})),
        b.rule({"a", "d"}, Poly(CycScalar(1)) + b.w({"beta", "gamma"}, kQ)),
        b.rule({"beta", "a"}, b.w({"a", "beta"})),
        b.rule({"gamma", "a"}, b.w({"a", "gamma"}, kQ2)),
        b.rule({"beta", "d"}, b.w({"d", "beta"})),
        b.rule({"gamma", "d"}, b.w({"d", "gamma"}, kQ)),
        b.rule({"gamma", "beta"}, b.w({"beta", "gamma"})),
    };
    std::vector<Relation> rels = matrix_relations(b);
    rels.push_back(relation("a*d - q*beta*gamma = 1",
                            b.w({"a", "d"}) - b.w({"beta", "gamma"}, kQ) - Poly(CycScalar(1))));
    return std::make_shared<Presentation>("SLq2", b.gens(), rules, rels);
}

PresentationPtr make_uqgl2() {
    Builder b({{"U", 0, {}, true}, {"V", 0, {}, true}, {"Xp", 2, {}, false}, {"Xm", 1, {}, false}});
    // (U V^-1 - V U^-1) / (q^2 - q)
    CycScalar k = (kQ2 - kQ).inv();
    Poly cartan = (b.w({"U", "V^-1"}) - b.w({"V", "U^-1"})) * k;
    std::vector<Rule> rules{
        b.rule({"V", "U"}, b.w({"U", "V"})),
        b.rule({"Xp", "U"}, b.w({"U", "Xp"}, kQ)),
        b.rule({"Xm", "U"}, b.w({"U", "Xm"}, kQ2)),
        b.rule({"Xp", "V"}, b.w({"V", "Xp"}, kQ2)),
        b.rule({"Xm", "V"}, b.w({"V", "Xm"}, kQ)),
        b.rule({"Xm", "Xp"}, b.w({"Xp", "Xm"}) - cartan),
    };
    std::vector<Relation> rels{
        relation("U*V = V*U", b.w({"U", "V"}) - b.w({"V", "U"})),
        relation("U*Xp = q^2*Xp*U", b.w({"U", "Xp"}) - b.w({"Xp", "U"}, kQ2)),
        relation("U*Xm = q^-2*Xm*U", b.w({"U", "Xm"}) - b.w({"Xm", "U"}, kQ)),
        relation("V*Xp = q^-2*Xp*V", b.w({"V", "Xp"}) - b.w({"Xp", "V"}, kQ)),
        relation("V*Xm = q^2*Xm*V", b.w({"V", "Xm"}) - b.w({"Xm", "V"}, kQ2)),
        relation("Xp*Xm - Xm*Xp = (U*V^-1 - V*U^-1)/(q^2 - q)",
                 b.w({"Xp", "Xm"}) - b.w({"Xm", "Xp"}) - cartan),
        relation("U*U^-1 = 1", b.w({"U", "U^-1"}) - Poly(CycScalar(1))),
        relation("V*V^-1 = 1", b.w({"V", "V^-1"}) - Poly(CycScalar(1))),
    };
    return std::make_shared<Presentation>("Uqgl2", b.gens(), rules, rels);
}

const std::map<std::string, std::function<PresentationPtr()>>& factories() {
    static const std::map<std::string, std::function<PresentationPtr()>> f{
        {"plane", make_plane},   {"dual-plane", make_dual_plane}, {"free-plane", make_free_plane},
        {"Mq2", make_mq2},       {"free-Mq2", make_free_mq2},     {"SLq2", make_slq2},
        {"Uqgl2", make_uqgl2},
    };
    return f;
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
    return out;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"plane", "dual-plane", "free-plane", "Mq2", "free-Mq2", "SLq2", "Uqgl2"};
}

PresentationPtr get_preset(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, PresentationPtr> built;
    auto it = factories().find(name);
    if (it == factories().end())
        throw std::invalid_argument("unknown preset '" + name + "'; available: " + join(preset_names()));
    std::lock_guard lock(mu);
    auto& slot = built[name];
    if (!slot) slot = it->second();
    return slot;
}

Poly quantum_determinant() {
    auto p = get_preset("Mq2");
    return p->mul(p->gen("a"), p->gen("d")) - p->mul(p->gen("beta"), p->gen("gamma")) * kQ;
}

Poly manin_element() {
    auto p = get_preset("free-plane");
    return p->mul(p->gen("theta"), p->gen("phi")) - p->mul(p->gen("phi"), p->gen("theta")) * kQ2;
}

PolyMatrix coordinate_matrix(const PresentationPtr& p) {
    PolyMatrix t(2, 2);
    t(0, 0) = p->gen("a");
    t(0, 1) = p->gen("beta");
    t(1, 0) = p->gen("gamma");
    t(1, 1) = p->gen("d");
    return t;
}

PolyMatrix cofactor_matrix() {
    auto p = get_preset("Mq2");
    PolyMatrix t(2, 2);
    t(0, 0) = p->gen("d");
    t(0, 1) = -p->gen("beta");
    t(1, 0) = p->gen("gamma") * (-kQ);
    t(1, 1) = p->gen("a");
    return t;
}

PolyMatrix l_plus() {
    auto p = get_preset("Uqgl2");
    PolyMatrix l(2, 2);
    l(0, 0) = p->gen("U");
    l(0, 1) = p->gen("Xp") * CycScalar::lambda();
    l(1, 1) = p->gen("V");
    return l;
}

PolyMatrix l_minus() {
    auto p = get_preset("Uqgl2");
    PolyMatrix l(2, 2);
    l(0, 0) = p->gen("U", -1);
    l(1, 0) = p->gen("Xm") * CycScalar::lambda();
    l(1, 1) = p->gen("V", -1);
    return l;
}

KronConvention frt_convention() { return KronConvention{{1, 2}, -1, 2}; }
KronConvention literal_kron_convention() { return KronConvention{{0, 1}, 1, 1}; }

std::vector<std::string> element_names() {
    return {"Dq", "vartheta", "lambda", "T", "Ttilde", "Rhat", "Pgraded", "Lplus", "Lminus"};
}

NamedElement get_element(const std::string& name) {
    if (name == "Dq") return {name, get_preset("Mq2"), quantum_determinant()};
    if (name == "vartheta") return {name, get_preset("free-plane"), manin_element()};
    if (name == "lambda") return {name, nullptr, CycScalar::lambda()};
    if (name == "T") return {name, get_preset("Mq2"), coordinate_matrix(get_preset("Mq2"))};
    if (name == "Ttilde") return {name, get_preset("Mq2"), cofactor_matrix()};
    if (name == "Rhat") return {name, nullptr, r_hat()};
    if (name == "Pgraded") return {name, nullptr, graded_permutation()};
    if (name == "Lplus") return {name, get_preset("Uqgl2"), l_plus()};
    if (name == "Lminus") return {name, get_preset("Uqgl2"), l_minus()};
    throw std::invalid_argument("unknown element '" + name + "'; available: " + join(element_names()));
}

}  // namespace z3qg
