#include "z3qg/expr.hpp"

#include "z3qg/comodule.hpp"
#include "z3qg/frt.hpp"
#include "z3qg/hopf.hpp"
#include "z3qg/presets.hpp"

#include <cctype>

namespace z3qg {

ParseError::ParseError(const std::string& what, size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + what), pos_(position) {}

namespace {

enum class Tok { end, number, name, plus, minus, star, slash, caret, lparen, rparen };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
            out.push_back({Tok::name, s.substr(start, i - start), start});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
        }
        out.push_back({k, std::string(1, s[i]), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

bool is_map(const std::string& n) {
    for (const auto& m : map_names())
        if (m == n) return true;
    return false;
}

// Poly of `from` rewritten letter by letter into `to` (matched by generator name).
Poly translate(const Poly& x, const Presentation& from, const PresentationPtr& to, const std::string& what) {
    if (&from == to.get()) return x;
    Poly words;
    for (const auto& [m, c] : x.terms()) {
        std::vector<Syllable> syl;
        for (const Syllable& s : m.syllables()) {
            auto idx = to->find(from.generators().at(s.gen).name);
            if (!idx) throw std::invalid_argument(what + " needs generator " + from.generators().at(s.gen).name);
            syl.push_back({*idx, s.exp});
        }
        words.add_term(Monomial(syl), c);
    }
    return to->reduce(words);
}

bool is_gl(const PresentationPtr& p) { return p == gl_ring()->presentation(); }

// Flat concatenation x ox y; a Poly counts as a one-slot tensor.
TensorPoly concat(const Value& x, const Value& y, const PresentationPtr& p) {
    auto as_tensor = [&](const Value& v) -> TensorPoly {
        if (auto t = std::get_if<TensorPoly>(&v)) return *t;
        if (auto a = std::get_if<Poly>(&v)) return as_single_slot(*a, p);
        throw std::invalid_argument("localized elements cannot be tensored");
    };
    TensorPoly a = as_tensor(x), b = as_tensor(y);
    if (a.space()->braiding() != b.space()->braiding()) throw std::invalid_argument("tensor factors use different braidings");
    std::vector<PresentationPtr> slots = a.space()->slots();
    slots.insert(slots.end(), b.space()->slots().begin(), b.space()->slots().end());
    TensorPoly out(make_space(slots, a.space()->braiding()));
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            TensorMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(m, ca * cb);
        }
    return out;
}

LocalizedElement to_local(const Value& v) {
    if (auto l = std::get_if<LocalizedElement>(&v)) return *l;
    return LocalizedElement(gl_ring(), std::get<Poly>(v), 0);
}

std::optional<CycScalar> scalar_of(const Value& v) {
    if (auto a = std::get_if<Poly>(&v))
        if (a->is_scalar()) return a->constant_term();
    if (auto t = std::get_if<TensorPoly>(&v)) {
        if (t->is_zero()) return CycScalar(0);
        if (t->size() == 1) {
            const auto& [m, c] = *t->terms().begin();
            bool unit = true;
            for (const auto& s : m) unit = unit && s.is_one();
            if (unit) return c;
        }
    }
    return std::nullopt;
}

Value scale(const Value& v, const CycScalar& c) {
    return std::visit([&](const auto& x) -> Value { return x * c; }, v);
}

class Parser {
public:
    Parser(const std::string& text, PresentationPtr p) : toks_(tokenize(text)), p_(std::move(p)) {}

    Value run() {
        if (peek().kind == Tok::end) throw ParseError("empty expression", 0);
        Value v = sum();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return v;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool is_ox() const { return peek().kind == Tok::name && peek().text == "ox"; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        ++i_;
    }

    template <class F>
    Value guard(size_t pos, F&& f) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const RewriteLimitError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), pos);
        }
    }

    Value add(const Value& x, const Value& y, bool subtract, size_t pos) {
        return guard(pos, [&]() -> Value {
            Value b = subtract ? scale(y, CycScalar(-1)) : y;
            if (x.index() == b.index()) {
                if (auto a = std::get_if<Poly>(&x)) return *a + std::get<Poly>(b);
                if (auto t = std::get_if<TensorPoly>(&x)) {
                    const auto& u = std::get<TensorPoly>(b);
                    if (!(*t->space() == *u.space())) throw std::invalid_argument("sum of tensors with different slots");
                    return *t + u;
                }
                return std::get<LocalizedElement>(x) + std::get<LocalizedElement>(b);
            }
            if (std::holds_alternative<TensorPoly>(x) || std::holds_alternative<TensorPoly>(b))
                throw std::invalid_argument("cannot add a tensor and an algebra element");
            return to_local(x) + to_local(b);
        });
    }

    Value multiply(const Value& x, const Value& y, size_t pos) {
        return guard(pos, [&]() -> Value {
            if (auto c = scalar_of(x); c && !std::holds_alternative<TensorPoly>(x)) return scale(y, *c);
            if (auto c = scalar_of(y); c && !std::holds_alternative<TensorPoly>(y)) return scale(x, *c);
            if (x.index() == y.index()) {
                if (auto a = std::get_if<Poly>(&x)) return p_->mul(*a, std::get<Poly>(y));
                if (auto t = std::get_if<TensorPoly>(&x)) return tensor_mul(*t, std::get<TensorPoly>(y));
            }
            if (std::holds_alternative<TensorPoly>(x) || std::holds_alternative<TensorPoly>(y))
                throw std::invalid_argument("cannot multiply a tensor by an algebra element");
            return loc_mul(to_local(x), to_local(y));
        });
    }

    Value sum() {
        bool neg = false;
        if (peek().kind == Tok::minus || peek().kind == Tok::plus) neg = next().kind == Tok::minus;
        Value acc = tensor();
        if (neg) acc = scale(acc, CycScalar(-1));
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = next();
            Value rhs = tensor();
            acc = add(acc, rhs, op.kind == Tok::minus, op.pos);
        }
        return acc;
    }

    Value tensor() {
        Value acc = product();
        while (is_ox()) {
            size_t pos = next().pos;
            Value rhs = product();
            acc = guard(pos, [&]() -> Value { return concat(acc, rhs, p_); });
        }
        return acc;
    }

    Value product() {
        Value acc = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = next();
            size_t pos = peek().pos;
            Value rhs = unary();
            if (op.kind == Tok::star) {
                acc = multiply(acc, rhs, op.pos);
                continue;
            }
            auto c = scalar_of(rhs);
            if (!c || std::holds_alternative<TensorPoly>(rhs)) throw ParseError("division by a non-scalar", pos);
            if (c->is_zero()) throw ParseError("division by zero", pos);
            acc = scale(acc, c->inv());
        }
        return acc;
    }

    Value unary() {
        if (peek().kind == Tok::minus) {
            next();
            return scale(unary(), CycScalar(-1));
        }
        return power();
    }

    Value power() {
        size_t start = peek().pos;
        std::optional<std::string> bare;
        if (peek().kind == Tok::name && toks_[i_ + 1].kind != Tok::lparen) bare = peek().text;
        Value base = atom();
        if (peek().kind != Tok::caret) return base;
        next();
        bool neg = false;
        if (peek().kind == Tok::minus) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::number) throw ParseError("expected integer exponent", peek().pos);
        size_t epos = peek().pos;
        long e;
        try {
            e = std::stol(next().text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", epos);
        }
        if (neg) e = -e;
        return guard(start, [&]() -> Value { return raise(base, e, bare); });
    }

    Value raise(const Value& base, long e, const std::optional<std::string>& bare) {
        if (bare) {
            if (auto idx = p_->find(*bare); idx && p_->generators()[*idx].invertible) return p_->gen(*idx, e);
        }
        if (auto c = scalar_of(base); c && !std::holds_alternative<TensorPoly>(base)) {
            if (e < 0 && c->is_zero()) throw std::domain_error("zero to a negative power");
            CycScalar b = e < 0 ? c->inv() : *c, r = 1;
            for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
            return Poly(r);
        }
        if (e >= 0) {
            if (auto a = std::get_if<Poly>(&base)) return p_->pow(*a, static_cast<unsigned>(e));
            if (auto t = std::get_if<TensorPoly>(&base)) return tensor_pow(*t, static_cast<unsigned>(e));
            LocalizedElement acc(gl_ring(), gl_ring()->presentation()->one(), 0);
            for (long k = 0; k < e; ++k) acc = loc_mul(acc, std::get<LocalizedElement>(base));
            return acc;
        }
        if (is_gl(p_)) {
            // Only c * Dq^j is invertible.
            auto ring = gl_ring();
            LocalizedElement n = to_local(base).normalized();
            Poly num = n.numerator();
            long j = -n.denominator_power();
            while (!num.is_scalar()) {
                auto quotient = ring->divide(num);
                if (!quotient) throw std::invalid_argument("negative power of a non-invertible element");
                num = *quotient;
                ++j;
            }
            CycScalar c = num.constant_term().inv(), s = 1;
            for (long k = 0; k < -e; ++k) s *= c;
            long je = j * e;
            if (je >= 0) return ring->central_power(static_cast<int>(je)) * s;
            return LocalizedElement(ring, Poly(s), static_cast<int>(-je));
        }
        throw std::invalid_argument("negative power of a non-invertible element");
    }

    Value atom() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::number:
                return Poly(CycScalar(mpq_class(t.text)));
            case Tok::lparen: {
                Value v = sum();
                expect(Tok::rparen, "')'");
                return v;
            }
            case Tok::name:
                break;
            case Tok::end:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
        if (peek().kind == Tok::lparen) {
            if (!is_map(t.text)) throw ParseError("unknown function '" + t.text + "'", t.pos);
            next();
            Value arg = sum();
            expect(Tok::rparen, "')'");
            return guard(t.pos, [&]() -> Value { return apply_map(t.text, arg, p_); });
        }
        return guard(t.pos, [&]() -> Value { return identifier(t); });
    }

    Value identifier(const Token& t) {
        const std::string& n = t.text;
        if (n == "q") return Poly(CycScalar::q());
        if (n == "ox") throw ParseError("'ox' needs a left operand", t.pos);
        if (auto idx = p_->find(n)) return p_->gen(*idx);
        if (n == "lambda") return Poly(CycScalar::lambda());
        if (n == "Dq" || n == "vartheta") {
            NamedElement e = get_element(n);
            return translate(std::get<Poly>(e.value), *e.presentation, p_, n);
        }
        if (is_map(n)) throw ParseError("function '" + n + "' needs an argument", t.pos);
        throw ParseError("unknown identifier '" + n + "' for preset " + p_->name(), t.pos);
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    PresentationPtr p_;
};

bool has_generators(const PresentationPtr& p, std::initializer_list<const char*> names) {
    for (const char* n : names)
        if (!p->find(n)) return false;
    return true;
}

const Poly& require_poly(const Value& x, const std::string& map) {
    if (auto a = std::get_if<Poly>(&x)) return *a;
    throw std::invalid_argument(map + " takes an algebra element");
}

}  // namespace

Value parse_expr(const std::string& text, const PresentationPtr& p) { return Parser(text, p).run(); }

Poly parse_poly(const std::string& text, const PresentationPtr& p) {
    Value v = parse_expr(text, p);
    if (auto a = std::get_if<Poly>(&v)) return *a;
    throw ParseError("expected an element of " + p->name(), 0);
}

std::vector<std::string> map_names() { return {"antipode", "delta", "deltaL", "deltaR", "epsilon", "star"}; }

Value apply_map(const std::string& map, const Value& x, const PresentationPtr& p) {
    bool matrix = has_generators(p, {"a", "beta", "gamma", "d"});
    bool plane = p->generators().size() == 2 && has_generators(p, {"theta", "phi"});
    auto unsupported = [&]() { return std::invalid_argument(map + " is not defined on preset " + p->name()); };
    if (map == "delta") {
        if (p->name() == "Uqgl2") return make_l_coproduct().apply(require_poly(x, map));
        if (!matrix) throw unsupported();
        return make_coproduct(p).apply(require_poly(x, map));
    }
    if (map == "epsilon") {
        if (!matrix) throw unsupported();
        if (auto l = std::get_if<LocalizedElement>(&x)) return Poly(loc_counit(make_counit(p), *l));
        return Poly(make_counit(p).apply(require_poly(x, map)));
    }
    if (map == "antipode") {
        if (!is_gl(p)) throw unsupported();
        Antipode s = make_antipode();
        LocalizedElement r = antipode_apply(s, to_local(x)).normalized();
        if (r.denominator_power() == 0) return r.numerator();
        return r;
    }
    if (map == "star") {
        if (p->name() != "SLq2") throw unsupported();
        return star_apply(require_poly(x, map));
    }
    if (map == "deltaL" || map == "deltaR") {
        if (!plane) throw unsupported();
        Coaction c = map == "deltaL" ? make_left_coaction(p) : make_right_coaction(p);
        return c.apply(require_poly(x, map));
    }
    throw std::invalid_argument("unknown map '" + map + "'; available: antipode, delta, deltaL, deltaR, epsilon, star");
}

std::string render_value(const Value& v, const PresentationPtr& p) {
    if (auto a = std::get_if<Poly>(&v)) return p->render(*a);
    if (auto t = std::get_if<TensorPoly>(&v)) return t->render();
    return std::get<LocalizedElement>(v).normalized().render();
}

std::optional<int> value_grade(const Value& v, const PresentationPtr& p) {
    if (auto a = std::get_if<Poly>(&v)) return p->grade_of(*a);
    if (auto t = std::get_if<TensorPoly>(&v)) return tensor_grade(*t);
    const auto& l = std::get<LocalizedElement>(v);
    // Dq has grade 0, so the grade is the numerator's.
    return l.ring()->presentation()->grade_of(l.numerator());
}

bool value_equal(const Value& x, const Value& y) {
    auto zero = [](const Value& v) { return std::visit([](const auto& e) { return e.is_zero(); }, v); };
    if (zero(x) || zero(y)) return zero(x) && zero(y);
    if (x.index() != y.index()) {
        if (std::holds_alternative<TensorPoly>(x) || std::holds_alternative<TensorPoly>(y)) return false;
        return to_local(x) == to_local(y);
    }
    if (auto a = std::get_if<Poly>(&x)) return *a == std::get<Poly>(y);
    if (auto t = std::get_if<TensorPoly>(&x)) {
        const auto& u = std::get<TensorPoly>(y);
        return *t->space() == *u.space() && *t == u;
    }
    return std::get<LocalizedElement>(x) == std::get<LocalizedElement>(y);
}

}  // namespace z3qg
