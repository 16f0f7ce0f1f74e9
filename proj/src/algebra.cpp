#include "z3qg/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <stdexcept>

namespace z3qg {

namespace {

int sign_of(long e) { return e < 0 ? -1 : 1; }

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Syllable> syllables) {
    for (const Syllable& s : syllables) {
        long e = s.exp;
        int g = s.gen;
        if (e == 0) continue;
        // merge through append so the invariant holds for any input
        for (long i = 0; i < (e < 0 ? -e : e); ++i) append(Letter{g, sign_of(e)});
    }
}

Monomial Monomial::from_letters(const std::vector<Letter>& letters) {
    Monomial m;
    for (Letter l : letters) m.append(l);
    return m;
}

long Monomial::degree() const {
    long n = 0;
    for (const Syllable& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
}

std::vector<Letter> Monomial::letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(degree()));
    for (const Syllable& s : syl_) {
        long n = s.exp < 0 ? -s.exp : s.exp;
        for (long i = 0; i < n; ++i) out.push_back(Letter{s.gen, sign_of(s.exp)});
    }
    return out;
}

Monomial& Monomial::append(Letter l) {
    if (!syl_.empty() && syl_.back().gen == l.gen) {
        syl_.back().exp += l.sign;
        if (syl_.back().exp == 0) syl_.pop_back();
    } else {
        syl_.push_back(Syllable{l.gen, l.sign});
    }
    return *this;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m = *this;
    for (Letter l : other.letters()) m.append(l);
    return m;
}

Monomial Monomial::reversed() const {
    Monomial m;
    m.syl_.assign(syl_.rbegin(), syl_.rend());
    return m;
}

bool operator<(const Monomial& x, const Monomial& y) {
    long dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    return x.syl_ < y.syl_;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const CycScalar& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly::Poly(Monomial m, CycScalar c) {
    if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

CycScalar Poly::constant_term() const { return coeff(Monomial{}); }

CycScalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycScalar{} : it->second;
}

bool Poly::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

long Poly::max_degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Poly::add_term(const Monomial& m, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const CycScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Poly Poly::conj() const {
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v = v.conj();
    return r;
}

// ---------------------------------------------------------------- Presentation

namespace {
std::atomic<long> g_step_limit{Presentation::kDefaultMaxSteps};
}

void Presentation::set_global_step_limit(long n) { g_step_limit = n; }
long Presentation::global_step_limit() { return g_step_limit; }
long Presentation::step_limit() const { return std::min(max_steps_, g_step_limit.load()); }

void Presentation::Counter::tick() {
    if (++steps > limit)
        throw RewriteLimitError("rewrite step limit of " + std::to_string(limit) +
                                " exceeded; the presentation may not terminate");
}

Presentation::Presentation(std::string name, std::vector<Generator> gens, std::vector<Rule> rules,
                           std::optional<std::vector<Relation>> relations)
    : name_(std::move(name)), gens_(std::move(gens)) {
    std::set<std::string> seen;
    for (Generator& g : gens_) {
        if (g.name.empty()) throw std::invalid_argument("generator with empty name");
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name '" + g.name + "'");
        if (g.nilpotency && g.invertible)
            throw std::invalid_argument("generator '" + g.name +
                                        "' cannot be both nilpotent and invertible");
        if (g.nilpotency && *g.nilpotency < 2)
            throw std::invalid_argument("nilpotency order of '" + g.name + "' must be >= 2");
        g.grade = mod3(g.grade);
    }

    auto check_letter = [&](Letter l) {
        if (l.gen < 0 || l.gen >= static_cast<int>(gens_.size()))
            throw std::invalid_argument("rule refers to unknown generator index");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("bad letter sign");
        if (l.sign < 0 && !gens_[l.gen].invertible)
            throw std::invalid_argument("inverse of non-invertible generator '" +
                                        gens_[l.gen].name + "'");
    };

    for (Rule& r : rules) {
        if (r.lhs.size() < 2) throw std::invalid_argument("rule left-hand side needs >= 2 letters");
        for (Letter l : r.lhs) check_letter(l);
        for (const auto& [m, c] : r.rhs.terms())
            for (Letter l : m.letters()) check_letter(l);
        bool power = std::all_of(r.lhs.begin(), r.lhs.end(),
                                 [&](Letter l) { return l == r.lhs.front(); });
        if (power && (r.lhs.front().sign < 0 || gens_[r.lhs.front().gen].invertible))
            throw std::invalid_argument("power rules need a non-invertible generator");
        if (!power && r.lhs.size() != 2)
            throw std::invalid_argument("rule left-hand side must be a pair or a power");
        int lg = grade(Monomial::from_letters(r.lhs));
        for (const auto& [m, c] : r.rhs.terms())
            if (grade(m) != lg)
                throw std::invalid_argument("rule " + render_letters(r.lhs) +
                                            " has a right-hand side of the wrong grade");
        rules_.push_back(std::move(r));
    }
    user_rules_ = rules_.size();

    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_[i].nilpotency) continue;
        Letter g{static_cast<int>(i), 1};
        std::vector<Letter> lhs(static_cast<size_t>(*gens_[i].nilpotency), g);
        bool have = std::any_of(rules_.begin(), rules_.end(), [&](const Rule& r) {
            return r.lhs.size() >= 2 && r.lhs.front() == g &&
                   std::all_of(r.lhs.begin(), r.lhs.end(), [&](Letter l) { return l == g; });
        });
        if (!have) rules_.push_back(Rule{lhs, Poly{}});
    }
    size_t relation_rules = rules_.size();

    add_derived_rules();

    for (size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        if (r.lhs.size() == 2 && r.lhs[0] != r.lhs[1])
            pair_index_.try_emplace({r.lhs[0], r.lhs[1]}, i);
        else
            power_index_.try_emplace(r.lhs[0].gen, i);
    }

    if (relations) {
        relations_ = std::move(*relations);
    } else {
        for (size_t i = 0; i < relation_rules; ++i) {
            const Rule& r = rules_[i];
            Poly lhs(Monomial::from_letters(r.lhs));
            relations_.push_back(
                Relation{render_letters(r.lhs) + " = " + render(r.rhs), lhs - r.rhs});
        }
    }
}

// Pure swaps x y -> c y x involving invertible generators extend to inverse
// letters: x^s y^t -> c^(st) y^t x^s.
void Presentation::add_derived_rules() {
    std::set<std::pair<Letter, Letter>> have;
    for (const Rule& r : rules_)
        if (r.lhs.size() == 2) have.insert({r.lhs[0], r.lhs[1]});
    size_t n = rules_.size();
    for (size_t i = 0; i < n; ++i) {
        const Rule r = rules_[i];
        if (r.lhs.size() != 2 || r.lhs[0].gen == r.lhs[1].gen) continue;
        Letter x = r.lhs[0], y = r.lhs[1];
        if (x.sign != 1 || y.sign != 1) continue;
        if (!gens_[x.gen].invertible && !gens_[y.gen].invertible) continue;
        if (r.rhs.size() != 1) continue;
        const auto& [m, c] = *r.rhs.terms().begin();
        if (!(m == Monomial::from_letters({y, x}))) continue;
        for (int s : {1, -1}) {
            for (int t : {1, -1}) {
                if (s == 1 && t == 1) continue;
                if ((s < 0 && !gens_[x.gen].invertible) || (t < 0 && !gens_[y.gen].invertible))
                    continue;
                Letter xs{x.gen, s}, yt{y.gen, t};
                if (have.count({xs, yt})) continue;
                CycScalar coeff = s * t > 0 ? c : c.inv();
                rules_.push_back(Rule{{xs, yt}, Poly(Monomial::from_letters({yt, xs}), coeff)});
                have.insert({xs, yt});
            }
        }
    }
}

std::optional<int> Presentation::find(const std::string& gen_name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == gen_name) return static_cast<int>(i);
    return std::nullopt;
}

int Presentation::index(const std::string& gen_name) const {
    auto i = find(gen_name);
    if (!i) throw std::invalid_argument("unknown generator '" + gen_name + "' in " + name_);
    return *i;
}

Poly Presentation::gen(const std::string& gen_name, long exp) const { return gen(index(gen_name), exp); }

Poly Presentation::gen(int idx, long exp) const {
    if (idx < 0 || idx >= static_cast<int>(gens_.size()))
        throw std::invalid_argument("generator index out of range");
    if (exp < 0 && !gens_[idx].invertible)
        throw std::invalid_argument("negative power of non-invertible generator '" +
                                    gens_[idx].name + "'");
    std::vector<Letter> w(static_cast<size_t>(exp < 0 ? -exp : exp), Letter{idx, sign_of(exp)});
    return reduce_word(w);
}

int Presentation::grade(Letter l) const { return mod3(static_cast<long>(l.sign) * gens_.at(l.gen).grade); }

int Presentation::grade(const Monomial& m) const {
    long g = 0;
    for (const Syllable& s : m.syllables()) g += s.exp * gens_.at(s.gen).grade;
    return mod3(g);
}

std::optional<int> Presentation::grade_of(const Poly& x) const {
    std::optional<int> g;
    for (const auto& [m, c] : x.terms()) {
        int h = grade(m);
        if (g && *g != h) return std::nullopt;
        g = h;
    }
    return g.value_or(0);
}

const Rule* Presentation::pair_rule(Letter x, Letter y) const {
    auto it = pair_index_.find({x, y});
    return it == pair_index_.end() ? nullptr : &rules_[it->second];
}

const Rule* Presentation::power_rule(int g) const {
    auto it = power_index_.find(g);
    return it == power_index_.end() ? nullptr : &rules_[it->second];
}

Poly Presentation::times_rhs(const Monomial& prefix, const Poly& rhs, Counter& ctr) const {
    Poly out;
    for (const auto& [m, c] : rhs.terms()) {
        Poly cur(prefix);
        for (Letter l : m.letters()) cur = mul_letter(cur, l, ctr);
        out += cur * c;
    }
    return out;
}

Poly Presentation::mul_letter(const Monomial& m, Letter l, Counter& ctr) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache_.find({m, l});
        if (it != cache_.end()) return it->second;
    }
    Poly result;
    Monomial appended = m;
    appended.append(l);
    if (m.is_one()) {
        result = Poly(appended);
    } else {
        const Syllable& last = m.syllables().back();
        if (last.gen == l.gen) {
            const Rule* pr = power_rule(l.gen);
            if (sign_of(last.exp) == l.sign && pr &&
                last.exp + 1 == static_cast<long>(pr->lhs.size())) {
                ctr.tick();
                std::vector<Syllable> pre(m.syllables().begin(), m.syllables().end() - 1);
                result = times_rhs(Monomial(pre), pr->rhs, ctr);
            } else {
                result = Poly(appended);
            }
        } else if (const Rule* r = pair_rule(Letter{last.gen, sign_of(last.exp)}, l)) {
            ctr.tick();
            Monomial pre = m;
            pre.append(Letter{last.gen, -sign_of(last.exp)});
            result = times_rhs(pre, r->rhs, ctr);
        } else {
            result = Poly(appended);
        }
    }
    std::lock_guard lock(cache_mutex_);
    cache_.emplace(std::make_pair(m, l), result);
    return result;
}

Poly Presentation::mul_letter(const Poly& x, Letter l, Counter& ctr) const {
    Poly out;
    for (const auto& [m, c] : x.terms()) out += mul_letter(m, l, ctr) * c;
    return out;
}

Poly Presentation::reduce_impl(const Poly& words, Counter& ctr) const {
    Poly out;
    for (const auto& [m, c] : words.terms()) {
        Poly cur = one();
        for (Letter l : m.letters()) cur = mul_letter(cur, l, ctr);
        out += cur * c;
    }
    return out;
}

Poly Presentation::reduce(const Poly& words) const {
    Counter ctr{0, step_limit()};
    return reduce_impl(words, ctr);
}

Poly Presentation::reduce_word(const std::vector<Letter>& letters) const {
    Counter ctr{0, step_limit()};
    Poly cur = one();
    for (Letter l : letters) cur = mul_letter(cur, l, ctr);
    return cur;
}

Poly Presentation::mul(const Poly& x, const Poly& y) const {
    Counter ctr{0, step_limit()};
    Poly out;
    for (const auto& [m, c] : y.terms()) {
        Poly cur = x;
        for (Letter l : m.letters()) cur = mul_letter(cur, l, ctr);
        out += cur * c;
    }
    return out;
}

Poly Presentation::pow(const Poly& x, unsigned n) const {
    Poly r = one();
    for (unsigned i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

Poly Presentation::commutator(const Poly& x, const Poly& y, const CycScalar& c) const {
    return mul(x, y) - mul(y, x) * c;
}

bool Presentation::can_append(const Monomial& m, Letter l) const {
    if (m.is_one()) return true;
    const Syllable& last = m.syllables().back();
    if (last.gen == l.gen) {
        if (sign_of(last.exp) != l.sign) return false;
        const Rule* pr = power_rule(l.gen);
        return !(pr && last.exp + 1 >= static_cast<long>(pr->lhs.size()));
    }
    return pair_rule(Letter{last.gen, sign_of(last.exp)}, l) == nullptr;
}

bool Presentation::is_normal(const Monomial& m) const {
    Monomial acc;
    for (Letter l : m.letters()) {
        if (!can_append(acc, l)) return false;
        acc.append(l);
    }
    return true;
}

std::vector<Monomial> Presentation::normal_monomials(int degree) const {
    std::vector<Letter> alphabet;
    for (size_t i = 0; i < gens_.size(); ++i) {
        alphabet.push_back(Letter{static_cast<int>(i), 1});
        if (gens_[i].invertible) alphabet.push_back(Letter{static_cast<int>(i), -1});
    }
    std::vector<Monomial> out;
    std::function<void(const Monomial&, int)> walk = [&](const Monomial& m, int left) {
        if (left == 0) {
            out.push_back(m);
            return;
        }
        for (Letter l : alphabet) {
            if (!can_append(m, l)) continue;
            Monomial next = m;
            next.append(l);
            walk(next, left - 1);
        }
    };
    walk(Monomial{}, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> Presentation::dimension_census(int max_degree) const {
    if (max_degree < 0) throw std::invalid_argument("census degree must be >= 0");
    std::vector<long> counts;
    for (int d = 0; d <= max_degree; ++d) counts.push_back(static_cast<long>(normal_monomials(d).size()));
    return counts;
}

ConfluenceReport Presentation::check_local_confluence() const {
    struct Lhs {
        std::vector<Letter> w;
        const Poly* rhs;
        size_t id;
    };
    static const Poly kOne(CycScalar(1));
    std::vector<Lhs> all;
    for (size_t i = 0; i < rules_.size(); ++i) all.push_back(Lhs{rules_[i].lhs, &rules_[i].rhs, i});
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_[i].invertible) continue;
        int g = static_cast<int>(i);
        all.push_back(Lhs{{Letter{g, 1}, Letter{g, -1}}, &kOne, all.size()});
        all.push_back(Lhs{{Letter{g, -1}, Letter{g, 1}}, &kOne, all.size()});
    }

    auto rewrite = [&](const std::vector<Letter>& word, size_t pos, size_t len, const Poly& rhs) {
        Poly out;
        for (const auto& [m, c] : rhs.terms()) {
            std::vector<Letter> w(word.begin(), word.begin() + static_cast<long>(pos));
            for (Letter l : m.letters()) w.push_back(l);
            w.insert(w.end(), word.begin() + static_cast<long>(pos + len), word.end());
            out += reduce_word(w) * c;
        }
        return out;
    };

    ConfluenceReport rep;
    auto record = [&](std::vector<Letter> word, const Lhs& a, size_t pa, const Lhs& b, size_t pb) {
        Poly left = rewrite(word, pa, a.w.size(), *a.rhs);
        Poly right = rewrite(word, pb, b.w.size(), *b.rhs);
        Ambiguity amb{std::move(word), a.id, b.id, left - right};
        if (!amb.residue.is_zero()) rep.pass = false;
        rep.ambiguities.push_back(std::move(amb));
    };

    for (const Lhs& a : all) {
        for (const Lhs& b : all) {
            size_t la = a.w.size(), lb = b.w.size();
            for (size_t k = 1; k < la && k < lb; ++k) {
                if (!std::equal(a.w.end() - static_cast<long>(k), a.w.end(), b.w.begin())) continue;
                std::vector<Letter> word = a.w;
                word.insert(word.end(), b.w.begin() + static_cast<long>(k), b.w.end());
                record(std::move(word), a, 0, b, la - k);
            }
            if (a.id == b.id || lb > la || (lb == la && a.id > b.id)) continue;
            for (size_t p = 0; p + lb <= la; ++p) {
                if (!std::equal(b.w.begin(), b.w.end(), a.w.begin() + static_cast<long>(p))) continue;
                record(a.w, a, 0, b, p);
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------- rendering

namespace {

// Sign and body of a coefficient; the body is empty for a unit coefficient.
std::pair<bool, std::string> coefficient_parts(const CycScalar& c) {
    const mpq_class& a0 = c.a0();
    const mpq_class& a1 = c.a1();
    auto scaled = [](const mpq_class& r, const std::string& sym) {
        return r == 1 ? sym : rational_str(r) + "*" + sym;
    };
    if (sgn(a1) == 0) return {sgn(a0) < 0, rational_str(abs(a0))};
    if (sgn(a0) == 0) return {sgn(a1) < 0, scaled(abs(a1), "q")};
    if (a0 == a1) return {sgn(a0) > 0, scaled(abs(a0), "q^2")};  // a0(1 + q) = -a0 q^2
    bool neg = sgn(a1) < 0;
    mpq_class b1 = neg ? mpq_class(-a1) : a1;
    mpq_class b0 = neg ? mpq_class(-a0) : a0;
    std::string body = "(" + scaled(b1, "q") + (sgn(b0) > 0 ? " + " : " - ") + rational_str(abs(b0)) + ")";
    return {neg, body};
}

}  // namespace

std::string render_term_coefficient(const CycScalar& c, bool leading, bool unit_monomial) {
    auto [neg, body] = coefficient_parts(c);
    std::string out = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (body == "1") return unit_monomial ? out + "1" : out;
    return out + body + (unit_monomial ? "" : "*");
}

std::string Presentation::render(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string out;
    for (const Syllable& s : m.syllables()) {
        if (!out.empty()) out += "*";
        out += gens_.at(s.gen).name;
        if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
}

std::string Presentation::render_letters(const std::vector<Letter>& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (Letter l : w) {
        if (!out.empty()) out += "*";
        out += gens_.at(l.gen).name;
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

std::string Presentation::render(const Poly& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        out += render_term_coefficient(c, first, m.is_one());
        if (!m.is_one()) out += render(m);
        first = false;
    }
    return out;
}

}  // namespace z3qg
