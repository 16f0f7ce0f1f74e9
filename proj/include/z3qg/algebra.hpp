#pragma once

#include "z3qg/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace z3qg {

// A generator occurrence; sign -1 is the formal inverse of an invertible generator.
struct Letter {
    int gen = 0;
    int sign = 1;
    auto operator<=>(const Letter&) const = default;
};

struct Syllable {
    int gen = 0;
    long exp = 0;
    auto operator<=>(const Syllable&) const = default;
};

// Reduced word g1^e1 g2^e2 ... with adjacent generators distinct and exponents
// nonzero. Normal forms of ordered presentations are exponent-ordered words
// a^i beta^j gamma^k d^l; free presentations keep arbitrary words.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Syllable> syllables);
    static Monomial from_letters(const std::vector<Letter>& letters);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_one() const { return syl_.empty(); }
    long degree() const;  // number of letters
    std::vector<Letter> letters() const;

    // Free-group concatenation (cancels g g^-1, merges powers); no rewriting.
    Monomial& append(Letter l);
    Monomial times(const Monomial& other) const;
    Monomial reversed() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Degree first, then lexicographic on syllables.
    friend bool operator<(const Monomial& x, const Monomial& y);

private:
    std::vector<Syllable> syl_;
};

// Finite linear combination of monomials with nonzero CycScalar coefficients.
class Poly {
public:
    using Terms = std::map<Monomial, CycScalar>;

    Poly() = default;
    Poly(const CycScalar& c);  // NOLINT(google-explicit-constructor)
    explicit Poly(Monomial m, CycScalar c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    // Coefficient of the empty word.
    CycScalar constant_term() const;
    CycScalar coeff(const Monomial& m) const;
    // True when the polynomial is a scalar multiple of 1 (including 0).
    bool is_scalar() const;
    long max_degree() const;

    void add_term(const Monomial& m, const CycScalar& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const CycScalar& c);
    Poly operator-() const;

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(Poly x, const CycScalar& c) { return x *= c; }
    friend Poly operator*(const CycScalar& c, Poly x) { return x *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    // Map each coefficient through q -> q^2.
    Poly conj() const;

private:
    Terms terms_;
};

struct Generator {
    std::string name;
    int grade = 0;
    std::optional<int> nilpotency;  // g^m = 0
    bool invertible = false;
};

// LHS -> RHS. The LHS is either a pair of letters or a power g^m.
struct Rule {
    std::vector<Letter> lhs;
    Poly rhs;
};

// A defining relation: an element of the free algebra that must vanish.
struct Relation {
    std::string label;
    Poly element;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

struct Ambiguity {
    std::vector<Letter> word;
    size_t rule_a = 0;
    size_t rule_b = 0;
    Poly residue;  // difference of the two resolutions, zero when resolvable
};

struct ConfluenceReport {
    bool pass = true;
    std::vector<Ambiguity> ambiguities;
};

class RewriteLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Z3-graded algebra given by generators and a rewriting system. Immutable after
// construction; reductions are memoized behind an internal mutex.
class Presentation {
public:
    static constexpr long kDefaultMaxSteps = 1'000'000;

    Presentation(std::string name, std::vector<Generator> gens, std::vector<Rule> rules,
                 std::optional<std::vector<Relation>> relations = std::nullopt);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return gens_; }
    // User-supplied rules followed by derived ones (inverse swaps, nilpotency).
    const std::vector<Rule>& rules() const { return rules_; }
    size_t user_rule_count() const { return user_rules_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::optional<int> find(const std::string& gen_name) const;
    int index(const std::string& gen_name) const;  // throws on unknown name

    long max_steps() const { return max_steps_; }
    void set_max_steps(long n) { max_steps_ = n; }
    // Process-wide cap applied on top of max_steps(), for shared catalog presentations.
    static void set_global_step_limit(long n);
    static long global_step_limit();

    Poly one() const { return Poly(CycScalar(1)); }
    Poly gen(const std::string& gen_name, long exp = 1) const;
    Poly gen(int idx, long exp = 1) const;

    int grade(const Monomial& m) const;
    int grade(Letter l) const;
    // Common grade of all terms; nullopt for inhomogeneous input. grade_of(0) = 0.
    std::optional<int> grade_of(const Poly& x) const;

    // Normal form of an arbitrary (unreduced) polynomial.
    Poly reduce(const Poly& words) const;
    Poly reduce_word(const std::vector<Letter>& letters) const;
    // Product of two polynomials, result in normal form.
    Poly mul(const Poly& x, const Poly& y) const;
    Poly pow(const Poly& x, unsigned n) const;
    Poly commutator(const Poly& x, const Poly& y, const CycScalar& c = 1) const;  // xy - c*yx

    bool is_normal(const Monomial& m) const;
    ConfluenceReport check_local_confluence() const;
    std::vector<long> dimension_census(int max_degree) const;
    // All normal monomials of exactly the given degree (letters count).
    std::vector<Monomial> normal_monomials(int degree) const;

    std::string render(const Poly& x) const;
    std::string render(const Monomial& m) const;
    std::string render_letters(const std::vector<Letter>& w) const;

private:
    struct Counter {
        long steps = 0;
        long limit = 0;
        void tick();
    };

    long step_limit() const;
    const Rule* pair_rule(Letter x, Letter y) const;
    const Rule* power_rule(int gen) const;
    Poly mul_letter(const Monomial& m, Letter l, Counter& ctr) const;
    Poly mul_letter(const Poly& x, Letter l, Counter& ctr) const;
    Poly times_rhs(const Monomial& prefix, const Poly& rhs, Counter& ctr) const;
    Poly reduce_impl(const Poly& words, Counter& ctr) const;
    void add_derived_rules();
    bool can_append(const Monomial& m, Letter l) const;

    std::string name_;
    std::vector<Generator> gens_;
    std::vector<Rule> rules_;
    size_t user_rules_ = 0;
    std::vector<Relation> relations_;
    std::map<std::pair<Letter, Letter>, size_t> pair_index_;
    std::map<int, size_t> power_index_;
    long max_steps_ = kDefaultMaxSteps;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<Monomial, Letter>, Poly> cache_;
};

// Coefficient in front of a monomial, e.g. "", "-", "q*", "-(q - 1)*"; `leading`
// controls whether a positive sign is written as " + ".
std::string render_term_coefficient(const CycScalar& c, bool leading, bool unit_monomial);

}  // namespace z3qg
