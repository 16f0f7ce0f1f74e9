#include "z3qg/scalar.hpp"

#include <cctype>
#include <sstream>

namespace z3qg {

CycScalar::CycScalar(mpq_class a0, mpq_class a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
    a0_.canonicalize();
    a1_.canonicalize();
}

CycScalar CycScalar::lambda() { return q() - q() * q(); }

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    a0_ += o.a0_;
    a1_ += o.a1_;
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    a0_ -= o.a0_;
    a1_ -= o.a1_;
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    // (a + bq)(c + dq) = ac + (ad + bc)q + bd q^2, with q^2 = -1 - q
    mpq_class bd = a1_ * o.a1_;
    mpq_class r0 = a0_ * o.a0_ - bd;
    mpq_class r1 = a0_ * o.a1_ + a1_ * o.a0_ - bd;
    a0_ = std::move(r0);
    a1_ = std::move(r1);
    return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inv(); }

mpq_class CycScalar::norm() const { return a0_ * a0_ - a0_ * a1_ + a1_ * a1_; }

CycScalar CycScalar::inv() const {
    if (is_zero()) throw std::domain_error("CycScalar: division by zero");
    mpq_class n = norm();
    CycScalar c = conj();
    return {c.a0_ / n, c.a1_ / n};
}

std::string rational_str(const mpq_class& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string CycScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(a0_) != 0) out = rational_str(a0_);
    if (sgn(a1_) != 0) {
        mpq_class mag = abs(a1_);
        std::string term = mag == 1 ? "q" : rational_str(mag) + "*q";
        if (out.empty())
            out = sgn(a1_) < 0 ? "-" + term : term;
        else
            out += (sgn(a1_) < 0 ? " - " : " + ") + term;
    }
    return out;
}

namespace {

struct ScalarLexer {
    std::string_view s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse scalar '" + std::string(s) + "' at " +
                                    std::to_string(pos) + ": " + what);
    }
    std::string digits() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

// term := [rational ['*']] ['q' ['^' int]] | rational
CycScalar parse_term(ScalarLexer& lx) {
    CycScalar coeff = 1;
    bool have_number = false;
    std::string num = lx.digits();
    if (!num.empty()) {
        mpq_class r(num);
        if (lx.eat('/')) {
            std::string den = lx.digits();
            if (den.empty() || den == "0") lx.fail("bad denominator");
            r = mpq_class(num + "/" + den);
            r.canonicalize();
        }
        coeff = CycScalar(r);
        have_number = true;
        lx.eat('*');
    }
    lx.skip();
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == 'q') {
        ++lx.pos;
        long k = 1;
        if (lx.eat('^')) {
            bool neg = lx.eat('-');
            std::string e = lx.digits();
            if (e.empty()) lx.fail("missing exponent");
            k = std::stol(e) * (neg ? -1 : 1);
        }
        return coeff * q_power(k);
    }
    if (!have_number) lx.fail("expected number or q");
    return coeff;
}

}  // namespace

CycScalar CycScalar::parse(std::string_view text) {
    ScalarLexer lx{text};
    CycScalar acc;
    bool first = true;
    while (!lx.at_end()) {
        int sign = 1;
        if (lx.eat('-'))
            sign = -1;
        else if (!lx.eat('+') && !first)
            lx.fail("expected + or -");
        CycScalar t = parse_term(lx);
        acc += sign > 0 ? t : -t;
        first = false;
    }
    if (first) lx.fail("empty input");
    return acc;
}

CycScalar cyc_add(const CycScalar& x, const CycScalar& y) { return x + y; }
CycScalar cyc_mul(const CycScalar& x, const CycScalar& y) { return x * y; }
CycScalar cyc_inv(const CycScalar& x) { return x.inv(); }
CycScalar cyc_conj(const CycScalar& x) { return x.conj(); }

CycScalar q_power(long k) {
    switch (mod3(k)) {
        case 0: return 1;
        case 1: return CycScalar::q();
        default: return {-1, -1};
    }
}

}  // namespace z3qg
