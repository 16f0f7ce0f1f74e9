#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace z3qg {

// Element a0 + a1*q of the cyclotomic field Q(q), q^2 + q + 1 = 0.
// Both components are kept as canonical GMP rationals, so equality is
// field equality.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(long v) : a0_(v) {}  // NOLINT(google-explicit-constructor)
    CycScalar(mpq_class a0, mpq_class a1 = 0);

    static CycScalar q() { return {0, 1}; }
    static CycScalar lambda();  // q - q^2

    const mpq_class& a0() const { return a0_; }
    const mpq_class& a1() const { return a1_; }

    bool is_zero() const { return sgn(a0_) == 0 && sgn(a1_) == 0; }
    bool is_one() const { return a0_ == 1 && sgn(a1_) == 0; }
    bool is_rational() const { return sgn(a1_) == 0; }

    CycScalar operator-() const { return {-a0_, -a1_}; }
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar x, const CycScalar& y) { return x += y; }
    friend CycScalar operator-(CycScalar x, const CycScalar& y) { return x -= y; }
    friend CycScalar operator*(CycScalar x, const CycScalar& y) { return x *= y; }
    friend CycScalar operator/(CycScalar x, const CycScalar& y) { return x /= y; }
    friend bool operator==(const CycScalar& x, const CycScalar& y) {
        return x.a0_ == y.a0_ && x.a1_ == y.a1_;
    }
    friend bool operator!=(const CycScalar& x, const CycScalar& y) { return !(x == y); }

    // Galois conjugation q -> q^2 (complex conjugation on the unit circle).
    CycScalar conj() const { return {a0_ - a1_, -a1_}; }
    // N(x) = x * conj(x) = a0^2 - a0*a1 + a1^2.
    mpq_class norm() const;
    // Throws std::domain_error on zero.
    CycScalar inv() const;

    // "a0 + a1*q"; rationals as "p/r".
    std::string str() const;
    // Parses sums of rational multiples of q^k, e.g. "-1/2 + 3*q", "q^2", "2 - q".
    static CycScalar parse(std::string_view text);

private:
    mpq_class a0_{0};
    mpq_class a1_{0};
};

CycScalar cyc_add(const CycScalar& x, const CycScalar& y);
CycScalar cyc_mul(const CycScalar& x, const CycScalar& y);
CycScalar cyc_inv(const CycScalar& x);
CycScalar cyc_conj(const CycScalar& x);

// q^(k mod 3), defined for every integer k.
CycScalar q_power(long k);

// Z3 residue in {0, 1, 2}.
inline int mod3(long k) {
    long r = k % 3;
    return static_cast<int>(r < 0 ? r + 3 : r);
}

std::string rational_str(const mpq_class& r);

}  // namespace z3qg
