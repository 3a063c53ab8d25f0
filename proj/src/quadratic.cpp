#include "fiblab/quadratic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace fiblab {

QuadraticReal& QuadraticReal::operator+=(const QuadraticReal& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadraticReal& QuadraticReal::operator-=(const QuadraticReal& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadraticReal& QuadraticReal::operator*=(const QuadraticReal& o) {
    // (p1 + q1 s)(p2 + q2 s) = (p1 p2 + 5 q1 q2) + (p1 q2 + p2 q1) s
    const Rational p = p_ * o.p_ + Rational(5) * (q_ * o.q_);
    const Rational q = p_ * o.q_ + o.p_ * q_;
    p_ = p;
    q_ = q;
    return *this;
}

QuadraticReal QuadraticReal::inverse() const {
    // 1/(p + q s) = (p - q s)/(p^2 - 5 q^2); the norm vanishes only at 0
    const Rational norm = p_ * p_ - Rational(5) * (q_ * q_);
    if (norm.is_zero()) throw std::domain_error("QuadraticReal: inverse of zero");
    return {p_ / norm, -q_ / norm};
}

QuadraticReal& QuadraticReal::operator/=(const QuadraticReal& o) {
    return *this *= o.inverse();
}

QuadraticReal QuadraticReal::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadraticReal base = *this, acc = QuadraticReal(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

int QuadraticReal::sign() const {
    const int sp = p_.sign(), sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 with 5 q^2 (they cannot be equal since
    // sqrt5 is irrational and p, q are nonzero rationals)
    const Rational pp = p_ * p_, qq5 = Rational(5) * (q_ * q_);
    if (sp > 0) return pp > qq5 ? 1 : -1;
    return qq5 > pp ? 1 : -1;
}

namespace {

// floor(B * sqrt5) for integer B, exact via integer square root.
mpz_class floor_sqrt5_multiple(const mpz_class& b) {
    if (b == 0) return 0;
    mpz_class s, sq = 5 * b * b;
    mpz_sqrt(s.get_mpz_t(), sq.get_mpz_t());
    // b > 0: B*sqrt5 lies in [s, s+1); b < 0: floor(-y) = -floor(y) - 1
    // because y is irrational for b != 0
    return b > 0 ? s : -s - 1;
}

}  // namespace

mpz_class QuadraticReal::floor() const {
    if (q_.is_zero()) return p_.floor();

    // Bring to (A + B*sqrt5)/C with integers A, B and C > 0.
    const mpz_class C = p_.den() * q_.den();
    const mpz_class A = p_.num() * q_.den();
    const mpz_class B = q_.num() * p_.den();

    // A + B*sqrt5 is in [A+s, A+s+1), an interval of length 1, so x is in
    // [(A+s)/C, (A+s+1)/C) and the floor is n0 or n0+1.
    const mpz_class s = floor_sqrt5_multiple(B);
    mpz_class n0;
    mpz_class as = A + s;
    mpz_fdiv_q(n0.get_mpz_t(), as.get_mpz_t(), C.get_mpz_t());

    const QuadraticReal upper = *this - QuadraticReal(Rational(mpz_class(n0 + 1)));
    return upper.sign() >= 0 ? n0 + 1 : n0;
}

std::string QuadraticReal::to_string() const {
    if (q_.is_zero()) return p_.to_string();
    const std::string qs = q_.to_string() + "*sqrt5";
    if (p_.is_zero()) return qs;
    if (q_.sign() < 0) return p_.to_string() + " - " + (-q_).to_string() + "*sqrt5";
    return p_.to_string() + " + " + qs;
}

std::string QuadraticReal::decimal_string(unsigned digits) const {
    if (q_.is_zero()) return p_.decimal_string(digits);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const QuadraticReal scaled =
        *this * QuadraticReal(Rational(scale)) + QuadraticReal(Rational(1, 2));
    mpz_class m = scaled.floor();

    const bool neg = m < 0;
    if (neg) m = -m;
    std::string str = m.get_str();
    if (digits == 0) return (neg ? "-" : "") + str;
    if (str.size() <= digits) str.insert(0, digits + 1 - str.size(), '0');
    str.insert(str.size() - digits, ".");
    return (neg ? "-" : "") + str;
}

double QuadraticReal::to_double() const {
    return p_.to_double() + q_.to_double() * std::sqrt(5.0);
}

std::ostream& operator<<(std::ostream& os, const QuadraticReal& x) {
    return os << x.to_string();
}

}  // namespace fiblab
