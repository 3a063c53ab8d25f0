#pragma once

#include <iosfwd>
#include <string>

#include "fiblab/rational.hpp"

namespace fiblab {

/// Exact element p + q*sqrt(5) of the field Q(sqrt5).
///
/// sign(), floor() and all comparisons are decided by exact integer
/// arithmetic (comparing p^2 against 5 q^2), never by floating
/// approximation, so integer boundary hits such as phi*(phi-1) == 1
/// are classified correctly.
class QuadraticReal {
public:
    QuadraticReal() = default;
    QuadraticReal(long n) : p_(n) {}
    QuadraticReal(const Rational& p) : p_(p) {}
    QuadraticReal(const Rational& p, const Rational& q) : p_(p), q_(q) {}

    static QuadraticReal sqrt5() { return {Rational(0), Rational(1)}; }
    /// phi = (1 + sqrt5)/2
    static QuadraticReal phi() { return {Rational(1, 2), Rational(1, 2)}; }
    /// psi = 1 - phi = (1 - sqrt5)/2
    static QuadraticReal psi() { return {Rational(1, 2), Rational(-1, 2)}; }

    const Rational& rational_part() const { return p_; }
    const Rational& sqrt5_coeff() const { return q_; }
    bool is_rational() const { return q_.is_zero(); }
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    QuadraticReal operator-() const { return {-p_, -q_}; }
    QuadraticReal& operator+=(const QuadraticReal& o);
    QuadraticReal& operator-=(const QuadraticReal& o);
    QuadraticReal& operator*=(const QuadraticReal& o);
    QuadraticReal& operator/=(const QuadraticReal& o);

    friend QuadraticReal operator+(QuadraticReal a, const QuadraticReal& b) { return a += b; }
    friend QuadraticReal operator-(QuadraticReal a, const QuadraticReal& b) { return a -= b; }
    friend QuadraticReal operator*(QuadraticReal a, const QuadraticReal& b) { return a *= b; }
    friend QuadraticReal operator/(QuadraticReal a, const QuadraticReal& b) { return a /= b; }

    /// Field conjugate p - q*sqrt5.
    QuadraticReal conjugate() const { return {p_, -q_}; }
    QuadraticReal inverse() const;
    QuadraticReal pow(long e) const;
    QuadraticReal abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact sign of the real value: -1, 0, or +1.
    int sign() const;

    /// Exact floor; see floor_impl notes in quadratic.cpp.
    mpz_class floor() const;
    QuadraticReal frac() const { return *this - QuadraticReal(Rational(floor())); }

    friend bool operator==(const QuadraticReal& a, const QuadraticReal& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;  // representation is unique
    }
    friend bool operator!=(const QuadraticReal& a, const QuadraticReal& b) { return !(a == b); }
    friend bool operator<(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadraticReal& a, const QuadraticReal& b) { return (a - b).sign() >= 0; }

    /// "p", "q*sqrt5", or "p + q*sqrt5" with exact rational components.
    std::string to_string() const;

    /// Fixed-point decimal, rounded half-up at `digits` places; rounding is
    /// decided by the exact floor, so it is correct even at ties.
    std::string decimal_string(unsigned digits) const;

    double to_double() const;

private:
    Rational p_, q_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticReal& x);

}  // namespace fiblab
