#include "fiblab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fiblab {

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: 0^negative");
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal_string(unsigned digits) const {
    // round-half-up: floor(x * 10^digits + 1/2), then re-insert the point
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Rational scaled = *this * Rational(scale) + Rational(1, 2);
    mpz_class m = scaled.floor();

    const bool neg = m < 0;
    if (neg) m = -m;
    std::string s = m.get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace fiblab
