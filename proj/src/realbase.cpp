#include "fiblab/realbase.hpp"

#include <stdexcept>

#include "fiblab/fibcore.hpp"

namespace fiblab {

ThetaExpansion theta_digits(const RealValue& alpha, const RealValue& theta, std::size_t n) {
    if (alpha.sign() < 0 || (alpha - RealValue(1)).sign() >= 0)
        throw std::invalid_argument("theta_digits: alpha must lie in [0, 1)");
    if ((theta - RealValue(1)).sign() <= 0)
        throw std::invalid_argument("theta_digits: base theta must exceed 1");

    ThetaExpansion exp{alpha, theta, {}, {}};
    exp.digits.reserve(n);
    exp.remainders.reserve(n);
    RealValue x = alpha;
    for (std::size_t k = 1; k <= n; ++k) {
        const RealValue t = theta * x;
        mpz_class digit = t.floor();
        x = t - RealValue(Rational(digit));
        exp.digits.push_back(std::move(digit));
        exp.remainders.push_back(x);
    }
    return exp;
}

RealValue theta_partial_sum(const ThetaExpansion& exp, std::size_t n) {
    if (n > exp.digits.size())
        throw std::invalid_argument("theta_partial_sum: prefix exceeds digit count");
    RealValue sum(0);
    RealValue power(1);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * exp.theta;
        sum += RealValue(Rational(exp.digits[k - 1])) / power;
    }
    return sum;
}

FibFractionRep fib_fraction_digits(const RealValue& a, std::size_t n) {
    if (a.sign() < 0) throw std::invalid_argument("fib_fraction_digits: value must be >= 0");

    FibFractionRep rep{a, a.floor(), {}, {}};
    rep.digits.reserve(n);
    rep.remainders.reserve(n);
    RealValue x = a.frac();
    mpz_class f_prev = 1;  // F_0 (Shifted)
    mpz_class f_cur = 1;   // F_1
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            mpz_class f_next = f_cur + f_prev;
            f_prev = f_cur;
            f_cur = f_next;
        }
        // lambda_k = floor(F_k / F_{k-1} * x_{k-1}); the ratio stays <= 2 and
        // x < 1 strictly, so the digit is 0 or 1
        const RealValue t = x * RealValue(Rational(f_cur, f_prev));
        const mpz_class digit = t.floor();
        x = t - RealValue(Rational(digit));
        rep.digits.push_back(static_cast<int>(digit.get_si()));
        rep.remainders.push_back(x);
    }
    return rep;
}

RealValue fib_fraction_partial(const FibFractionRep& rep, std::size_t n) {
    if (n > rep.digits.size())
        throw std::invalid_argument("fib_fraction_partial: prefix exceeds digit count");
    RealValue sum{Rational(rep.integer_part)};
    mpz_class f_prev = 1, f_cur = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            mpz_class f_next = f_cur + f_prev;
            f_prev = f_cur;
            f_cur = f_next;
        }
        if (rep.digits[k - 1] != 0) sum += RealValue(Rational(rep.digits[k - 1], f_cur));
    }
    return sum;
}

}  // namespace fiblab
