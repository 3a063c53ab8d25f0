#pragma once

#include <cstdint>
#include <vector>

#include "fiblab/quadratic.hpp"

namespace fiblab {

/// Exact real value used by the digit-expansion routines. Rationals embed
/// as the sqrt5-coefficient-zero case; every operation and comparison on
/// the type is exact.
using RealValue = QuadraticReal;

/// Base-theta expansion of alpha in [0,1) for an exact base theta > 1:
/// digits lambda_k = floor(theta * x_{k-1}), remainders x_k the fractional
/// parts, x_0 = alpha. Invariants: 0 <= lambda_k < theta (integers) and
/// 0 <= x_k < 1; the partial sums A_n = sum_{k<=n} lambda_k / theta^k
/// satisfy 0 <= alpha - A_n < theta^{-n}.
struct ThetaExpansion {
    RealValue alpha;
    RealValue theta;
    std::vector<mpz_class> digits;    // lambda_1 .. lambda_n
    std::vector<RealValue> remainders;  // x_1 .. x_n
};

ThetaExpansion theta_digits(const RealValue& alpha, const RealValue& theta, std::size_t n);

/// Exact A_n for a prefix of the expansion; n <= digit count.
RealValue theta_partial_sum(const ThetaExpansion& exp, std::size_t n);

/// Fibonacci-denominator representation of a >= 0: integer part a_0 plus
/// digits alpha_k in {0,1} over 1/F_k with the Shifted convention
/// (F_0 = F_1 = 1, so the ratio F_n/F_{n-1} never exceeds 2 and digits are
/// binary). The partial sums satisfy 0 <= a - A_n < 1/F_n.
struct FibFractionRep {
    RealValue value;
    mpz_class integer_part;
    std::vector<int> digits;            // alpha_1 .. alpha_n, each 0 or 1
    std::vector<RealValue> remainders;  // x_1 .. x_n
};

FibFractionRep fib_fraction_digits(const RealValue& a, std::size_t n);

/// Exact A_n = a_0 + sum_{k<=n} alpha_k / F_k; n <= digit count.
RealValue fib_fraction_partial(const FibFractionRep& rep, std::size_t n);

}  // namespace fiblab
