#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiblab/quadratic.hpp"
#include "fiblab/rational.hpp"

namespace fiblab {

/// The two Fibonacci indexings used by the literature this library covers.
///   Classic:  F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}
///   Shifted:  F_0 = F_1 = 1, F_{k+1} = F_k + F_{k-1}
/// Conversion law: Shifted(n) == Classic(n+1) for all n >= 0.
enum class FibConvention { Classic, Shifted };

std::string to_string(FibConvention conv);
FibConvention convention_from_string(const std::string& s);

/// F_n under the given convention, by fast doubling.
mpz_class fib(std::uint64_t n, FibConvention conv = FibConvention::Classic);

/// Generalized Fibonacci number of order r with seeds t_0 = ... = t_{r-2} = 0,
/// t_{r-1} = 1 and t_n = t_{n-1} + ... + t_{n-r}. Requires r >= 2.
mpz_class order_r_fib(std::uint32_t r, std::uint64_t n);

/// Least period pi > 0 with (F_pi, F_{pi+1}) == (0, 1) mod m, Classic indexing.
std::uint64_t pisano_period(std::uint64_t m);

/// Sorted set of residues {F_n mod m : n >= 0}, scanned over one Pisano period.
std::vector<std::uint64_t> fib_residues(std::uint64_t m);

/// Euler totient by trial-division factorization.
std::uint64_t totient(std::uint64_t n);

/// First `count` convergents of sqrt5 = [2; 4, 4, 4, ...].
std::vector<Rational> sqrt5_convergents(std::size_t count);

}  // namespace fiblab
