#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fiblab/rational.hpp"

namespace fiblab {

/// SplitMix64: the documented, portable sign generator. Fixed output
/// sequence on every platform, so seeded runs reproduce bit-for-bit.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// Per-walk seed: the (index+1)-th output of SplitMix64 seeded with the
/// master seed. Walks are therefore independent of evaluation order.
std::uint64_t walk_seed(std::uint64_t master_seed, std::uint64_t walk_index);

/// One random Fibonacci trajectory t_1 = t_2 = 1,
/// t_k = s1 * t_{k-1} + s2 * t_{k-2} with independent fair signs.
struct SignWalk {
    std::uint64_t seed = 0;
    std::vector<mpz_class> values;  // t_1 .. t_n
};

/// Sign source: returns the (s1, s2) pair for one step, each +1 or -1.
using SignSource = std::function<std::pair<int, int>()>;

/// Walk driven by an explicit sign source (tests use forced streams).
SignWalk walk_from_signs(std::uint64_t n, const SignSource& signs);

/// Seeded walk: each step draws one SplitMix64 value; bit 0 gives s1 and
/// bit 1 gives s2. Pure function of (n, seed).
SignWalk simulate_walk(std::uint64_t n, std::uint64_t seed);

struct LyapunovEstimate {
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t zero_terminal_count = 0;  // walks with t_n == 0, excluded
    std::uint64_t included = 0;
    double mean_log = 0.0;   // mean of (1/n) ln|t_n| over included walks
    double std_error = 0.0;  // standard error of that mean
    double estimate = 0.0;   // e^{mean_log}, the n-th-root growth estimate
};

/// Monte Carlo estimate of lim |t_n|^{1/n}. Deterministic function of
/// (n, trials, master_seed): per-walk statistics are merged in walk order
/// no matter how many worker threads run. threads == 0 picks a default.
LyapunovEstimate estimate_viswanath(std::uint64_t n, std::uint64_t trials,
                                    std::uint64_t master_seed, unsigned threads = 0);

/// Exact distribution of the pair (t_{k-1}, t_k) at one level, as reduced
/// rationals. Probabilities sum to 1 exactly; every denominator divides
/// 4^{level-2} (each step branches into 4 equiprobable sign choices, and
/// reduction can only shrink the power of two).
class ExpectationTable {
public:
    static ExpectationTable initial();  // level 2: (t_1, t_2) = (1, 1)

    void step();  // advance one level, merging equal pairs

    std::uint64_t level() const { return level_; }
    std::size_t state_count() const { return states_.size(); }
    const std::map<std::pair<std::int64_t, std::int64_t>, Rational>& states() const {
        return states_;
    }

    Rational probability_sum() const;
    /// E(|t_level|), exact.
    Rational expected_abs() const;

private:
    std::uint64_t level_ = 2;
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> states_;
};

inline constexpr std::uint64_t kExpectationCap = 24;

/// Exact E(|t_n|) by the pair dynamic program. Requires 3 <= n <= cap;
/// the cap bounds the state-table memory.
Rational exact_expectation(std::uint64_t n, std::uint64_t cap = kExpectationCap);

/// Bisection bracket for the only real root of x^3 - 2x^2 - 1 (it lies in
/// [2, 3]); hi - lo <= tolerance on return and the midpoint is within
/// tolerance/2 of the root.
struct RootBracket {
    Rational lo;
    Rational hi;
    Rational mid() const { return (lo + hi) / Rational(2); }
};

RootBracket rittaud_root(const Rational& tolerance);

/// x^3 - 2x^2 - 1, exact.
Rational rittaud_poly(const Rational& x);

}  // namespace fiblab
