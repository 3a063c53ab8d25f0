#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiblab/rational.hpp"

namespace fiblab {

enum class SetKind { FibonacciValues, GelfondN0, ExplicitList };

std::string to_string(SetKind kind);

/// A set of naturals with a total membership test. FibonacciValues is the
/// set of distinct Fibonacci values {1, 2, 3, 5, 8, ...} (the repeated 1
/// counts once); GelfondN0 is the evil numbers (even binary digit sum).
class IntegerSet {
public:
    static IntegerSet fibonacci_values();
    static IntegerSet gelfond_n0();
    /// members must be strictly increasing.
    static IntegerSet explicit_list(std::vector<std::uint64_t> members);

    SetKind kind() const { return kind_; }
    bool contains(std::uint64_t n) const;
    const std::vector<std::uint64_t>& members() const;

private:
    explicit IntegerSet(SetKind kind) : kind_(kind) {}
    SetKind kind_;
    std::vector<std::uint64_t> members_;
};

/// true iff the binary digit sum of n is even (n = 0 included: empty sum).
bool gelfond_member(std::uint64_t n);

/// |A intersect [1, x]|, exact. Requires x >= 1.
std::uint64_t counting_function(const IntegerSet& set, std::uint64_t x);

struct DensitySample {
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    Rational ratio;     // count / x
    Rational tail_min;  // min ratio over this and later sample points
    Rational tail_max;
    // FibonacciValues only: the log x / log phi comparison. The count
    // exceeds that bound at large x (it lacks an additive constant), so
    // this is reported, never asserted.
    bool has_log_bound = false;
    double log_bound = 0.0;
    bool within_log_bound = false;
};

struct DensityProfile {
    SetKind kind = SetKind::ExplicitList;
    std::vector<DensitySample> samples;
};

/// Ratios at each sample point plus the suffix min/max envelope (the
/// finite stand-ins for lower and upper density). xs must be nonempty
/// and strictly increasing.
DensityProfile density_profile(const IntegerSet& set, const std::vector<std::uint64_t>& xs);

struct ResidueDensity {
    std::uint64_t p = 0;
    std::uint64_t lambda = 0;
    std::uint64_t modulus = 0;        // p^lambda
    std::uint64_t residue_count = 0;  // |{F_n mod p^lambda : n >= 0}|
    Rational density;                 // residue_count / p^lambda
};

inline constexpr std::uint64_t kResidueModulusCap = 1ull << 26;

/// Exact fraction of residues mod p^lambda hit by the Fibonacci sequence,
/// scanned over one Pisano period. p must be prime; p^lambda is capped
/// (Pisano enumeration holds the whole residue table in memory).
ResidueDensity fib_residue_density(std::uint64_t p, std::uint64_t lambda,
                                   std::uint64_t modulus_cap = kResidueModulusCap);

}  // namespace fiblab
