#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiblab/fibcore.hpp"

namespace fiblab {

/// Zeckendorf representation of a natural number: a 0/1 coefficient vector
/// over the Shifted-convention values F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...
/// (index 0 is excluded: F_0 = F_1 = 1 would duplicate a value and break
/// uniqueness). Invariants: the leading coefficient is 1 and no two set
/// indices are adjacent.
class ZeckendorfRep {
public:
    /// Builds from ascending 1-based indices of the set coefficients;
    /// validates ordering, adjacency and the index range.
    static ZeckendorfRep from_indices(std::vector<std::uint32_t> indices);

    /// Parses a coefficient string "a_1 a_2 ... a_n" of '0'/'1' characters.
    static ZeckendorfRep from_coeff_string(const std::string& s);

    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::uint32_t leading_index() const { return indices_.back(); }

    /// "a_1 a_2 ... a_n" as a 01-string; the last character is always '1'.
    std::string coeff_string() const;

private:
    ZeckendorfRep() = default;
    std::vector<std::uint32_t> indices_;  // ascending, no two adjacent
};

/// Greedy Zeckendorf decomposition; rejects a == 0.
ZeckendorfRep zeckendorf_encode(const mpz_class& a);

/// Exact weighted sum  sum a_s F_s  (Shifted convention, indices from 1).
mpz_class zeckendorf_decode(const ZeckendorfRep& rep);

/// Exhaustive count of 0/1 coefficient vectors over indices 1..max_index
/// with no adjacent ones summing to a. Requires F_{max_index} >= a.
/// Uniqueness of the Zeckendorf decomposition means this is always 1.
std::uint64_t zeckendorf_uniqueness_count(const mpz_class& a, std::uint32_t max_index);

}  // namespace fiblab
