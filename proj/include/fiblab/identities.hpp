#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiblab/fibcore.hpp"
#include "fiblab/quadratic.hpp"
#include "fiblab/rational.hpp"

namespace fiblab {

enum class Verdict { ExactEqual, WithinTailBound, Refuted };

std::string to_string(Verdict v);

/// Exact value or interval [lo, hi]. A truncated series is represented by
/// [partial, partial + tail] with a rational bound on the width; an exact
/// value has lo == hi and tail_bound == 0.
struct BoundedValue {
    QuadraticReal lo;
    QuadraticReal hi;
    Rational tail_bound;  // rational upper bound on hi - lo

    bool exact() const { return tail_bound.is_zero(); }
    bool overlaps(const BoundedValue& o) const { return !(hi < o.lo) && !(o.hi < lo); }

    static BoundedValue exact_value(QuadraticReal v);
    static BoundedValue truncated(const QuadraticReal& partial, const Rational& tail);
    /// Intersection of overlapping intervals; width bound is the smaller
    /// of the two inputs' bounds.
    static BoundedValue intersection(const BoundedValue& a, const BoundedValue& b);
};

struct RefutationWitness {
    QuadraticReal lhs;
    QuadraticReal rhs;
    std::string note;
};

struct IdentityReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;  // echo, in CLI order
    FibConvention convention = FibConvention::Classic;
    BoundedValue lhs;
    BoundedValue rhs;
    /// Named partial sums for multi-expression identities (empty otherwise).
    std::vector<std::pair<std::string, BoundedValue>> expressions;
    Verdict verdict = Verdict::ExactEqual;
    std::optional<RefutationWitness> witness;  // present iff Refuted
    Rational tail_bound;                       // bound used by the verdict; 0 when exact
};

/// Rational lower bound for phi used to turn F_m >= phi^(m-2) into exact
/// rational tail majorants. 809/500 < phi since (809/500)^2 < 809/500 + 1.
Rational phi_lower_bound();

/// Upper bound on sum_{n>N} 1/(F_n F_{n+2k}), Classic indexing.
Rational reciprocal_tail_bound(std::uint64_t k, std::uint64_t terms);
/// Upper bound on 2 sum_{n>N} 1/(F_{3n} phi^{3n}).
Rational sqrt5_series_tail_bound(std::uint64_t terms);
/// Upper bound on 4 sum_{n>N} 1/(F_{6n-3} F_{6n}).
Rational sqrt5_rational_tail_bound(std::uint64_t terms);

/// sum_{n>=1} 1/(F_n F_{n+2k}) against (1/F_{2k}) sum_{n=1}^{k} 1/(F_{2n-1} F_{2n}),
/// truncating the left side after `terms` terms. Classic indexing.
IdentityReport check_reciprocal_sum(std::uint64_t k, std::uint64_t terms);

/// sum_{n=1}^{b} (-1)^n F_a/(F_n F_{n+a}) against the same with a and b
/// exchanged. Finite, so the verdict is ExactEqual or Refuted.
IdentityReport check_symmetry(std::uint64_t a, std::uint64_t b);

/// Three expressions for the same limit: sum of |sqrt5 - p_n/q_n| over
/// continued-fraction convergents, 2 sum 1/(F_{3n} phi^{3n}), and
/// 4 sum 1/(F_{6n-3} F_{6n}). Each truncated after `terms` terms with a
/// geometric tail; checks that the three intervals pairwise intersect.
IdentityReport check_sqrt5_cf(std::uint64_t terms);

/// sum_{i=1}^{n} F_{2ki} (even k) or sum_{i=1}^{n} F_{ki}^2 (odd k)
/// against F_{kn} F_{k(n+1)} / k!, both sides exact under `conv`.
IdentityReport check_df_lemma(std::uint64_t k, std::uint64_t n, FibConvention conv);

/// The full fixed matrix behind `identities sweep`: reciprocal k = 1..5 at
/// 50 terms, symmetry over 1 <= a, b <= 30, the sqrt5 triple at 10 terms,
/// and the DF lemma adjudication (k=1 Classic n = 1..50, k=1 Shifted n=2,
/// k=2 n=2 under both conventions).
std::vector<IdentityReport> identity_sweep();

}  // namespace fiblab
