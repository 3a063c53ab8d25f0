#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "fiblab/identities.hpp"

using fiblab::BoundedValue;
using fiblab::check_df_lemma;
using fiblab::check_reciprocal_sum;
using fiblab::check_sqrt5_cf;
using fiblab::check_symmetry;
using fiblab::FibConvention;
using fiblab::IdentityReport;
using fiblab::QuadraticReal;
using fiblab::Rational;
using fiblab::Verdict;

TEST_CASE("phi lower bound is valid and tight-ish") {
    const Rational r = fiblab::phi_lower_bound();
    CHECK(r * r < r + Rational(1));             // below the positive root of x^2 = x + 1
    CHECK(QuadraticReal(r) < QuadraticReal::phi());
    CHECK(r > Rational(8, 5));
}

TEST_CASE("tail bounds are positive and shrink geometrically") {
    for (std::uint64_t terms : {1ull, 5ull, 20ull}) {
        for (std::uint64_t k : {1ull, 2ull, 5ull}) {
            const Rational t = fiblab::reciprocal_tail_bound(k, terms);
            CHECK(t > Rational(0));
            CHECK(fiblab::reciprocal_tail_bound(k, terms + 1) < t);
        }
        CHECK(fiblab::sqrt5_series_tail_bound(terms) > Rational(0));
        CHECK(fiblab::sqrt5_series_tail_bound(terms + 1) <
              fiblab::sqrt5_series_tail_bound(terms));
        CHECK(fiblab::sqrt5_rational_tail_bound(terms) > Rational(0));
        CHECK(fiblab::sqrt5_rational_tail_bound(terms + 1) <
              fiblab::sqrt5_rational_tail_bound(terms));
    }
}

TEST_CASE("bounded values") {
    const auto e = BoundedValue::exact_value(QuadraticReal(2));
    CHECK(e.exact());
    const auto t = BoundedValue::truncated(QuadraticReal(2), Rational(1, 10));
    CHECK(!t.exact());
    CHECK(t.lo == QuadraticReal(2));
    CHECK(t.hi == QuadraticReal(2) + QuadraticReal(Rational(1, 10)));
    CHECK(t.overlaps(e));
    const auto u = BoundedValue::truncated(QuadraticReal(Rational(41, 20)), Rational(1, 10));
    CHECK(t.overlaps(u));
    const auto isect = BoundedValue::intersection(t, u);
    CHECK(isect.lo == u.lo);   // max of lows
    CHECK(isect.hi == t.hi);   // min of highs
    const auto far = BoundedValue::exact_value(QuadraticReal(5));
    CHECK(!t.overlaps(far));
    CHECK_THROWS_AS(BoundedValue::intersection(t, far), std::logic_error);
    CHECK_THROWS_AS(BoundedValue::truncated(QuadraticReal(1), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("reciprocal sums: frozen right sides") {
    CHECK(check_reciprocal_sum(1, 30).rhs.lo == QuadraticReal(1));
    CHECK(check_reciprocal_sum(2, 30).rhs.lo == QuadraticReal(Rational(7, 18)));
    CHECK(check_reciprocal_sum(3, 30).rhs.lo == QuadraticReal(Rational(143, 960)));
    CHECK(check_reciprocal_sum(4, 30).rhs.lo == QuadraticReal(Rational(4351, 76440)));
    CHECK(check_reciprocal_sum(5, 30).rhs.lo ==
          QuadraticReal(Rational(814001, 37437400)));
}

TEST_CASE("reciprocal sums: partial sums approach the right side from below") {
    for (std::uint64_t k = 1; k <= 5; ++k) {
        const IdentityReport rep = check_reciprocal_sum(k, 40);
        CHECK(rep.verdict == Verdict::WithinTailBound);
        CHECK(rep.id == "reciprocal");
        // diff = rhs - partial lies in [0, tail]
        const QuadraticReal diff = rep.rhs.lo - rep.lhs.lo;
        CHECK(diff.sign() >= 0);
        CHECK(QuadraticReal(rep.tail_bound) - diff >= QuadraticReal(0));

        // more terms keep the exact rhs inside the shrinking interval
        const IdentityReport more = check_reciprocal_sum(k, 80);
        const QuadraticReal diff2 = more.rhs.lo - more.lhs.lo;
        CHECK(diff2.sign() >= 0);
        const bool tightened = diff2 < diff || diff.is_zero();
        CHECK(tightened);
        CHECK(more.tail_bound < rep.tail_bound);
    }
    CHECK_THROWS_AS(check_reciprocal_sum(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(check_reciprocal_sum(1, 0), std::invalid_argument);
}

TEST_CASE("finite symmetry identity") {
    const IdentityReport rep = check_symmetry(3, 2);
    CHECK(rep.verdict == Verdict::ExactEqual);
    CHECK(rep.lhs.exact());
    CHECK(rep.lhs.lo == QuadraticReal(Rational(-4, 15)));
    CHECK(rep.rhs.lo == QuadraticReal(Rational(-4, 15)));

    for (std::uint64_t a = 1; a <= 30; ++a)
        for (std::uint64_t b = 1; b <= 30; ++b)
            CHECK(check_symmetry(a, b).verdict == Verdict::ExactEqual);

    CHECK_THROWS_AS(check_symmetry(0, 3), std::invalid_argument);
}

TEST_CASE("sqrt5 continued-fraction identity at one term") {
    const IdentityReport rep = check_sqrt5_cf(1);
    REQUIRE(rep.expressions.size() == 3);
    const QuadraticReal s5 = QuadraticReal::sqrt5();
    const QuadraticReal expected = s5 - QuadraticReal(2);  // phi^{-3}
    CHECK(rep.expressions[0].second.lo == expected);
    CHECK(rep.expressions[1].second.lo == expected);
    CHECK(QuadraticReal::phi().pow(-3) == expected);
    CHECK(rep.expressions[2].second.lo == QuadraticReal(Rational(1, 4)));  // 4/(F_3 F_6)
    CHECK(rep.verdict == Verdict::WithinTailBound);
}

TEST_CASE("sqrt5 identity: term-by-term equality of the two series") {
    // The convergent-error sum and the phi series are the same numbers.
    for (std::uint64_t terms = 1; terms <= 10; ++terms) {
        const IdentityReport rep = check_sqrt5_cf(terms);
        CHECK(rep.expressions[0].second.lo == rep.expressions[1].second.lo);
        // all three intervals pairwise intersect
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                CHECK(rep.expressions[i].second.overlaps(rep.expressions[j].second));
        CHECK(rep.verdict == Verdict::WithinTailBound);
    }
}

TEST_CASE("sqrt5 identity: ten terms pin six decimals") {
    const IdentityReport rep = check_sqrt5_cf(10);
    for (const auto& [name, val] : rep.expressions) {
        (void)name;
        CHECK(val.lo.decimal_string(6) == "0.250820");
        CHECK(val.hi.decimal_string(6) == "0.250820");
    }
    CHECK(rep.lhs.lo.decimal_string(6) == "0.250820");
    CHECK(rep.rhs.lo.decimal_string(6) == "0.250820");
    CHECK_THROWS_AS(check_sqrt5_cf(0), std::invalid_argument);
}

TEST_CASE("df lemma: k = 1 classic holds, everything else refutes") {
    for (std::uint64_t n = 1; n <= 50; ++n) {
        const IdentityReport rep = check_df_lemma(1, n, FibConvention::Classic);
        CHECK(rep.verdict == Verdict::ExactEqual);
        CHECK(!rep.witness.has_value());
    }

    const IdentityReport shifted = check_df_lemma(1, 2, FibConvention::Shifted);
    CHECK(shifted.verdict == Verdict::Refuted);
    REQUIRE(shifted.witness.has_value());
    CHECK(shifted.witness->lhs == QuadraticReal(5));  // 1^2 + 2^2
    CHECK(shifted.witness->rhs == QuadraticReal(6));  // F_2 F_3 = 2 * 3

    const IdentityReport even_classic = check_df_lemma(2, 2, FibConvention::Classic);
    CHECK(even_classic.verdict == Verdict::Refuted);
    REQUIRE(even_classic.witness.has_value());
    CHECK(even_classic.witness->lhs == QuadraticReal(24));  // F_4 + F_8 = 3 + 21
    CHECK(even_classic.witness->rhs == QuadraticReal(12));  // F_4 F_6 / 2 = 3*8/2

    const IdentityReport even_shifted = check_df_lemma(2, 2, FibConvention::Shifted);
    CHECK(even_shifted.verdict == Verdict::Refuted);
    REQUIRE(even_shifted.witness.has_value());
    CHECK(even_shifted.witness->lhs == QuadraticReal(39));  // F_4 + F_8 = 5 + 34
    CHECK(even_shifted.witness->rhs == QuadraticReal(Rational(65, 2)));  // 5*13/2

    CHECK_THROWS_AS(check_df_lemma(0, 2, FibConvention::Classic), std::invalid_argument);
    CHECK_THROWS_AS(check_df_lemma(2, 0, FibConvention::Classic), std::invalid_argument);
}

TEST_CASE("sweep shape and refutation accounting") {
    const auto reports = fiblab::identity_sweep();
    CHECK(reports.size() == 959);  // 5 + 900 + 1 + 50 + 1 + 2
    std::size_t refuted = 0;
    for (const auto& rep : reports) {
        if (rep.verdict == Verdict::Refuted) {
            ++refuted;
            REQUIRE(rep.witness.has_value());
            CHECK(rep.witness->lhs != rep.witness->rhs);
            CHECK(rep.id == "dflemma");
        }
        if (rep.verdict == Verdict::ExactEqual) CHECK(rep.tail_bound.is_zero());
        if (rep.verdict == Verdict::WithinTailBound) CHECK(rep.tail_bound > Rational(0));
    }
    CHECK(refuted == 3);
}
