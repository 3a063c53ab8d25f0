#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "fiblab/fibcore.hpp"
#include "fiblab/quadratic.hpp"

using fiblab::fib;
using fiblab::FibConvention;
using fiblab::QuadraticReal;
using fiblab::Rational;

TEST_CASE("fast doubling matches the recurrence, both conventions") {
    mpz_class a = 0, b = 1;  // Classic F_0, F_1
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CHECK(fib(n, FibConvention::Classic) == a);
        CHECK(fib(n, FibConvention::Shifted) == b);  // Shifted(n) == Classic(n+1)
        const mpz_class c = a + b;
        a = b;
        b = c;
    }
}

TEST_CASE("known values") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(50) == mpz_class("12586269025"));
    CHECK(fib(0, FibConvention::Shifted) == 1);
    CHECK(fib(1, FibConvention::Shifted) == 1);
    CHECK(fib(9, FibConvention::Shifted) == 55);
    // F_100 has a textbook value worth pinning
    CHECK(fib(100) == mpz_class("354224848179261915075"));
}

TEST_CASE("order-r generalization") {
    for (std::uint64_t n = 0; n <= 300; ++n)
        CHECK(fiblab::order_r_fib(2, n) == fib(n));  // seeds 0,1 coincide with Classic

    const std::vector<long> tribonacci = {0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81};
    for (std::size_t n = 0; n < tribonacci.size(); ++n)
        CHECK(fiblab::order_r_fib(3, n) == tribonacci[n]);

    CHECK(fiblab::order_r_fib(4, 8) == 15);  // 0,0,0,1,1,2,4,8,15
    CHECK_THROWS_AS(fiblab::order_r_fib(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(fiblab::order_r_fib(0, 5), std::invalid_argument);
}

TEST_CASE("pisano periods, frozen values") {
    CHECK(fiblab::pisano_period(1) == 1);
    CHECK(fiblab::pisano_period(2) == 3);
    CHECK(fiblab::pisano_period(3) == 8);
    CHECK(fiblab::pisano_period(8) == 12);
    CHECK(fiblab::pisano_period(16) == 24);
    CHECK(fiblab::pisano_period(11) == 10);
    CHECK(fiblab::pisano_period(100) == 300);
    CHECK_THROWS_AS(fiblab::pisano_period(0), std::invalid_argument);
}

TEST_CASE("pisano period is a genuine period") {
    for (std::uint64_t m = 1; m <= 64; ++m) {
        const std::uint64_t pi = fiblab::pisano_period(m);
        for (std::uint64_t n = 0; n <= 3 * pi && n <= 600; ++n) {
            const mpz_class lhs = fib(n) % m;
            const mpz_class rhs = fib(n + pi) % m;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fibonacci residue sets") {
    using V = std::vector<std::uint64_t>;
    CHECK(fiblab::fib_residues(8) == V{0, 1, 2, 3, 5, 7});
    CHECK(fiblab::fib_residues(16) == V{0, 1, 2, 3, 5, 7, 8, 9, 11, 13, 15});
    CHECK(fiblab::fib_residues(11) == V{0, 1, 2, 3, 5, 8, 10});
    CHECK(fiblab::fib_residues(2) == V{0, 1});
    CHECK(fiblab::fib_residues(1) == V{0});
}

TEST_CASE("totient") {
    CHECK(fiblab::totient(1) == 1);
    CHECK(fiblab::totient(2) == 1);
    CHECK(fiblab::totient(3) == 2);
    CHECK(fiblab::totient(4) == 2);
    CHECK(fiblab::totient(10) == 4);
    CHECK(fiblab::totient(36) == 12);
    CHECK(fiblab::totient(97) == 96);
    // multiplicativity spot check on coprime pair
    CHECK(fiblab::totient(35) == fiblab::totient(5) * fiblab::totient(7));
    CHECK_THROWS_AS(fiblab::totient(0), std::invalid_argument);
}

TEST_CASE("sqrt5 convergents") {
    const auto conv = fiblab::sqrt5_convergents(4);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == Rational(2));
    CHECK(conv[1] == Rational(9, 4));
    CHECK(conv[2] == Rational(38, 17));
    CHECK(conv[3] == Rational(161, 72));
}

TEST_CASE("convergent error alternates and has a closed form") {
    const auto s5 = QuadraticReal::sqrt5();
    const auto phi = QuadraticReal::phi();
    const auto conv = fiblab::sqrt5_convergents(12);
    for (std::size_t k = 0; k < conv.size(); ++k) {
        const QuadraticReal err = s5 - QuadraticReal(conv[k]);
        // convergents alternate: below sqrt5 at even k (0-based), above at odd
        CHECK(err.sign() == (k % 2 == 0 ? 1 : -1));
        const std::uint64_t n = k + 1;
        // |sqrt5 - p_n/q_n| == 2 / (F_{3n} phi^{3n}), Classic indexing
        const QuadraticReal rhs =
            QuadraticReal(Rational(2)) /
            (QuadraticReal(Rational(fib(3 * n))) * phi.pow(static_cast<long>(3 * n)));
        CHECK(err.abs() == rhs);
        // denominators are q_n = F_{3n} / 2
        CHECK(conv[k].den() == fib(3 * n) / 2);
    }
}
