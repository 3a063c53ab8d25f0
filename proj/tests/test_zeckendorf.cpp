#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fiblab/zeckendorf.hpp"

using fiblab::fib;
using fiblab::FibConvention;
using fiblab::ZeckendorfRep;
using fiblab::zeckendorf_decode;
using fiblab::zeckendorf_encode;

TEST_CASE("known decompositions") {
    using V = std::vector<std::uint32_t>;
    CHECK(zeckendorf_encode(1).indices() == V{1});
    CHECK(zeckendorf_encode(2).indices() == V{2});
    CHECK(zeckendorf_encode(3).indices() == V{3});
    CHECK(zeckendorf_encode(4).indices() == V{1, 3});
    CHECK(zeckendorf_encode(10).indices() == V{2, 5});       // 2 + 8
    CHECK(zeckendorf_encode(100).indices() == V{3, 5, 10});  // 3 + 8 + 89
    CHECK(zeckendorf_encode(fib(20, FibConvention::Shifted)).indices() == V{20});
}

TEST_CASE("encode rejects zero") {
    CHECK_THROWS_AS(zeckendorf_encode(0), std::invalid_argument);
    CHECK_THROWS_AS(zeckendorf_encode(-5), std::invalid_argument);
}

TEST_CASE("round trip and structural invariants") {
    for (long a = 1; a <= 10000; ++a) {
        const ZeckendorfRep rep = zeckendorf_encode(a);
        CHECK(zeckendorf_decode(rep) == a);
        const auto& idx = rep.indices();
        REQUIRE(!idx.empty());
        for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
            CHECK(idx[i] < idx[i + 1]);
            CHECK(idx[i + 1] - idx[i] >= 2);  // no adjacent terms
        }
        // greedy: the leading term is the largest F_s <= a
        const std::uint32_t lead = rep.leading_index();
        CHECK(fib(lead, FibConvention::Shifted) <= a);
        CHECK(fib(lead + 1, FibConvention::Shifted) > a);
    }
}

TEST_CASE("exhaustive uniqueness for small values") {
    for (long a = 1; a <= 500; ++a) {
        const std::uint32_t max_index = zeckendorf_encode(a).leading_index() + 1;
        CHECK(fiblab::zeckendorf_uniqueness_count(a, max_index) == 1);
    }
}

TEST_CASE("coefficient strings") {
    CHECK(zeckendorf_encode(10).coeff_string() == "01001");
    CHECK(zeckendorf_encode(100).coeff_string() == "0010100001");
    CHECK(zeckendorf_encode(1).coeff_string() == "1");

    const ZeckendorfRep parsed = ZeckendorfRep::from_coeff_string("0010100001");
    CHECK(zeckendorf_decode(parsed) == 100);
    for (long a = 1; a <= 300; ++a) {
        const ZeckendorfRep rep = zeckendorf_encode(a);
        const ZeckendorfRep back = ZeckendorfRep::from_coeff_string(rep.coeff_string());
        CHECK(back.indices() == rep.indices());
    }
}

TEST_CASE("from_coeff_string validation") {
    CHECK_THROWS_AS(ZeckendorfRep::from_coeff_string("11"), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_coeff_string("1011"), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_coeff_string("10"), std::invalid_argument);  // trailing 0
    CHECK_THROWS_AS(ZeckendorfRep::from_coeff_string(""), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_coeff_string("10x1"), std::invalid_argument);
    CHECK_NOTHROW(ZeckendorfRep::from_coeff_string("101"));
}

TEST_CASE("from_indices validation") {
    using V = std::vector<std::uint32_t>;
    CHECK_THROWS_AS(ZeckendorfRep::from_indices(V{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_indices(V{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_indices(V{}), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_indices(V{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ZeckendorfRep::from_indices(V{2, 2}), std::invalid_argument);
    CHECK(zeckendorf_decode(ZeckendorfRep::from_indices(V{1, 3, 5})) == 1 + 3 + 8);
}

TEST_CASE("large value round trip") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 60);  // 10^60
    const ZeckendorfRep rep = zeckendorf_encode(big);
    CHECK(zeckendorf_decode(rep) == big);
    const ZeckendorfRep back = ZeckendorfRep::from_coeff_string(rep.coeff_string());
    CHECK(zeckendorf_decode(back) == big);
}
