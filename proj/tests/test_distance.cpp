#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wgc/distance.hpp"

using namespace wgc;

namespace {

// the [7, 4, 3] cyclic Hamming code
CyclicCode hamming7() {
    PrimeField K(2);
    CyclicCode c;
    c.n = 7;
    c.q = 2;
    c.gen = poly_from_comma(K, "1,1,0,1");
    c.k = 4;
    c.provenance = "test";
    return c;
}

}  // namespace

TEST_CASE("full enumeration on the Hamming code") {
    DistanceResult r = exact_min_distance(hamming7());
    CHECK(r.kind == DistanceResult::Kind::Exact);
    CHECK(r.value == 3);
    CHECK(r.min_weight_count == 7);
    CHECK(r.budget_used == 15);
    CHECK(r.witness.size() == 3);
}

TEST_CASE("enumeration respects the budget") {
    DistanceResult r = exact_min_distance(hamming7(), 8);
    CHECK(r.kind == DistanceResult::Kind::Inconclusive);
    CHECK(r.note == "q^k exceeds enumeration budget");
}

TEST_CASE("empty code") {
    PrimeField K(2);
    CyclicCode c;
    c.n = 7;
    c.q = 2;
    c.gen = poly_xn_minus_one(K, 7);
    c.k = 0;
    DistanceResult r = exact_min_distance(c);
    CHECK(r.kind == DistanceResult::Kind::Inconclusive);
    CHECK(r.note == "empty code");
    r = min_weight_support_search(c, 3);
    CHECK(r.note == "empty code");
}

TEST_CASE("support search on the Hamming code") {
    DistanceResult r = min_weight_support_search(hamming7(), 3);
    CHECK(r.kind == DistanceResult::Kind::BoundedSearchExact);
    CHECK(r.value == 3);
    REQUIRE(r.witness.size() == 3);
    // the witness is a real codeword support
    PrimeField K(2);
    BasePoly w = poly_from_support(K, r.witness);
    CHECK(poly_divides(K, hamming7().gen, w));

    r = min_weight_support_search(hamming7(), 2);
    CHECK(r.kind == DistanceResult::Kind::LowerBound);
    CHECK(r.value == 3);
}

TEST_CASE("support search over GF(3)") {
    // n = 4 with gen = x^2 + 1 over GF(3): codewords a(x)(x^2+1), distance 2
    PrimeField K(3);
    CyclicCode c;
    c.n = 4;
    c.q = 3;
    c.gen = poly_from_comma(K, "1,0,1");
    c.k = 2;
    DistanceResult r = min_weight_support_search(c, 3);
    CHECK(r.kind == DistanceResult::Kind::BoundedSearchExact);
    CHECK(r.value == 2);
    DistanceResult e = exact_min_distance(c);
    CHECK(e.value == 2);
}

TEST_CASE("trivial generator means weight one") {
    PrimeField K(2);
    CyclicCode c;
    c.n = 7;
    c.q = 2;
    c.gen = poly_one(K);
    c.k = 7;
    DistanceResult r = min_weight_support_search(c, 3);
    CHECK(r.kind == DistanceResult::Kind::BoundedSearchExact);
    CHECK(r.value == 1);
}

TEST_CASE("search budget exhaustion is reported") {
    DistanceResult r = min_weight_support_search(hamming7(), 3, 2);
    CHECK(r.kind == DistanceResult::Kind::Inconclusive);
    CHECK(r.note.find("budget") != std::string::npos);
}

TEST_CASE("power substitution preserves weight for units") {
    PrimeField K(2);
    CyclicCode h = hamming7();
    for (std::uint64_t m = 1; m < 16; ++m) {
        // message m as binary digits
        BasePoly msg;
        for (std::uint64_t v = m, i = 0; v; v >>= 1, ++i)
            if (v & 1) msg = poly_add(K, msg, poly_monomial(K, K.one(), i));
        BasePoly c = poly_mul(K, msg, h.gen);
        for (std::uint64_t r : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}})
            CHECK(poly_weight(substitute_power(K, c, r, 7)) == poly_weight(c));
    }
    // r = 1 is the identity
    BasePoly g = hamming7().gen;
    CHECK(substitute_power(K, g, 1, 7) == g);
}

TEST_CASE("theorem metadata accessor rejects mismatches") {
    CyclicCode c = hamming7();
    CHECK_THROWS(theorem_bound(c, TheoremId::T3));
}
