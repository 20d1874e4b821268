#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wgc/field.hpp"

using namespace wgc;

TEST_CASE("primality and factoring") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(31));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));
    CHECK(prime_factors_u64(91) == std::vector<std::uint64_t>{7, 13});
    CHECK(prime_factors_u64(589) == std::vector<std::uint64_t>{19, 31});
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 91) == 12);
    CHECK(multiplicative_order(3, 4) == 2);
    CHECK(multiplicative_order(2, 247) == 36);
    CHECK(multiplicative_order(3, 589) == 90);
    CHECK_THROWS(multiplicative_order(2, 14));
}

TEST_CASE("prime field arithmetic") {
    PrimeField F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.neg(0) == 0);
    CHECK(F.from_int(-3) == 4);
    for (std::uint64_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(3, 6) == 1);
    CHECK_THROWS(F.inv(0));
    CHECK_THROWS(PrimeField(6));
}

TEST_CASE("deterministic irreducibles") {
    PrimeField F2(2), F3(3);
    CHECK(find_irreducible(F2, 3) == std::vector<std::uint64_t>{1, 1, 0, 1});   // x^3+x+1
    CHECK(find_irreducible(F3, 2) == std::vector<std::uint64_t>{1, 0, 1});      // x^2+1
    CHECK(find_irreducible(F2, 1) == std::vector<std::uint64_t>{0, 1});         // x
}

TEST_CASE("GF(8) arithmetic") {
    PrimeField F2(2);
    ExtField E(F2, {1, 1, 0, 1});
    auto y = E.gen();
    auto y2 = E.mul(y, y);
    CHECK(E.mul(y, y2) == ExtField::Elem{1, 1, 0});  // y^3 = y + 1
    for (mpz_class v = 1; v < 8; ++v) {
        auto a = E.from_index(v);
        CHECK(E.is_one(E.mul(a, E.inv(a))));
        CHECK(E.is_one(E.pow(a, E.card_minus_one())));
    }
    CHECK_THROWS(ExtField(F2, {1, 0, 0, 1}));  // x^3+1 reducible
}

TEST_CASE("GF(9) arithmetic") {
    PrimeField F3(3);
    ExtField E(F3, {1, 0, 1});  // x^2 + 1
    for (mpz_class v = 1; v < 9; ++v) {
        auto a = E.from_index(v);
        CHECK(E.is_one(E.mul(a, E.inv(a))));
        CHECK(E.is_one(E.pow(a, E.card_minus_one())));
    }
    CHECK(E.in_base(E.embed(2)));
    CHECK(E.to_base(E.embed(2)) == 2);
    CHECK_FALSE(E.in_base(E.gen()));
}

TEST_CASE("splitting field and root of unity for n = 91, q = 2") {
    ExtField E = splitting_field(2, 91);
    CHECK(E.degree() == 12);
    auto beta = nth_root_of_unity(E, 91);
    CHECK(E.is_one(E.pow(beta, std::uint64_t{91})));
    CHECK_FALSE(E.is_one(E.pow(beta, std::uint64_t{13})));
    CHECK_FALSE(E.is_one(E.pow(beta, std::uint64_t{7})));
}

TEST_CASE("primitive element of GF(8)") {
    PrimeField F2(2);
    ExtField E(F2, {1, 1, 0, 1});
    auto g = primitive_element(E);
    // order exactly 7
    CHECK(E.is_one(E.pow(g, std::uint64_t{7})));
    for (std::uint64_t e = 1; e < 7; ++e) CHECK_FALSE(E.is_one(E.pow(g, e)));
}
