#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wgc/sequence.hpp"
#include "wgc/verify.hpp"

using namespace wgc;

TEST_CASE("omega constants") {
    auto o = omega_triple(TwoPrimeParams::create(7, 13), 2);
    CHECK(o.omega1 == 0);
    CHECK(o.omega2 == 0);
    CHECK(o.omega == 0);

    o = omega_triple(TwoPrimeParams::create(13, 7), 2);
    CHECK(o.omega1 == 1);
    CHECK(o.omega2 == 1);
    CHECK(o.omega == 0);

    // computed from the definition; the published table for this set differs
    o = omega_triple(TwoPrimeParams::create(31, 19), 3);
    CHECK(o.omega1 == 1);
    CHECK(o.omega2 == 0);
    CHECK(o.omega == 0);

    o = omega_triple(TwoPrimeParams::create(19, 31), 3);
    CHECK(o.omega1 == 1);
    CHECK(o.omega2 == 0);
    CHECK(o.omega == 0);

    // omega1 = 0 or omega2 = 0 forces omega = 0
    for (auto [n1, n2] : {std::pair<std::uint64_t, std::uint64_t>{7, 13}, {13, 19}, {19, 13}}) {
        for (std::uint64_t p : {2, 3, 5}) {
            auto t = omega_triple(TwoPrimeParams::create(n1, n2), p);
            if (t.omega1 == 0 || t.omega2 == 0) CHECK(t.omega == 0);
        }
    }
}

TEST_CASE("sequence bits and weight for (7, 13)") {
    auto seq = CyclotomicSequence::build(WhitemanSystem::build(TwoPrimeParams::create(7, 13)));
    CHECK(seq.bits().size() == 91);
    CHECK(seq.bits()[0] == 0);    // 0 is in R
    CHECK(seq.bits()[7] == 1);    // multiples of n1 carry a one
    CHECK(seq.bits()[13] == 0);   // multiples of n2 carry a zero
    CHECK(seq.weight() == 48);    // (n2-1) + (n1-1)(n2-1)/2
    CHECK(seq.support(StmPoly::S).size() == 48);
    CHECK(seq.support(StmPoly::T).size() == 48);
    CHECK(seq.support(StmPoly::M).size() == 48);

    PrimeField K(2);
    BasePoly s = seq.stm_poly(K, StmPoly::S);
    std::size_t ones = 0;
    for (auto c : s.c) ones += (c != 0);
    CHECK(ones == seq.weight());
}

TEST_CASE("context evaluation agrees with the sequence") {
    SequenceContext ctx = SequenceContext::build(7, 13, 2);
    CHECK(ctx.ext_degree() == 12);
    const auto& E = ctx.ext();
    CHECK(E.is_one(ctx.beta_pow(0)));
    CHECK(E.is_one(E.pow(ctx.beta(), std::uint64_t{91})));
    CHECK_FALSE(E.is_one(E.pow(ctx.beta(), std::uint64_t{13})));

    // S(beta^0) is the weight mod q, which equals omega
    auto o = ctx.omegas();
    CHECK(E.eq(ctx.eval(StmPoly::S, 0), E.embed(o.omega)));

    // evaluating via the polynomial matches the support-sum path
    BasePoly s = ctx.sequence().stm_poly(ctx.base(), StmPoly::S);
    for (std::uint64_t a : {std::uint64_t{1}, std::uint64_t{5}, std::uint64_t{13}})
        CHECK(E.eq(poly_eval(E, s, ctx.beta_pow(a)), ctx.eval(StmPoly::S, a)));
}

TEST_CASE("rejects q dividing n") {
    CHECK_THROWS(SequenceContext::build(7, 13, 7));
}

TEST_CASE("structural identity suite for (7, 13, 2)") {
    SequenceContext ctx = SequenceContext::build(7, 13, 2);
    for (const auto& r : run_all_checks(ctx)) CHECK_MESSAGE(r.ok, r.name, ": ", r.detail);
}
