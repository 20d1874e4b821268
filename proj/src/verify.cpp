#include "wgc/verify.hpp"

#include <map>

namespace wgc {

namespace {

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name) { return {std::move(name), true, ""}; }

}  // namespace

CheckResult check_class_translation(const WhitemanSystem& sys) {
    const std::string name = "class-translation";
    const std::uint64_t n = sys.params().n;
    for (int i = 0; i < 6; ++i) {
        for (std::uint64_t r : sys.d_set(i)) {
            for (int j = 0; j < 6; ++j) {
                for (std::uint64_t d : sys.d_set(j)) {
                    std::uint64_t prod = (r * d) % n;
                    if (sys.class_of(prod) != d_class((i + j) % 6))
                        return fail(name, "r=" + std::to_string(r) + " in D" + std::to_string(i) +
                                              " maps " + std::to_string(d) + " of D" + std::to_string(j) +
                                              " outside D" + std::to_string((i + j) % 6));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_partition(const WhitemanSystem& sys) {
    const std::string name = "partition";
    const auto& p = sys.params();
    for (int i = 0; i < 6; ++i)
        if (sys.d_set(i).size() != p.e)
            return fail(name, "|D" + std::to_string(i) + "| = " + std::to_string(sys.d_set(i).size()) +
                                  ", expected e = " + std::to_string(p.e));
    if (sys.n1_set().size() != p.n2 - 1 || sys.n2_set().size() != p.n1 - 1)
        return fail(name, "N1/N2 sizes wrong");
    // membership total: 1 + (n2-1) + (n1-1) + 6e = n is implied by build, but
    // verify the reduction multiplicities of Lemma 3's proof
    for (int j = 0; j < 6; ++j) {
        std::map<std::uint64_t, std::uint64_t> tally1, tally2;
        for (std::uint64_t v : sys.d_set(j)) {
            ++tally1[v % p.n1];
            ++tally2[v % p.n2];
        }
        for (std::uint64_t r = 1; r < p.n1; ++r)
            if (tally1[r] != (p.n2 - 1) / 6)
                return fail(name, "D" + std::to_string(j) + " mod n1 multiplicity at " + std::to_string(r));
        for (std::uint64_t r = 1; r < p.n2; ++r)
            if (tally2[r] != (p.n1 - 1) / 6)
                return fail(name, "D" + std::to_string(j) + " mod n2 multiplicity at " + std::to_string(r));
    }
    return pass(name);
}

CheckResult check_unit_sums(const SequenceContext& ctx) {
    const std::string name = "unit-sums";
    const auto& E = ctx.ext();
    auto sum_over = [&](const std::vector<std::uint64_t>& set) {
        ExtField::Elem s = E.zero();
        for (std::uint64_t i : set) s = E.add(s, ctx.beta_pow(i));
        return s;
    };
    const ExtField::Elem minus_one = E.neg(E.one());
    if (!E.eq(sum_over(ctx.system().n1_set()), minus_one)) return fail(name, "sum over N1 != -1");
    if (!E.eq(sum_over(ctx.system().n2_set()), minus_one)) return fail(name, "sum over N2 != -1");
    ExtField::Elem units = E.zero();
    for (int j = 0; j < 6; ++j) units = E.add(units, sum_over(ctx.system().d_set(j)));
    if (!E.is_one(units)) return fail(name, "sum over Z_n^* != 1");
    return pass(name);
}

CheckResult check_class_sums(const SequenceContext& ctx) {
    const std::string name = "class-sums";
    const auto& E = ctx.ext();
    const auto& p = ctx.params();
    const std::uint64_t n = p.n;
    const ExtField::Elem expect_n1 = E.neg(E.embed(ctx.base().from_int(static_cast<std::int64_t>((p.n1 - 1) / 6))));
    const ExtField::Elem expect_n2 = E.neg(E.embed(ctx.base().from_int(static_cast<std::int64_t>((p.n2 - 1) / 6))));
    for (int j = 0; j < 6; ++j) {
        for (bool first : {true, false}) {
            const auto& aset = first ? ctx.system().n1_set() : ctx.system().n2_set();
            const auto& expect = first ? expect_n1 : expect_n2;
            for (std::uint64_t a : aset) {
                ExtField::Elem s = E.zero();
                for (std::uint64_t i : ctx.system().d_set(j)) s = E.add(s, ctx.beta_pow(a * i % n));
                if (!E.eq(s, expect))
                    return fail(name, "sum over D" + std::to_string(j) + " at a = " + std::to_string(a));
            }
        }
    }
    return pass(name);
}

CheckResult check_evaluation_table(const SequenceContext& ctx) {
    const std::string name = "evaluation-table";
    const auto& E = ctx.ext();
    const auto& p = ctx.params();
    const auto o = ctx.omegas();

    const ExtField::Elem s1 = ctx.eval(StmPoly::S, 1);
    const ExtField::Elem t1 = ctx.eval(StmPoly::T, 1);
    const ExtField::Elem m1 = ctx.eval(StmPoly::M, 1);
    auto flip = [&](const ExtField::Elem& v) { return E.neg(E.add(v, E.one())); };  // -(v + 1)

    // rows D0..D5 of the closed-form tables
    const std::array<ExtField::Elem, 6> s_row{s1, t1, m1, flip(s1), flip(t1), flip(m1)};
    const std::array<ExtField::Elem, 6> t_row{t1, m1, flip(s1), flip(t1), flip(m1), s1};
    const std::array<ExtField::Elem, 6> m_row{m1, flip(s1), flip(t1), flip(m1), s1, t1};

    for (std::uint64_t a = 0; a < p.n; ++a) {
        const ResidueClass cls = ctx.system().class_of(a);
        for (auto which : {StmPoly::S, StmPoly::T, StmPoly::M}) {
            ExtField::Elem direct = ctx.eval(which, a);
            ExtField::Elem expect;
            switch (cls) {
                case ResidueClass::R:
                    expect = E.embed(o.omega);
                    break;
                case ResidueClass::N1:
                    expect = E.neg(E.embed(o.omega1));
                    break;
                case ResidueClass::N2:
                    expect = E.embed(o.omega2);
                    break;
                default: {
                    int j = d_index(cls);
                    expect = which == StmPoly::S ? s_row[j] : which == StmPoly::T ? t_row[j] : m_row[j];
                    break;
                }
            }
            if (!E.eq(direct, expect))
                return fail(name, "closed form mismatch at a = " + std::to_string(a) + " (" +
                                      to_string(cls) + ")");
        }
    }
    return pass(name);
}

CheckResult check_qclass_facts(const SequenceContext& ctx) {
    const std::string name = "q-class-facts";
    const auto& E = ctx.ext();
    const int qi = d_index(ctx.system().class_of(ctx.q() % ctx.params().n));
    const std::array<ExtField::Elem, 3> vals{ctx.eval(StmPoly::S, 1), ctx.eval(StmPoly::T, 1),
                                             ctx.eval(StmPoly::M, 1)};
    if (qi % 2 == 1) {
        for (const auto& v : vals)
            if (E.is_zero(v) || E.eq(v, E.neg(E.one())))
                return fail(name, "S/T/M(beta) in {0,-1} although q is in D1/D3/D5");
    } else {
        const std::uint64_t exp_pow = (qi == 0) ? 1 : 3;
        mpz_class exponent = 1;
        for (std::uint64_t t = 0; t < exp_pow; ++t) exponent *= ctx.q();
        for (const auto& v : vals)
            if (!E.eq(E.pow(v, exponent), v))
                return fail(name, "Frobenius fixedness fails for q in D" + std::to_string(qi));
    }
    return pass(name);
}

CheckResult check_root_factorization(const SequenceContext& ctx) {
    const std::string name = "root-factorization";
    const auto& K = ctx.base();
    const auto& E = ctx.ext();
    const auto& p = ctx.params();
    const BasePoly x_minus_1 = poly_sub(K, poly_monomial(K, K.one(), 1), poly_one(K));
    BasePoly frame = poly_div_exact(K,
                                    poly_mul(K, poly_xn_minus_one(K, p.n1), poly_xn_minus_one(K, p.n2)),
                                    x_minus_1);
    ExtPoly prod = poly_lift(E, frame);
    const bool q_in_d0 = ctx.system().class_of(ctx.q() % p.n) == ResidueClass::D0;
    for (int a = 0; a < 6; ++a) {
        ExtPoly da = build_d_a(ctx, a);
        if (static_cast<std::uint64_t>(da.degree()) != p.e)
            return fail(name, "deg d_" + std::to_string(a) + " != e");
        if (q_in_d0 && !poly_descend(E, da))
            return fail(name, "d_" + std::to_string(a) + " does not descend although q is in D0");
        prod = poly_mul(E, prod, da);
    }
    if (!(prod == poly_lift(E, poly_xn_minus_one(K, p.n))))
        return fail(name, "product of factors != x^n - 1");
    return pass(name);
}

CheckResult check_oracle_consistency(const SequenceContext& ctx) {
    const std::string name = "oracle-consistency";
    const auto& K = ctx.base();
    const auto& p = ctx.params();
    CyclicCode code = generator_via_gcd(ctx);
    BasePoly xn1 = poly_xn_minus_one(K, p.n);
    if (!poly_divides(K, code.gen, xn1)) return fail(name, "gen does not divide x^n - 1");
    BasePoly gcd = poly_gcd(K, xn1, ctx.sequence().stm_poly(K, StmPoly::S));
    if (code.k != static_cast<std::uint64_t>(gcd.degree()))
        return fail(name, "k != deg gcd(x^n - 1, S(x))");
    const std::uint64_t expect_weight = (p.n2 - 1) + (p.n1 - 1) * (p.n2 - 1) / 2;
    if (ctx.sequence().weight() != expect_weight)
        return fail(name, "sequence weight " + std::to_string(ctx.sequence().weight()) +
                              " != " + std::to_string(expect_weight));
    return pass(name);
}

std::vector<CheckResult> run_all_checks(const SequenceContext& ctx) {
    return {
        check_partition(ctx.system()),
        check_class_translation(ctx.system()),
        check_unit_sums(ctx),
        check_class_sums(ctx),
        check_evaluation_table(ctx),
        check_qclass_facts(ctx),
        check_root_factorization(ctx),
        check_oracle_consistency(ctx),
    };
}

}  // namespace wgc
