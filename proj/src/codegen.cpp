#include "wgc/codegen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wgc {

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Zero: return "is-zero";
        case Membership::MinusOne: return "is-minus-one";
        default: return "neither";
    }
}

namespace {

Membership membership_of(const ExtField& E, const ExtField::Elem& v) {
    if (E.is_zero(v)) return Membership::Zero;
    if (E.eq(v, E.neg(E.one()))) return Membership::MinusOne;
    return Membership::Neither;
}

// Ω row of the Theorem 1/2 tables: the gcd factor coming from a = 0 and
// a in N1/N2 alone.
int omega_case(const OmegaTriple& o) {
    if (o.omega1 == 0 && o.omega2 == 0) return 5;
    if (o.omega1 == 0) return 3;
    if (o.omega2 == 0) return 4;
    return o.omega == 0 ? 2 : 1;
}

// gcd contribution of the Ω row over GF(q): 1, x-1, x^{n2}-1, x^{n1}-1, or
// (x^{n1}-1)(x^{n2}-1)/(x-1).
BasePoly omega_base_gcd(const PrimeField& K, const TwoPrimeParams& p, int ocase) {
    switch (ocase) {
        case 1: return poly_one(K);
        case 2: return poly_sub(K, poly_monomial(K, K.one(), 1), poly_one(K));
        case 3: return poly_xn_minus_one(K, p.n2);
        case 4: return poly_xn_minus_one(K, p.n1);
        case 5:
            return poly_div_exact(K,
                                  poly_mul(K, poly_xn_minus_one(K, p.n1), poly_xn_minus_one(K, p.n2)),
                                  poly_sub(K, poly_monomial(K, K.one(), 1), poly_one(K)));
        default: throw std::logic_error("omega_base_gcd: bad case");
    }
}

CyclicCode make_code(const SequenceContext& ctx, BasePoly gen, std::string provenance) {
    CyclicCode code;
    code.n = ctx.params().n;
    code.q = ctx.q();
    code.n1 = ctx.params().n1;
    code.n2 = ctx.params().n2;
    code.k = code.n - static_cast<std::uint64_t>(gen.degree());
    code.gen = std::move(gen);
    code.provenance = std::move(provenance);
    return code;
}

}  // namespace

ClassificationReport classify(const SequenceContext& ctx) {
    ClassificationReport rep;
    const auto& E = ctx.ext();
    rep.q_class = ctx.system().class_of(ctx.q() % ctx.params().n);
    rep.omegas = ctx.omegas();
    rep.sbeta = ctx.eval(StmPoly::S, 1);
    rep.tbeta = ctx.eval(StmPoly::T, 1);
    rep.mbeta = ctx.eval(StmPoly::M, 1);
    rep.memb_s = membership_of(E, rep.sbeta);
    rep.memb_t = membership_of(E, rep.tbeta);
    rep.memb_m = membership_of(E, rep.mbeta);
    rep.omega_case = omega_case(rep.omegas);

    // d_a indices removed from the gcd, per the Theorem 2 index tables:
    // S -> {0, 3}, T -> {1, 4}, M -> {2, 5}
    auto pick = [&](Membership m, int zero_idx, int minus_idx) {
        if (m == Membership::Zero) rep.removed.push_back(zero_idx);
        if (m == Membership::MinusOne) rep.removed.push_back(minus_idx);
    };

    const int qi = d_index(rep.q_class);
    if (qi < 0) throw std::logic_error("classify: q is not a unit mod n");
    if (qi % 2 == 1) {
        rep.branch = "theorem1-case-" + std::to_string(rep.omega_case);
    } else {
        pick(rep.memb_s, 0, 3);
        pick(rep.memb_t, 1, 4);
        pick(rep.memb_m, 2, 5);
        switch (rep.removed.size()) {
            case 0: rep.branch = "theorem2-no-da-case"; break;
            case 1: rep.branch = "theorem2-case-I"; break;
            case 2: {
                const char* sub = (rep.memb_m == Membership::Neither)   ? "i"
                                  : (rep.memb_t == Membership::Neither) ? "ii"
                                                                        : "iii";
                rep.branch = std::string("theorem2-case-II(") + sub + ")";
                break;
            }
            default: rep.branch = "theorem2-case-III"; break;
        }
    }
    return rep;
}

ExtPoly build_d_a(const SequenceContext& ctx, int a) {
    const auto& E = ctx.ext();
    if (!E.is_one(ctx.beta_pow(ctx.params().n)) || E.is_one(ctx.beta()))
        throw std::invalid_argument("build_d_a: beta is not a primitive n-th root of unity");
    ExtPoly r = poly_one(E);
    for (std::uint64_t i : ctx.system().d_set(a)) {
        ExtPoly lin;
        lin.c = {E.neg(ctx.beta_pow(i)), E.one()};
        r = poly_mul(E, r, lin);
    }
    return r;
}

CyclicCode generator_via_gcd(const SequenceContext& ctx) {
    const auto& K = ctx.base();
    const std::uint64_t n = ctx.params().n;
    BasePoly sx = ctx.sequence().stm_poly(K, StmPoly::S);
    BasePoly xn1 = poly_xn_minus_one(K, n);
    BasePoly gcd = poly_gcd(K, xn1, sx);
    return make_code(ctx, poly_div_exact(K, xn1, gcd), "oracle");
}

TheoremPath generator_via_theorem(const SequenceContext& ctx) {
    TheoremPath path;
    path.report = classify(ctx);
    const auto& K = ctx.base();
    const auto& E = ctx.ext();
    const auto& p = ctx.params();

    BasePoly base_gcd = omega_base_gcd(K, p, path.report.omega_case);
    BasePoly full_gcd;
    if (path.report.removed.empty()) {
        full_gcd = base_gcd;
    } else {
        ExtPoly acc = poly_lift(E, base_gcd);
        for (int a : path.report.removed) acc = poly_mul(E, acc, build_d_a(ctx, a));
        auto descended = poly_descend(E, acc);
        if (!descended) {
            path.diagnostic = "predicted gcd factor does not descend to GF(q); branch " +
                              path.report.branch + " is unverifiable over the base field";
            return path;
        }
        full_gcd = std::move(*descended);
    }
    BasePoly xn1 = poly_xn_minus_one(K, p.n);
    path.code = make_code(ctx, poly_div_exact(K, xn1, full_gcd), path.report.branch);
    return path;
}

DiscrepancyReport cross_check(const SequenceContext& ctx) {
    DiscrepancyReport rep;
    rep.oracle = generator_via_gcd(ctx);
    rep.theorem = generator_via_theorem(ctx);

    const auto& K = ctx.base();
    const auto& E = ctx.ext();
    BasePoly gcd = poly_div_exact(K, poly_xn_minus_one(K, ctx.params().n), rep.oracle.gen);
    ExtPoly gcd_ext = poly_lift(E, gcd);
    for (int a = 0; a < 6; ++a)
        rep.da_divides_gcd[a] = poly_divides(E, build_d_a(ctx, a), gcd_ext);

    if (rep.theorem.code && rep.theorem.code->gen == rep.oracle.gen) {
        rep.match = true;
    } else if (!rep.theorem.code) {
        rep.note = rep.theorem.diagnostic;
    } else {
        rep.note = "oracle generator (degree " + std::to_string(rep.oracle.gen.degree()) +
                   ") differs from the " + rep.theorem.report.branch + " prediction (degree " +
                   std::to_string(rep.theorem.code->gen.degree()) + ")";
    }
    return rep;
}

bool admissible_triple(int a, int b, int c) {
    static constexpr std::array<std::array<int, 3>, 6> kTriples{{
        {0, 1, 2}, {0, 1, 5}, {0, 4, 5}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5},
    }};
    std::array<int, 3> t{a, b, c};
    return std::find(kTriples.begin(), kTriples.end(), t) != kTriples.end();
}

CyclicCode theorem_constructor(const SequenceContext& ctx, TheoremId which, int i,
                               const std::vector<int>& idx) {
    const auto& K = ctx.base();
    const auto& E = ctx.ext();
    const auto& p = ctx.params();
    const std::uint64_t e = p.e;

    auto require_d0 = [&] {
        if (ctx.system().class_of(ctx.q() % p.n) != ResidueClass::D0)
            throw std::invalid_argument("theorem_constructor: q must lie in D_0 for this construction");
    };
    auto check_i = [&] {
        if (i != 1 && i != 2) throw std::invalid_argument("theorem_constructor: i must be 1 or 2");
    };
    auto check_idx = [&](std::size_t count) {
        if (idx.size() != count) throw std::invalid_argument("theorem_constructor: wrong number of d_a indices");
        for (int a : idx)
            if (a < 0 || a > 5) throw std::invalid_argument("theorem_constructor: d_a index out of range");
    };
    const std::uint64_t ni = (i == 1) ? p.n1 : p.n2;
    const std::uint64_t nother = (i == 1) ? p.n2 : p.n1;
    const std::uint64_t nmin = std::min(p.n1, p.n2);
    auto sqrt_ceil = [](std::uint64_t v) {
        auto r = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(v))));
        while (r * r < v) ++r;
        while (r > 0 && (r - 1) * (r - 1) >= v) --r;
        return r;
    };

    BasePoly xn1 = poly_xn_minus_one(K, p.n);
    // x^{n_i} - 1 for T3/T5/T7; (x^{n1}-1)(x^{n2}-1)/(x-1) for T4/T6/T8
    BasePoly divisor;
    std::uint64_t k = 0;
    DistanceMeta dist{};
    std::vector<int> ds;
    switch (which) {
        case TheoremId::T3:
            check_i();
            check_idx(0);
            divisor = poly_xn_minus_one(K, ni);
            k = ni;
            dist = {DistanceMeta::Kind::Exact, nother};
            break;
        case TheoremId::T4:
            check_idx(0);
            divisor = omega_base_gcd(K, p, 5);
            k = p.n1 + p.n2 - 1;
            dist = {DistanceMeta::Kind::Exact, nmin};
            break;
        case TheoremId::T5:
            check_i();
            check_idx(1);
            require_d0();
            divisor = poly_xn_minus_one(K, ni);
            ds = idx;
            k = ni + e;
            dist = {DistanceMeta::Kind::LowerBound, sqrt_ceil(nother)};
            break;
        case TheoremId::T6:
            check_idx(1);
            require_d0();
            divisor = omega_base_gcd(K, p, 5);
            ds = idx;
            k = p.n1 + p.n2 - 1 + e;
            dist = {DistanceMeta::Kind::LowerBound, sqrt_ceil(nmin)};
            break;
        case TheoremId::T7:
            check_i();
            check_idx(3);
            require_d0();
            if (!admissible_triple(idx[0], idx[1], idx[2]))
                throw std::invalid_argument("theorem_constructor: (j,h,t) triple is not admissible");
            divisor = poly_xn_minus_one(K, ni);
            ds = idx;
            k = ni + 3 * e;
            dist = {DistanceMeta::Kind::LowerBound, sqrt_ceil(nother)};
            break;
        case TheoremId::T8:
            check_idx(3);
            require_d0();
            if (!admissible_triple(idx[0], idx[1], idx[2]))
                throw std::invalid_argument("theorem_constructor: (i,j,h) triple is not admissible");
            divisor = omega_base_gcd(K, p, 5);
            ds = idx;
            k = p.n1 + p.n2 - 1 + 3 * e;
            dist = {DistanceMeta::Kind::LowerBound, sqrt_ceil(nmin)};
            break;
    }

    if (!ds.empty()) {
        ExtPoly acc = poly_lift(E, divisor);
        for (int a : ds) acc = poly_mul(E, acc, build_d_a(ctx, a));
        auto descended = poly_descend(E, acc);
        if (!descended)
            throw std::domain_error("theorem_constructor: d_a product does not descend to GF(q)");
        divisor = std::move(*descended);
    }

    CyclicCode code = make_code(ctx, poly_div_exact(K, xn1, divisor),
                                "theorem" + std::to_string(static_cast<int>(which)) + "-constructor");
    if (code.k != k) throw std::logic_error("theorem_constructor: dimension mismatch against the stated parameters");
    code.distance = dist;
    return code;
}

}  // namespace wgc
