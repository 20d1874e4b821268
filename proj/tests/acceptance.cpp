// End-to-end acceptance run: one line per criterion, nonzero exit when any
// criterion fails. Failures print the computed values so a red line carries
// its own analysis.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "wgc/distance.hpp"
#include "wgc/examples.hpp"
#include "wgc/verify.hpp"

using namespace wgc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, SequenceContext> g_contexts;

const SequenceContext& ctx_for(std::uint64_t n1, std::uint64_t n2, std::uint64_t q) {
    auto key = std::make_tuple(n1, n2, q);
    auto it = g_contexts.find(key);
    if (it == g_contexts.end()) it = g_contexts.emplace(key, SequenceContext::build(n1, n2, q)).first;
    return it->second;
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& msg) {
        ok = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << msg;
    }
    void note(const std::string& msg) {
        if (detail.tellp() > 0) detail << "; ";
        detail << msg;
    }
};

// the published degree-19 generator of the [91, 72] code
constexpr const char* kDeg19 = "1,1,1,1,1,1,1,0,0,0,0,0,0,1,1,1,1,1,1,1";

Outcome criterion_91_72_code() {
    Outcome out;
    auto t0 = Clock::now();
    const SequenceContext& ctx = ctx_for(7, 13, 2);
    const PrimeField& K = ctx.base();
    CyclicCode oracle = generator_via_gcd(ctx);
    BasePoly gcd = poly_div_exact(K, poly_xn_minus_one(K, 91), oracle.gen);
    BasePoly pub = poly_from_comma(K, kDeg19);
    if (gcd != pub) out.fail("gcd(x^91-1, S(x)) != published degree-19 polynomial");

    CyclicCode code;
    code.n = 91;
    code.q = 2;
    code.n1 = 7;
    code.n2 = 13;
    code.gen = pub;
    code.k = 91 - static_cast<std::uint64_t>(pub.degree());
    if (code.k != 72) out.fail("published polynomial does not generate a [91, 72] code");
    DistanceResult dr = min_weight_support_search(code, 4);
    if (dr.kind != DistanceResult::Kind::BoundedSearchExact || dr.value != 4)
        out.fail("support search did not certify d = 4 (got " + to_string(dr.kind) + " " +
                 std::to_string(dr.value) + ")");
    double t = seconds_since(t0);
    if (t >= 10.0) out.fail("took " + std::to_string(t) + " s (budget 10 s)");
    if (out.ok)
        out.note("note: the minimal-polynomial formula assigns the degree-19 polynomial the gcd "
                 "role; its generator is the degree-72 complement, matching the closed form");
    return out;
}

Outcome criterion_91_1_code() {
    Outcome out;
    auto t0 = Clock::now();
    const SequenceContext& ctx = ctx_for(13, 7, 2);
    const PrimeField& K = ctx.base();
    CyclicCode oracle = generator_via_gcd(ctx);
    if (oracle.k != 1) out.fail("k = " + std::to_string(oracle.k) + ", expected 1");
    BasePoly all_ones =
        poly_div_exact(K, poly_xn_minus_one(K, 91), poly_from_comma(K, "1,1"));
    if (oracle.gen != all_ones) out.fail("generator is not (x^91-1)/(x-1)");
    DistanceResult dr = exact_min_distance(oracle);
    if (dr.kind != DistanceResult::Kind::Exact || dr.value != 91)
        out.fail("enumeration gave d = " + std::to_string(dr.value) + ", expected 91");
    double t = seconds_since(t0);
    if (t >= 1.0) out.fail("took " + std::to_string(t) + " s (budget 1 s)");
    return out;
}

Outcome criterion_gcd_dimensions() {
    Outcome out;
    struct Row {
        std::uint64_t n1, n2, q, published_k;
    };
    const Row rows[] = {{13, 19, 2, 109}, {19, 13, 2, 139}, {31, 19, 3, 289}, {19, 31, 3, 301}};
    for (const auto& r : rows) {
        auto t0 = Clock::now();
        const SequenceContext& ctx = ctx_for(r.n1, r.n2, r.q);
        CyclicCode oracle = generator_via_gcd(ctx);
        double t = seconds_since(t0);
        if (oracle.k != r.published_k) {
            out.fail("(" + std::to_string(r.n1) + "," + std::to_string(r.n2) + "," +
                     std::to_string(r.q) + "): computed k = " + std::to_string(oracle.k) +
                     ", published " + std::to_string(r.published_k));
        }
        if (t >= 60.0)
            out.fail("(" + std::to_string(r.n1) + "," + std::to_string(r.n2) + ") took " +
                     std::to_string(t) + " s (budget 60 s)");
        // the closed form must match the oracle or name the divergent branch
        TheoremPath path = generator_via_theorem(ctx);
        const bool matches = path.code && path.code->gen == oracle.gen;
        if (!matches && path.diagnostic.empty())
            out.fail("closed-form branch " + path.report.branch +
                     " silently diverges from the oracle");
        else if (matches)
            out.note("(" + std::to_string(r.n1) + "," + std::to_string(r.n2) + "," +
                     std::to_string(r.q) + "): k = " + std::to_string(oracle.k) + ", branch " +
                     path.report.branch + " matches");
    }
    if (!out.ok)
        out.note("the two q = 3 values are unreachable as published for any common primitive "
                 "root: the omega constants fix the gcd degree to 31 mod 90 for (31,19) and 19 "
                 "mod 90 for (19,31), so the published 289/301 pairing is swapped");
    return out;
}

Outcome criterion_exact_t3_t4() {
    Outcome out;
    {
        auto t0 = Clock::now();
        CyclicCode c3 = theorem_constructor(ctx_for(13, 31, 2), TheoremId::T3, 1, {});
        DistanceResult dr = exact_min_distance(c3);
        if (dr.kind != DistanceResult::Kind::Exact || dr.value != 31)
            out.fail("[403, 13] enumeration gave d = " + std::to_string(dr.value) + ", expected 31");
        if (dr.budget_used != 8191) out.fail("[403, 13] enumerated " + std::to_string(dr.budget_used) + " codewords, expected 8191");
        double t = seconds_since(t0);
        if (t >= 5.0) out.fail("[403, 13] took " + std::to_string(t) + " s (budget 5 s)");
    }
    {
        auto t0 = Clock::now();
        CyclicCode c4 = theorem_constructor(ctx_for(7, 13, 2), TheoremId::T4, 0, {});
        if (c4.k != 19) out.fail("[91, 19] has k = " + std::to_string(c4.k));
        DistanceResult dr = exact_min_distance(c4);
        if (dr.kind != DistanceResult::Kind::Exact || dr.value != 7)
            out.fail("[91, 19] enumeration gave d = " + std::to_string(dr.value) + ", expected 7");
        double t = seconds_since(t0);
        if (t >= 60.0) out.fail("[91, 19] took " + std::to_string(t) + " s (budget 60 s)");
    }
    return out;
}

Outcome criterion_bound_consistency() {
    Outcome out;
    const SequenceContext& ctx = ctx_for(13, 19, 2);
    if (ctx.system().class_of(2) != ResidueClass::D0) {
        out.fail("q = 2 is not in D_0 for (13, 19)");
        return out;
    }
    const PrimeField& K = ctx.base();
    static constexpr std::array<std::array<int, 3>, 6> kTriples{{
        {0, 1, 2}, {0, 1, 5}, {0, 4, 5}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5},
    }};

    std::vector<CyclicCode> codes;
    for (int i : {1, 2})
        for (int j = 0; j < 6; ++j) codes.push_back(theorem_constructor(ctx, TheoremId::T5, i, {j}));
    for (int j = 0; j < 6; ++j) codes.push_back(theorem_constructor(ctx, TheoremId::T6, 0, {j}));
    for (int i : {1, 2})
        for (const auto& t : kTriples)
            codes.push_back(theorem_constructor(ctx, TheoremId::T7, i, {t[0], t[1], t[2]}));
    for (const auto& t : kTriples)
        codes.push_back(theorem_constructor(ctx, TheoremId::T8, 0, {t[0], t[1], t[2]}));

    for (const auto& code : codes) {
        const std::uint64_t bound = code.distance->value;
        DistanceResult dr = min_weight_support_search(code, static_cast<unsigned>(bound - 1));
        if (dr.kind == DistanceResult::Kind::BoundedSearchExact && dr.value < bound) {
            out.fail(code.provenance + " k=" + std::to_string(code.k) + ": found weight " +
                     std::to_string(dr.value) + " below the bound " + std::to_string(bound));
            continue;
        }
        if (dr.kind != DistanceResult::Kind::LowerBound) {
            out.fail(code.provenance + " k=" + std::to_string(code.k) +
                     ": search inconclusive: " + dr.note);
            continue;
        }

        // c(x) -> c(x^r) keeps the weight for units r; 100 deterministic words
        bool all_kept = true;
        for (std::uint64_t t = 1; t <= 100 && all_kept; ++t) {
            BasePoly msg;
            for (std::uint64_t v = t, b = 0; v; v >>= 1, ++b)
                if (v & 1) msg = poly_add(K, msg, poly_monomial(K, K.one(), b));
            BasePoly c = poly_mul(K, msg, code.gen);
            const std::uint64_t w = poly_weight(c);
            for (int j = 0; j < 6; ++j) {
                std::uint64_t r = ctx.system().d_set(j).front();
                if (poly_weight(substitute_power(K, c, r, code.n)) != w) {
                    out.fail(code.provenance + ": weight not preserved under x -> x^" +
                             std::to_string(r));
                    all_kept = false;
                    break;
                }
            }
        }
    }
    if (out.ok)
        out.note(std::to_string(codes.size()) + " codes: bounds certified by search, " +
                 "weight preservation on 100 words each");
    return out;
}

Outcome criterion_identity_suite() {
    Outcome out;
    auto t0 = Clock::now();
    for (auto [n1, n2] : {std::pair<std::uint64_t, std::uint64_t>{7, 13}, {13, 7}, {13, 19}, {19, 13}}) {
        const SequenceContext& ctx = ctx_for(n1, n2, 2);
        for (const auto& r : run_all_checks(ctx))
            if (!r.ok)
                out.fail("(" + std::to_string(n1) + "," + std::to_string(n2) + ") " + r.name + ": " +
                         r.detail);
    }
    double t = seconds_since(t0);
    if (t >= 300.0) out.fail("took " + std::to_string(t) + " s (budget 300 s)");
    return out;
}

Outcome criterion_oracle_consistency() {
    Outcome out;
    const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> sets[] = {
        {7, 13, 2}, {13, 7, 2}, {13, 19, 2}, {19, 13, 2}, {13, 31, 2}, {31, 19, 3}, {19, 31, 3},
    };
    for (auto [n1, n2, q] : sets) {
        auto r = check_oracle_consistency(ctx_for(n1, n2, q));
        if (!r.ok)
            out.fail("(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(q) +
                     "): " + r.detail);
    }
    return out;
}

Outcome criterion_documented_discrepancies(const std::vector<ExampleOutcome>& rows) {
    Outcome out;
    for (const auto& r : rows)
        if (!r.consistent) out.fail("row " + std::to_string(r.id) + " internally inconsistent");

    auto row_with = [&](int id) -> const ExampleOutcome& {
        return *std::find_if(rows.begin(), rows.end(),
                             [&](const ExampleOutcome& r) { return r.id == id; });
    };
    auto mentions = [](const ExampleOutcome& r, const std::string& needle) {
        return std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                           [&](const std::string& d) { return d.find(needle) != std::string::npos; });
    };
    if (!mentions(row_with(1), "gcd"))
        out.fail("row 1 does not flag the generator/gcd tension");
    if (!mentions(row_with(5), "omega"))
        out.fail("row 5 does not flag the omega discrepancy");
    int code = examples_exit_code(rows);
    if (code != 2) out.fail("examples exit code is " + std::to_string(code) + ", expected 2");
    return out;
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    std::vector<std::pair<std::string, Outcome>> results;
    results.emplace_back("reproduce [91,72,4] code", criterion_91_72_code());
    results.emplace_back("reproduce [91,1,91] code", criterion_91_1_code());
    results.emplace_back("gcd-path dimensions 109/139/289/301", criterion_gcd_dimensions());
    results.emplace_back("exact distances for constructions 3-4", criterion_exact_t3_t4());
    results.emplace_back("bound consistency for constructions 5-8", criterion_bound_consistency());
    results.emplace_back("structural identity suite", criterion_identity_suite());
    results.emplace_back("oracle self-consistency", criterion_oracle_consistency());
    results.emplace_back("documented-discrepancy reporting",
                         criterion_documented_discrepancies(run_examples()));

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& [name, out] = results[i];
        if (!out.ok) ++failures;
        std::cout << "criterion " << (i + 1) << " (" << name << "): " << (out.ok ? "PASS" : "FAIL");
        const std::string detail = out.detail.str();
        if (!detail.empty()) std::cout << " - " << detail;
        std::cout << "\n";
    }
    std::cout << failures << " of " << results.size() << " criteria failed; total "
              << seconds_since(t0) << " s\n";
    return failures == 0 ? 0 : 1;
}
