// Generator polynomials of the cyclic code defined by the sequence, by the
// gcd oracle and by the closed-form theorem path, plus the auxiliary code
// constructors with their distance metadata.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wgc/sequence.hpp"

namespace wgc {

enum class Membership { Zero, MinusOne, Neither };

std::string to_string(Membership m);

struct DistanceMeta {
    enum class Kind { Exact, LowerBound } kind;
    std::uint64_t value;
};

struct CyclicCode {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t n1 = 0, n2 = 0;
    BasePoly gen;       // monic divisor of x^n - 1
    std::uint64_t k = 0;  // n - deg(gen)
    std::string provenance;
    std::optional<DistanceMeta> distance;  // attached by theorem constructors
};

struct ClassificationReport {
    ResidueClass q_class = ResidueClass::R;
    OmegaTriple omegas;
    ExtField::Elem sbeta, tbeta, mbeta;
    Membership memb_s = Membership::Neither;
    Membership memb_t = Membership::Neither;
    Membership memb_m = Membership::Neither;
    std::string branch;            // e.g. "theorem1-case-5", "theorem2-case-II(i)"
    int omega_case = 0;            // 1..5, the Ω row of the theorem tables
    std::vector<int> removed;      // d_a indices divided out of the base gcd (m/s/t)
};

ClassificationReport classify(const SequenceContext& ctx);

// d_a(x) = ∏_{i in D_a}(x - β^i), monic of degree e, over GF(q^m)
ExtPoly build_d_a(const SequenceContext& ctx, int a);

// The oracle: gen = (x^n - 1)/gcd(x^n - 1, S(x)) over GF(q).
CyclicCode generator_via_gcd(const SequenceContext& ctx);

struct TheoremPath {
    ClassificationReport report;
    std::optional<CyclicCode> code;  // empty when the branch is unverifiable
    std::string diagnostic;          // why, when empty
};

// Closed-form path: dispatches to Theorem 1 (q in D1/D3/D5) or Theorem 2
// (q in D0/D2/D4) on the classification.
TheoremPath generator_via_theorem(const SequenceContext& ctx);

struct DiscrepancyReport {
    CyclicCode oracle;
    TheoremPath theorem;
    bool match = false;
    std::array<bool, 6> da_divides_gcd{};  // trial division of each d_a into the oracle gcd
    std::string note;
};

DiscrepancyReport cross_check(const SequenceContext& ctx);

// Theorems 3-8 constructors. `i` selects n_i for T3/T5/T7 (1 or 2) and is
// ignored otherwise; `idx` holds the d_a indices: T5 {j}, T6 {j},
// T7 {j,h,t}, T8 {i,j,h}.
enum class TheoremId { T3 = 3, T4, T5, T6, T7, T8 };

bool admissible_triple(int a, int b, int c);

CyclicCode theorem_constructor(const SequenceContext& ctx, TheoremId which, int i,
                               const std::vector<int>& idx);

}  // namespace wgc
