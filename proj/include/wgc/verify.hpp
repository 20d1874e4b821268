// Structural checks on a parameter set: the class-algebra and character-sum
// identities behind the closed-form generators, the x^n - 1 factorization,
// and oracle self-consistency. Exact arithmetic throughout; a failure
// carries a human-readable detail string.
#pragma once

#include <string>
#include <vector>

#include "wgc/codegen.hpp"

namespace wgc {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// rD_j = D_{(i+j) mod 6} for every r in D_i, exhaustively.
CheckResult check_class_translation(const WhitemanSystem& sys);

// Partition of Z_n into R, N1, N2, D_0..D_5 with the right sizes, and the
// mod-n1 / mod-n2 reduction multiplicities of each D_j.
CheckResult check_partition(const WhitemanSystem& sys);

// Σ_{N1} β^i = Σ_{N2} β^i = -1 and Σ_{Z_n^*} β^i = 1.
CheckResult check_unit_sums(const SequenceContext& ctx);

// Σ_{D_j} β^{ai} closed forms for a in N1 and N2, all j.
CheckResult check_class_sums(const SequenceContext& ctx);

// S/T/M(β^a) closed-form table against direct evaluation, for every a in Z_n.
CheckResult check_evaluation_table(const SequenceContext& ctx);

// The class-of-q facts: D1/D3/D5 excludes {0,-1}; D0 gives q-Frobenius
// fixedness; D2/D4 gives q^3-Frobenius fixedness.
CheckResult check_qclass_facts(const SequenceContext& ctx);

// x^n - 1 = (x^{n1}-1)(x^{n2}-1)/(x-1) * Π d_i(x), by exact multiplication.
CheckResult check_root_factorization(const SequenceContext& ctx);

// gen | x^n - 1, k = deg gcd, and the sequence weight formula.
CheckResult check_oracle_consistency(const SequenceContext& ctx);

// All of the above in order.
std::vector<CheckResult> run_all_checks(const SequenceContext& ctx);

}  // namespace wgc
