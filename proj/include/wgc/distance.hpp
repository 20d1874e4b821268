// Minimum distances: exact by full enumeration where q^k is small, certified
// small-weight search via parity-check rank tests elsewhere, and the
// theorem-attached values/bounds.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgc/codegen.hpp"

namespace wgc {

struct DistanceResult {
    enum class Kind { Exact, LowerBound, BoundedSearchExact, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::uint64_t value = 0;
    std::string method;  // full-enumeration | support-search | theorem
    std::string note;
    std::uint64_t budget_used = 0;
    // number of codewords at the minimum weight; only when full enumeration ran
    std::uint64_t min_weight_count = 0;
    // support of one minimum-weight codeword, when the search produced one
    std::vector<std::uint64_t> witness;
};

std::string to_string(DistanceResult::Kind k);

// Enumerates all q^k - 1 nonzero codewords. Inconclusive when q^k exceeds
// the budget; a k = 0 code is reported inconclusive with note "empty code".
DistanceResult exact_min_distance(const CyclicCode& code, std::uint64_t budget = std::uint64_t{1} << 22);

// For w = 1..wmax decides whether a weight-w codeword exists by rank tests
// on w-column submatrices of the parity-check system (cyclicity pins
// position 0 into the support). Returns BoundedSearchExact at the first hit,
// LowerBound wmax+1 when none, Inconclusive when the rank-test budget runs out.
DistanceResult min_weight_support_search(const CyclicCode& code, unsigned wmax,
                                         std::uint64_t rank_budget = 100000000);

// Reads the distance metadata a theorem constructor attached; rejects a
// mismatched pairing.
DistanceResult theorem_bound(const CyclicCode& code, TheoremId which);

// c(x) -> c(x^r) mod (x^n - 1); weight-preserving for gcd(r, n) = 1.
BasePoly substitute_power(const PrimeField& K, const BasePoly& c, std::uint64_t r, std::uint64_t n);

std::uint64_t poly_weight(const BasePoly& a);

}  // namespace wgc
