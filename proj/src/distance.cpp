#include "wgc/distance.hpp"

#include <algorithm>
#include <limits>

namespace wgc {

std::string to_string(DistanceResult::Kind k) {
    switch (k) {
        case DistanceResult::Kind::Exact: return "exact";
        case DistanceResult::Kind::LowerBound: return "lower-bound";
        case DistanceResult::Kind::BoundedSearchExact: return "bounded-search-exact";
        default: return "inconclusive";
    }
}

std::uint64_t poly_weight(const BasePoly& a) {
    return static_cast<std::uint64_t>(std::count_if(a.c.begin(), a.c.end(), [](std::uint64_t v) { return v != 0; }));
}

BasePoly substitute_power(const PrimeField& K, const BasePoly& c, std::uint64_t r, std::uint64_t n) {
    BasePoly out;
    out.c.assign(n, K.zero());
    for (std::size_t i = 0; i < c.c.size(); ++i)
        out.c[(i * (r % n)) % n] = K.add(out.c[(i * (r % n)) % n], c.c[i]);
    poly_trim(K, out);
    return out;
}

DistanceResult exact_min_distance(const CyclicCode& code, std::uint64_t budget) {
    DistanceResult res;
    res.method = "full-enumeration";
    if (code.k == 0) {
        res.note = "empty code";
        return res;
    }
    const PrimeField K(code.q);
    const std::uint64_t q = code.q;

    // q^k against the budget, without overflow
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < code.k; ++i) {
        if (total > budget / q) {
            res.note = "q^k exceeds enumeration budget";
            return res;
        }
        total *= q;
    }

    const std::uint64_t n = code.n;
    const auto& g = code.gen.c;
    std::vector<std::uint64_t> digits(code.k, 0), c(n, 0);
    std::uint64_t weight = 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max(), best_count = 0;
    std::vector<std::uint64_t> best_support;

    // base-q odometer over the message digits; incrementing digit i adds
    // x^i * g(x) to the codeword, wrap included (q copies sum to zero)
    auto add_shifted = [&](std::size_t i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] == 0) continue;
            std::uint64_t& cell = c[i + j];
            if (cell != 0) --weight;
            cell = K.add(cell, g[j]);
            if (cell != 0) ++weight;
        }
    };

    for (;;) {
        std::size_t i = 0;
        bool wrapped = false;
        for (;;) {
            add_shifted(i);
            if (++digits[i] < q) break;
            digits[i] = 0;
            if (++i == code.k) {
                wrapped = true;
                break;
            }
        }
        if (wrapped) break;
        ++res.budget_used;
        if (weight < best) {
            best = weight;
            best_count = 1;
            best_support.clear();
            for (std::uint64_t j = 0; j < n; ++j)
                if (c[j] != 0) best_support.push_back(j);
        } else if (weight == best) {
            ++best_count;
        }
    }

    res.kind = DistanceResult::Kind::Exact;
    res.value = best;
    res.min_weight_count = best_count;
    res.witness = std::move(best_support);
    return res;
}

namespace {

struct SearchOutcome {
    bool found = false;
    bool exhausted_budget = false;
    std::vector<std::uint64_t> support;
};

// GF(2) kernel: columns bitpacked into 64-bit words.
SearchOutcome search_gf2(const std::vector<std::vector<std::uint64_t>>& cols, unsigned w,
                         std::uint64_t& budget) {
    const std::size_t words = cols[0].size();
    const std::size_t n = cols.size();
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<int> pivots;
    std::vector<std::uint64_t> chosen;
    SearchOutcome out;

    auto pivot_of = [&](const std::vector<std::uint64_t>& v) -> int {
        for (std::size_t wd = words; wd-- > 0;)
            if (v[wd]) return static_cast<int>(wd * 64 + (63 - __builtin_clzll(v[wd])));
        return -1;
    };

    // column 0 is always in the support (cyclic shift argument)
    chosen.push_back(0);
    basis.push_back(cols[0]);
    pivots.push_back(pivot_of(cols[0]));

    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        const unsigned depth = static_cast<unsigned>(chosen.size());
        for (std::size_t j = start; j + (w - depth - 1) < n; ++j) {
            if (budget == 0) {
                out.exhausted_budget = true;
                return true;
            }
            --budget;
            std::vector<std::uint64_t> v = cols[j];
            for (std::size_t b = 0; b < basis.size(); ++b) {
                int p = pivots[b];
                if (v[p / 64] >> (p % 64) & 1)
                    for (std::size_t wd = 0; wd < words; ++wd) v[wd] ^= basis[b][wd];
            }
            int p = pivot_of(v);
            chosen.push_back(j);
            if (p < 0) {
                out.found = true;
                out.support = chosen;
                return true;
            }
            if (depth + 1 < w) {
                basis.push_back(std::move(v));
                pivots.push_back(p);
                if (self(self, j + 1)) return true;
                basis.pop_back();
                pivots.pop_back();
            }
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 1);
    return out;
}

// Generic kernel over GF(q).
SearchOutcome search_generic(const PrimeField& K, const std::vector<std::vector<std::uint64_t>>& cols,
                             unsigned w, std::uint64_t& budget) {
    const std::size_t r = cols[0].size();
    const std::size_t n = cols.size();
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::uint64_t> chosen;
    SearchOutcome out;

    // column 0 is always in the support (cyclic shift argument)
    {
        std::vector<std::uint64_t> v0 = cols[0];
        std::size_t p0 = r;
        for (std::size_t t = r; t-- > 0;)
            if (v0[t]) {
                p0 = t;
                break;
            }
        std::uint64_t inv = K.inv(v0[p0]);
        for (auto& t : v0) t = K.mul(t, inv);
        chosen.push_back(0);
        basis.push_back(std::move(v0));
        pivots.push_back(p0);
    }

    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        const unsigned depth = static_cast<unsigned>(chosen.size());
        for (std::size_t j = start; j + (w - depth - 1) < n; ++j) {
            if (budget == 0) {
                out.exhausted_budget = true;
                return true;
            }
            --budget;
            std::vector<std::uint64_t> v = cols[j];
            for (std::size_t b = 0; b < basis.size(); ++b) {
                std::uint64_t f = v[pivots[b]];
                if (f == 0) continue;
                for (std::size_t t = 0; t < r; ++t) v[t] = K.sub(v[t], K.mul(f, basis[b][t]));
            }
            std::size_t p = r;
            for (std::size_t t = r; t-- > 0;)
                if (v[t]) {
                    p = t;
                    break;
                }
            chosen.push_back(j);
            if (p == r) {
                out.found = true;
                out.support = chosen;
                return true;
            }
            if (depth + 1 < w) {
                std::uint64_t inv = K.inv(v[p]);
                for (auto& t : v) t = K.mul(t, inv);
                basis.push_back(std::move(v));
                pivots.push_back(p);
                if (self(self, j + 1)) return true;
                basis.pop_back();
                pivots.pop_back();
            }
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 1);
    return out;
}

}  // namespace

DistanceResult min_weight_support_search(const CyclicCode& code, unsigned wmax, std::uint64_t rank_budget) {
    DistanceResult res;
    res.method = "support-search";
    if (code.k == 0) {
        res.note = "empty code";
        return res;
    }
    const PrimeField K(code.q);
    const std::uint64_t n = code.n;
    const std::size_t r = code.gen.c.size() - 1;  // n - k
    if (r == 0) {
        // gen = 1: the whole space, x^0 is a weight-1 codeword
        res.kind = DistanceResult::Kind::BoundedSearchExact;
        res.value = 1;
        res.witness = {0};
        return res;
    }

    // syndrome columns x^j mod gen; a codeword with support J exists iff
    // the J columns are linearly dependent
    std::vector<std::vector<std::uint64_t>> residues(n);
    {
        std::vector<std::uint64_t> cur(r, 0);
        cur[0] = 1;
        for (std::uint64_t j = 0; j < n; ++j) {
            residues[j] = cur;
            // cur <- x * cur mod gen (gen monic)
            std::uint64_t top = cur[r - 1];
            for (std::size_t t = r; t-- > 1;) cur[t] = cur[t - 1];
            cur[0] = 0;
            if (top != 0)
                for (std::size_t t = 0; t < r; ++t) cur[t] = K.sub(cur[t], K.mul(top, code.gen.c[t]));
        }
    }

    const bool gf2 = (code.q == 2);
    std::vector<std::vector<std::uint64_t>> packed;
    if (gf2) {
        const std::size_t words = (r + 63) / 64;
        packed.assign(n, std::vector<std::uint64_t>(words, 0));
        for (std::uint64_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < r; ++t)
                if (residues[j][t]) packed[j][t / 64] |= std::uint64_t{1} << (t % 64);
    }

    std::uint64_t budget = rank_budget;
    for (unsigned w = 1; w <= wmax; ++w) {
        // cyclic shift puts position 0 into any support, so searching subsets
        // containing column 0 is exhaustive; restrict to tails starting past 0
        SearchOutcome got;
        if (w == 1) {
            got.found = false;  // column 0 = x^0 mod gen = 1, nonzero since r >= 1
            --budget;
        } else {
            got = gf2 ? search_gf2(packed, w, budget) : search_generic(K, residues, w, budget);
        }
        res.budget_used = rank_budget - budget;
        if (got.exhausted_budget) {
            res.note = "rank-test budget exhausted at w = " + std::to_string(w);
            return res;
        }
        if (got.found) {
            res.kind = DistanceResult::Kind::BoundedSearchExact;
            res.value = static_cast<std::uint64_t>(got.support.size());
            res.witness = std::move(got.support);
            return res;
        }
    }
    res.kind = DistanceResult::Kind::LowerBound;
    res.value = wmax + 1;
    return res;
}

DistanceResult theorem_bound(const CyclicCode& code, TheoremId which) {
    const std::string expect = "theorem" + std::to_string(static_cast<int>(which)) + "-constructor";
    if (code.provenance != expect || !code.distance)
        throw std::invalid_argument("theorem_bound: code was not produced by the " + expect + " path");
    DistanceResult res;
    res.method = "theorem";
    res.kind = code.distance->kind == DistanceMeta::Kind::Exact ? DistanceResult::Kind::Exact
                                                                : DistanceResult::Kind::LowerBound;
    res.value = code.distance->value;
    return res;
}

}  // namespace wgc
