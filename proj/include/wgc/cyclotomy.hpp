// Whiteman generalized cyclotomic classes of order 6 for n = n1 * n2.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wgc {

struct TwoPrimeParams {
    std::uint64_t n1 = 0;  // odd prime
    std::uint64_t n2 = 0;  // odd prime, != n1
    std::uint64_t n = 0;   // n1 * n2
    std::uint64_t e = 0;   // (n1-1)(n2-1)/6

    // Validates primality, n1 != n2 and gcd(n1-1, n2-1) = 6.
    // The pair is ordered: (n1, n2) and (n2, n1) give different systems.
    static TwoPrimeParams create(std::uint64_t n1, std::uint64_t n2);
};

enum class ResidueClass : std::uint8_t { R, N1, N2, D0, D1, D2, D3, D4, D5 };

std::string to_string(ResidueClass c);
// D-class index 0..5, or -1 for R/N1/N2
int d_index(ResidueClass c);
ResidueClass d_class(int index);

// Smallest g >= 2 that is a primitive root of both n1 and n2.
std::uint64_t common_primitive_root(std::uint64_t n1, std::uint64_t n2);

// Unique x in [0, n) with x = g (mod n1) and x = 1 (mod n2).
std::uint64_t crt_witness(std::uint64_t g, std::uint64_t n1, std::uint64_t n2);

class WhitemanSystem {
public:
    static WhitemanSystem build(const TwoPrimeParams& params);

    const TwoPrimeParams& params() const { return params_; }
    std::uint64_t g() const { return g_; }
    std::uint64_t x() const { return x_; }

    // D_i = {g^s x^i : 0 <= s < e}, sorted
    const std::vector<std::uint64_t>& d_set(int i) const { return classes_.at(i); }
    const std::vector<std::uint64_t>& n1_set() const { return N1_; }  // {n1, 2n1, ...}
    const std::vector<std::uint64_t>& n2_set() const { return N2_; }

    ResidueClass class_of(std::uint64_t a) const;

private:
    TwoPrimeParams params_;
    std::uint64_t g_ = 0, x_ = 0;
    std::array<std::vector<std::uint64_t>, 6> classes_;
    std::vector<std::uint64_t> N1_, N2_;
    std::vector<ResidueClass> membership_;  // length n
};

}  // namespace wgc
