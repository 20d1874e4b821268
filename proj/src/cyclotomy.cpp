#include "wgc/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wgc/field.hpp"

namespace wgc {

TwoPrimeParams TwoPrimeParams::create(std::uint64_t n1, std::uint64_t n2) {
    if (!is_prime_u64(n1) || n1 == 2) throw std::invalid_argument("TwoPrimeParams: n1 = " + std::to_string(n1) + " is not an odd prime");
    if (!is_prime_u64(n2) || n2 == 2) throw std::invalid_argument("TwoPrimeParams: n2 = " + std::to_string(n2) + " is not an odd prime");
    if (n1 == n2) throw std::invalid_argument("TwoPrimeParams: n1 and n2 must be distinct");
    if (std::gcd(n1 - 1, n2 - 1) != 6)
        throw std::invalid_argument("TwoPrimeParams: gcd(n1-1, n2-1) = " +
                                    std::to_string(std::gcd(n1 - 1, n2 - 1)) + ", expected 6");
    TwoPrimeParams p;
    p.n1 = n1;
    p.n2 = n2;
    p.n = n1 * n2;
    p.e = (n1 - 1) * (n2 - 1) / 6;
    return p;
}

std::string to_string(ResidueClass c) {
    switch (c) {
        case ResidueClass::R: return "R";
        case ResidueClass::N1: return "N1";
        case ResidueClass::N2: return "N2";
        default: return "D" + std::to_string(d_index(c));
    }
}

int d_index(ResidueClass c) {
    int v = static_cast<int>(c) - static_cast<int>(ResidueClass::D0);
    return (v >= 0 && v < 6) ? v : -1;
}

ResidueClass d_class(int index) {
    if (index < 0 || index > 5) throw std::invalid_argument("d_class: index out of range");
    return static_cast<ResidueClass>(static_cast<int>(ResidueClass::D0) + index);
}

namespace {

bool is_primitive_root_mod(std::uint64_t g, std::uint64_t p) {
    std::uint64_t r = g % p;
    if (r == 0) return false;
    PrimeField F(p);
    for (std::uint64_t f : prime_factors_u64(p - 1))
        if (F.pow(r, (p - 1) / f) == 1) return false;
    return true;
}

}  // namespace

std::uint64_t common_primitive_root(std::uint64_t n1, std::uint64_t n2) {
    for (std::uint64_t g = 2;; ++g)
        if (is_primitive_root_mod(g, n1) && is_primitive_root_mod(g, n2)) return g;
}

std::uint64_t crt_witness(std::uint64_t g, std::uint64_t n1, std::uint64_t n2) {
    // x = g (mod n1), x = 1 (mod n2)
    PrimeField F1(n1);
    std::uint64_t n2_inv = F1.inv(n2 % n1);
    std::uint64_t t = F1.mul(F1.sub(g % n1, 1 % n1), n2_inv);
    return (1 + t * n2) % (n1 * n2);
}

WhitemanSystem WhitemanSystem::build(const TwoPrimeParams& params) {
    WhitemanSystem sys;
    sys.params_ = params;
    sys.g_ = common_primitive_root(params.n1, params.n2);
    sys.x_ = crt_witness(sys.g_, params.n1, params.n2);

    const std::uint64_t n = params.n;
    constexpr auto kUnset = static_cast<ResidueClass>(255);
    sys.membership_.assign(n, kUnset);

    auto assign = [&](std::uint64_t a, ResidueClass c) {
        if (sys.membership_[a] != kUnset)
            throw std::logic_error("WhitemanSystem: residue " + std::to_string(a) +
                                   " assigned twice (" + to_string(sys.membership_[a]) + " and " + to_string(c) + ")");
        sys.membership_[a] = c;
    };

    assign(0, ResidueClass::R);
    for (std::uint64_t t = 1; t < params.n2; ++t) {
        sys.N1_.push_back(t * params.n1);
        assign(t * params.n1, ResidueClass::N1);
    }
    for (std::uint64_t t = 1; t < params.n1; ++t) {
        sys.N2_.push_back(t * params.n2);
        assign(t * params.n2, ResidueClass::N2);
    }

    for (int i = 0; i < 6; ++i) {
        std::uint64_t xi = 1;
        for (int t = 0; t < i; ++t) xi = (xi * sys.x_) % n;
        std::uint64_t v = xi;
        auto& cls = sys.classes_[i];
        for (std::uint64_t s = 0; s < params.e; ++s) {
            cls.push_back(v);
            assign(v, d_class(i));
            v = (v * sys.g_) % n;
        }
        std::sort(cls.begin(), cls.end());
    }

    for (std::uint64_t a = 0; a < n; ++a)
        if (sys.membership_[a] == kUnset)
            throw std::logic_error("WhitemanSystem: residue " + std::to_string(a) + " not covered by the partition");
    return sys;
}

ResidueClass WhitemanSystem::class_of(std::uint64_t a) const {
    if (a >= params_.n) throw std::out_of_range("WhitemanSystem::class_of: residue out of range");
    return membership_[a];
}

}  // namespace wgc
