// The binary Whiteman generalized cyclotomic sequence of order 6, the
// polynomials S(x), T(x), M(x), their evaluations at powers of β, and the
// Ω constants.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wgc/cyclotomy.hpp"
#include "wgc/field.hpp"
#include "wgc/poly.hpp"

namespace wgc {

enum class StmPoly { S, T, M };

struct OmegaTriple {
    std::uint64_t omega1 = 0;  // (n1+1)/2 mod p
    std::uint64_t omega2 = 0;  // (n2-1)/2 mod p
    std::uint64_t omega = 0;   // (n1+1)(n2-1)/2 mod p
};

OmegaTriple omega_triple(const TwoPrimeParams& params, std::uint64_t p);

class CyclotomicSequence {
public:
    static CyclotomicSequence build(WhitemanSystem sys);

    const WhitemanSystem& system() const { return *sys_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::uint64_t weight() const { return weight_; }

    // supports of S(x), T(x), M(x), sorted
    const std::vector<std::uint64_t>& support(StmPoly which) const;

    BasePoly stm_poly(const PrimeField& K, StmPoly which) const;

private:
    std::shared_ptr<const WhitemanSystem> sys_;
    std::vector<std::uint8_t> bits_;
    std::uint64_t weight_ = 0;
    std::vector<std::uint64_t> supp_s_, supp_t_, supp_m_;
};

// Everything needed to evaluate the sequence polynomials in GF(q^m):
// the splitting field, β, and the precomputed powers β^0 .. β^{n-1}.
class SequenceContext {
public:
    static SequenceContext build(std::uint64_t n1, std::uint64_t n2, std::uint64_t q);

    const TwoPrimeParams& params() const { return seq_.system().params(); }
    const WhitemanSystem& system() const { return seq_.system(); }
    const CyclotomicSequence& sequence() const { return seq_; }
    const PrimeField& base() const { return base_; }
    const ExtField& ext() const { return *ext_; }
    std::uint64_t q() const { return base_.modulus(); }
    std::uint64_t ext_degree() const { return ext_->degree(); }
    const ExtField::Elem& beta() const { return beta_pow_[1 % beta_pow_.size()]; }
    const ExtField::Elem& beta_pow(std::uint64_t i) const { return beta_pow_[i % params().n]; }

    // S/T/M evaluated at β^a, as the exact support sum Σ β^{ai mod n}
    ExtField::Elem eval(StmPoly which, std::uint64_t a) const;

    OmegaTriple omegas() const { return omega_triple(params(), q()); }

private:
    SequenceContext(CyclotomicSequence seq, PrimeField base);

    CyclotomicSequence seq_;
    PrimeField base_;
    std::shared_ptr<const ExtField> ext_;
    std::vector<ExtField::Elem> beta_pow_;
};

}  // namespace wgc
