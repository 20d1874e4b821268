#include "wgc/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wgc {

OmegaTriple omega_triple(const TwoPrimeParams& params, std::uint64_t p) {
    OmegaTriple o;
    o.omega1 = ((params.n1 + 1) / 2) % p;
    o.omega2 = ((params.n2 - 1) / 2) % p;
    o.omega = ((params.n1 + 1) * (params.n2 - 1) / 2) % p;
    return o;
}

CyclotomicSequence CyclotomicSequence::build(WhitemanSystem sys) {
    CyclotomicSequence seq;
    seq.sys_ = std::make_shared<WhitemanSystem>(std::move(sys));
    const auto& s = *seq.sys_;
    const std::uint64_t n = s.params().n;

    seq.bits_.assign(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        switch (s.class_of(i)) {
            case ResidueClass::N1:
            case ResidueClass::D0:
            case ResidueClass::D1:
            case ResidueClass::D2:
                seq.bits_[i] = 1;
                break;
            default:
                break;
        }
    }
    seq.weight_ = std::accumulate(seq.bits_.begin(), seq.bits_.end(), std::uint64_t{0});

    auto collect = [&](std::vector<std::uint64_t>& out, std::initializer_list<int> d_classes) {
        out = s.n1_set();
        for (int d : d_classes) {
            const auto& cls = s.d_set(d);
            out.insert(out.end(), cls.begin(), cls.end());
        }
        std::sort(out.begin(), out.end());
    };
    collect(seq.supp_s_, {0, 1, 2});
    collect(seq.supp_t_, {1, 2, 3});
    collect(seq.supp_m_, {2, 3, 4});
    return seq;
}

const std::vector<std::uint64_t>& CyclotomicSequence::support(StmPoly which) const {
    switch (which) {
        case StmPoly::S: return supp_s_;
        case StmPoly::T: return supp_t_;
        case StmPoly::M: return supp_m_;
    }
    throw std::invalid_argument("CyclotomicSequence::support: bad selector");
}

BasePoly CyclotomicSequence::stm_poly(const PrimeField& K, StmPoly which) const {
    return poly_from_support(K, support(which));
}

SequenceContext::SequenceContext(CyclotomicSequence seq, PrimeField base)
    : seq_(std::move(seq)), base_(base) {}

SequenceContext SequenceContext::build(std::uint64_t n1, std::uint64_t n2, std::uint64_t q) {
    auto params = TwoPrimeParams::create(n1, n2);
    if (std::gcd(q, params.n) != 1)
        throw std::invalid_argument("SequenceContext: gcd(q, n) != 1");
    SequenceContext ctx(CyclotomicSequence::build(WhitemanSystem::build(params)), PrimeField(q));
    ctx.ext_ = std::make_shared<ExtField>(splitting_field(q, params.n));
    ExtField::Elem beta = nth_root_of_unity(*ctx.ext_, params.n);
    ctx.beta_pow_.reserve(params.n);
    ctx.beta_pow_.push_back(ctx.ext_->one());
    for (std::uint64_t i = 1; i < params.n; ++i)
        ctx.beta_pow_.push_back(ctx.ext_->mul(ctx.beta_pow_.back(), beta));
    return ctx;
}

ExtField::Elem SequenceContext::eval(StmPoly which, std::uint64_t a) const {
    const std::uint64_t n = params().n;
    ExtField::Elem r = ext_->zero();
    for (std::uint64_t i : seq_.support(which))
        r = ext_->add(r, beta_pow_[(a % n) * i % n]);
    return r;
}

}  // namespace wgc
