// Dense univariate polynomial arithmetic over GF(q) and GF(q^m).
// Free functions templated on the field type; the field object carries the
// modulus, so every operation takes it as the first argument.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wgc/field.hpp"

namespace wgc {

// Canonical form: ascending coefficients with no trailing zero; the zero
// polynomial has an empty coefficient vector.
template <class F>
struct Poly {
    std::vector<typename F::Elem> c;

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }

    bool operator==(const Poly&) const = default;
};

using BasePoly = Poly<PrimeField>;
using ExtPoly = Poly<ExtField>;

template <class F>
void poly_trim(const F& K, Poly<F>& a) {
    while (!a.c.empty() && K.is_zero(a.c.back())) a.c.pop_back();
}

template <class F>
Poly<F> poly_from_coeffs(const F& K, std::vector<typename F::Elem> c) {
    Poly<F> p{std::move(c)};
    poly_trim(K, p);
    return p;
}

template <class F>
Poly<F> poly_zero(const F&) {
    return {};
}

template <class F>
Poly<F> poly_one(const F& K) {
    return {{K.one()}};
}

template <class F>
Poly<F> poly_constant(const F& K, typename F::Elem v) {
    Poly<F> p{{std::move(v)}};
    poly_trim(K, p);
    return p;
}

// c * x^k
template <class F>
Poly<F> poly_monomial(const F& K, typename F::Elem coeff, std::size_t k) {
    if (K.is_zero(coeff)) return {};
    Poly<F> p;
    p.c.assign(k + 1, K.zero());
    p.c[k] = std::move(coeff);
    return p;
}

// x^n - 1
template <class F>
Poly<F> poly_xn_minus_one(const F& K, std::uint64_t n) {
    Poly<F> p;
    p.c.assign(n + 1, K.zero());
    p.c[0] = K.neg(K.one());
    p.c[n] = K.one();
    return p;
}

// Σ_{i ∈ support} x^i, exponents distinct
template <class F>
Poly<F> poly_from_support(const F& K, const std::vector<std::uint64_t>& support) {
    Poly<F> p;
    for (std::uint64_t i : support) {
        if (i >= p.c.size()) p.c.resize(i + 1, K.zero());
        p.c[i] = K.one();
    }
    poly_trim(K, p);
    return p;
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), K.zero());
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), K.zero());
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.sub(r.c[i], b.c[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, const typename F::Elem& s) {
    Poly<F> r;
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) r.c.push_back(K.mul(v, s));
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    poly_trim(K, r);
    return r;
}

// (quotient, remainder) with deg(remainder) < deg(b)
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    Poly<F> rem = a, quot;
    const auto lead_inv = K.inv(b.c.back());
    if (rem.c.size() >= b.c.size()) quot.c.assign(rem.c.size() - b.c.size() + 1, K.zero());
    while (rem.c.size() >= b.c.size()) {
        auto coeff = K.mul(rem.c.back(), lead_inv);
        std::size_t shift = rem.c.size() - b.c.size();
        quot.c[shift] = coeff;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[shift + i] = K.sub(rem.c[shift + i], K.mul(coeff, b.c[i]));
        poly_trim(K, rem);
    }
    poly_trim(K, quot);
    return {std::move(quot), std::move(rem)};
}

// exact division; throws when the remainder is nonzero
template <class F>
Poly<F> poly_div_exact(const F& K, const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = poly_divrem(K, a, b);
    if (!r.is_zero()) throw std::domain_error("poly_div_exact: division is not exact");
    return q;
}

template <class F>
bool poly_divides(const F& K, const Poly<F>& divisor, const Poly<F>& a) {
    if (divisor.is_zero()) return a.is_zero();
    return poly_divrem(K, a, divisor).second.is_zero();
}

template <class F>
Poly<F> poly_monic(const F& K, const Poly<F>& a) {
    if (a.is_zero()) return a;
    if (K.is_one(a.c.back())) return a;
    return poly_scale(K, a, K.inv(a.c.back()));
}

// Monic gcd via the Euclidean algorithm. Not both arguments may be zero.
template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        a = poly_divrem(K, a, b).second;
        std::swap(a, b);
    }
    return poly_monic(K, a);
}

// Horner evaluation of a base-field polynomial at a point of E.
inline ExtField::Elem poly_eval(const ExtField& E, const BasePoly& a, const ExtField::Elem& pt) {
    ExtField::Elem r = E.zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        r = E.add(E.mul(r, pt), E.embed(*it));
    return r;
}

inline ExtField::Elem poly_eval(const ExtField& E, const ExtPoly& a, const ExtField::Elem& pt) {
    ExtField::Elem r = E.zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        r = E.add(E.mul(r, pt), *it);
    return r;
}

inline PrimeField::Elem poly_eval(const PrimeField& K, const BasePoly& a, PrimeField::Elem pt) {
    PrimeField::Elem r = K.zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = K.add(K.mul(r, pt), *it);
    return r;
}

// Embed a GF(q) polynomial into GF(q^m)[x].
inline ExtPoly poly_lift(const ExtField& E, const BasePoly& a) {
    ExtPoly r;
    r.c.reserve(a.c.size());
    for (auto v : a.c) r.c.push_back(E.embed(v));
    return r;
}

// Coefficient-wise descent to GF(q); empty when some coefficient has a
// nonzero component above degree 0.
inline std::optional<BasePoly> poly_descend(const ExtField& E, const ExtPoly& a) {
    BasePoly r;
    r.c.reserve(a.c.size());
    for (const auto& v : a.c) {
        if (!E.in_base(v)) return std::nullopt;
        r.c.push_back(v[0]);
    }
    return r;
}

// Comma form: ascending coefficients, e.g. "1,1,0,1" = 1 + x + x^3.
std::string poly_to_comma(const BasePoly& a);
BasePoly poly_from_comma(const PrimeField& K, const std::string& text);

// Human form, ascending degree, e.g. "1+x+x^3".
std::string poly_to_pretty(const BasePoly& a);

}  // namespace wgc
