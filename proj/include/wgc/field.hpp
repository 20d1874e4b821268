// Exact arithmetic in GF(q) for prime q and in extension fields GF(q^m),
// including construction of primitive n-th roots of unity.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wgc {

bool is_prime_u64(std::uint64_t n);

// Prime field GF(q). Elements are residues in [0, q).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % q_; }
    Elem from_int(std::int64_t v) const;

    Elem add(Elem a, Elem b) const { return (a + b) % q_; }
    Elem sub(Elem a, Elem b) const { return (a + q_ - b) % q_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % q_; }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

private:
    std::uint64_t q_;
};

// Extension field GF(q^m) = GF(q)[y]/(modulus). Elements are coefficient
// vectors of length m in the polynomial basis, ascending degree.
class ExtField {
public:
    using Elem = std::vector<std::uint64_t>;

    // modulus: monic irreducible of degree m over the base, ascending
    // coefficients, length m+1.
    ExtField(PrimeField base, std::vector<std::uint64_t> modulus);

    const PrimeField& base() const { return base_; }
    std::size_t degree() const { return m_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    // q^m - 1
    const mpz_class& card_minus_one() const { return card_minus_one_; }

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem embed(PrimeField::Elem a) const;
    // the class of y (only meaningful for m >= 2)
    Elem gen() const;
    // element with "digit value" v in [0, q^m): coefficient i = digit i of v base q
    Elem from_index(const mpz_class& v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, const mpz_class& e) const;
    Elem pow(const Elem& a, std::uint64_t e) const;

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const { return eq(a, one()); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // true when all components above degree 0 vanish
    bool in_base(const Elem& a) const;
    PrimeField::Elem to_base(const Elem& a) const;

private:
    void check(const Elem& a) const;

    PrimeField base_;
    std::vector<std::uint64_t> mod_;
    std::size_t m_;
    mpz_class card_minus_one_;
};

// Smallest m >= 1 with q^m = 1 (mod n). Requires gcd(q, n) = 1, n >= 2.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n);

// Deterministic monic irreducible of degree m over GF(q): the first
// candidate by ascending integer value of the coefficient tuple.
std::vector<std::uint64_t> find_irreducible(const PrimeField& F, std::size_t m);

// First element of multiplicative order q^m - 1 in a fixed enumeration.
// Needs the factorization of q^m - 1 (trial division + probable-prime
// cofactor); throws if the cofactor cannot be certified.
ExtField::Elem primitive_element(const ExtField& F);

// β with β^n = 1 and β^d != 1 for every proper divisor d of n.
// Requires n | q^m - 1. Deterministic: first candidate γ (same enumeration
// as primitive_element) whose power γ^((q^m-1)/n) has order exactly n.
ExtField::Elem nth_root_of_unity(const ExtField& F, std::uint64_t n);

// Convenience: GF(q^m) for the order m of q modulo n, with the
// deterministic irreducible modulus.
ExtField splitting_field(std::uint64_t q, std::uint64_t n);

// Prime factors of n (without multiplicity), by trial division.
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

}  // namespace wgc
