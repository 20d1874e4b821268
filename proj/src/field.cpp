#include "wgc/field.hpp"

#include <algorithm>
#include <numeric>

namespace wgc {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (!is_prime_u64(q)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) + " is not prime");
    if (q >= (std::uint64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += static_cast<std::int64_t>(q_);
    return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid on (a, q)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(q_), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t quot = r / newr;
        t -= quot * newt;
        std::swap(t, newt);
        r -= quot * newr;
        std::swap(r, newr);
    }
    return from_int(t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem r = one(), b = a % q_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

namespace {

// Dense poly helpers over a PrimeField, ascending coefficients, used for the
// extension-field internals. The public polynomial module builds on the
// fields, not the other way round.
using BVec = std::vector<std::uint64_t>;

void btrim(BVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BVec bmul(const PrimeField& K, const BVec& a, const BVec& b) {
    if (a.empty() || b.empty()) return {};
    BVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    return r;
}

// a mod f, f monic
BVec bmod(const PrimeField& K, BVec a, const BVec& f) {
    btrim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0)
            for (std::size_t i = 0; i <= df; ++i)
                a[shift + i] = K.sub(a[shift + i], K.mul(lead, f[i]));
        a.pop_back();
        btrim(a);
    }
    return a;
}

BVec bsub(const PrimeField& K, BVec a, const BVec& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
    btrim(a);
    return a;
}

BVec bscale(const PrimeField& K, BVec a, std::uint64_t c) {
    for (auto& v : a) v = K.mul(v, c);
    btrim(a);
    return a;
}

BVec bgcd(const PrimeField& K, BVec a, BVec b) {
    btrim(a);
    btrim(b);
    while (!b.empty()) {
        a = bmod(K, std::move(a), bscale(K, b, K.inv(b.back())));
        // bmod needs monic divisor; rescaling does not change the gcd
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) a = bscale(K, std::move(a), K.inv(a.back()));
    return a;
}

// x^(q^steps) mod f via repeated q-th powers
BVec frobenius_power_of_x(const PrimeField& K, const BVec& f, std::size_t steps) {
    BVec r = {0, 1};
    r = bmod(K, std::move(r), f);
    const std::uint64_t q = K.modulus();
    for (std::size_t s = 0; s < steps; ++s) {
        // r <- r^q mod f
        BVec acc = {1};
        BVec base = r;
        std::uint64_t e = q;
        while (e) {
            if (e & 1) acc = bmod(K, bmul(K, acc, base), f);
            base = bmod(K, bmul(K, base, base), f);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

bool is_irreducible(const PrimeField& K, const BVec& f) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // x^(q^m) == x (mod f)
    BVec xm = frobenius_power_of_x(K, f, m);
    BVec x = bmod(K, BVec{0, 1}, f);
    if (bsub(K, xm, x) != BVec{}) return false;
    // gcd(x^(q^(m/r)) - x, f) = 1 for each prime r | m
    for (std::uint64_t r : prime_factors_u64(m)) {
        BVec xd = frobenius_power_of_x(K, f, m / r);
        BVec g = bgcd(K, bsub(K, std::move(xd), x), f);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

ExtField::ExtField(PrimeField base, std::vector<std::uint64_t> modulus)
    : base_(base), mod_(std::move(modulus)) {
    btrim(mod_);
    if (mod_.size() < 2) throw std::invalid_argument("ExtField: modulus must have degree >= 1");
    if (mod_.back() != 1) throw std::invalid_argument("ExtField: modulus must be monic");
    for (auto c : mod_)
        if (c >= base_.modulus()) throw std::invalid_argument("ExtField: modulus coefficient out of range");
    if (!is_irreducible(base_, mod_)) throw std::invalid_argument("ExtField: modulus is reducible");
    m_ = mod_.size() - 1;
    mpz_class qm;
    mpz_ui_pow_ui(qm.get_mpz_t(), base_.modulus(), static_cast<unsigned long>(m_));
    card_minus_one_ = qm - 1;
}

void ExtField::check(const Elem& a) const {
    if (a.size() != m_) throw std::invalid_argument("ExtField: element of wrong length");
}

ExtField::Elem ExtField::one() const {
    Elem r(m_, 0);
    r[0] = base_.one();
    return r;
}

ExtField::Elem ExtField::embed(PrimeField::Elem a) const {
    Elem r(m_, 0);
    r[0] = a % base_.modulus();
    return r;
}

ExtField::Elem ExtField::gen() const {
    Elem r(m_, 0);
    if (m_ >= 2)
        r[1] = 1;
    else
        r[0] = base_.sub(0, mod_[0]);  // class of y = -mod_[0] when m = 1
    return r;
}

ExtField::Elem ExtField::from_index(const mpz_class& v) const {
    mpz_class t = v;
    Elem r(m_, 0);
    const std::uint64_t q = base_.modulus();
    for (std::size_t i = 0; i < m_ && t != 0; ++i) {
        r[i] = mpz_class(t % q).get_ui();
        t /= q;
    }
    return r;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
    check(a);
    Elem r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    BVec prod = bmul(base_, a, b);
    BVec red = bmod(base_, std::move(prod), mod_);
    red.resize(m_, 0);
    return red;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
    // extended Euclid over GF(q)[y]
    BVec r0 = mod_, r1 = a;
    btrim(r1);
    BVec t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        BVec q;
        BVec rem = r0;
        btrim(rem);
        const std::uint64_t lead_inv = base_.inv(r1.back());
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint64_t c = base_.mul(rem.back(), lead_inv);
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = base_.sub(rem[shift + i], base_.mul(c, r1[i]));
            btrim(rem);
        }
        BVec t2 = bsub(base_, t0, bmul(base_, q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd
    BVec res = bscale(base_, std::move(t0), base_.inv(r0[0]));
    res.resize(m_, 0);
    return res;
}

ExtField::Elem ExtField::pow(const Elem& a, const mpz_class& e) const {
    check(a);
    if (e < 0) throw std::invalid_argument("ExtField: negative exponent");
    Elem r = one(), b = a;
    const std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
        if (i + 1 < nbits) b = mul(b, b);
    }
    return r;
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
    return pow(a, mpz_class(static_cast<unsigned long>(e)));
}

bool ExtField::is_zero(const Elem& a) const {
    check(a);
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

bool ExtField::in_base(const Elem& a) const {
    check(a);
    for (std::size_t i = 1; i < m_; ++i)
        if (a[i] != 0) return false;
    return true;
}

PrimeField::Elem ExtField::to_base(const Elem& a) const {
    if (!in_base(a)) throw std::domain_error("ExtField: element does not lie in the base field");
    return a[0];
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("multiplicative_order: n must be >= 2");
    if (std::gcd(q, n) != 1) throw std::invalid_argument("multiplicative_order: gcd(q, n) != 1");
    std::uint64_t r = q % n, m = 1;
    while (r != 1) {
        r = (r * (q % n)) % n;
        ++m;
    }
    return m;
}

std::vector<std::uint64_t> find_irreducible(const PrimeField& F, std::size_t m) {
    if (m == 0) throw std::invalid_argument("find_irreducible: m must be >= 1");
    const std::uint64_t q = F.modulus();
    BVec f(m + 1, 0);
    f[m] = 1;
    // counter over the low m coefficients, constant coefficient fastest
    for (;;) {
        if (is_irreducible(F, f)) return f;
        std::size_t i = 0;
        while (i < m && f[i] == q - 1) f[i++] = 0;
        if (i == m) throw std::logic_error("find_irreducible: exhausted candidates");  // unreachable
        ++f[i];
    }
}

namespace {

std::vector<mpz_class> prime_factors_mpz(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class rest = n;
    for (std::uint64_t d = 2; d < 1000000 && mpz_class(d) * d <= rest; ++d) {
        if (rest % d == 0) {
            out.emplace_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) {
        if (mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0)
            throw std::domain_error("primitive_element: cannot factor q^m - 1 for this field");
        out.push_back(rest);
    }
    return out;
}

}  // namespace

ExtField::Elem primitive_element(const ExtField& F) {
    const mpz_class& ord = F.card_minus_one();
    const auto factors = prime_factors_mpz(ord);
    for (mpz_class v = 1; v <= ord; ++v) {
        ExtField::Elem a = F.from_index(v);
        bool ok = true;
        for (const auto& r : factors) {
            if (F.is_one(F.pow(a, mpz_class(ord / r)))) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    throw std::logic_error("primitive_element: none found");  // unreachable
}

ExtField::Elem nth_root_of_unity(const ExtField& F, std::uint64_t n) {
    if (n == 0 || F.card_minus_one() % n != 0)
        throw std::invalid_argument("nth_root_of_unity: n does not divide q^m - 1");
    const mpz_class cofactor = F.card_minus_one() / n;
    const auto n_primes = prime_factors_u64(n);
    for (mpz_class v = 1; v <= F.card_minus_one(); ++v) {
        ExtField::Elem beta = F.pow(F.from_index(v), cofactor);
        if (!F.is_one(F.pow(beta, n))) continue;  // always holds; cheap sanity
        bool exact = true;
        for (std::uint64_t r : n_primes) {
            if (F.is_one(F.pow(beta, n / r))) {
                exact = false;
                break;
            }
        }
        if (exact) return beta;
    }
    throw std::logic_error("nth_root_of_unity: none found");  // unreachable
}

ExtField splitting_field(std::uint64_t q, std::uint64_t n) {
    PrimeField F(q);
    const std::uint64_t m = multiplicative_order(q, n);
    return ExtField(F, find_irreducible(F, m));
}

}  // namespace wgc
