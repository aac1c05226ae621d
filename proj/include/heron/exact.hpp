#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heron {

// Exact scalars. Every computation in this library is exact; there is no
// floating-point mode.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a (possibly non-canonical) num/den pair.
// den > 0 and gcd(num, den) = 1 after this.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline int sign(const Int& n) { return sgn(n); }
inline int sign(const Rat& q) { return sgn(q); }

inline Rat inverse(const Rat& q) {
    if (q == 0) throw std::domain_error("inverse of zero");
    return make_rat(q.get_den(), q.get_num());
}

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// q^e for integer e (negative allowed when q != 0).
Rat rat_pow(const Rat& q, long e);

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline size_t digit_count(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 10); }

// "97/2", "-7", "0"; infinities are not representable here.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

Rat parse_rat(const std::string& s);

// ---------------------------------------------------------------------------
// Integer square roots, primality, factorization, p-adic valuation.
// ---------------------------------------------------------------------------

// r with r*r == n when n is a perfect square, else nullopt. n < 0 throws.
std::optional<Int> int_sqrt_exact(const Int& n);

// Baillie-PSW + Miller-Rabin rounds via GMP; no composite below 2^64 passes.
bool is_probable_prime(const Int& n);

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// Ordered prime factorization of |n|, primes strictly increasing.
// factorize(1) is the empty list; factorize(0) throws.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Int reassemble() const;             // product of prime^exponent (magnitude)
    std::string to_string() const;      // "2^4*3^2*5*7*11", "1" for empty
    bool operator==(const Factorization&) const = default;
};

// Trial division to 10^6, then Brent-Pollard rho with deterministic seeding,
// with primality certification of every emitted factor.
Factorization factorize(const Int& n);

// v_p(q): q = p^val * (unit in Z_(p)). q = 0 throws; p must be prime.
long padic_val(const Rat& q, const Int& p);

}  // namespace heron
