#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heron/exact.hpp"
#include "heron/somos.hpp"

namespace heron::modp {

// Element of F_p for prime p < 2^31 (enough for the p < 10^6 design range).
struct Fp {
    uint64_t v = 0;
    uint64_t p = 0;

    Fp() = default;
    Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

    bool operator==(const Fp&) const = default;
};

Fp fp_from(const Int& x, uint64_t p);
Fp operator+(Fp a, Fp b);
Fp operator-(Fp a, Fp b);
Fp operator*(Fp a, Fp b);
Fp fp_pow(Fp a, uint64_t e);
Fp fp_inv(Fp a);  // throws on zero

// Point of P^1(F_p): (v, 1) or infinity (1, 0).
struct ProjFp {
    Fp num, den;
    static ProjFp make(Fp n, Fp d);
    bool is_inf() const { return den.v == 0; }
    bool operator==(const ProjFp&) const = default;
};

enum class Seq { S, T };

// Intrinsic mod-p generation state: ring buffer of the last >= 11 reduced
// terms. The standard recurrence step is used while the divisor term is
// nonzero; when the divisor vanishes the closed-form zero-skip
//   tau_{n+10} = tau_{n+1}^{-3} tau_{n+2}^{-2} tau_{n+3}^3 tau_{n+4}^2 tau_n
// (with tau_{n+5} the zero) continues the sequence, which needs exactly
// eleven terms of history.
class ModSeqState {
public:
    ModSeqState(Seq which, uint64_t p);

    uint64_t p() const { return p_; }
    long top_index() const { return top_; }
    uint64_t advance();            // compute and return term top_index()+1
    uint64_t recent(long n) const; // term n, n in (top-10 .. top]

private:
    static constexpr int kDepth = 16;  // ring capacity (>= 11 needed)
    uint64_t p_;
    uint64_t ring_[kDepth];
    long top_;

    uint64_t& slot(long n) { return ring_[((n % kDepth) + kDepth) % kDepth]; }
    const uint64_t& slot(long n) const { return ring_[((n % kDepth) + kDepth) % kDepth]; }
};

// Whether five consecutive rational initial values are well-balanced mod p:
// the four adjacent values tau_1..tau_4 are p-adic units and
// |tau_4 tau_1 + tau_3 tau_2|_p <= |tau_*|_p <= 1 with tau_* != 0 at the
// marked end (tau_0 in front, tau_5 in back).
enum class StarPosition { front, back };
bool well_balanced(const Rat init[5], StarPosition star, const Int& p);

// Terms 0..N of the reduced sequence, generated intrinsically in F_p.
// Agrees with exact-integer-then-reduce on every index.
std::vector<uint64_t> reduce_sequence(Seq which, uint64_t p, long N);

// Least t > 0 with (u_n, u_{n+1}) = (u_{n+t}, u_{n+t+1}) in P^1(F_p)^2.
long orbit_period(uint64_t p);

// S_{n+t} = A*_pm (B*)^n S_n for even/odd n over F_p. Only defined over F_p
// when (B*)^2 is a quadratic residue; otherwise gauge_constants throws and
// the quasi period method works in GF(p^2) internally.
struct GaugeConstants {
    long t = 0;
    Fp A_plus, A_minus, B_star;
};
GaugeConstants gauge_constants(Seq which, uint64_t p);

// Internal form valid for every good prime: B* as an element of
// F_p(sqrt(c)), c = (B*)^2. b_coeff is the F_p multiple of sqrt(c) making up
// A_minus when B* is irrational (A_minus = a_minus_coeff * sqrt(c)).
struct GaugeConstantsExt {
    long t = 0;
    uint64_t c = 0;        // (B*)^2 in F_p
    bool rational = false; // true: B* in F_p (b then holds it)
    uint64_t b = 0;        // B* when rational
    uint64_t a_plus = 0;   // always in F_p
    uint64_t a_minus = 0;  // A_minus when rational, else coeff of sqrt(c)
};
GaugeConstantsExt gauge_constants_ext(Seq which, uint64_t p);

inline bool bad_reduction(uint64_t p) { return p == 2 || p == 3 || p == 17; }

enum class PeriodMethod { quasi, brute };

// Period of the reduced Somos-5 sequence mod p. quasi: orbit period t,
// gauge constants, then the minimal multiplier l* found by scanning
// multiples of ord((B*)^2); brute: first recurrence of an 11-term window.
// quasi throws for the bad-reduction primes {2,3,17}.
long somos_period(Seq which, uint64_t p, PeriodMethod method);

// (period, sorted residues r in [0, period) with tau_r = 0 mod p).
std::pair<long, std::vector<long>> zero_profile(Seq which, uint64_t p);

// Multiplicative order of a mod p, by factoring p-1 and descending through
// divisors.
uint64_t mult_order(uint64_t a, uint64_t p);

// Smaller square root of a mod p when it exists.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p);

}  // namespace heron::modp
