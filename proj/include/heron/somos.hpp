#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "heron/exact.hpp"

namespace heron {

// tau_{n+5} tau_n = alpha tau_{n+4} tau_{n+1} + beta tau_{n+3} tau_{n+2}
struct Somos5Spec {
    Rat alpha{1};
    Rat beta{1};
    long origin = 0;      // index of init[0]
    Rat init[5];

    enum class Preset { none, canonical_s, canonical_t };
    Preset preset = Preset::none;
};

// Bidirectionally extendable memo of a Somos-5 sequence.
//
// Not synchronized: confine each instance to one thread (create one per
// worker). Values handed out are plain copies and freely shareable.
class SequenceCache {
public:
    enum class Symmetry { none, symmetric, antisymmetric };

    SequenceCache(Somos5Spec spec, Symmetry sym);

    // tau_n, extending the cache as needed. Throws "singular continuation"
    // if a zero divisor blocks a generic sequence.
    const Rat& term(long n);

    // Convenience for integer-valued sequences (canonical S, T).
    Int term_int(long n);

    const Somos5Spec& spec() const { return spec_; }
    Symmetry symmetry() const { return sym_; }

    // Test-only fault injection: overwrite a memoized value.
    void poke(long n, const Rat& v);

private:
    void extend_forward();
    void extend_backward();
    Rat step(const Rat& t0, const Rat& t1, const Rat& t2, const Rat& t3, const Rat& t4);

    Somos5Spec spec_;
    Symmetry sym_;
    std::deque<Rat> memo_;  // indices lo_ .. lo_ + memo_.size() - 1
    long lo_ = 0;
};

// S: 1,1,1,2,3,5,11,37,83,274,... with S_{-n} = S_n.
SequenceCache canonical_S();
// T: 0,1,-1,1,1,-7,8,-1,-57,391,... with T_{-n} = -T_n (seeded at T_1..T_5).
SequenceCache canonical_T();

// One S cache plus one T cache and the derived ratios; the working context
// for everything downstream.
struct Sequences {
    SequenceCache S = canonical_S();
    SequenceCache T = canonical_T();

    Int s(long n) { return S.term_int(n); }
    Int t(long n) { return T.term_int(n); }
};

// Conserved quantities of a Somos-5 window (Ibar, Jbar) and the 2-invariant
// evaluated at the window start (k_first) and its complement (k_second):
// k_first + k_second = I and k_first * k_second = alpha*J + beta. Shifting
// the window by one swaps the pair. For a window starting at an even index
// these are (K_even, K_odd).
struct InvariantSet {
    Rat I, J;
    Rat k_even, k_odd;
};

InvariantSet invariants(const Rat window[5], const Rat& alpha, const Rat& beta);

// LHS - RHS of the odd-order Somos relation with companion-EDS coefficients:
// T1 T2 tau_{n+2j+1} tau_n = T_j T_{j+1} tau_{n+j+2} tau_{n+j-1}
//                          - T_{j-1} T_{j+2} tau_{n+j+1} tau_{n+j}.
enum class HigherVariant { s_with_t_coeffs, t_with_t_coeffs };
Int higher_relation_residual(Sequences& seq, long j, long n, HigherVariant which);

// Determinant of the 3x3 minor of the infinite matrix with (i,j) entry
// S_{n+2i+j} T_{-2i+j} (ST) or T_{n+2i+j} T_{-2i+j} (TT); identically zero.
enum class MinorVariant { st, tt };
Int minor_determinant(Sequences& seq, MinorVariant variant, long n, const long rows[3],
                      const long cols[3]);

// gcd scan. Within-sequence: gcd(tau_i, tau_j) = 1 for 0 < |i-j| < 5 up to N.
// Cross: gcd(S_n, T_n) = 1 for n <= N. Distance-5 common factors (such as
// 7 | gcd(T_5j, T_5j+5)) are reported as diagnostics, not failures.
struct CoprimalityReport {
    bool pass = true;
    std::string first_failure;               // empty when pass
    std::vector<std::string> distance5_notes;
};
enum class CoprimalityMode { s, t, cross };
CoprimalityReport coprimality_scan(Sequences& seq, CoprimalityMode which, long N);

}  // namespace heron
