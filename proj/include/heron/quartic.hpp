#pragma once

#include <vector>

#include "heron/exact.hpp"

namespace heron {

// Element of Q[mu]/(mu^4 - m): c0 + c1*mu + c2*mu^2 + c3*mu^3.
// For the canonical sequences m = beta + alpha*J = 6.
struct QuarticRingElem {
    Rat c[4] = {Rat(0), Rat(0), Rat(0), Rat(0)};
    Rat m{6};

    static QuarticRingElem constant(const Rat& x, const Rat& m);
    static QuarticRingElem mu(const Rat& m);

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool operator==(const QuarticRingElem&) const = default;
};

QuarticRingElem operator+(const QuarticRingElem& a, const QuarticRingElem& b);
QuarticRingElem operator-(const QuarticRingElem& a, const QuarticRingElem& b);
QuarticRingElem operator*(const QuarticRingElem& a, const QuarticRingElem& b);

// Inverse via the 4x4 multiplication-matrix linear system; throws when the
// element is a zero divisor (the ring is a field iff x^4 - m is irreducible).
QuarticRingElem ring_inverse(const QuarticRingElem& a);
QuarticRingElem operator/(const QuarticRingElem& a, const QuarticRingElem& b);

// Companion EDS a_0..a_N in Q[mu]/(mu^4 - m), m = beta + alpha*J:
// a_0=0, a_1=1, a_2=-mu, a_3=alpha, a_4=mu*beta,
// a_{n+4} = (mu^2 a_{n+3} a_{n+1} - alpha a_{n+2}^2) / a_n.
std::vector<QuarticRingElem> companion_eds(const Rat& alpha, const Rat& beta, const Rat& J,
                                           size_t N);

}  // namespace heron
