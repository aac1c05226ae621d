#pragma once

#include <string>

#include "heron/exact.hpp"

namespace heron {

// Point of the projective line over Q, canonicalized: gcd(num, den) = 1,
// den >= 0, infinity = (1, 0), zero = (0, 1). (0, 0) is rejected.
struct ProjQ {
    Int nu{0};
    Int de{1};

    ProjQ() = default;
    ProjQ(Int n, Int d);
    ProjQ(const Rat& q) : nu(q.get_num()), de(q.get_den()) {}
    ProjQ(long n) : nu(n), de(1) {}

    static ProjQ infinity() { return ProjQ(1, 0); }

    bool is_inf() const { return de == 0; }
    bool is_zero() const { return nu == 0; }
    Rat value() const;  // throws on infinity
    std::string str() const;  // "num/den", "-7", "inf"

    bool operator==(const ProjQ&) const = default;
};

ProjQ proj_inverse(const ProjQ& p);        // x -> 1/x, maps 0 <-> inf
ProjQ proj_neg(const ProjQ& p);

}  // namespace heron
