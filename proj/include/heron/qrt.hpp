#pragma once

#include <string>
#include <utility>

#include "heron/proj.hpp"
#include "heron/somos.hpp"

namespace heron {

// Bidegree-(2,2) plane curve sum c[i][j] U^i V^j = 0 with Rational
// coefficients, together with the pencil parameter it was built from.
struct BiquadraticCurve {
    Rat c[3][3];
    Rat pencil;  // Jbar for the u/v pencil, Jhat for the f pencil

    bool operator==(const BiquadraticCurve&) const = default;
};

// U^2 V + U V^2 - J U V + U + V + 1 = 0 (the u/v pencil; J = 5 canonical).
BiquadraticCurve somos5_curve(const Rat& J);
// (1 - W^2) Z^2 + Jhat W Z + 2 W^2 + 1 = 0 (the f pencil; Jhat = 3 canonical).
BiquadraticCurve f_curve(const Rat& Jhat);

enum class RatioKind { u, v, f };

// u_n = S_{n-2}S_{n+1}/(S_{n-1}S_n), v_n likewise in T, f_n = S_n/T_n.
// A vanishing denominator gives infinity; 0/0 throws "indeterminate ratio".
ProjQ ratio_point(Sequences& seq, RatioKind kind, long n);

// Homogeneous residual sum c[i][j] a^i b^{2-i} c^j d^{2-j} at P=(a:b), Q=(c:d);
// zero iff (P,Q) lies on the curve.
Rat curve_residual(const BiquadraticCurve& curve, const ProjQ& P, const ProjQ& Q);

// J = u + u' + 1/u + 1/u' + 1/(u u'); requires both coordinates finite, nonzero.
Rat j_from_point(const ProjQ& P, const ProjQ& Q);

// One step of the QRT map phi = iota . iota_h on the symmetric pencil:
// (P,Q) -> (Q,R) where R is the second root of the quadratic in U with V = Q.
// Degenerate fibers (all three coefficients zero) throw.
std::pair<ProjQ, ProjQ> qrt_step(const BiquadraticCurve& curve,
                                 const std::pair<ProjQ, ProjQ>& pq);
// Inverse step: (P,Q) -> (O,P).
std::pair<ProjQ, ProjQ> qrt_unstep(const BiquadraticCurve& curve,
                                   const std::pair<ProjQ, ProjQ>& pq);

// f_{n+1} from (f_{n-1}, f_n) with n the index of the center term:
//   f_{n+1} f_{n-1} = (1+f_n^2)/(2-f_n^2)   for even n,
//                     (1+2f_n^2)/(1-f_n^2)  for odd n.
// Evaluated projectively; a (0:0) outcome falls back to the Vieta step on
// the Jhat = 3 curve, which the canonical orbit traverses.
enum class Parity { even, odd };
ProjQ f_step(const ProjQ& f_prev, const ProjQ& f_cur, Parity n_parity);

// Homogeneous residual of (1-W^2)Z^2 + 3WZ + 2W^2 + 1.
Rat f_curve_residual(const ProjQ& W, const ProjQ& Z);

// 2-isogeny data at a finite point (W, Z):
//   x* = W^2, y* = (1-W^2) W Z + (3/2) W^2,
//   cubic_residual  = 4 y*^2 - (8 x*^3 + 5 x*^2 - 4 x*),
//   quartic_residual = ybar^2 - (8 W^4 + 5 W^2 - 4), ybar = 2(1-W^2)Z + 3W.
// Both residuals vanish exactly when (W, Z) lies on the Jhat = 3 curve.
struct IsogenyImage {
    Rat xstar, ystar;
    Rat quartic_residual;
    Rat cubic_residual;
};
IsogenyImage isogeny_image(const Rat& W, const Rat& Z);

// Signs of S_n / T_n / v_n / f_n as a string over {+, -, 0, i} (i = infinity).
enum class SignKind { s, t, v, f };
std::string sign_pattern(Sequences& seq, SignKind kind, long start, long len);

}  // namespace heron
