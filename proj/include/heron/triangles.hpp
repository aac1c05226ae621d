#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "heron/linalg.hpp"
#include "heron/qrt.hpp"
#include "heron/somos.hpp"

namespace heron {

// Monomials in S- and T-terms equal, up to period-14 signs and a
// permutation, to the semiperimeter and reduced lengths s-a, s-b, s-c.
struct SignedLengths {
    Int sbar, abar, bbar, cbar;
    long n = 0;
};

struct SignedMedians {
    Rat kbar, lbar;   // denominators 1 or 2
    Int deltabar;     // signed area
    long n = 0;
};

std::pair<SignedLengths, SignedMedians> signed_data(Sequences& seq, long n);

// Half-angle cotangent triple (M, P, X); positive flag means all coordinates
// positive and on the Schubert surface M - 1/M = P - 1/P + 2(X - 1/X).
struct SchubertTriple {
    Rat M, P, X;
    bool positive = false;
};

// (M - 1/M) - (P - 1/P) - 2(X - 1/X); zero iff on the Schubert surface.
Rat surface_residual(const SchubertTriple& t);

// Indices where the Schubert-parameter formulas are projectively singular.
inline bool schubert_singular(long n) { return n >= -4 && n <= 0; }

// The two signed Schubert triples (median to a; median to b) at index n.
// Throws for n in {-4..0}. Both routes (u/v/f ratios and Somos monomials)
// are implemented; they agree everywhere and tests pin that.
std::pair<SchubertTriple, SchubertTriple> schubert_signed(Sequences& seq, long n);
std::pair<SchubertTriple, SchubertTriple> schubert_signed_monomial(Sequences& seq, long n);

// All four exact residuals of the compatibility chain
//   2(Xa+1/Xa)/(Pa+1/Pa) = (Pb+1/Pb)/(Mb+1/Mb) = (sbar-abar)/(sbar-cbar)
//   (Ma+1/Ma)/(Pa+1/Pa) = 2(Xb+1/Xb)/(Mb+1/Mb) = (sbar-bbar)/(sbar-cbar)
// r1/r2 compare against the signed ratios; the cross residuals pin the
// middle equalities. All identically zero.
struct CompatibilityResiduals {
    Rat r1, r2;
    Rat r1_cross, r2_cross;
    Rat ratio_a, ratio_b;  // the signed side ratios +-a/c, +-b/c
};
CompatibilityResiduals compatibility_residuals(Sequences& seq, long n);

// Sign-normalization record for positivize().
struct FlipRecord {
    std::array<bool, 3> flipped_a{};  // coordinate -> -1/x applied
    std::array<bool, 3> flipped_b{};
    bool reciprocal_a = false;        // whole-triple reciprocal applied
    bool reciprocal_b = false;
};

// Replace negative coordinates x by -1/x, then apply the whole-triple
// reciprocal where needed so that M*P > 1 (the rational form of the
// half-angle inequality). Outputs are positive points on the surface and
// coincide exactly with schubert_from_triangle.
struct PositivizedTriples {
    SchubertTriple a, b;
    FlipRecord record;
};
PositivizedTriples positivize(Sequences& seq, long n);

struct HeronTriangle {
    Int a, b, c;     // integer sides, gcd 1
    Rat k, l;        // medians bisecting a and b
    Int area;
    long n = 0;      // 0 for triangles not from the main sequence

    // gcd(a,b,c)=1, positivity, triangle inequality, both median equations,
    // and Heron's formula; throws on any violation.
    void validate() const;
};

// Main-sequence triangle for n >= 1.
HeronTriangle triangle(Sequences& seq, long n);

// Construct a HeronTriangle from raw sides, deriving medians and area
// exactly; throws when they are not rational. Used by the search.
HeronTriangle triangle_from_sides(const Int& a, const Int& b, const Int& c);

// Positive Schubert triple of a triangle, for the median k (bisecting a) or
// l (bisecting b): M = 4D/(4bk + a^2 - 3b^2 - c^2), etc.; the l variant
// applies the cyclic replacement a->b, b->c, c->a, k->l.
enum class MedianChoice { k, l };
SchubertTriple schubert_from_triangle(const HeronTriangle& t, MedianChoice median);

// theta-phi parameter pairs:
//   plain:  theta = (c-a+2l)/(2s),      phi = (b-c+2k)/(2s)
//   tilde:  theta = (c-b+2k)/(2s),      phi = (a-c+2l)/(2s)
//   signed: same formulas on the signed data
enum class ThetaPhiFlavor { plain, tilde, signed_ };
std::pair<Rat, Rat> theta_phi(Sequences& seq, long n, ThetaPhiFlavor flavor);

// A fitted plane curve sum coef[t] * theta^{mon[t].first} phi^{mon[t].second}.
struct FittedCurve {
    int deg_theta = 0, deg_phi = 0;
    std::vector<std::pair<int, int>> monomials;  // (i, j) lexicographic
    std::vector<Rat> coef;                       // first nonzero = 1

    Rat residual(const Rat& theta, const Rat& phi) const;
    bool operator==(const FittedCurve&) const = default;
};

// Fit the plane curve carried by the residue class n = residue (mod 7).
//
// Sampling is by sign configuration rather than by raw residue: the class's
// sign configuration (read off at the smallest index of the class) selects
// the indices whose theta-phi pair is the same algebraic function, which
// keeps the fit exact even past n ~ 126 where the period-14 sign pattern of
// (T_n) first slips. Bidegrees (2,2), (4,2), (2,4), (4,4) are tried in turn;
// the first with a one-dimensional exact nullspace wins and every remaining
// sample must satisfy the curve exactly, else "curve fit failed".
FittedCurve fit_curve_class(Sequences& seq, int residue, ThetaPhiFlavor flavor,
                            size_t samples = 12);

// Normalized sign configuration (sbar..lbar signs up to overall flip) that
// labels the five curve classes.
std::array<int, 6> sign_configuration(Sequences& seq, long n);

// Brahmagupta parameters of the two glued right triangles: a = (p^2+r^2)/p,
// b = (q^2+r^2)/q, c = +-(r^2-pq)(p+q)/(pq), area = r*c.
struct BrahmaguptaParams {
    Rat p, q, r;
};
BrahmaguptaParams brahmagupta(Sequences& seq, long n);

// (sbar-abar) sin(psi_a) - (sbar-bbar) sin(psi_b) on the signed triples,
// with the signed Brahmagupta sines
//   sin(psi_a) = (Pa+Xa)(Pa Xa - 1)/((Pa^2+1)(Xa^2+1)),
//   sin(psi_b) = (Mb-Xb)(Mb Xb + 1)/((Mb^2+1)(Xb^2+1)).
// Identically zero.
Rat brahmagupta_identity_residual(Sequences& seq, long n);
// The two signed sines themselves (used by the orbit export).
std::pair<Rat, Rat> brahmagupta_sines(Sequences& seq, long n);

// v_{n+2}^2 = (f_{n+1}^2 f_{n+2}^3 + f_{n+4}) / (f_{n+3} (f_n^2 - f_{n+2} f_{n+4}))
// v_{n+3}^2 = (f_{n+2}^3 f_{n+3}^2 + f_n) / (f_{n+1} (f_{n+4}^2 - f_n f_{n+2}))
// returned as (lhs - rhs) pairs; both identically zero. The second is the
// symmetry-corrected form (the n -> -n-4 image of the first).
std::pair<Rat, Rat> vsq_residuals(Sequences& seq, long n);

}  // namespace heron
