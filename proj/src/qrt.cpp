#include "heron/qrt.hpp"

namespace heron {

BiquadraticCurve somos5_curve(const Rat& J) {
    BiquadraticCurve cv;
    cv.pencil = J;
    cv.c[2][1] = 1;
    cv.c[1][2] = 1;
    cv.c[1][1] = -J;
    cv.c[1][0] = 1;
    cv.c[0][1] = 1;
    cv.c[0][0] = 1;
    return cv;
}

BiquadraticCurve f_curve(const Rat& Jhat) {
    BiquadraticCurve cv;
    cv.pencil = Jhat;
    cv.c[0][2] = 1;
    cv.c[2][2] = -1;
    cv.c[1][1] = Jhat;
    cv.c[2][0] = 2;
    cv.c[0][0] = 1;
    return cv;
}

ProjQ ratio_point(Sequences& seq, RatioKind kind, long n) {
    Int nu, de;
    switch (kind) {
        case RatioKind::u:
            nu = seq.s(n - 2) * seq.s(n + 1);
            de = seq.s(n - 1) * seq.s(n);
            break;
        case RatioKind::v:
            nu = seq.t(n - 2) * seq.t(n + 1);
            de = seq.t(n - 1) * seq.t(n);
            break;
        case RatioKind::f:
            nu = seq.s(n);
            de = seq.t(n);
            break;
    }
    if (nu == 0 && de == 0) throw std::domain_error("indeterminate ratio");
    return ProjQ(nu, de);
}

Rat curve_residual(const BiquadraticCurve& curve, const ProjQ& P, const ProjQ& Q) {
    Rat a(P.nu), b(P.de), c(Q.nu), d(Q.de);
    Rat ap[3] = {b * b, a * b, a * a};  // a^i b^{2-i}
    Rat cp[3] = {d * d, c * d, c * c};
    Rat r(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (curve.c[i][j] != 0) r += curve.c[i][j] * ap[i] * cp[j];
    return r;
}

Rat j_from_point(const ProjQ& P, const ProjQ& Q) {
    if (P.is_inf() || Q.is_inf() || P.is_zero() || Q.is_zero())
        throw std::domain_error("j_from_point: coordinates must be finite and nonzero");
    Rat u = P.value(), w = Q.value();
    return u + w + inverse(u) + inverse(w) + inverse(u * w);
}

namespace {

// Second root of the (possibly degenerate) quadratic A x^2 + B x + C given
// one projective root (a:b), by Vieta with explicit degree-drop handling.
ProjQ other_root(const Rat& A, const Rat& B, const Rat& C, const ProjQ& root) {
    if (A == 0 && B == 0 && C == 0) throw std::domain_error("degenerate fiber");
    const Int& a = root.nu;
    const Int& b = root.de;
    Int cn = num(C) * den(A), ad = num(A) * den(C);
    // generic Vieta: product of roots = C/A
    Int n2 = cn * b, d2 = ad * a;
    if (n2 != 0 || d2 != 0) return ProjQ(n2, d2);
    if (b == 0) {
        // given root is infinity, so A = 0; the other root solves Bx + C = 0
        if (B == 0) return ProjQ::infinity();  // double root at infinity
        return ProjQ(-num(C) * den(B), num(B) * den(C));
    }
    // given root is 0, so C = 0; the other root solves Ax + B = 0
    if (A == 0) return ProjQ::infinity();
    return ProjQ(-num(B) * den(A), num(A) * den(B));
}

// Coefficients of the quadratic in U with V = (c:d) fixed, homogenized in V.
void u_quadratic(const BiquadraticCurve& cv, const ProjQ& V, Rat& A, Rat& B, Rat& C) {
    Rat c(V.nu), d(V.de);
    Rat vp[3] = {d * d, c * d, c * c};
    A = B = C = 0;
    for (int j = 0; j < 3; ++j) {
        A += cv.c[2][j] * vp[j];
        B += cv.c[1][j] * vp[j];
        C += cv.c[0][j] * vp[j];
    }
}

}  // namespace

std::pair<ProjQ, ProjQ> qrt_step(const BiquadraticCurve& curve,
                                 const std::pair<ProjQ, ProjQ>& pq) {
    Rat A, B, C;
    u_quadratic(curve, pq.second, A, B, C);
    ProjQ flipped = other_root(A, B, C, pq.first);
    return {pq.second, flipped};
}

std::pair<ProjQ, ProjQ> qrt_unstep(const BiquadraticCurve& curve,
                                   const std::pair<ProjQ, ProjQ>& pq) {
    Rat A, B, C;
    u_quadratic(curve, pq.first, A, B, C);
    ProjQ flipped = other_root(A, B, C, pq.second);
    return {flipped, pq.first};
}

ProjQ f_step(const ProjQ& f_prev, const ProjQ& f_cur, Parity n_parity) {
    // RHS(f_n) as a projective value, then divide by f_{n-1}
    const Int& a = f_cur.nu;
    const Int& b = f_cur.de;
    Int numer, denom;
    if (n_parity == Parity::even) {
        numer = b * b + a * a;
        denom = 2 * b * b - a * a;
    } else {
        numer = b * b + 2 * a * a;
        denom = b * b - a * a;
    }
    Int rn = numer * f_prev.de;
    Int rd = denom * f_prev.nu;
    if (rn != 0 || rd != 0) return ProjQ(rn, rd);
    // 0/0 after clearing: fall back to the Vieta switch on the Jhat = 3 curve.
    // Even center: horizontal switch in W with Z = f_n; odd center: vertical
    // switch in Z with W = f_n.
    Rat A, B, C;
    if (n_parity == Parity::even) {
        // quadratic in W: (2 - Z^2) W^2 + 3 Z W + (Z^2 + 1), homogenized in Z
        Rat zz(a * a), zd(a * b), dd(b * b);
        A = Rat(2) * dd - zz;
        B = Rat(3) * zd;
        C = zz + dd;
    } else {
        // quadratic in Z: (1 - W^2) Z^2 + 3 W Z + (2 W^2 + 1), homogenized in W
        Rat ww(a * a), wd(a * b), dd(b * b);
        A = dd - ww;
        B = Rat(3) * wd;
        C = Rat(2) * ww + dd;
    }
    if (A == 0 && B == 0 && C == 0) throw std::domain_error("f_step: indeterminate 0/0");
    return other_root(A, B, C, f_prev);
}

Rat f_curve_residual(const ProjQ& W, const ProjQ& Z) {
    return curve_residual(f_curve(Rat(3)), W, Z);
}

IsogenyImage isogeny_image(const Rat& W, const Rat& Z) {
    IsogenyImage im;
    Rat w2 = W * W;
    im.xstar = w2;
    im.ystar = (Rat(1) - w2) * W * Z + Rat(3, 2) * w2;
    im.cubic_residual =
        Rat(4) * im.ystar * im.ystar -
        (Rat(8) * im.xstar * im.xstar * im.xstar + Rat(5) * im.xstar * im.xstar - Rat(4) * im.xstar);
    Rat ybar = Rat(2) * (Rat(1) - w2) * Z + Rat(3) * W;
    im.quartic_residual = ybar * ybar - (Rat(8) * w2 * w2 + Rat(5) * w2 - Rat(4));
    return im;
}

std::string sign_pattern(Sequences& seq, SignKind kind, long start, long len) {
    if (len < 1) throw std::domain_error("sign_pattern: len must be positive");
    std::string out;
    out.reserve(static_cast<size_t>(len));
    for (long n = start; n < start + len; ++n) {
        int sg;
        bool inf = false;
        switch (kind) {
            case SignKind::s:
                sg = sign(seq.s(n));
                break;
            case SignKind::t:
                sg = sign(seq.t(n));
                break;
            case SignKind::v:
            case SignKind::f: {
                ProjQ p = ratio_point(seq, kind == SignKind::v ? RatioKind::v : RatioKind::f, n);
                inf = p.is_inf();
                sg = inf ? 0 : sign(p.nu);
                break;
            }
        }
        out += inf ? 'i' : (sg > 0 ? '+' : (sg < 0 ? '-' : '0'));
    }
    return out;
}

}  // namespace heron
