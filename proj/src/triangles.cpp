#include "heron/triangles.hpp"

#include <algorithm>
#include <map>

namespace heron {

std::pair<SignedLengths, SignedMedians> signed_data(Sequences& seq, long n) {
    auto S = [&](long m) { return seq.s(m); };
    auto T = [&](long m) { return seq.t(m); };
    SignedLengths sl;
    sl.n = n;
    sl.sbar = -S(n + 3) * S(n + 4) * S(n + 4) * T(n) * T(n) * T(n + 1);
    sl.abar = -S(n + 2) * T(n + 1) * T(n + 2) * T(n + 2) * T(n + 2) * T(n + 3);
    sl.bbar = S(n + 1) * S(n + 2) * S(n + 2) * S(n + 2) * S(n + 3) * T(n + 2);
    sl.cbar = S(n) * S(n) * S(n + 1) * T(n + 3) * T(n + 4) * T(n + 4);

    SignedMedians sm;
    sm.n = n;
    sm.kbar = make_rat(S(n + 4) * T(n + 4) *
                           (T(n) * T(n + 1) * T(n + 1) * T(n + 2) -
                            S(n) * S(n + 1) * S(n + 1) * S(n + 2)),
                       Int(2));
    sm.lbar = make_rat(S(n) * T(n) *
                           (S(n + 2) * S(n + 3) * S(n + 3) * S(n + 4) -
                            T(n + 2) * T(n + 3) * T(n + 3) * T(n + 4)),
                       Int(2));
    sm.deltabar = S(n) * S(n + 1) * S(n + 2) * S(n + 2) * S(n + 3) * S(n + 4) * T(n) * T(n + 1) *
                  T(n + 2) * T(n + 2) * T(n + 3) * T(n + 4);
    return {sl, sm};
}

Rat surface_residual(const SchubertTriple& t) {
    if (t.M == 0 || t.P == 0 || t.X == 0)
        throw std::domain_error("surface_residual: zero coordinate");
    return (t.M - inverse(t.M)) - (t.P - inverse(t.P)) - Rat(2) * (t.X - inverse(t.X));
}

namespace {

Rat finite_ratio(Sequences& seq, RatioKind kind, long n) {
    ProjQ p = ratio_point(seq, kind, n);
    if (p.is_inf()) throw std::domain_error("schubert: infinite ratio at singular index");
    return p.value();
}

Rat two_power(long n) { return n % 2 == 0 ? Rat(2) : Rat(1, 2); }

}  // namespace

std::pair<SchubertTriple, SchubertTriple> schubert_signed(Sequences& seq, long n) {
    if (schubert_singular(n))
        throw std::domain_error(
            "schubert_signed: singular index (n in {-4,-3,-2,-1,0} is excluded)");
    auto f = [&](long m) { return finite_ratio(seq, RatioKind::f, m); };
    auto u = [&](long m) { return finite_ratio(seq, RatioKind::u, m); };
    auto v = [&](long m) { return finite_ratio(seq, RatioKind::v, m); };

    SchubertTriple A, B;
    A.M = -f(n + 1) * f(n + 2) * f(n + 2) / f(n);
    A.P = -inverse(u(n + 2) * v(n + 2));
    A.X = two_power(n + 1) * f(n) * f(n + 2) * f(n + 2) / f(n + 3);
    B.M = u(n + 3) * v(n + 3);
    B.P = -f(n + 2) * f(n + 2) * f(n + 3) / f(n + 4);
    B.X = two_power(n) * f(n + 1) / (f(n + 2) * f(n + 2) * f(n + 4));
    return {A, B};
}

std::pair<SchubertTriple, SchubertTriple> schubert_signed_monomial(Sequences& seq, long n) {
    if (schubert_singular(n))
        throw std::domain_error(
            "schubert_signed_monomial: singular index (n in {-4,-3,-2,-1,0} is excluded)");
    auto S = [&](long m) { return seq.s(m); };
    auto T = [&](long m) { return seq.t(m); };
    SchubertTriple A, B;
    A.M = make_rat(-S(n + 1) * S(n + 2) * S(n + 2) * T(n), S(n) * T(n + 1) * T(n + 2) * T(n + 2));
    A.P = make_rat(-S(n + 1) * S(n + 2) * T(n + 1) * T(n + 2),
                   S(n) * S(n + 3) * T(n) * T(n + 3));
    A.X = two_power(n + 1) *
          make_rat(S(n) * S(n + 2) * S(n + 2) * T(n + 3), S(n + 3) * T(n) * T(n + 2) * T(n + 2));
    B.M = make_rat(S(n + 1) * S(n + 4) * T(n + 1) * T(n + 4),
                   S(n + 2) * S(n + 3) * T(n + 2) * T(n + 3));
    B.P = make_rat(-S(n + 2) * S(n + 2) * S(n + 3) * T(n + 4),
                   S(n + 4) * T(n + 2) * T(n + 2) * T(n + 3));
    B.X = two_power(n) *
          make_rat(S(n + 1) * T(n + 2) * T(n + 2) * T(n + 4),
                   S(n + 2) * S(n + 2) * S(n + 4) * T(n + 1));
    return {A, B};
}

namespace {

Rat cot_sum(const Rat& x) { return x + inverse(x); }

}  // namespace

CompatibilityResiduals compatibility_residuals(Sequences& seq, long n) {
    auto [A, B] = schubert_signed(seq, n);
    auto [sl, sm] = signed_data(seq, n);
    (void)sm;
    CompatibilityResiduals r;
    r.ratio_a = make_rat(Int(sl.sbar - sl.abar), Int(sl.sbar - sl.cbar));
    r.ratio_b = make_rat(Int(sl.sbar - sl.bbar), Int(sl.sbar - sl.cbar));
    Rat q1 = Rat(2) * cot_sum(A.X) / cot_sum(A.P);
    Rat q2 = cot_sum(B.P) / cot_sum(B.M);
    Rat q3 = cot_sum(A.M) / cot_sum(A.P);
    Rat q4 = Rat(2) * cot_sum(B.X) / cot_sum(B.M);
    r.r1 = q1 - r.ratio_a;
    r.r1_cross = q2 - r.ratio_a;
    r.r2 = q3 - r.ratio_b;
    r.r2_cross = q4 - r.ratio_b;
    return r;
}

namespace {

SchubertTriple positivize_one(const SchubertTriple& in, std::array<bool, 3>& flips,
                              bool& reciprocal) {
    SchubertTriple t = in;
    Rat* coords[3] = {&t.M, &t.P, &t.X};
    for (int i = 0; i < 3; ++i) {
        if (*coords[i] < 0) {
            *coords[i] = -inverse(*coords[i]);
            flips[i] = true;
        }
    }
    // rational form of the half-angle condition: require M*P > 1
    if (t.M * t.P <= 1) {
        t.M = inverse(t.M);
        t.P = inverse(t.P);
        t.X = inverse(t.X);
        reciprocal = true;
    }
    t.positive = true;
    return t;
}

}  // namespace

PositivizedTriples positivize(Sequences& seq, long n) {
    if (n < 1) throw std::domain_error("positivize: requires n >= 1");
    auto [A, B] = schubert_signed(seq, n);
    PositivizedTriples out;
    out.a = positivize_one(A, out.record.flipped_a, out.record.reciprocal_a);
    out.b = positivize_one(B, out.record.flipped_b, out.record.reciprocal_b);
    return out;
}

void HeronTriangle::validate() const {
    if (a <= 0 || b <= 0 || c <= 0) throw std::logic_error("triangle: nonpositive side");
    if (gcd(gcd(a, b), c) != 1) throw std::logic_error("triangle: sides not primitive");
    Int per = a + b + c;
    if (per - 2 * a <= 0 || per - 2 * b <= 0 || per - 2 * c <= 0)
        throw std::logic_error("triangle: inequality violated");
    if (Rat(4) * k * k != Rat(Int(2 * b * b + 2 * c * c - a * a)))
        throw std::logic_error("triangle: median k equation violated");
    if (Rat(4) * l * l != Rat(Int(2 * c * c + 2 * a * a - b * b)))
        throw std::logic_error("triangle: median l equation violated");
    // 16 area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c)
    if (16 * area * area != per * (per - 2 * a) * (per - 2 * b) * (per - 2 * c))
        throw std::logic_error("triangle: Heron formula violated");
}

HeronTriangle triangle(Sequences& seq, long n) {
    if (n < 1) throw std::domain_error("triangle: requires n >= 1");
    auto [sl, sm] = signed_data(seq, n);
    HeronTriangle t;
    t.n = n;
    t.a = abs(sl.bbar + sl.cbar);
    t.b = abs(sl.cbar + sl.abar);
    t.c = abs(sl.abar + sl.bbar);
    t.k = abs(sm.kbar);
    t.l = abs(sm.lbar);
    t.area = abs(sm.deltabar);
    t.validate();
    return t;
}

HeronTriangle triangle_from_sides(const Int& a, const Int& b, const Int& c) {
    HeronTriangle t;
    t.a = a;
    t.b = b;
    t.c = c;
    Int ksq = 2 * b * b + 2 * c * c - a * a;
    Int lsq = 2 * c * c + 2 * a * a - b * b;
    auto kroot = int_sqrt_exact(ksq);
    auto lroot = int_sqrt_exact(lsq);
    if (!kroot || !lroot) throw std::domain_error("triangle_from_sides: irrational median");
    t.k = make_rat(*kroot, Int(2));
    t.l = make_rat(*lroot, Int(2));
    Int per = a + b + c;
    Int n16 = per * (per - 2 * a) * (per - 2 * b) * (per - 2 * c);
    auto aroot = int_sqrt_exact(n16);
    if (!aroot || *aroot % 4 != 0) throw std::domain_error("triangle_from_sides: non-Heron");
    t.area = *aroot / 4;
    t.validate();
    return t;
}

SchubertTriple schubert_from_triangle(const HeronTriangle& t, MedianChoice median) {
    Int a = t.a, b = t.b, c = t.c;
    Rat med = t.k;
    if (median == MedianChoice::l) {
        // cyclic replacement a->b, b->c, c->a, k->l
        a = t.b;
        b = t.c;
        c = t.a;
        med = t.l;
    }
    Rat fourD(Int(4 * t.area));
    Rat dM = Rat(Int(4 * b)) * med + Rat(Int(a * a - 3 * b * b - c * c));
    Rat dP = Rat(Int(4 * c)) * med + Rat(Int(a * a - b * b - 3 * c * c));
    Rat dX = Rat(Int(2 * a)) * med + Rat(Int(c * c - b * b));
    if (dM == 0 || dP == 0 || dX == 0)
        throw std::domain_error("schubert_from_triangle: zero denominator");
    SchubertTriple s;
    s.M = fourD / dM;
    s.P = fourD / dP;
    s.X = fourD / dX;
    s.positive = true;
    return s;
}

std::pair<Rat, Rat> theta_phi(Sequences& seq, long n, ThetaPhiFlavor flavor) {
    if (flavor == ThetaPhiFlavor::signed_) {
        auto [sl, sm] = signed_data(seq, n);
        Rat two_s(Int(2 * sl.sbar));
        if (two_s == 0) throw std::domain_error("theta_phi: sbar vanishes");
        Rat theta = (Rat(Int(sl.abar - sl.cbar)) + Rat(2) * sm.lbar) / two_s;
        Rat phi = (Rat(Int(sl.cbar - sl.bbar)) + Rat(2) * sm.kbar) / two_s;
        return {theta, phi};
    }
    HeronTriangle t = triangle(seq, n);
    Rat two_s(Int(t.a + t.b + t.c));
    if (flavor == ThetaPhiFlavor::plain)
        return {(Rat(Int(t.c - t.a)) + 2 * t.l) / two_s, (Rat(Int(t.b - t.c)) + 2 * t.k) / two_s};
    return {(Rat(Int(t.c - t.b)) + 2 * t.k) / two_s, (Rat(Int(t.a - t.c)) + 2 * t.l) / two_s};
}

std::array<int, 6> sign_configuration(Sequences& seq, long n) {
    auto [sl, sm] = signed_data(seq, n);
    std::array<int, 6> cfg = {sign(sl.sbar), sign(sl.abar), sign(sl.bbar),
                              sign(sl.cbar), sign(sm.kbar), sign(sm.lbar)};
    int lead = cfg[0];
    if (lead == 0) throw std::domain_error("sign_configuration: sbar vanishes");
    for (int& s : cfg) s *= lead;
    return cfg;
}

Rat FittedCurve::residual(const Rat& theta, const Rat& phi) const {
    Rat r(0);
    for (size_t t = 0; t < monomials.size(); ++t) {
        if (coef[t] == 0) continue;
        r += coef[t] * rat_pow(theta, monomials[t].first) * rat_pow(phi, monomials[t].second);
    }
    return r;
}

FittedCurve fit_curve_class(Sequences& seq, int residue, ThetaPhiFlavor flavor, size_t samples) {
    residue = ((residue % 7) + 7) % 7;
    if (samples < 12) samples = 12;
    long n0 = residue == 0 ? 7 : residue;
    auto cfg = sign_configuration(seq, n0);

    // Enough configuration-matched points for a (4,4) fit plus holdouts.
    const size_t want = std::max<size_t>(samples + 8, 36);
    std::vector<std::pair<Rat, Rat>> pts;
    for (long n = 1; pts.size() < want && n < 4000; ++n) {
        if (sign_configuration(seq, n) == cfg) pts.push_back(theta_phi(seq, n, flavor));
    }
    if (pts.size() < want) throw std::runtime_error("curve fit failed: not enough sample points");

    const std::pair<int, int> ladder[] = {{2, 2}, {4, 2}, {2, 4}, {4, 4}};
    for (auto [di, dj] : ladder) {
        size_t ncoef = static_cast<size_t>((di + 1) * (dj + 1));
        size_t fit_rows = std::max(samples, ncoef + 3);
        if (fit_rows > pts.size()) fit_rows = pts.size();
        RatMatrix m(fit_rows, ncoef);
        for (size_t r = 0; r < fit_rows; ++r) {
            size_t col = 0;
            for (int i = 0; i <= di; ++i)
                for (int j = 0; j <= dj; ++j)
                    m.at(r, col++) = rat_pow(pts[r].first, i) * rat_pow(pts[r].second, j);
        }
        auto basis = nullspace(m);
        if (basis.empty()) continue;  // no curve at this bidegree
        if (basis.size() != 1) throw std::runtime_error("curve fit failed: ambiguous nullspace");
        FittedCurve fc;
        fc.deg_theta = di;
        fc.deg_phi = dj;
        for (int i = 0; i <= di; ++i)
            for (int j = 0; j <= dj; ++j) fc.monomials.emplace_back(i, j);
        fc.coef = basis[0];
        for (size_t r = fit_rows; r < pts.size(); ++r)
            if (fc.residual(pts[r].first, pts[r].second) != 0)
                throw std::runtime_error("curve fit failed: holdout point off the curve");
        return fc;
    }
    throw std::runtime_error("curve fit failed: no bidegree up to (4,4) fits");
}

BrahmaguptaParams brahmagupta(Sequences& seq, long n) {
    if (n < 1) throw std::domain_error("brahmagupta: requires n >= 1");
    auto pos = positivize(seq, n);
    HeronTriangle t = triangle(seq, n);
    const Rat& Pa = pos.a.P;
    const Rat& Xa = pos.a.X;
    const Rat& Mb = pos.b.M;
    const Rat& Xb = pos.b.X;
    Rat denom_a = (Pa * Pa + 1) * (Xa * Xa + 1);
    Rat denom_b = (Mb * Mb + 1) * (Xb * Xb + 1);
    BrahmaguptaParams bp;
    bp.r = Rat(Int(t.a)) * (Pa + Xa) * (Pa * Xa - 1) / denom_a;
    bp.p = Rat(Int(t.a)) * (Pa * Xa - 1) * (Pa * Xa - 1) / denom_a;
    bp.q = Rat(Int(t.b)) * (Mb - Xb) * (Mb - Xb) / denom_b;
    return bp;
}

std::pair<Rat, Rat> brahmagupta_sines(Sequences& seq, long n) {
    auto [A, B] = schubert_signed(seq, n);
    Rat sa = (A.P + A.X) * (A.P * A.X - 1) / ((A.P * A.P + 1) * (A.X * A.X + 1));
    Rat sb = (B.M - B.X) * (B.M * B.X + 1) / ((B.M * B.M + 1) * (B.X * B.X + 1));
    return {sa, sb};
}

Rat brahmagupta_identity_residual(Sequences& seq, long n) {
    auto [sa, sb] = brahmagupta_sines(seq, n);
    auto [sl, sm] = signed_data(seq, n);
    (void)sm;
    return Rat(Int(sl.sbar - sl.abar)) * sa - Rat(Int(sl.sbar - sl.bbar)) * sb;
}

std::pair<Rat, Rat> vsq_residuals(Sequences& seq, long n) {
    auto f = [&](long m) { return finite_ratio(seq, RatioKind::f, m); };
    auto v = [&](long m) { return finite_ratio(seq, RatioKind::v, m); };
    if (schubert_singular(n))
        throw std::domain_error("vsq_residuals: projectively indeterminate index");
    Rat f0 = f(n), f1 = f(n + 1), f2 = f(n + 2), f3 = f(n + 3), f4 = f(n + 4);
    Rat first = v(n + 2) * v(n + 2) - (f1 * f1 * f2 * f2 * f2 + f4) / (f3 * (f0 * f0 - f2 * f4));
    Rat second = v(n + 3) * v(n + 3) - (f2 * f2 * f2 * f3 * f3 + f0) / (f1 * (f4 * f4 - f0 * f2));
    return {first, second};
}

}  // namespace heron
