#include "heron/quartic.hpp"

namespace heron {

QuarticRingElem QuarticRingElem::constant(const Rat& x, const Rat& m) {
    QuarticRingElem e;
    e.c[0] = x;
    e.m = m;
    return e;
}

QuarticRingElem QuarticRingElem::mu(const Rat& m) {
    QuarticRingElem e;
    e.c[1] = 1;
    e.m = m;
    return e;
}

QuarticRingElem operator+(const QuarticRingElem& a, const QuarticRingElem& b) {
    QuarticRingElem r;
    r.m = a.m;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

QuarticRingElem operator-(const QuarticRingElem& a, const QuarticRingElem& b) {
    QuarticRingElem r;
    r.m = a.m;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

QuarticRingElem operator*(const QuarticRingElem& a, const QuarticRingElem& b) {
    Rat full[7];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) full[i + j] += a.c[i] * b.c[j];
    QuarticRingElem r;
    r.m = a.m;
    for (int k = 6; k >= 4; --k) full[k - 4] += a.m * full[k];
    for (int i = 0; i < 4; ++i) r.c[i] = full[i];
    return r;
}

QuarticRingElem ring_inverse(const QuarticRingElem& a) {
    if (a.is_zero()) throw std::domain_error("ring_inverse: zero element");
    // columns of M are a * mu^j; solve M y = e_0
    Rat M[4][4];
    QuarticRingElem basis = QuarticRingElem::constant(1, a.m);
    QuarticRingElem mu = QuarticRingElem::mu(a.m);
    QuarticRingElem col = a;
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) M[i][j] = col.c[i];
        col = col * mu;
    }
    Rat rhs[4] = {Rat(1), Rat(0), Rat(0), Rat(0)};
    for (int c = 0; c < 4; ++c) {
        int pr = -1;
        for (int i = c; i < 4; ++i)
            if (M[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) throw std::domain_error("ring_inverse: non-invertible element");
        for (int j = 0; j < 4; ++j) std::swap(M[c][j], M[pr][j]);
        std::swap(rhs[c], rhs[pr]);
        Rat pv = M[c][c];
        for (int j = 0; j < 4; ++j) M[c][j] /= pv;
        rhs[c] /= pv;
        for (int i = 0; i < 4; ++i) {
            if (i == c || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (int j = 0; j < 4; ++j) M[i][j] -= f * M[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    QuarticRingElem inv;
    inv.m = a.m;
    for (int i = 0; i < 4; ++i) inv.c[i] = rhs[i];
    return inv;
}

QuarticRingElem operator/(const QuarticRingElem& a, const QuarticRingElem& b) {
    return a * ring_inverse(b);
}

std::vector<QuarticRingElem> companion_eds(const Rat& alpha, const Rat& beta, const Rat& J,
                                           size_t N) {
    Rat m = beta + alpha * J;
    if (m == 0) throw std::domain_error("companion_eds: mu^4 = beta + alpha*J vanishes");
    std::vector<QuarticRingElem> a;
    a.reserve(N + 1);
    QuarticRingElem mu = QuarticRingElem::mu(m);
    QuarticRingElem al = QuarticRingElem::constant(alpha, m);
    a.push_back(QuarticRingElem::constant(0, m));
    a.push_back(QuarticRingElem::constant(1, m));
    a.push_back(QuarticRingElem::constant(0, m) - mu);
    a.push_back(al);
    a.push_back(mu * QuarticRingElem::constant(beta, m));
    QuarticRingElem mu2 = mu * mu;
    for (size_t n = 1; n + 4 <= N; ++n) {
        QuarticRingElem next = (mu2 * a[n + 3] * a[n + 1] - al * a[n + 2] * a[n + 2]) / a[n];
        a.push_back(next);
    }
    return a;
}

}  // namespace heron
