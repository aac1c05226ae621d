#include "heron/modp.hpp"

#include <algorithm>

namespace heron::modp {

Fp fp_from(const Int& x, uint64_t p) {
    Int m = x % Int(static_cast<unsigned long>(p));
    if (m < 0) m += Int(static_cast<unsigned long>(p));
    return Fp(m.get_ui(), p);
}

Fp operator+(Fp a, Fp b) { return Fp((a.v + b.v) % a.p, a.p); }
Fp operator-(Fp a, Fp b) { return Fp((a.v + a.p - b.v) % a.p, a.p); }
Fp operator*(Fp a, Fp b) { return Fp(a.v * b.v % a.p, a.p); }

Fp fp_pow(Fp a, uint64_t e) {
    Fp r(1, a.p);
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

Fp fp_inv(Fp a) {
    if (a.v == 0) throw std::domain_error("fp_inv: zero");
    return fp_pow(a, a.p - 2);
}

ProjFp ProjFp::make(Fp n, Fp d) {
    if (n.v == 0 && d.v == 0) throw std::domain_error("ProjFp: (0,0)");
    if (d.v == 0) return {Fp(1, n.p), Fp(0, n.p)};
    return {n * fp_inv(d), Fp(1, n.p)};
}

namespace {

struct SeedData {
    // exact values at indices -9..5, reduced mod p on construction
    std::vector<Int> exact;
};

const SeedData& seed_values(Seq which) {
    static const SeedData s = [] {
        SeedData d;
        SequenceCache c = canonical_S();
        for (long n = -9; n <= 5; ++n) d.exact.push_back(c.term_int(n));
        return d;
    }();
    static const SeedData t = [] {
        SeedData d;
        SequenceCache c = canonical_T();
        for (long n = -9; n <= 5; ++n) d.exact.push_back(c.term_int(n));
        return d;
    }();
    return which == Seq::S ? s : t;
}

}  // namespace

ModSeqState::ModSeqState(Seq which, uint64_t p) : p_(p), top_(5) {
    const auto& seed = seed_values(which).exact;
    for (long n = -9; n <= 5; ++n) slot(n) = fp_from(seed[static_cast<size_t>(n + 9)], p).v;
}

uint64_t ModSeqState::recent(long n) const {
    if (n > top_ || n <= top_ - kDepth) throw std::out_of_range("ModSeqState::recent");
    return slot(n);
}

uint64_t ModSeqState::advance() {
    long m = top_;  // know up to m, compute m+1
    uint64_t d = slot(m - 4);
    uint64_t next;
    if (d != 0) {
        next = (slot(m) * slot(m - 3) + slot(m - 1) * slot(m - 2)) % p_;
        next = next * fp_pow(Fp(d, p_), p_ - 2).v % p_;
    } else {
        // zero-skip with n = m - 9 (tau_{n+5} = the zero at m - 4)
        Fp t0(slot(m - 9), p_), t1(slot(m - 8), p_), t2(slot(m - 7), p_);
        Fp t3(slot(m - 6), p_), t4(slot(m - 5), p_);
        if (t1.v == 0 || t2.v == 0 || t3.v == 0 || t4.v == 0)
            throw std::domain_error("ModSeqState: zero spacing below 5, not well-balanced");
        Fp val = fp_pow(fp_inv(t1), 3) * fp_pow(fp_inv(t2), 2) * fp_pow(t3, 3) * fp_pow(t4, 2) * t0;
        next = val.v;
    }
    slot(m + 1) = next;
    top_ = m + 1;
    return next;
}

bool well_balanced(const Rat init[5], StarPosition star, const Int& p) {
    // init holds (tau_0..tau_4) when star is in front, (tau_1..tau_5) in back
    const Rat& tstar = star == StarPosition::front ? init[0] : init[4];
    if (tstar == 0) throw std::domain_error("well_balanced: tau_* must be nonzero");
    const Rat* u = star == StarPosition::front ? init + 1 : init;  // tau_1..tau_4
    for (int i = 0; i < 4; ++i) {
        if (u[i] == 0) return false;
        if (padic_val(u[i], p) != 0) return false;  // not a p-adic unit
    }
    Rat combo = u[3] * u[0] + u[2] * u[1];  // tau_4 tau_1 + tau_3 tau_2
    long vstar = padic_val(tstar, p);
    if (vstar < 0) return false;  // |tau_*|_p > 1
    if (combo == 0) return true;  // |0|_p = 0 <= anything
    return padic_val(combo, p) >= vstar;
}

std::vector<uint64_t> reduce_sequence(Seq which, uint64_t p, long N) {
    ModSeqState st(which, p);
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(N + 1));
    for (long n = 0; n <= std::min<long>(N, 5); ++n) out.push_back(st.recent(n));
    while (static_cast<long>(out.size()) <= N) out.push_back(st.advance());
    return out;
}

namespace {

ProjFp u_point(const std::vector<uint64_t>& r, long n, uint64_t p) {
    // u_n from reduced S with the seed shifted so index n >= 2 is safe;
    // callers pass n >= 2
    Fp nu = Fp(r[n - 2], p) * Fp(r[n + 1], p);
    Fp de = Fp(r[n - 1], p) * Fp(r[n], p);
    return ProjFp::make(nu, de);
}

}  // namespace

long orbit_period(uint64_t p) {
    long limit = static_cast<long>(2 * p + 64);
    auto r = reduce_sequence(Seq::S, p, limit + 8);
    ProjFp u0 = u_point(r, 2, p), u1 = u_point(r, 3, p);
    for (long t = 1; t <= limit; ++t) {
        if (u_point(r, 2 + t, p) == u0 && u_point(r, 3 + t, p) == u1) return t;
    }
    throw std::runtime_error("orbit_period: no period found within bound");
}

uint64_t mult_order(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::domain_error("mult_order: zero element");
    uint64_t order = p - 1;
    Factorization f = factorize(Int(static_cast<unsigned long>(p - 1)));
    for (const auto& pp : f.factors) {
        uint64_t q = pp.prime.get_ui();
        for (unsigned e = 0; e < pp.exponent; ++e) {
            if (fp_pow(Fp(a, p), order / q).v == 1)
                order /= q;
            else
                break;
        }
    }
    return order;
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    for (uint64_t x = 1; x <= p / 2; ++x)
        if (x * x % p == a) return x;
    return std::nullopt;
}

GaugeConstantsExt gauge_constants_ext(Seq which, uint64_t p) {
    if (bad_reduction(p))
        throw std::domain_error("gauge constants: bad-reduction prime, use brute force");
    GaugeConstantsExt g;
    g.t = orbit_period(p);
    auto r = reduce_sequence(which, p, 3 * g.t + 80);
    long m = -1;
    for (long i = 0; i + 2 < static_cast<long>(r.size()); ++i) {
        if (r[i] && r[i + 1] && r[i + 2]) {
            m = i;
            break;
        }
    }
    if (m < 0) throw std::runtime_error("gauge constants: unresolvable zero pattern");
    Fp r0 = Fp(r[m + g.t], p) * fp_inv(Fp(r[m], p));
    Fp r1 = Fp(r[m + 1 + g.t], p) * fp_inv(Fp(r[m + 1], p));
    Fp r2 = Fp(r[m + 2 + g.t], p) * fp_inv(Fp(r[m + 2], p));
    g.c = (r2 * fp_inv(r0)).v;

    auto root = sqrt_mod(g.c, p);
    g.rational = root.has_value();

    // helpers in F_p(sqrt(c)): value x * sqrt(c)^e with e in {0,1}
    auto bpow = [&](long e) -> std::pair<uint64_t, int> {
        // (sqrt(c))^e = c^{e/2} (* sqrt(c) if e odd)
        long q = e >= 0 ? e / 2 : -((-e + 1) / 2);
        int odd = static_cast<int>(((e % 2) + 2) % 2);
        if (e < 0 && odd) q = (e - 1) / 2;
        Fp base(g.c, p);
        Fp cc = q >= 0 ? fp_pow(base, static_cast<uint64_t>(q))
                       : fp_inv(fp_pow(base, static_cast<uint64_t>(-q)));
        return {cc.v, odd};
    };
    // A_{parity(m)} = r_m * B^{-m}; A_{parity(m+1)} = r_{m+1} * B^{-(m+1)}
    auto a_at = [&](long idx, Fp ratio) -> std::pair<uint64_t, int> {
        auto [cv, odd] = bpow(-idx);
        uint64_t x = ratio.v * cv % p;
        if (odd) {
            if (g.rational) {
                x = x * *root % p;
                return {x, 0};
            }
            return {x, 1};  // x * sqrt(c)
        }
        return {x, 0};
    };
    auto Am = a_at(m, r0);
    auto Am1 = a_at(m + 1, r1);
    auto even_par = (m % 2 == 0) ? Am : Am1;
    auto odd_par = (m % 2 == 0) ? Am1 : Am;
    // A_plus (even parity) is always in F_p; A_minus is in F_p iff B* is.
    if (even_par.second != 0) throw std::logic_error("gauge constants: A_plus not rational");
    g.a_plus = even_par.first;
    g.a_minus = odd_par.first;  // coefficient of sqrt(c) when !rational
    if (g.rational) g.b = *root;  // sqrt_mod returns the smaller root
    return g;
}

GaugeConstants gauge_constants(Seq which, uint64_t p) {
    GaugeConstantsExt g = gauge_constants_ext(which, p);
    if (!g.rational)
        throw std::domain_error(
            "gauge constants: B* lies in GF(p^2) for this prime; somos_period(quasi) still "
            "applies, or use brute force");
    GaugeConstants out;
    out.t = g.t;
    out.A_plus = Fp(g.a_plus, p);
    out.A_minus = Fp(g.a_minus, p);
    out.B_star = Fp(g.b, p);
    return out;
}

namespace {

// element x + y*w of F_p[w]/(w^2 - c)
struct Fp2 {
    uint64_t x = 0, y = 0;
    bool operator==(const Fp2&) const = default;
};

struct Fp2Ring {
    uint64_t p, c;
    Fp2 one() const { return {1, 0}; }
    Fp2 mul(Fp2 a, Fp2 b) const {
        return {(a.x * b.x + a.y * b.y % p * c) % p, (a.x * b.y + a.y * b.x) % p};
    }
    Fp2 pow(Fp2 a, uint64_t e) const {
        Fp2 r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

long somos_period(Seq which, uint64_t p, PeriodMethod method) {
    if (method == PeriodMethod::brute) {
        long t = orbit_period(p);
        long limit = static_cast<long>(2 * (p - 1)) * t + 40;
        auto r = reduce_sequence(which, p, limit + 11);
        for (long m = 1; m <= limit; ++m) {
            bool match = true;
            for (int i = 0; i < 11; ++i)
                if (r[m + i] != r[i]) {
                    match = false;
                    break;
                }
            if (match) return m;
        }
        throw std::runtime_error("somos_period: no period found within bound");
    }
    if (bad_reduction(p))
        throw std::domain_error("somos_period(quasi): bad-reduction prime, use brute force");
    GaugeConstantsExt g = gauge_constants_ext(which, p);
    Fp2Ring ring{p, g.c};
    Fp2 B = g.rational ? Fp2{g.b, 0} : Fp2{0, 1};
    Fp2 Ap{g.a_plus, 0};
    Fp2 Am = g.rational ? Fp2{g.a_minus, 0} : Fp2{0, g.a_minus};
    uint64_t d = mult_order(g.c % p, p);  // (B*)^{2j} = c^j = 1 needs d | j
    long t = g.t;
    for (uint64_t j = d; j <= 2 * (p - 1); j += d) {
        // exponent t*j*(j-1)/2 of B*, reduced via B^{2d} = 1 (halve first)
        uint64_t modexp = 2 * d;
        __int128 full = (__int128)t * j * (j - 1) / 2;
        uint64_t e = static_cast<uint64_t>(full % modexp);
        Fp2 cc = ring.pow(B, e);
        Fp2 bb = ring.pow(B, j % modexp);
        bool ok;
        if (t % 2 == 0) {
            ok = ring.mul(ring.pow(Ap, j), cc) == ring.one() &&
                 ring.mul(ring.pow(ring.mul(Am, B), j), cc) == ring.one();
        } else {
            Fp2 even = ring.mul(ring.pow(Ap, (j + 1) / 2), ring.pow(Am, j / 2));
            Fp2 odd = ring.mul(ring.pow(Am, (j + 1) / 2), ring.pow(Ap, j / 2));
            ok = ring.mul(even, cc) == ring.one() &&
                 ring.mul(ring.mul(odd, bb), cc) == ring.one();
        }
        if (ok) return static_cast<long>(j) * t;
    }
    throw std::runtime_error("somos_period(quasi): no multiplier found within bound");
}

std::pair<long, std::vector<long>> zero_profile(Seq which, uint64_t p) {
    long period = somos_period(which, p, PeriodMethod::brute);
    auto r = reduce_sequence(which, p, period);
    std::vector<long> zeros;
    for (long n = 0; n < period; ++n)
        if (r[n] == 0) zeros.push_back(n);
    return {period, zeros};
}

}  // namespace heron::modp
