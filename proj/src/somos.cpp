#include "heron/somos.hpp"

namespace heron {

SequenceCache::SequenceCache(Somos5Spec spec, Symmetry sym) : spec_(std::move(spec)), sym_(sym) {
    lo_ = spec_.origin;
    for (int i = 0; i < 5; ++i) memo_.push_back(spec_.init[i]);
}

SequenceCache canonical_S() {
    Somos5Spec sp;
    sp.alpha = 1;
    sp.beta = 1;
    sp.origin = 0;
    sp.init[0] = 1;
    sp.init[1] = 1;
    sp.init[2] = 1;
    sp.init[3] = 2;
    sp.init[4] = 3;
    sp.preset = Somos5Spec::Preset::canonical_s;
    return SequenceCache(sp, SequenceCache::Symmetry::symmetric);
}

SequenceCache canonical_T() {
    Somos5Spec sp;
    sp.alpha = 1;
    sp.beta = 1;
    sp.origin = 1;  // T_0 = 0 would make the naive step undefined
    sp.init[0] = 1;
    sp.init[1] = -1;
    sp.init[2] = 1;
    sp.init[3] = 1;
    sp.init[4] = -7;
    sp.preset = Somos5Spec::Preset::canonical_t;
    return SequenceCache(sp, SequenceCache::Symmetry::antisymmetric);
}

Rat SequenceCache::step(const Rat& t0, const Rat& t1, const Rat& t2, const Rat& t3,
                        const Rat& t4) {
    return (spec_.alpha * t4 * t1 + spec_.beta * t3 * t2) / t0;
}

void SequenceCache::extend_forward() {
    size_t sz = memo_.size();
    Rat v;
    if (memo_[sz - 5] != 0) {
        v = step(memo_[sz - 5], memo_[sz - 4], memo_[sz - 3], memo_[sz - 2], memo_[sz - 1]);
    } else if (spec_.preset != Somos5Spec::Preset::none && sz >= 7 && memo_[sz - 7] != 0) {
        // step past an isolated zero with the Somos-7 relation
        // tau_{n+7} tau_n = -tau_{n+5} tau_{n+2} + 7 tau_{n+4} tau_{n+3}
        v = (-memo_[sz - 2] * memo_[sz - 5] + Rat(7) * memo_[sz - 3] * memo_[sz - 4]) /
            memo_[sz - 7];
    } else {
        throw std::domain_error("singular continuation: zero divisor in Somos-5 step");
    }
    memo_.push_back(std::move(v));
}

void SequenceCache::extend_backward() {
    long target = lo_ - 1;
    Rat v;
    if (sym_ == Symmetry::symmetric) {
        v = term(-target);  // only extends forward
    } else if (sym_ == Symmetry::antisymmetric) {
        v = target == 0 ? Rat(0) : Rat(-term(-target));
    } else if (memo_[4] != 0) {
        // the recurrence is symmetric under n -> -n, so run it in reverse
        v = step(memo_[4], memo_[3], memo_[2], memo_[1], memo_[0]);
    } else if (spec_.preset != Somos5Spec::Preset::none && memo_.size() >= 7 && memo_[6] != 0) {
        v = (-memo_[1] * memo_[4] + Rat(7) * memo_[2] * memo_[3]) / memo_[6];
    } else {
        throw std::domain_error("singular continuation: zero divisor in Somos-5 step");
    }
    memo_.push_front(std::move(v));
    --lo_;
}

const Rat& SequenceCache::term(long n) {
    while (n >= lo_ + static_cast<long>(memo_.size())) extend_forward();
    while (n < lo_) extend_backward();
    return memo_[n - lo_];
}

Int SequenceCache::term_int(long n) {
    const Rat& v = term(n);
    if (den(v) != 1) throw std::logic_error("term_int: non-integer term");
    return num(v);
}

void SequenceCache::poke(long n, const Rat& v) {
    term(n);  // ensure memoized
    memo_[n - lo_] = v;
}

InvariantSet invariants(const Rat window[5], const Rat& alpha, const Rat& beta) {
    for (int i = 0; i < 5; ++i)
        if (window[i] == 0) throw std::domain_error("invariants: zero term in window");
    const Rat &t0 = window[0], &t1 = window[1], &t2 = window[2], &t3 = window[3], &t4 = window[4];
    InvariantSet iv;
    iv.I = t0 * t4 / (t1 * t3) +
           alpha * (t1 * t1 / (t0 * t2) + t2 * t2 / (t1 * t3) + t3 * t3 / (t2 * t4)) +
           beta * t1 * t3 / (t0 * t4);
    iv.J = t0 * t3 / (t1 * t2) + t1 * t4 / (t2 * t3) +
           alpha * (t1 * t2 / (t0 * t3) + t2 * t3 / (t1 * t4)) + beta * t2 * t2 / (t0 * t4);
    iv.k_even = (t0 * t4 + alpha * t2 * t2) / (t1 * t3);
    iv.k_odd = iv.I - iv.k_even;
    return iv;
}

Int higher_relation_residual(Sequences& seq, long j, long n, HigherVariant which) {
    auto tau = [&](long m) { return which == HigherVariant::s_with_t_coeffs ? seq.s(m) : seq.t(m); };
    Int lhs = seq.t(1) * seq.t(2) * tau(n + 2 * j + 1) * tau(n);
    Int rhs = seq.t(j) * seq.t(j + 1) * tau(n + j + 2) * tau(n + j - 1) -
              seq.t(j - 1) * seq.t(j + 2) * tau(n + j + 1) * tau(n + j);
    return lhs - rhs;
}

Int minor_determinant(Sequences& seq, MinorVariant variant, long n, const long rows[3],
                      const long cols[3]) {
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k)
            if (rows[i] == rows[k] || cols[i] == cols[k])
                throw std::domain_error("minor_determinant: rows/cols must be distinct");
    Int m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            long ii = rows[i], jj = cols[k];
            Int first = variant == MinorVariant::st ? seq.s(n + 2 * ii + jj) : seq.t(n + 2 * ii + jj);
            m[i][k] = first * seq.t(-2 * ii + jj);
        }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

CoprimalityReport coprimality_scan(Sequences& seq, CoprimalityMode which, long N) {
    CoprimalityReport rep;
    if (N < 5) throw std::domain_error("coprimality_scan: N must be at least 5");
    auto note_or_fail = [&](const std::string& what, const Int& g, bool failure) {
        if (failure) {
            if (rep.pass) {
                rep.pass = false;
                rep.first_failure = what + " has gcd " + g.get_str();
            }
        } else if (g != 1) {
            rep.distance5_notes.push_back(what + " has gcd " + g.get_str());
        }
    };
    if (which == CoprimalityMode::cross) {
        for (long n = 0; n <= N; ++n) {
            Int g = gcd(seq.s(n), seq.t(n));
            if (seq.t(n) == 0) g = seq.s(n);  // gcd(x, 0) = x
            note_or_fail("gcd(S_" + std::to_string(n) + ",T_" + std::to_string(n) + ")", g,
                         g != 1);
        }
        return rep;
    }
    auto tau = [&](long m) { return which == CoprimalityMode::s ? seq.s(m) : seq.t(m); };
    long start = which == CoprimalityMode::t ? 1 : 0;  // T_0 = 0 is not a unit
    for (long i = start; i + 1 <= N; ++i) {
        for (long d = 1; d <= 5 && i + d <= N; ++d) {
            Int g = gcd(tau(i), tau(i + d));
            note_or_fail("gcd(tau_" + std::to_string(i) + ",tau_" + std::to_string(i + d) + ")", g,
                         d < 5 && g != 1);
        }
    }
    return rep;
}

}  // namespace heron
