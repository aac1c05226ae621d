#include "heron/exact.hpp"

#include <algorithm>

namespace heron {

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (neg && q == 0) throw std::domain_error("rat_pow: negative power of zero");
    Int n = ipow(q.get_num(), ue);
    Int d = ipow(q.get_den(), ue);
    return neg ? make_rat(d, n) : make_rat(n, d);
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rat(Int(s), Int(1));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) throw std::domain_error("int_sqrt_exact: negative argument");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int Factorization::reassemble() const {
    Int prod = 1;
    for (const auto& pp : factors) prod *= ipow(pp.prime, pp.exponent);
    return prod;
}

std::string Factorization::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& pp : factors) {
        if (!out.empty()) out += "*";
        out += pp.prime.get_str();
        if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
    }
    return out;
}

namespace {

// Brent's variant of Pollard rho; n must be odd composite, not a prime power
// guard is the caller's job. Deterministic: seeds are tried in order.
Int pollard_brent(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int ys, q = 1;
        const long m = 128;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = q * diff % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                d = gcd(diff, n);
            }
        }
        if (d != n) return d;
        // cycle degenerated for this c; try the next one
    }
}

void factor_into(Int n, std::vector<PrimePower>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    // Perfect powers first so rho never sees p^k with trivial split.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                std::vector<PrimePower> sub;
                factor_into(root, sub);
                for (auto& pp : sub) pp.exponent *= static_cast<unsigned>(e);
                out.insert(out.end(), sub.begin(), sub.end());
                return;
            }
        }
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(const Int& n) {
    if (n == 0) throw std::domain_error("zero has no factorization");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);

    std::vector<PrimePower> raw;
    for (Int p = 2; p <= 1000000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            raw.push_back({p, e});
        }
    }
    if (m > 1) factor_into(m, raw);

    std::sort(raw.begin(), raw.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    for (const auto& pp : raw) {
        if (!f.factors.empty() && f.factors.back().prime == pp.prime)
            f.factors.back().exponent += pp.exponent;
        else
            f.factors.push_back(pp);
    }
    for (const auto& pp : f.factors)
        if (!is_probable_prime(pp.prime))
            throw std::logic_error("factorize: composite survived certification");
    return f;
}

long padic_val(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("padic_val: valuation of zero is infinite");
    if (p < 2 || !is_probable_prime(p)) throw std::domain_error("padic_val: p must be prime");
    Int tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

}  // namespace heron
