#include "heron/proj.hpp"

namespace heron {

ProjQ::ProjQ(Int n, Int d) : nu(std::move(n)), de(std::move(d)) {
    if (nu == 0 && de == 0) throw std::domain_error("ProjQ: (0,0) is not a point");
    if (de == 0) {
        nu = 1;
        return;
    }
    if (nu == 0) {
        de = 1;
        return;
    }
    if (de < 0) {
        nu = -nu;
        de = -de;
    }
    Int g = gcd(abs(nu), de);
    if (g > 1) {
        nu /= g;
        de /= g;
    }
}

Rat ProjQ::value() const {
    if (is_inf()) throw std::domain_error("ProjQ::value: infinite point");
    return make_rat(nu, de);
}

std::string ProjQ::str() const {
    if (is_inf()) return "inf";
    if (de == 1) return nu.get_str();
    return nu.get_str() + "/" + de.get_str();
}

ProjQ proj_inverse(const ProjQ& p) { return ProjQ(p.de, p.nu); }

ProjQ proj_neg(const ProjQ& p) { return ProjQ(-p.nu, p.de); }

}  // namespace heron
