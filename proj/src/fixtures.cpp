#include "heron/fixtures.hpp"

namespace heron {

namespace {

SporadicTriangle make_sporadic(const char* label, long a, long b, long c, const char* k,
                               const char* l, const char* area, const char* ma, const char* pa,
                               const char* xa, const char* mb, const char* pb, const char* xb) {
    SporadicTriangle s;
    s.label = label;
    s.tri.a = a;
    s.tri.b = b;
    s.tri.c = c;
    s.tri.k = parse_rat(k);
    s.tri.l = parse_rat(l);
    s.tri.area = Int(area);
    s.tri.n = 0;
    s.tri.validate();
    s.schubert_a = {parse_rat(ma), parse_rat(pa), parse_rat(xa), true};
    s.schubert_b = {parse_rat(mb), parse_rat(pb), parse_rat(xb), true};
    return s;
}

}  // namespace

const std::vector<SporadicTriangle>& sporadic_triangles() {
    static const std::vector<SporadicTriangle> data = {
        make_sporadic("*", 1241, 4368, 3673, "7975/2", "1657", "2042040",
                      "728/51", "17", "48/91", "231/260", "2431/420", "17/55"),
        make_sporadic("**", 14384, 14791, 11257, "11001", "21177/2", "75698280",
                      "1395/476", "620/153", "63/85", "357/95", "4845/1736", "1767/1360"),
        make_sporadic("***", 2288232, 1976471, 2025361, "1641725", "3843143/2", "1877686881840",
                      "7144/2277", "79101/24472", "7238/7429", "394128/101365", "49742/11155",
                      "24035/27936"),
        make_sporadic("****", 22816608, 20565641, 19227017, "16314487", "36845705/2",
                      "185643608470320", "1035096/312455", "1542840/505571", "770431/717145",
                      "770431/218064", "505571/117691", "337421/412896"),
    };
    return data;
}

const SingularSchubertRow& schubert_row_n0() {
    static const SingularSchubertRow row = {"0", "inf", "inf", "-3/2", "-2/3", "2/3"};
    return row;
}

}  // namespace heron
