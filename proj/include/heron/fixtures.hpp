#pragma once

#include <string>
#include <vector>

#include "heron/triangles.hpp"

namespace heron {

// The four known Heron triangles with two rational medians outside the main
// sequence. No generating family is known for them; they ship as fixture
// data for table rendering and search classification only.
struct SporadicTriangle {
    std::string label;  // "*", "**", "***", "****"
    HeronTriangle tri;
    SchubertTriple schubert_a, schubert_b;  // positive triples (Table rows)
};

const std::vector<SporadicTriangle>& sporadic_triangles();

// Singular Schubert row at n = 0 (projective limits of the signed formulas).
struct SingularSchubertRow {
    // entries as display strings: M_a = "0", P_a = "inf", X_a = "inf", ...
    std::string Ma, Pa, Xa, Mb, Pb, Xb;
};
const SingularSchubertRow& schubert_row_n0();

}  // namespace heron
