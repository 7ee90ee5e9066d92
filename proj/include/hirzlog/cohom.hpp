#pragma once

#include <cstdint>
#include <vector>

#include "hirzlog/lattice.hpp"

namespace hirzlog {

struct CohomologyTable {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    std::int64_t chi = 0;

    bool operator==(const CohomologyTable&) const = default;
};

/// Degrees of the line bundles on P1 making up the direct image of O(ah+bf)
/// under the ruling F_e -> P1 (`direct`) and its first higher direct image
/// (`higher`).
struct FibrationPushforward {
    std::vector<std::int64_t> direct;
    std::vector<std::int64_t> higher;
};

FibrationPushforward fibration_pushforward(const DivisorClass& d);

/// h^i of a line bundle on P1, P2 or F_e (classes on Bl_p P2 go through F1).
///
/// On F_e, h^0 and h^1 come from the ruling: h^0 from the direct image,
/// h^1 = h^1(direct) + h^0(higher).  h^2 is defined by Serre duality.  The
/// result is checked against Riemann-Roch and an `Internal` error is raised on
/// disagreement.
CohomologyTable line_cohomology(const DivisorClass& d);

/// Riemann-Roch: chi(O) + D.(D-K)/2 on surfaces, deg + 1 on P1.
std::int64_t chi_line(const DivisorClass& d);

/// 2 chi(O) + c1.(c1-K)/2 - c2 for a rank-2 bundle on a surface.
std::int64_t chi_rank2(const DivisorClass& c1, std::int64_t c2);

/// dim Ext^1(O(from), O(to)) = h^1(to - from).
std::int64_t ext1_line(const DivisorClass& from, const DivisorClass& to);

/// dim Ext^1(I_Z(quot), O(sub)) = deg Z + h^1(sub - quot) on F_e.
std::int64_t ext1_vs_ideal(const DivisorClass& sub, const DivisorClass& quot, std::int64_t deg_z);

std::int64_t h0_line(const DivisorClass& d);
std::int64_t h1_line(const DivisorClass& d);

} // namespace hirzlog
