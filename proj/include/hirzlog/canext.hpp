#pragma once

#include <cstdint>

#include "hirzlog/logchern.hpp"

namespace hirzlog {

/// Length of Z in the canonical extension 0 -> O(dh+rf) -> F -> I_Z(d'h+r'f) -> 0,
/// i.e. c2(F) - (dh+rf).(d'h+r'f) with d' = a-d, r' = b-r for c1 = ah+bf.
/// On F1 this is c2 + a(d-r) - bd + 2dr - d^2.  Negative values mean the
/// invariants are inconsistent and are returned as is.
std::int64_t deg_z(const DivisorClass& c1, std::int64_t c2, std::int64_t d, std::int64_t r);

/// Same splitting type on every fibre, i.e. Z empty.  Needs a presentation.
bool is_pi_uniform(const BundleDescriptor& b);

struct SplitInvariants {
    std::int64_t d = 0;
    std::int64_t r = 0;
    std::int64_t deg_z = 0;

    bool operator==(const SplitInvariants&) const = default;
};

/// (d, r) of O(D1) + O(D2) on F_e.
SplitInvariants invariants_of_split(const DivisorClass& d1, const DivisorClass& d2);

/// Section-count bounds for a presented bundle twisted by `twist`.
/// `lower` is the contribution of the sub line bundle; `upper` adds the sections
/// of the quotient.  When `exact` is set, `upper` is the true h^0.
struct H0Bounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool exact = false;

    bool operator==(const H0Bounds&) const = default;
};

H0Bounds h0_bounds(const BundleDescriptor& b, const DivisorClass& twist);

enum class Certainty { Exact, Bounded };

struct CanonicalInvariants {
    std::int64_t d = 0;
    std::int64_t r = 0;
    std::int64_t deg_z = 0;
    Certainty certainty = Certainty::Exact;

    bool operator==(const CanonicalInvariants&) const = default;
};

/// (d, r, deg Z) of a presented bundle.  Split bundles are read off directly.
/// Otherwise d is the largest x with h^0(F(-xh+yf)) > 0 for some y, and -r the
/// smallest such y at x = d, both searched over a window around the
/// presentation.  Any inconclusive section count along the way downgrades the
/// certainty to `Bounded`.
CanonicalInvariants canonical_invariants(const BundleDescriptor& b);

std::string to_string(Certainty c);

} // namespace hirzlog
