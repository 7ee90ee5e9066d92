#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hirzlog/logchern.hpp"
#include "hirzlog/rational.hpp"

namespace hirzlog {

/// An ample class used to measure slopes.
class Polarization {
public:
    /// Throws `InvalidArgument` if `l` is not ample.
    explicit Polarization(DivisorClass l);

    const DivisorClass& divisor() const noexcept { return l_; }

private:
    DivisorClass l_;
};

enum class StabilityStatus { Stable, StrictlySemistable, Unstable, Undecided };

std::string to_string(StabilityStatus s);

struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::Undecided;
    std::optional<DivisorClass> witness;  // set iff Unstable or StrictlySemistable
    std::vector<std::string> notes;
};

/// (c1.L) / rank.
Rational slope(const DivisorClass& c1, std::int64_t rank, const Polarization& l);

/// Degree tuples (sorted non-increasingly) for which Omega^1_P2(log C) is not stable.
bool in_exceptional_set(std::span<const std::int64_t> degrees);

/// h^0 of the normalized log bundle, via the resolution.
std::int64_t normalized_h0(std::span<const std::int64_t> degrees);

/// Stability of Omega^1_P2(log C) for smooth curves of the given degrees.
/// Decided twice, by membership in the exceptional set and by vanishing of
/// sections of the normalized bundle; disagreement raises `Internal`.
/// Non-stable cases carry the witness O(-k) coming from a section of the
/// normalized bundle F = Omega^1(log C)(k).
StabilityVerdict classify_p2_log(std::span<const std::int64_t> degrees);

/// Semistability: for odd c1 the same as stability, for even c1 equivalent to
/// h^0(normalized(-1)) = 0.
bool semistable_p2(std::span<const std::int64_t> degrees);

enum class CandidateRoute { ThroughSub, ThroughQuotient };

enum class CandidateFate { Destabilizes, Excluded, Unresolved };

struct DestabilizingCandidate {
    DivisorClass divisor;
    CandidateRoute route;
    Rational slope;
    CandidateFate fate;
    std::string reason;
};

/// All line bundles O(D) with slope >= mu(F) (> when `strict`) that map to F
/// through O(sub) (sub - D effective) or through the quotient (quot - D
/// effective).  `margin` widens the enumeration box; the result must not
/// change, which makes the box's completeness testable.
std::vector<DestabilizingCandidate> destabilizing_candidates(const BundleDescriptor& b, const Polarization& l,
                                                             bool strict, std::int64_t margin = 0);

/// Three-valued stability verdict for a presented bundle on F_e.
///
/// With `strict` only subsheaves of strictly larger slope are examined, which
/// tests semistability; a `Stable` answer then only asserts semistability and
/// says so in the notes.
StabilityVerdict destabilizer_search(const BundleDescriptor& b, const Polarization& l, bool strict = false);

struct GstabResult {
    Rational max_slope_bound;
    bool stable_certified = false;
};

/// Largest 3a+b over integers with 2a <= delta-4 and a+b <= floor(delta/2),
/// compared with the slope (3 delta - 7)/2 of the blown-up log bundle.
GstabResult gstab_feasibility(std::int64_t delta);

} // namespace hirzlog
