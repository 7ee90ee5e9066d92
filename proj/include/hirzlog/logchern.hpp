#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hirzlog/lattice.hpp"

namespace hirzlog {

struct CurveGroup {
    DivisorClass cls;
    std::int64_t count = 1;
};

/// A collection of smooth curves given by their classes, with multiplicities
/// standing for several distinct members of the same class.  Normal crossings
/// are assumed and never checked: only classes enter the computations.
class Arrangement {
public:
    /// Throws `InvalidArgument` on empty input or counts < 1, `Semantic` when a
    /// class has no smooth irreducible member.
    Arrangement(Surface surface, std::vector<CurveGroup> curves);

    /// Plane curves of the given degrees.
    static Arrangement plane(std::span<const std::int64_t> degrees);

    const Surface& surface() const noexcept { return surface_; }
    const std::vector<CurveGroup>& groups() const noexcept { return curves_; }
    std::int64_t size() const;
    /// One class per curve, multiplicities expanded.
    std::vector<DivisorClass> expanded() const;
    DivisorClass total_class() const;
    /// Degrees sorted in non-increasing order (P2 only).
    std::vector<std::int64_t> degrees() const;

private:
    Surface surface_;
    std::vector<CurveGroup> curves_;
};

enum class ExtClass { Zero, NonzeroGeneric, Unknown };

std::string to_string(ExtClass c);

/// 0 -> O(sub) -> F -> I_Z(quot) -> 0 with deg Z = z_length.
struct ExtensionPresentation {
    DivisorClass sub;
    DivisorClass quot;
    std::int64_t z_length = 0;
    ExtClass ext_class = ExtClass::Unknown;

    bool operator==(const ExtensionPresentation&) const = default;
};

/// Splitting (p, q), p >= q, of a rank-2 bundle restricted to a rational curve.
using SplittingType = std::pair<std::int64_t, std::int64_t>;

/// Invariant record of a rank-2 bundle.
struct BundleDescriptor {
    Surface surface;
    DivisorClass c1;
    std::int64_t c2 = 0;
    std::optional<ExtensionPresentation> presentation;
    std::map<Curve, SplittingType> splitting;

    BundleDescriptor(DivisorClass c1_, std::int64_t c2_);

    static BundleDescriptor split(const DivisorClass& d1, const DivisorClass& d2);
    static BundleDescriptor extension(const ExtensionPresentation& p);

    /// Adds restriction data; throws `Semantic` unless p >= q and p + q = c1.C.
    BundleDescriptor& with_splitting(Curve curve, SplittingType type);

    /// True for a presentation with zero extension class and Z empty.
    bool is_split() const;

    bool operator==(const BundleDescriptor&) const = default;
};

/// Chern data of Omega^1(log D) from the residue sequence:
/// c(Omega^1(log D)) = c(Omega^1) * prod_i (1 + D_i + D_i^2).
/// Supported on P2, F_e and the one-point blow-up.
BundleDescriptor log_chern(const Arrangement& arrangement);
BundleDescriptor log_chern(const Surface& surface, std::span<const DivisorClass> curves);

/// (c1, c2) of the cotangent bundle: (K, 3) on P2, (K, 4) on F_e and Bl_p P2.
std::pair<DivisorClass, std::int64_t> cotangent_chern(const Surface& surface);

/// The tangent bundle of F_e with its fibre and section splittings.
BundleDescriptor tangent_bundle(const Surface& hirzebruch);

/// F -> F(L): c1 + 2L, c2 + c1.L + L^2; presentation and splittings follow.
BundleDescriptor twist_rank2(const BundleDescriptor& b, const DivisorClass& l);

struct NormalizedBundle {
    BundleDescriptor bundle;
    std::int64_t twist = 0;
};

/// Twists a bundle on P2 so that c1 lands in {0, -1}.
NormalizedBundle normalize_p2(const BundleDescriptor& b);

/// Normalizing twist for a bundle on P2 with first Chern class c1.
std::int64_t normalizing_twist(std::int64_t c1);

/// h^0(Omega^1_P2(log C)(t)) from the resolution
/// 0 -> (+) O(-d_i) -> O^(m-1) (+) O(-1)^3 -> Omega^1(log C) -> 0.
std::int64_t ancona_h0(std::span<const std::int64_t> degrees, std::int64_t twist);

} // namespace hirzlog
