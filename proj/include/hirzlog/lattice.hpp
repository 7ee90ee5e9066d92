#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hirzlog {

enum class SurfaceKind { ProjLine, ProjPlane, Hirzebruch, BlowupPlane };

/// Ambient variety: the projective line, the projective plane, a Hirzebruch
/// surface F_e, or the plane blown up at k points.
///
/// Picard bases: P1 and P2 use the hyperplane class; F_e uses (h, f) with h the
/// negative section (h^2 = -e) and f a fibre; Bl_k P2 uses (H, E_1..E_k).
class Surface {
public:
    static Surface projective_line();
    static Surface projective_plane();
    static Surface hirzebruch(std::int64_t e);
    static Surface blowup_plane(std::int64_t points = 1);

    SurfaceKind kind() const noexcept { return kind_; }
    /// e for F_e, k for Bl_k P2, 0 otherwise.
    std::int64_t param() const noexcept { return param_; }
    std::int64_t e() const;

    std::size_t picard_rank() const noexcept;
    /// Intersection numbers of basis elements i and j.
    std::int64_t form(std::size_t i, std::size_t j) const;
    std::vector<std::string> basis_labels() const;

    /// Short name: "P1", "P2", "F<e>", "BlP2" (k = 1) or "Bl<k>P2".
    std::string name() const;

    bool is_surface() const noexcept { return kind_ != SurfaceKind::ProjLine; }

    bool operator==(const Surface&) const noexcept = default;

private:
    Surface(SurfaceKind kind, std::int64_t param) : kind_(kind), param_(param) {}

    SurfaceKind kind_;
    std::int64_t param_;
};

/// Integer coordinate vector in a surface's Picard basis.
class DivisorClass {
public:
    DivisorClass(Surface surface, std::vector<std::int64_t> coords);
    DivisorClass(Surface surface, std::initializer_list<std::int64_t> coords)
        : DivisorClass(surface, std::vector<std::int64_t>(coords)) {}

    static DivisorClass zero(const Surface& surface);

    const Surface& surface() const noexcept { return surface_; }
    std::span<const std::int64_t> coords() const noexcept { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_.at(i); }
    bool is_zero() const noexcept;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(std::int64_t k) const;

    bool operator==(const DivisorClass&) const noexcept = default;

    /// "(a,b)" style rendering of the coordinates.
    std::string str() const;

private:
    Surface surface_;
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

DivisorClass canonical_class(const Surface& surface);

/// Intersection pairing; both classes must live on the same surface.
std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);

// Bl_p P2 (H, E) <-> F_1 (h, f):  xH + yE  <->  (x+y)h + xf.
DivisorClass blowup_to_hirzebruch(const DivisorClass& d);
DivisorClass hirzebruch_to_blowup(const DivisorClass& d);

/// Moves a class on Bl_p P2 to F_1 and leaves every other class untouched.
DivisorClass to_working_basis(const DivisorClass& d);

bool is_effective(const DivisorClass& d);
bool is_ample(const DivisorClass& d);
bool is_very_ample(const DivisorClass& d);
bool has_irreducible_member(const DivisorClass& d);

enum class Curve { Fiber, SectionH, Exceptional };

/// Degree of O(D) restricted to the given curve, i.e. D.C.  `index` picks the
/// exceptional curve E_index (0-based) on a blow-up.
std::int64_t restriction_degree(const DivisorClass& d, Curve curve, std::size_t index = 0);

/// The class of the curve itself on the surface of `on`.
DivisorClass curve_class(const Surface& on, Curve curve, std::size_t index = 0);

std::string to_string(Curve curve);

} // namespace hirzlog
