#include "hirzlog/lattice.hpp"

#include <sstream>

#include "hirzlog/checked.hpp"
#include "hirzlog/error.hpp"

namespace hirzlog {

Surface Surface::projective_line() { return {SurfaceKind::ProjLine, 0}; }

Surface Surface::projective_plane() { return {SurfaceKind::ProjPlane, 0}; }

Surface Surface::hirzebruch(std::int64_t e) {
    if (e < 0) fail(ErrorCode::InvalidArgument, "Hirzebruch invariant e must be >= 0, got " + std::to_string(e));
    return {SurfaceKind::Hirzebruch, e};
}

Surface Surface::blowup_plane(std::int64_t points) {
    if (points < 1) fail(ErrorCode::InvalidArgument, "blow-up needs at least one point, got " + std::to_string(points));
    return {SurfaceKind::BlowupPlane, points};
}

std::int64_t Surface::e() const {
    if (kind_ != SurfaceKind::Hirzebruch) fail(ErrorCode::Unsupported, name() + " is not a Hirzebruch surface");
    return param_;
}

std::size_t Surface::picard_rank() const noexcept {
    switch (kind_) {
    case SurfaceKind::ProjLine:
    case SurfaceKind::ProjPlane: return 1;
    case SurfaceKind::Hirzebruch: return 2;
    case SurfaceKind::BlowupPlane: return 1 + static_cast<std::size_t>(param_);
    }
    return 0;
}

std::int64_t Surface::form(std::size_t i, std::size_t j) const {
    const std::size_t n = picard_rank();
    if (i >= n || j >= n) fail(ErrorCode::InvalidArgument, "basis index out of range on " + name());
    switch (kind_) {
    case SurfaceKind::ProjLine: fail(ErrorCode::Unsupported, "no intersection pairing on a curve");
    case SurfaceKind::ProjPlane: return 1;
    case SurfaceKind::Hirzebruch:
        if (i == 0 && j == 0) return -param_;
        if (i == 1 && j == 1) return 0;
        return 1;
    case SurfaceKind::BlowupPlane:
        if (i != j) return 0;
        return i == 0 ? 1 : -1;
    }
    return 0;
}

std::vector<std::string> Surface::basis_labels() const {
    switch (kind_) {
    case SurfaceKind::ProjLine:
    case SurfaceKind::ProjPlane: return {"H"};
    case SurfaceKind::Hirzebruch: return {"h", "f"};
    case SurfaceKind::BlowupPlane: {
        std::vector<std::string> labels{"H"};
        if (param_ == 1) {
            labels.emplace_back("E");
        } else {
            for (std::int64_t i = 1; i <= param_; ++i) labels.push_back("E" + std::to_string(i));
        }
        return labels;
    }
    }
    return {};
}

std::string Surface::name() const {
    switch (kind_) {
    case SurfaceKind::ProjLine: return "P1";
    case SurfaceKind::ProjPlane: return "P2";
    case SurfaceKind::Hirzebruch: return "F" + std::to_string(param_);
    case SurfaceKind::BlowupPlane: return param_ == 1 ? std::string("BlP2") : "Bl" + std::to_string(param_) + "P2";
    }
    return "?";
}

DivisorClass::DivisorClass(Surface surface, std::vector<std::int64_t> coords)
    : surface_(surface), coords_(std::move(coords)) {
    if (coords_.size() != surface_.picard_rank()) {
        fail(ErrorCode::InvalidArgument, "divisor on " + surface_.name() + " needs " +
                                             std::to_string(surface_.picard_rank()) + " coordinates, got " +
                                             std::to_string(coords_.size()));
    }
}

DivisorClass DivisorClass::zero(const Surface& surface) {
    return {surface, std::vector<std::int64_t>(surface.picard_rank(), 0)};
}

bool DivisorClass::is_zero() const noexcept {
    for (auto c : coords_)
        if (c != 0) return false;
    return true;
}

namespace {

void require_same_surface(const DivisorClass& a, const DivisorClass& b) {
    if (a.surface() != b.surface()) {
        fail(ErrorCode::SurfaceMismatch,
             "classes live on different surfaces: " + a.surface().name() + " vs " + b.surface().name());
    }
}

} // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_surface(*this, o);
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::add(coords_[i], o.coords_[i]);
    return {surface_, std::move(out)};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const { return *this * -1; }

DivisorClass DivisorClass::operator*(std::int64_t k) const {
    std::vector<std::int64_t> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked::mul(coords_[i], k);
    return {surface_, std::move(out)};
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << d.surface().name() << d.str(); }

DivisorClass canonical_class(const Surface& surface) {
    switch (surface.kind()) {
    case SurfaceKind::ProjLine: return {surface, {-2}};
    case SurfaceKind::ProjPlane: return {surface, {-3}};
    case SurfaceKind::Hirzebruch: return {surface, {-2, checked::neg(checked::add(surface.param(), 2))}};
    case SurfaceKind::BlowupPlane: {
        std::vector<std::int64_t> c(surface.picard_rank(), 1);
        c[0] = -3;
        return {surface, std::move(c)};
    }
    }
    fail(ErrorCode::Unsupported, "unknown surface");
}

std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
    require_same_surface(d1, d2);
    const Surface& s = d1.surface();
    if (!s.is_surface()) fail(ErrorCode::Unsupported, "no intersection pairing on a curve");
    const std::size_t n = s.picard_rank();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d1[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t g = s.form(i, j);
            if (g == 0 || d2[j] == 0) continue;
            total = checked::add(total, checked::mul(checked::mul(d1[i], g), d2[j]));
        }
    }
    return total;
}

DivisorClass blowup_to_hirzebruch(const DivisorClass& d) {
    if (d.surface() != Surface::blowup_plane(1))
        fail(ErrorCode::Unsupported, "basis conversion needs the one-point blow-up, got " + d.surface().name());
    return {Surface::hirzebruch(1), {checked::add(d[0], d[1]), d[0]}};
}

DivisorClass hirzebruch_to_blowup(const DivisorClass& d) {
    if (d.surface() != Surface::hirzebruch(1))
        fail(ErrorCode::Unsupported, "basis conversion needs F1, got " + d.surface().name());
    return {Surface::blowup_plane(1), {d[1], checked::sub(d[0], d[1])}};
}

DivisorClass to_working_basis(const DivisorClass& d) {
    if (d.surface() == Surface::blowup_plane(1)) return blowup_to_hirzebruch(d);
    return d;
}

namespace {

// Positivity criteria are known on P2 and F_e; the one-point blow-up is routed
// through F1 and anything else is rejected.
DivisorClass positivity_input(const DivisorClass& d, const char* what) {
    DivisorClass w = to_working_basis(d);
    const SurfaceKind k = w.surface().kind();
    if (k != SurfaceKind::ProjPlane && k != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, std::string(what) + " is not modelled on " + d.surface().name());
    return w;
}

} // namespace

bool is_effective(const DivisorClass& d) {
    const DivisorClass w = positivity_input(d, "effectivity");
    if (w.surface().kind() == SurfaceKind::ProjPlane) return w[0] >= 0;
    return w[0] >= 0 && w[1] >= 0;
}

bool is_ample(const DivisorClass& d) {
    const DivisorClass w = positivity_input(d, "ampleness");
    if (w.surface().kind() == SurfaceKind::ProjPlane) return w[0] > 0;
    const std::int64_t a = w[0], b = w[1], e = w.surface().param();
    return a > 0 && b > checked::mul(a, e);
}

bool is_very_ample(const DivisorClass& d) { return is_ample(d); }

bool has_irreducible_member(const DivisorClass& d) {
    const DivisorClass w = positivity_input(d, "irreducibility");
    if (w.surface().kind() == SurfaceKind::ProjPlane) return w[0] >= 1;
    const std::int64_t a = w[0], b = w[1], e = w.surface().param();
    if (a == 1 && b == 0) return true;  // h
    if (a == 0 && b == 1) return true;  // f
    const std::int64_t ae = checked::mul(a, e);
    if (a > 0 && b > ae) return true;
    return e > 0 && a > 0 && b == ae;
}

DivisorClass curve_class(const Surface& on, Curve curve, std::size_t index) {
    switch (on.kind()) {
    case SurfaceKind::Hirzebruch:
        if (curve == Curve::Fiber) return {on, {0, 1}};
        if (curve == Curve::SectionH) return {on, {1, 0}};
        break;
    case SurfaceKind::BlowupPlane:
        if (curve == Curve::Exceptional && index < static_cast<std::size_t>(on.param())) {
            std::vector<std::int64_t> c(on.picard_rank(), 0);
            c[1 + index] = 1;
            return {on, std::move(c)};
        }
        if (on.param() == 1 && curve == Curve::Fiber) return {on, {1, -1}};
        if (on.param() == 1 && curve == Curve::SectionH) return {on, {0, 1}};
        break;
    default: break;
    }
    fail(ErrorCode::InvalidArgument, "curve " + to_string(curve) + " is not available on " + on.name());
}

std::int64_t restriction_degree(const DivisorClass& d, Curve curve, std::size_t index) {
    return intersect(d, curve_class(d.surface(), curve, index));
}

std::string to_string(Curve curve) {
    switch (curve) {
    case Curve::Fiber: return "fiber";
    case Curve::SectionH: return "section_h";
    case Curve::Exceptional: return "exceptional";
    }
    return "?";
}

} // namespace hirzlog
