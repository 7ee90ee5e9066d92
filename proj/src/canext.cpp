#include "hirzlog/canext.hpp"

#include <algorithm>
#include <cstdlib>

#include "hirzlog/checked.hpp"
#include "hirzlog/cohom.hpp"
#include "hirzlog/error.hpp"

namespace hirzlog {

using checked::add;
using checked::sub;

namespace {

const ExtensionPresentation& require_presentation(const BundleDescriptor& b) {
    if (!b.presentation) fail(ErrorCode::InvalidArgument, "bundle has no extension presentation");
    return *b.presentation;
}

// Presentation moved to F_e coordinates (the one-point blow-up becomes F1).
ExtensionPresentation hirzebruch_presentation(const BundleDescriptor& b) {
    ExtensionPresentation p = require_presentation(b);
    p.sub = to_working_basis(p.sub);
    p.quot = to_working_basis(p.quot);
    if (p.sub.surface().kind() != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, "canonical extensions are modelled on F_e, got " + b.surface.name());
    return p;
}

enum class Sections { Present, Absent, Inconclusive };

Sections classify(const H0Bounds& hb) {
    if (hb.lower > 0 || (hb.upper > 0 && hb.exact)) return Sections::Present;
    if (hb.upper == 0) return Sections::Absent;
    return Sections::Inconclusive;
}

H0Bounds bounds_for(const ExtensionPresentation& p, const DivisorClass& twist) {
    const CohomologyTable sub_t = line_cohomology(p.sub + twist);
    const std::int64_t quot_hi = h0_line(p.quot + twist);
    // sections of I_Z(D): positions of Z are unknown, so only a range
    const std::int64_t quot_lo = std::max<std::int64_t>(0, sub(quot_hi, p.z_length));
    H0Bounds hb;
    hb.lower = sub_t.h0;
    hb.upper = add(sub_t.h0, quot_hi);
    const bool closes = p.ext_class == ExtClass::Zero || quot_hi == 0 || sub_t.h1 == 0;
    hb.exact = quot_lo == quot_hi && closes;
    return hb;
}

} // namespace

std::int64_t deg_z(const DivisorClass& c1, std::int64_t c2, std::int64_t d, std::int64_t r) {
    const DivisorClass w = to_working_basis(c1);
    if (w.surface().kind() != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, "deg Z is defined on F_e, got " + c1.surface().name());
    const DivisorClass lead(w.surface(), {d, r});
    return sub(c2, intersect(lead, w - lead));
}

bool is_pi_uniform(const BundleDescriptor& b) { return require_presentation(b).z_length == 0; }

SplitInvariants invariants_of_split(const DivisorClass& d1, const DivisorClass& d2) {
    const DivisorClass a = to_working_basis(d1), b = to_working_basis(d2);
    if (a.surface() != b.surface()) fail(ErrorCode::SurfaceMismatch, "summands live on different surfaces");
    if (a.surface().kind() != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, "split invariants are defined on F_e, got " + d1.surface().name());
    SplitInvariants out;
    if (a[0] != b[0]) {
        const DivisorClass& top = a[0] > b[0] ? a : b;
        out.d = top[0];
        out.r = top[1];
    } else {
        out.d = a[0];
        out.r = std::max(a[1], b[1]);
    }
    return out;
}

H0Bounds h0_bounds(const BundleDescriptor& b, const DivisorClass& twist) {
    const ExtensionPresentation p = hirzebruch_presentation(b);
    const DivisorClass t = to_working_basis(twist);
    if (t.surface() != p.sub.surface()) fail(ErrorCode::SurfaceMismatch, "twist is on a different surface");
    return bounds_for(p, t);
}

CanonicalInvariants canonical_invariants(const BundleDescriptor& b) {
    const ExtensionPresentation p = hirzebruch_presentation(b);
    const Surface& s = p.sub.surface();
    const DivisorClass c1 = p.sub + p.quot;
    const std::int64_t c2 = add(intersect(p.sub, p.quot), p.z_length);

    CanonicalInvariants out;
    if (b.is_split()) {
        const SplitInvariants si = invariants_of_split(p.sub, p.quot);
        out.d = si.d;
        out.r = si.r;
        out.deg_z = deg_z(c1, c2, out.d, out.r);
        return out;
    }

    const std::int64_t x_lo = sub(std::min(p.sub[0], p.quot[0]), 1);
    const std::int64_t x_hi = add(std::max(p.sub[0], p.quot[0]), 1);
    const std::int64_t radius = add(std::max(std::llabs(p.sub[1]), std::llabs(p.quot[1])), 3);

    bool inconclusive = false;
    std::optional<std::int64_t> d;
    for (std::int64_t x = x_hi; x >= x_lo && !d; --x) {
        for (std::int64_t y = -radius; y <= radius; ++y) {
            const Sections st = classify(bounds_for(p, DivisorClass(s, {-x, y})));
            if (st == Sections::Present) {
                d = x;
                break;
            }
            if (st == Sections::Inconclusive) inconclusive = true;
        }
    }
    if (!d) fail(ErrorCode::Internal, "no twist in the search window has sections");
    if (*d == x_hi) fail(ErrorCode::Internal, "fibre degree search hit the window boundary");

    std::optional<std::int64_t> first;
    for (std::int64_t y = -radius; y <= radius; ++y) {
        const Sections st = classify(bounds_for(p, DivisorClass(s, {-*d, y})));
        if (st == Sections::Present) {
            first = y;
            break;
        }
        if (st == Sections::Inconclusive) inconclusive = true;
    }
    if (!first) fail(ErrorCode::Internal, "sections vanished on the second pass at d=" + std::to_string(*d));
    if (*first == -radius) fail(ErrorCode::Internal, "section search hit the window boundary");

    out.d = *d;
    out.r = checked::neg(*first);
    out.deg_z = deg_z(c1, c2, out.d, out.r);
    out.certainty = inconclusive ? Certainty::Bounded : Certainty::Exact;
    return out;
}

std::string to_string(Certainty c) { return c == Certainty::Exact ? "Exact" : "Bounded"; }

} // namespace hirzlog
