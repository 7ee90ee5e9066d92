#include "hirzlog/logchern.hpp"

#include <algorithm>
#include <functional>

#include "hirzlog/checked.hpp"
#include "hirzlog/cohom.hpp"
#include "hirzlog/error.hpp"

namespace hirzlog {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

void require_log_surface(const Surface& s) {
    const bool ok = s.kind() == SurfaceKind::ProjPlane || s.kind() == SurfaceKind::Hirzebruch ||
                    s == Surface::blowup_plane(1);
    if (!ok) fail(ErrorCode::Unsupported, "logarithmic bundles are not modelled on " + s.name());
}

} // namespace

Arrangement::Arrangement(Surface surface, std::vector<CurveGroup> curves)
    : surface_(surface), curves_(std::move(curves)) {
    require_log_surface(surface_);
    if (curves_.empty()) fail(ErrorCode::InvalidArgument, "arrangement has no curves");
    for (const auto& g : curves_) {
        if (g.cls.surface() != surface_)
            fail(ErrorCode::SurfaceMismatch, "curve class " + g.cls.str() + " is not on " + surface_.name());
        if (g.count < 1)
            fail(ErrorCode::InvalidArgument, "curve count must be >= 1, got " + std::to_string(g.count));
        if (!has_irreducible_member(g.cls))
            fail(ErrorCode::Semantic, "class " + g.cls.str() + " on " + surface_.name() +
                                          " contains no smooth irreducible curve");
    }
}

Arrangement Arrangement::plane(std::span<const std::int64_t> degrees) {
    const Surface p2 = Surface::projective_plane();
    std::vector<CurveGroup> groups;
    groups.reserve(degrees.size());
    for (auto d : degrees) groups.push_back({DivisorClass(p2, {d}), 1});
    return {p2, std::move(groups)};
}

std::int64_t Arrangement::size() const {
    std::int64_t m = 0;
    for (const auto& g : curves_) m = add(m, g.count);
    return m;
}

std::vector<DivisorClass> Arrangement::expanded() const {
    std::vector<DivisorClass> out;
    for (const auto& g : curves_)
        for (std::int64_t i = 0; i < g.count; ++i) out.push_back(g.cls);
    return out;
}

DivisorClass Arrangement::total_class() const {
    DivisorClass total = DivisorClass::zero(surface_);
    for (const auto& g : curves_) total = total + g.cls * g.count;
    return total;
}

std::vector<std::int64_t> Arrangement::degrees() const {
    if (surface_.kind() != SurfaceKind::ProjPlane) fail(ErrorCode::Unsupported, "degrees are defined on P2 only");
    std::vector<std::int64_t> out;
    for (const auto& g : curves_)
        for (std::int64_t i = 0; i < g.count; ++i) out.push_back(g.cls[0]);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string to_string(ExtClass c) {
    switch (c) {
    case ExtClass::Zero: return "zero";
    case ExtClass::NonzeroGeneric: return "nonzero_generic";
    case ExtClass::Unknown: return "unknown";
    }
    return "?";
}

BundleDescriptor::BundleDescriptor(DivisorClass c1_, std::int64_t c2_)
    : surface(c1_.surface()), c1(std::move(c1_)), c2(c2_) {}

BundleDescriptor BundleDescriptor::split(const DivisorClass& d1, const DivisorClass& d2) {
    return extension({d1, d2, 0, ExtClass::Zero});
}

BundleDescriptor BundleDescriptor::extension(const ExtensionPresentation& p) {
    if (p.sub.surface() != p.quot.surface())
        fail(ErrorCode::SurfaceMismatch, "presentation mixes " + p.sub.surface().name() + " and " +
                                             p.quot.surface().name());
    if (p.z_length < 0) fail(ErrorCode::InvalidArgument, "length of Z must be >= 0");
    BundleDescriptor b(p.sub + p.quot, add(intersect(p.sub, p.quot), p.z_length));
    b.presentation = p;
    return b;
}

BundleDescriptor& BundleDescriptor::with_splitting(Curve curve, SplittingType type) {
    const std::int64_t deg = restriction_degree(c1, curve);
    if (type.first < type.second || add(type.first, type.second) != deg) {
        fail(ErrorCode::Semantic, "splitting (" + std::to_string(type.first) + "," + std::to_string(type.second) +
                                      ") on " + to_string(curve) + " does not match c1 degree " +
                                      std::to_string(deg));
    }
    splitting[curve] = type;
    return *this;
}

bool BundleDescriptor::is_split() const {
    return presentation && presentation->ext_class == ExtClass::Zero && presentation->z_length == 0;
}

std::pair<DivisorClass, std::int64_t> cotangent_chern(const Surface& surface) {
    require_log_surface(surface);
    // c2 is the topological Euler number: 3 for P2, 4 for every F_e and Bl_p P2
    const std::int64_t c2 = surface.kind() == SurfaceKind::ProjPlane ? 3 : 4;
    return {canonical_class(surface), c2};
}

BundleDescriptor log_chern(const Surface& surface, std::span<const DivisorClass> curves) {
    require_log_surface(surface);
    if (curves.empty()) fail(ErrorCode::InvalidArgument, "arrangement has no curves");
    auto [k, c2] = cotangent_chern(surface);
    DivisorClass total = DivisorClass::zero(surface);
    std::int64_t squares = 0, cross = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].surface() != surface)
            fail(ErrorCode::SurfaceMismatch, "curve class " + curves[i].str() + " is not on " + surface.name());
        total = total + curves[i];
        squares = add(squares, intersect(curves[i], curves[i]));
        for (std::size_t j = i + 1; j < curves.size(); ++j) cross = add(cross, intersect(curves[i], curves[j]));
    }
    // degree-2 part of (1 + K + c2(Omega)) * (1 + sum D_i + sum D_i^2 + sum_{i<j} D_i D_j)
    const std::int64_t out_c2 = add(add(add(c2, intersect(k, total)), squares), cross);
    return {k + total, out_c2};
}

BundleDescriptor log_chern(const Arrangement& arrangement) {
    const auto curves = arrangement.expanded();
    return log_chern(arrangement.surface(), curves);
}

BundleDescriptor tangent_bundle(const Surface& hirzebruch) {
    const std::int64_t e = hirzebruch.e();
    BundleDescriptor t(-canonical_class(hirzebruch), 4);
    t.with_splitting(Curve::Fiber, {2, 0});
    t.with_splitting(Curve::SectionH, {2, -e});
    return t;
}

BundleDescriptor twist_rank2(const BundleDescriptor& b, const DivisorClass& l) {
    if (l.surface() != b.surface)
        fail(ErrorCode::SurfaceMismatch, "cannot twist a bundle on " + b.surface.name() + " by a class on " +
                                             l.surface().name());
    BundleDescriptor out(b.c1 + l * 2, add(add(b.c2, intersect(b.c1, l)), intersect(l, l)));
    if (b.presentation) {
        ExtensionPresentation p = *b.presentation;
        p.sub = p.sub + l;
        p.quot = p.quot + l;
        out.presentation = p;
    }
    for (const auto& [curve, type] : b.splitting) {
        const std::int64_t shift = restriction_degree(l, curve);
        out.splitting[curve] = {add(type.first, shift), add(type.second, shift)};
    }
    return out;
}

std::int64_t normalizing_twist(std::int64_t c1) {
    // c1 + 2k in {0, -1}
    return c1 % 2 == 0 ? -(c1 / 2) : -checked::floor_div(add(c1, 1), 2);
}

NormalizedBundle normalize_p2(const BundleDescriptor& b) {
    if (b.surface.kind() != SurfaceKind::ProjPlane) fail(ErrorCode::Unsupported, "normalization is defined on P2");
    const std::int64_t k = normalizing_twist(b.c1[0]);
    return {twist_rank2(b, DivisorClass(b.surface, {k})), k};
}

std::int64_t ancona_h0(std::span<const std::int64_t> degrees, std::int64_t twist) {
    if (degrees.empty()) fail(ErrorCode::InvalidArgument, "need at least one curve");
    const Surface p2 = Surface::projective_plane();
    auto h0 = [&](std::int64_t d) { return h0_line(DivisorClass(p2, {d})); };
    const auto m = static_cast<std::int64_t>(degrees.size());
    std::int64_t total = add(mul(m - 1, h0(twist)), mul(3, h0(sub(twist, 1))));
    for (auto d : degrees) {
        if (d < 1) fail(ErrorCode::InvalidArgument, "curve degree must be >= 1, got " + std::to_string(d));
        total = sub(total, h0(sub(twist, d)));
    }
    return total;
}

} // namespace hirzlog
