#include "hirzlog/stab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hirzlog/checked.hpp"
#include "hirzlog/cohom.hpp"
#include "hirzlog/error.hpp"

namespace hirzlog {

using checked::add;
using checked::mul;
using checked::sub;

Polarization::Polarization(DivisorClass l) : l_(std::move(l)) {
    if (!is_ample(l_)) fail(ErrorCode::InvalidArgument, "polarization " + l_.str() + " is not ample");
}

std::string to_string(StabilityStatus s) {
    switch (s) {
    case StabilityStatus::Stable: return "Stable";
    case StabilityStatus::StrictlySemistable: return "StrictlySemistable";
    case StabilityStatus::Unstable: return "Unstable";
    case StabilityStatus::Undecided: return "Undecided";
    }
    return "?";
}

Rational slope(const DivisorClass& c1, std::int64_t rank, const Polarization& l) {
    if (rank < 1) fail(ErrorCode::InvalidArgument, "rank must be >= 1");
    return {intersect(c1, l.divisor()), rank};
}

namespace {

std::vector<std::int64_t> checked_degrees(std::span<const std::int64_t> degrees) {
    if (degrees.empty()) fail(ErrorCode::InvalidArgument, "need at least one curve");
    std::vector<std::int64_t> d(degrees.begin(), degrees.end());
    for (auto x : d)
        if (x < 1) fail(ErrorCode::InvalidArgument, "curve degree must be >= 1, got " + std::to_string(x));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::int64_t plane_c1(const std::vector<std::int64_t>& degrees) {
    std::int64_t delta = 0;
    for (auto d : degrees) delta = add(delta, d);
    return sub(delta, 3);
}

} // namespace

bool in_exceptional_set(std::span<const std::int64_t> degrees) {
    static const std::vector<std::vector<std::int64_t>> exceptional{{1}, {1, 1}, {2, 1}, {1, 1, 1}};
    const auto d = checked_degrees(degrees);
    return std::find(exceptional.begin(), exceptional.end(), d) != exceptional.end();
}

std::int64_t normalized_h0(std::span<const std::int64_t> degrees) {
    const auto d = checked_degrees(degrees);
    return ancona_h0(d, normalizing_twist(plane_c1(d)));
}

StabilityVerdict classify_p2_log(std::span<const std::int64_t> degrees) {
    const auto d = checked_degrees(degrees);
    const bool listed = in_exceptional_set(d);
    const std::int64_t sections = normalized_h0(d);
    if (listed != (sections != 0)) {
        fail(ErrorCode::Internal, "stability routes disagree: exceptional-set membership " +
                                      std::string(listed ? "yes" : "no") + ", normalized h0 " +
                                      std::to_string(sections));
    }
    StabilityVerdict v;
    if (!listed) {
        v.status = StabilityStatus::Stable;
        return v;
    }
    const std::int64_t c1 = plane_c1(d);
    const std::int64_t k = normalizing_twist(c1);
    // a section of F = Omega(log C)(k) is a subsheaf O(-k), slope -k against c1/2
    const std::int64_t lhs = mul(-2, k);
    if (lhs < c1) fail(ErrorCode::Internal, "section of the normalized bundle does not destabilize");
    v.status = lhs > c1 ? StabilityStatus::Unstable : StabilityStatus::StrictlySemistable;
    v.witness = DivisorClass(Surface::projective_plane(), {-k});
    return v;
}

bool semistable_p2(std::span<const std::int64_t> degrees) {
    const auto d = checked_degrees(degrees);
    const std::int64_t c1 = plane_c1(d);
    if (c1 % 2 != 0) return classify_p2_log(d).status == StabilityStatus::Stable;
    return ancona_h0(d, sub(normalizing_twist(c1), 1)) == 0;
}

namespace {

struct Setup {
    ExtensionPresentation p;
    DivisorClass l;
    std::int64_t c1_dot_l;
};

Setup prepare(const BundleDescriptor& b, const Polarization& pol) {
    if (!b.presentation) fail(ErrorCode::InvalidArgument, "bundle has no extension presentation");
    ExtensionPresentation p = *b.presentation;
    p.sub = to_working_basis(p.sub);
    p.quot = to_working_basis(p.quot);
    DivisorClass l = to_working_basis(pol.divisor());
    if (p.sub.surface().kind() != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, "destabilizer search is modelled on F_e, got " + b.surface.name());
    if (l.surface() != p.sub.surface()) fail(ErrorCode::SurfaceMismatch, "polarization is on a different surface");
    const std::int64_t c1l = intersect(p.sub + p.quot, l);
    return {std::move(p), std::move(l), c1l};
}

// Every D = top - N with N effective and 2 D.L >= c1.L (> when strict).
// With L ample, h.L and f.L are positive, so N lies in an explicit box.
std::vector<DivisorClass> enumerate_below(const DivisorClass& top, const Setup& s, bool strict,
                                          std::int64_t margin) {
    const Surface& surf = top.surface();
    const DivisorClass h = curve_class(surf, Curve::SectionH), f = curve_class(surf, Curve::Fiber);
    const std::int64_t hl = intersect(h, s.l), fl = intersect(f, s.l);
    // 2 N.L <= budget
    std::int64_t budget = sub(mul(2, intersect(top, s.l)), s.c1_dot_l);
    if (strict) budget = sub(budget, 1);
    std::vector<DivisorClass> out;
    if (budget < 0) return out;
    const std::int64_t n1_max = add(budget / mul(2, hl), margin);
    const std::int64_t n2_max = add(budget / mul(2, fl), margin);
    for (std::int64_t n1 = 0; n1 <= n1_max; ++n1) {
        for (std::int64_t n2 = 0; n2 <= n2_max; ++n2) {
            const std::int64_t nl = add(mul(n1, hl), mul(n2, fl));
            if (mul(2, nl) > budget) continue;
            out.push_back(top - DivisorClass(surf, {n1, n2}));
        }
    }
    return out;
}

} // namespace

std::vector<DestabilizingCandidate> destabilizing_candidates(const BundleDescriptor& b, const Polarization& pol,
                                                             bool strict, std::int64_t margin) {
    const Setup s = prepare(b, pol);
    std::vector<DestabilizingCandidate> out;
    auto slope_of = [&](const DivisorClass& d) { return Rational(intersect(d, s.l)); };

    for (auto& d : enumerate_below(s.p.sub, s, strict, margin)) {
        out.push_back({d, CandidateRoute::ThroughSub, slope_of(d), CandidateFate::Destabilizes,
                       "subsheaf of the sub line bundle"});
    }
    for (auto& d : enumerate_below(s.p.quot, s, strict, margin)) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& c) { return c.divisor == d; });
        if (seen) continue;
        DestabilizingCandidate c{d, CandidateRoute::ThroughQuotient, slope_of(d), CandidateFate::Unresolved, {}};
        const std::int64_t sections = h0_line(s.p.quot - d);
        if (s.p.z_length > 0 && sections <= s.p.z_length) {
            c.reason = "maps into I_Z(quot) only if the sections avoid Z";
        } else if (s.p.ext_class == ExtClass::Zero) {
            c.fate = CandidateFate::Destabilizes;
            c.reason = "split extension, the quotient is a direct summand";
        } else if (s.p.ext_class == ExtClass::NonzeroGeneric && d == s.p.quot && s.p.z_length == 0) {
            c.fate = CandidateFate::Excluded;
            c.reason = "a lift would split the non-trivial extension";
        } else {
            c.reason = "lifting through a non-split extension is not decided";
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.slope != y.slope) return x.slope > y.slope;
        return std::lexicographical_compare(x.divisor.coords().begin(), x.divisor.coords().end(),
                                            y.divisor.coords().begin(), y.divisor.coords().end());
    });
    // report classes in the caller's basis
    if (b.surface != s.p.sub.surface()) {
        for (auto& c : out) c.divisor = hirzebruch_to_blowup(c.divisor);
    }
    return out;
}

StabilityVerdict destabilizer_search(const BundleDescriptor& b, const Polarization& pol, bool strict) {
    const Setup s = prepare(b, pol);
    const auto candidates = destabilizing_candidates(b, pol, strict);
    const Rational mu(s.c1_dot_l, 2);

    StabilityVerdict v;
    auto first_of = [&](auto pred) { return std::find_if(candidates.begin(), candidates.end(), pred); };

    auto unstable = first_of([&](const auto& c) { return c.fate == CandidateFate::Destabilizes && c.slope > mu; });
    if (unstable != candidates.end()) {
        v.status = StabilityStatus::Unstable;
        v.witness = unstable->divisor;
        return v;
    }
    for (const auto& c : candidates) {
        if (c.fate != CandidateFate::Unresolved) continue;
        v.notes.push_back(c.divisor.str() + " via " +
                          (c.route == CandidateRoute::ThroughSub ? "sub" : "quotient") + ": " + c.reason);
    }
    if (!v.notes.empty()) {
        v.status = StabilityStatus::Undecided;
        return v;
    }
    auto equal = first_of([&](const auto& c) { return c.fate == CandidateFate::Destabilizes; });
    if (equal != candidates.end()) {
        v.status = StabilityStatus::StrictlySemistable;
        v.witness = equal->divisor;
        return v;
    }
    v.status = StabilityStatus::Stable;
    if (strict) v.notes.emplace_back("strict search: only semistability was tested");
    return v;
}

GstabResult gstab_feasibility(std::int64_t delta) {
    if (delta < 2) fail(ErrorCode::InvalidArgument, "total degree must be >= 2, got " + std::to_string(delta));
    // 3a+b = 2a + (a+b) is increasing in both a and a+b, so the optimum sits at
    // the largest admissible a with a+b at its cap.
    const std::int64_t a_max = checked::floor_div(sub(delta, 4), 2);
    const std::int64_t fibre_cap = checked::floor_div(delta, 2);
    GstabResult out;
    out.max_slope_bound = Rational(add(mul(2, a_max), fibre_cap));
    out.stable_certified = out.max_slope_bound < Rational(sub(mul(3, delta), 7), 2);
    return out;
}

} // namespace hirzlog
