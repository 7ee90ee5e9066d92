#include "hirzlog/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hirzlog/checked.hpp"
#include "hirzlog/cohom.hpp"
#include "hirzlog/error.hpp"

namespace hirzlog {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

const Surface kF1 = Surface::hirzebruch(1);
const Surface kBl = Surface::blowup_plane(1);

DivisorClass f1(std::int64_t a, std::int64_t b) { return {kF1, {a, b}}; }
DivisorClass bl(std::int64_t x, std::int64_t y) { return {kBl, {x, y}}; }

std::vector<std::int64_t> validated_degrees(std::span<const std::int64_t> degrees) {
    return Arrangement::plane(degrees).degrees();
}

} // namespace

BundleDescriptor blowup_transform(std::span<const std::int64_t> degrees) {
    const auto d = validated_degrees(degrees);
    const BundleDescriptor plane = log_chern(Arrangement::plane(d));
    return {bl(plane.c1[0], 2), sub(plane.c2, 1)};
}

ModuliInvariants moduli_invariants_equal_degree(std::int64_t m, std::int64_t d) {
    if (m < 1 || d < 1) fail(ErrorCode::InvalidArgument, "need m >= 1 and d >= 1");
    const std::int64_t md = mul(m, d);
    const std::int64_t numer = add(add(mul(md, md), mul(mul(d, sub(d, 6)), m)), 4);
    if (numer % 2 != 0) fail(ErrorCode::Internal, "odd numerator in the equal-degree c2 formula");
    return {bl(sub(md, 3), 2), numer / 2};
}

bool theorem_main_check(std::span<const std::int64_t> degrees) {
    const auto d = validated_degrees(degrees);
    const BundleDescriptor plane = log_chern(Arrangement::plane(d));
    const BundleDescriptor twisted = twist_rank2(blowup_transform(d), bl(0, -1));
    return twisted.c1 == bl(plane.c1[0], 0) && twisted.c2 == plane.c2;
}

namespace {

BundleDescriptor pullback_twist_bundle(const PullbackTwist& pt) {
    const BundleDescriptor base(bl(pt.base_c1, 0), pt.base_c2);
    const BundleDescriptor t = twist_rank2(base, pt.twist);
    return {blowup_to_hirzebruch(t.c1), t.c2};
}

} // namespace

BundleDescriptor claimed_bundle(const CatalogEntry& entry) {
    struct Visitor {
        BundleDescriptor operator()(const SplitForm& s) const {
            return BundleDescriptor::split(to_working_basis(s.first), to_working_basis(s.second));
        }
        BundleDescriptor operator()(const ExtensionPresentation& p) const {
            ExtensionPresentation q = p;
            q.sub = to_working_basis(q.sub);
            q.quot = to_working_basis(q.quot);
            return BundleDescriptor::extension(q);
        }
        BundleDescriptor operator()(const PullbackTwist& pt) const { return pullback_twist_bundle(pt); }
    };
    return std::visit(Visitor{}, entry.claimed);
}

namespace {

Arrangement f1_arrangement(std::vector<CurveGroup> groups) { return {kF1, std::move(groups)}; }

CatalogEntry fibers_entry(std::int64_t m) {
    CatalogEntry e{"fibers_" + std::to_string(m),
                   f1_arrangement({{f1(0, 1), m}}),
                   SplitForm{f1(0, m - 2), f1(-2, -1)},
                   std::pair<std::int64_t, std::int64_t>{0, m - 2},
                   m == 1 ? 1 : 0,
                   std::nullopt,
                   {{Curve::Fiber, {0, -2}}},
                   std::nullopt,
                   {},
                   "m distinct fibres of the ruling"};
    if (m == 1) {
        e.restrictions.push_back({Curve::SectionH, {1, -1}});
        e.note = "the extension by O(-f) is trivial although its Ext^1 is one-dimensional";
    }
    return e;
}

CatalogEntry h_plus_fibers_entry(std::int64_t m) {
    return {"h_plus_fibers_" + std::to_string(m),
            f1_arrangement({{f1(1, 0), 1}, {f1(0, 1), m}}),
            SplitForm{f1(0, m - 2), f1(-1, -1)},
            std::pair<std::int64_t, std::int64_t>{0, m - 2},
            0,
            std::nullopt,
            {{Curve::Fiber, {0, -1}}},
            std::nullopt,
            {},
            "the (-1)-curve h together with m distinct fibres"};
}

CatalogEntry exceptional_h_entry() {
    return {"exceptional_h",
            f1_arrangement({{f1(1, 0), 1}}),
            ExtensionPresentation{f1(0, -2), f1(-1, -1), 0, ExtClass::NonzeroGeneric},
            std::pair<std::int64_t, std::int64_t>{0, -2},
            1,
            std::nullopt,
            {{Curve::Fiber, {0, -1}}, {Curve::SectionH, {-1, -1}}},
            ExpectedVerdict{f1(2, 3), StabilityStatus::Stable},
            "unique point of M(-h-3f, 2) for the polarization 2h+3f; isomorphic to (eta^* Omega_P2)(h)",
            "the exceptional curve alone"};
}

CatalogEntry line_tilde_entry() {
    return {"line_Ltilde",
            f1_arrangement({{f1(1, 1), 1}}),
            ExtensionPresentation{f1(0, -2), f1(-1, 0), 0, ExtClass::NonzeroGeneric},
            std::pair<std::int64_t, std::int64_t>{0, -2},
            3,
            std::nullopt,
            {{Curve::Fiber, {0, -1}}, {Curve::SectionH, {1, -2}}},
            std::nullopt,
            "independent of the choice of line; the extension class is non-trivial but vanishes on h, "
            "so the single line is not recoverable from the bundle",
            "strict transform of a line missing the blown-up point"};
}

CatalogEntry lines_e_entry(std::int64_t m) {
    CatalogEntry e{"lines_E_" + std::to_string(m),
                   f1_arrangement({{f1(1, 1), m}, {f1(1, 0), 1}}),
                   SplitForm{bl(-1, 1), bl(-1, 1)},
                   std::nullopt,
                   std::nullopt,
                   std::vector<std::int64_t>(static_cast<std::size_t>(m), 1),
                   {},
                   std::nullopt,
                   {},
                   "m lines missing the blown-up point, together with E"};
    switch (m) {
    case 1: e.claimed = SplitForm{bl(-1, 1), bl(-1, 1)}; break;
    case 2: e.claimed = SplitForm{bl(0, 1), bl(-1, 1)}; break;
    case 3: e.claimed = SplitForm{bl(0, 1), bl(0, 1)}; break;
    default:
        e.claimed = PullbackTwist{"eta*(T_P2(-1))(E)", 1, 1, bl(0, 1)};
        e.note = "from five lines on, the arrangement is recoverable unless the lines are tangent to a common "
                 "smooth conic, which five general lines always are";
        break;
    }
    return e;
}

CatalogEntry conic_e_entry() {
    return {"conic_E",
            f1_arrangement({{f1(2, 2), 1}, {f1(1, 0), 1}}),
            PullbackTwist{"(eta*Omega_P2)(H+E)", -3, 3, bl(1, 1)},
            std::nullopt,
            std::nullopt,
            std::vector<std::int64_t>{2},
            {},
            std::nullopt,
            {},
            "a smooth conic missing the blown-up point, together with E"};
}

std::int64_t parse_family_index(const std::string& id, const std::string& prefix) {
    if (id.rfind(prefix, 0) != 0) return -1;
    const std::string rest = id.substr(prefix.size());
    std::int64_t m = -1;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return -1;
    return m;
}

} // namespace

std::vector<CatalogEntry> catalog(std::int64_t max_m) {
    if (max_m < 1) fail(ErrorCode::InvalidArgument, "max_m must be >= 1");
    std::vector<CatalogEntry> out;
    for (std::int64_t m = 1; m <= max_m; ++m) out.push_back(fibers_entry(m));
    out.push_back(exceptional_h_entry());
    for (std::int64_t m = 1; m <= max_m; ++m) out.push_back(h_plus_fibers_entry(m));
    out.push_back(line_tilde_entry());
    for (std::int64_t m = 1; m <= 4; ++m) out.push_back(lines_e_entry(m));
    out.push_back(conic_e_entry());
    return out;
}

CatalogEntry find_entry(const std::string& id) {
    if (const auto m = parse_family_index(id, "fibers_"); m >= 1) return fibers_entry(m);
    if (const auto m = parse_family_index(id, "h_plus_fibers_"); m >= 1) return h_plus_fibers_entry(m);
    if (const auto m = parse_family_index(id, "lines_E_"); m >= 1 && m <= 4) return lines_e_entry(m);
    if (id == "exceptional_h") return exceptional_h_entry();
    if (id == "line_Ltilde") return line_tilde_entry();
    if (id == "conic_E") return conic_e_entry();
    fail(ErrorCode::NotFound, "no catalog entry '" + id + "'");
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::string chern_str(const DivisorClass& c1, std::int64_t c2) {
    return "c1=" + c1.str() + " c2=" + std::to_string(c2);
}

std::string pair_str(std::int64_t p, std::int64_t q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// Runs one check; library errors become failed checks instead of escaping.
template <typename Fn>
void run_check(VerificationReport& report, const std::string& name, Fn&& fn) {
    CheckResult r{name, false, {}};
    try {
        auto [ok, detail] = fn();
        r.passed = ok;
        r.detail = std::move(detail);
    } catch (const Error& e) {
        r.detail = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(r));
}

using Outcome = std::pair<bool, std::string>;

} // namespace

VerificationReport verify_entry(const CatalogEntry& entry) {
    VerificationReport report{entry.id, {}};
    const BundleDescriptor log_bundle = log_chern(entry.arrangement);
    const BundleDescriptor claimed = claimed_bundle(entry);

    run_check(report, "chern", [&]() -> Outcome {
        const bool ok = log_bundle.c1 == claimed.c1 && log_bundle.c2 == claimed.c2;
        return {ok, "log " + chern_str(log_bundle.c1, log_bundle.c2) + "; claimed " +
                        chern_str(claimed.c1, claimed.c2)};
    });

    if (entry.claimed_dr) {
        run_check(report, "canonical_invariants", [&]() -> Outcome {
            const CanonicalInvariants ci = canonical_invariants(claimed);
            const bool ok = ci.d == entry.claimed_dr->first && ci.r == entry.claimed_dr->second &&
                            ci.certainty == Certainty::Exact;
            return {ok, "(d,r)=" + pair_str(ci.d, ci.r) + " " + to_string(ci.certainty) + "; claimed " +
                            pair_str(entry.claimed_dr->first, entry.claimed_dr->second)};
        });
    }

    if (claimed.presentation && claimed.presentation->z_length == 0) {
        run_check(report, "pi_uniform_deg_z", [&]() -> Outcome {
            const CanonicalInvariants ci = canonical_invariants(claimed);
            const std::int64_t z = deg_z(claimed.c1, claimed.c2, ci.d, ci.r);
            return {z == 0 && is_pi_uniform(claimed), "deg Z=" + std::to_string(z)};
        });
    }

    if (entry.ext1_dimension && claimed.presentation) {
        run_check(report, "ext1", [&]() -> Outcome {
            const auto& p = *claimed.presentation;
            const std::int64_t dim = ext1_vs_ideal(p.sub, p.quot, p.z_length);
            return {dim == *entry.ext1_dimension,
                    "dim Ext^1=" + std::to_string(dim) + "; expected " + std::to_string(*entry.ext1_dimension)};
        });
    }

    for (const auto& [curve, type] : entry.restrictions) {
        run_check(report, "restriction_" + to_string(curve), [&]() -> Outcome {
            const std::int64_t deg = restriction_degree(log_bundle.c1, curve);
            bool ok = type.first >= type.second && add(type.first, type.second) == deg;
            std::string detail = "splitting " + pair_str(type.first, type.second) + ", c1 degree " +
                                 std::to_string(deg);
            if (claimed.is_split()) {
                const auto& p = *claimed.presentation;
                std::int64_t x = restriction_degree(p.sub, curve), y = restriction_degree(p.quot, curve);
                if (x < y) std::swap(x, y);
                ok = ok && x == type.first && y == type.second;
                detail += ", summands restrict to " + pair_str(x, y);
            }
            return {ok, detail};
        });
    }

    if (entry.verdict) {
        run_check(report, "stability", [&]() -> Outcome {
            const StabilityVerdict v = destabilizer_search(claimed, Polarization(entry.verdict->polarization));
            return {v.status == entry.verdict->status,
                    to_string(v.status) + " for L=" + entry.verdict->polarization.str() + "; expected " +
                        to_string(entry.verdict->status)};
        });
    }

    if (entry.plane_degrees) {
        run_check(report, "blowup_transform", [&]() -> Outcome {
            const BundleDescriptor t = blowup_transform(*entry.plane_degrees);
            const DivisorClass c1 = blowup_to_hirzebruch(t.c1);
            return {c1 == log_bundle.c1 && t.c2 == log_bundle.c2,
                    "transform " + chern_str(c1, t.c2) + " in (h,f)"};
        });
    }

    if (const auto* s = std::get_if<SplitForm>(&entry.claimed); s && s->first.surface() == kBl) {
        run_check(report, "basis_closure", [&]() -> Outcome {
            const DivisorClass c1_he = s->first + s->second;
            const std::int64_t c2_he = intersect(s->first, s->second);
            const bool round_trip = hirzebruch_to_blowup(blowup_to_hirzebruch(s->first)) == s->first &&
                                    hirzebruch_to_blowup(blowup_to_hirzebruch(s->second)) == s->second;
            const bool ok = round_trip && blowup_to_hirzebruch(c1_he) == claimed.c1 && c2_he == claimed.c2;
            return {ok, "(H,E) " + chern_str(c1_he, c2_he)};
        });
    }

    if (entry.id == "exceptional_h") {
        run_check(report, "pullback_form", [&]() -> Outcome {
            const BundleDescriptor alt = pullback_twist_bundle({"(eta*Omega_P2)(E)", -3, 3, bl(0, 1)});
            return {alt.c1 == claimed.c1 && alt.c2 == claimed.c2, "(eta*Omega_P2)(E) " + chern_str(alt.c1, alt.c2)};
        });
    }
    return report;
}

VerificationReport verify_tangent_restrictions(std::int64_t e) {
    const Surface s = Surface::hirzebruch(e);
    VerificationReport report{"tangent_F" + std::to_string(e), {}};
    const BundleDescriptor t = tangent_bundle(s);

    run_check(report, "chern", [&]() -> Outcome {
        // 0 -> O(2h+ef) -> T -> O(2f) -> 0
        const BundleDescriptor seq = BundleDescriptor::split(DivisorClass(s, {2, e}), DivisorClass(s, {0, 2}));
        const auto [k, c2] = cotangent_chern(s);
        const bool ok = seq.c1 == t.c1 && seq.c2 == t.c2 && t.c1 == -k && t.c2 == c2;
        return {ok, chern_str(t.c1, t.c2)};
    });
    for (const auto& [curve, type] : t.splitting) {
        run_check(report, "restriction_" + to_string(curve), [&]() -> Outcome {
            const std::int64_t deg = restriction_degree(t.c1, curve);
            return {type.first >= type.second && type.first + type.second == deg,
                    "splitting " + pair_str(type.first, type.second) + ", c1 degree " + std::to_string(deg)};
        });
    }
    if (e == 1) {
        run_check(report, "sections", [&]() -> Outcome {
            const CohomologyTable sub_t = line_cohomology(DivisorClass(s, {2, e}));
            const std::int64_t quot_h0 = h0_line(DivisorClass(s, {0, 2}));
            const std::int64_t total = sub_t.h0 + quot_h0;
            return {sub_t.h1 == 0 && total == e + 5,
                    "h0=" + std::to_string(sub_t.h0) + "+" + std::to_string(quot_h0) + ", h1(sub)=" +
                        std::to_string(sub_t.h1)};
        });
    }
    return report;
}

} // namespace hirzlog
