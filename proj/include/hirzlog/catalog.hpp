#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hirzlog/canext.hpp"
#include "hirzlog/logchern.hpp"
#include "hirzlog/stab.hpp"

namespace hirzlog {

/// Chern data of Omega^1_Bl(log (C~ + E)) on the one-point blow-up for plane
/// curves of the given degrees missing the blown-up point:
/// c1 = (delta - 3)H + 2E, c2 = c2(Omega^1_P2(log C)) - 1.
BundleDescriptor blowup_transform(std::span<const std::int64_t> degrees);

struct ModuliInvariants {
    DivisorClass c1;
    std::int64_t c2 = 0;

    bool operator==(const ModuliInvariants&) const = default;
};

/// Closed form for m curves of degree d: ((md-3)H + 2E, (d^2 m^2 + d(d-6)m + 4)/2).
ModuliInvariants moduli_invariants_equal_degree(std::int64_t m, std::int64_t d);

/// Checks eta^* Omega(log C) = Omega(log C~ + E)(-E) on Chern data: twisting the
/// transform by -E must give back the pulled-back plane invariants.
bool theorem_main_check(std::span<const std::int64_t> degrees);

struct SplitForm {
    DivisorClass first;
    DivisorClass second;
};

/// A bundle known as (eta^* V)(T) for a plane bundle V with Chern data
/// (base_c1, base_c2) and a twist T on the blow-up.
struct PullbackTwist {
    std::string tag;
    std::int64_t base_c1 = 0;
    std::int64_t base_c2 = 0;
    DivisorClass twist;
};

using ClaimedForm = std::variant<SplitForm, ExtensionPresentation, PullbackTwist>;

struct ExpectedVerdict {
    DivisorClass polarization;
    StabilityStatus status;
};

struct CatalogEntry {
    std::string id;
    Arrangement arrangement;  // on F1, (h, f) coordinates
    ClaimedForm claimed;
    std::optional<std::pair<std::int64_t, std::int64_t>> claimed_dr;
    std::optional<std::int64_t> ext1_dimension;
    /// plane degrees whose blow-up transform must agree with this entry
    std::optional<std::vector<std::int64_t>> plane_degrees;
    std::vector<std::pair<Curve, SplittingType>> restrictions;
    std::optional<ExpectedVerdict> verdict;
    std::string note;    // non-executable remarks (recovery of the arrangement etc.)
    std::string source;  // which worked example the entry records
};

/// Bundle described by the claimed form, in F1 coordinates.
BundleDescriptor claimed_bundle(const CatalogEntry& entry);

/// Every shipped entry; families indexed by m are listed for 1 <= m <= max_m.
std::vector<CatalogEntry> catalog(std::int64_t max_m = 6);

/// Looks an entry up by id; "fibers_<m>" and "h_plus_fibers_<m>" accept any m >= 1.
CatalogEntry find_entry(const std::string& id);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

VerificationReport verify_entry(const CatalogEntry& entry);

/// Tangent-bundle restriction data on F_e, checked against c1 restrictions.
VerificationReport verify_tangent_restrictions(std::int64_t e);

/// Catalog plus verification reports as JSON text (2-space indent).
std::string catalog_json(std::int64_t max_m = 6);
std::string report_json(const VerificationReport& report);

} // namespace hirzlog
