// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "doc_runner.hpp"
#include "hirzlog/catalog.hpp"
#include "hirzlog/cohom.hpp"
#include "oracles.hpp"

using namespace hirzlog;

namespace {

const Surface F1 = Surface::hirzebruch(1);

DivisorClass f1(std::int64_t a, std::int64_t b) { return {F1, {a, b}}; }

struct Criterion {
    int number;
    std::string title;
    std::function<std::string()> run;  // empty string on success, else the first failure
};

void for_each_tuple(std::int64_t max_m, std::int64_t max_d, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> rec = [&](std::int64_t top) {
        if (!cur.empty()) fn(cur);
        if (static_cast<std::int64_t>(cur.size()) == max_m) return;
        for (std::int64_t d = top; d >= 1; --d) {
            cur.push_back(d);
            rec(d);
            cur.pop_back();
        }
    };
    rec(max_d);
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::string cohomology_goldens() {
    if (line_cohomology(f1(2, 0)).h1 != 1) return "h1(2h) != 1";
    if (line_cohomology(f1(1, -1)).h1 != 1) return "h1(h-f) != 1";
    if (line_cohomology(f1(1, -2)).h1 != 3) return "h1(h-2f) != 3";
    for (std::int64_t m = 2; m <= 10; ++m)
        if (line_cohomology(f1(2, m - 1)).h1 != 0) return "h1(2h+(m-1)f) != 0 at m=" + std::to_string(m);
    return {};
}

std::string duality_box() {
    for (std::int64_t e = 0; e <= 3; ++e) {
        const Surface s = Surface::hirzebruch(e);
        for (std::int64_t a = -8; a <= 8; ++a)
            for (std::int64_t b = -8; b <= 8; ++b) {
                const DivisorClass d(s, {a, b});
                const CohomologyTable t = line_cohomology(d), dual = line_cohomology(canonical_class(s) - d);
                const std::string at = " at e=" + std::to_string(e) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
                if (t.h0 != dual.h2 || t.h1 != dual.h1 || t.h2 != dual.h0) return "Serre duality" + at;
                if (t.chi != oracle::chi_f(e, a, b) || t.h0 - t.h1 + t.h2 != t.chi) return "Riemann-Roch" + at;
            }
    }
    return {};
}

std::string chern_scan() {
    std::string err;
    for_each_tuple(5, 4, [&](const std::vector<std::int64_t>& d) {
        if (!err.empty()) return;
        const BundleDescriptor b = log_chern(Arrangement::plane(d));
        const oracle::PlaneChern o = oracle::plane_display(d);
        if (b.c1[0] != o.c1 || b.c2 != o.c2) err = "P2 degrees " + join(d);
    });
    if (!err.empty()) return err;
    std::vector<std::pair<std::int64_t, std::int64_t>> pool;
    for (std::int64_t a = 0; a <= 4; ++a)
        for (std::int64_t b = 0; b <= 4; ++b)
            if (has_irreducible_member(f1(a, b))) pool.emplace_back(a, b);
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!err.empty()) return;
        if (!idx.empty()) {
            std::vector<std::pair<std::int64_t, std::int64_t>> curves;
            std::vector<DivisorClass> classes;
            for (auto i : idx) {
                curves.push_back(pool[i]);
                classes.push_back(f1(pool[i].first, pool[i].second));
            }
            const BundleDescriptor b = log_chern(F1, classes);
            const oracle::SurfaceChern o = oracle::f1_display(curves);
            if (b.c1 != f1(o.a, o.b) || b.c2 != o.c2) err = "F1 arrangement of " + std::to_string(idx.size()) + " curves";
        }
        if (idx.size() == 5) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            idx.push_back(i);
            rec(i);
            idx.pop_back();
        }
    };
    rec(0);
    return err;
}

std::string stability_scan() {
    std::string err;
    int non_stable = 0;
    for_each_tuple(5, 4, [&](const std::vector<std::int64_t>& d) {
        if (!err.empty()) return;
        const StabilityVerdict v = classify_p2_log(d);  // raises Internal when the two routes disagree
        const bool ns = v.status != StabilityStatus::Stable;
        non_stable += ns ? 1 : 0;
        if (ns != oracle::exceptional_tuple(d)) err = "degrees " + join(d) + " gave " + to_string(v.status);
    });
    if (!err.empty()) return err;
    if (non_stable != 4) return std::to_string(non_stable) + " non-stable tuples";
    const std::vector<std::int64_t> conic_line{2, 1};
    if (classify_p2_log(conic_line).status != StabilityStatus::StrictlySemistable) return "(2;2,1) is not StrictlySemistable";
    return {};
}

std::string exceptional_bundle() {
    const Polarization l(f1(2, 3));
    auto bundle = [](ExtClass e) { return BundleDescriptor::extension({f1(0, -2), f1(-1, -1), 0, e}); };
    if (destabilizer_search(bundle(ExtClass::NonzeroGeneric), l).status != StabilityStatus::Stable)
        return "non-split extension not Stable";
    const StabilityVerdict z = destabilizer_search(bundle(ExtClass::Zero), l);
    if (z.status != StabilityStatus::Unstable || !z.witness || *z.witness != f1(-1, -1))
        return "split extension not Unstable with witness (-1,-1)";
    const BundleDescriptor tw = twist_rank2(bundle(ExtClass::NonzeroGeneric), f1(0, 2));
    if (chi_rank2(tw.c1, tw.c2) != 1) return "chi of the 2f twist != 1";
    return {};
}

std::string canonical_extensions() {
    auto expect = [](const std::string& id, std::int64_t d, std::int64_t r) -> std::string {
        const CanonicalInvariants ci = canonical_invariants(claimed_bundle(find_entry(id)));
        if (ci != CanonicalInvariants{d, r, 0, Certainty::Exact}) return id + " gave (" + std::to_string(ci.d) + "," +
                                                                            std::to_string(ci.r) + "," +
                                                                            std::to_string(ci.deg_z) + ")";
        return {};
    };
    for (const auto& [id, d, r] : std::vector<std::tuple<std::string, std::int64_t, std::int64_t>>{
             {"fibers_1", 0, -1}, {"exceptional_h", 0, -2}, {"line_Ltilde", 0, -2}})
        if (auto e = expect(id, d, r); !e.empty()) return e;
    for (std::int64_t m = 1; m <= 12; ++m)
        if (auto e = expect("fibers_" + std::to_string(m), 0, m - 2); !e.empty()) return e;
    return {};
}

std::string check_passed(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.passed ? "" : r.id + " " + name + ": " + c.detail;
    return r.id + " has no " + name + " check";
}

std::string ext_dimensions() {
    const std::vector<std::pair<std::string, std::int64_t>> expected{
        {"fibers_1", 1}, {"exceptional_h", 1}, {"line_Ltilde", 3}, {"fibers_2", 0}, {"fibers_6", 0}};
    for (const auto& [id, dim] : expected) {
        const CatalogEntry e = find_entry(id);
        if (e.ext1_dimension != dim) return id + " records the wrong dimension";
        if (auto err = check_passed(verify_entry(e), "ext1"); !err.empty()) return err;
    }
    return {};
}

std::string blowup_identity() {
    for (std::int64_t m = 1; m <= 12; ++m)
        for (std::int64_t d = 1; d <= 5; ++d) {
            const BundleDescriptor t = blowup_transform(std::vector<std::int64_t>(static_cast<std::size_t>(m), d));
            const ModuliInvariants mi = moduli_invariants_equal_degree(m, d);
            if (mi.c1 != t.c1 || mi.c2 != t.c2) return "m=" + std::to_string(m) + " d=" + std::to_string(d);
        }
    const ModuliInvariants six = moduli_invariants_equal_degree(6, 1);
    if (six.c1 != DivisorClass(Surface::blowup_plane(1), {3, 2}) || six.c2 != 5) return "(6,1) instance";
    std::string err;
    for_each_tuple(4, 3, [&](const std::vector<std::int64_t>& d) {
        if (err.empty() && !theorem_main_check(d)) err = "pullback check on " + join(d);
    });
    return err;
}

std::string gstab() {
    for (std::int64_t delta = 2; delta <= 50; ++delta) {
        const GstabResult g = gstab_feasibility(delta);
        if (!g.stable_certified || !(g.max_slope_bound <= Rational(3 * delta - 8, 2)) ||
            !(g.max_slope_bound < Rational(3 * delta - 7, 2)))
            return "delta=" + std::to_string(delta);
    }
    return {};
}

std::string tangent_sections() {
    if (h0_line(f1(2, 1)) + h0_line(f1(0, 2)) != 6) return "h0 sum != 6";
    if (line_cohomology(f1(2, 1)).h1 != 0) return "h1(2h+f) != 0";
    return check_passed(verify_tangent_restrictions(1), "sections");
}

std::string full_catalog() {
    for (const auto& e : catalog(12)) {
        const VerificationReport r = verify_entry(e);
        for (const auto& c : r.checks)
            if (!c.passed) return e.id + " " + c.name + ": " + c.detail;
    }
    const auto outcomes = doc::run_examples(HIRZLOG_SOURCE_DIR "/README.md", HIRZLOG_CLI_PATH, HIRZLOG_SOURCE_DIR);
    if (outcomes.empty()) return "no doc examples found";
    for (const auto& o : outcomes)
        if (!o.passed()) return "README line " + std::to_string(o.example.line) + ": " + o.example.command;
    return {};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "cohomology golden values", cohomology_goldens},
        {2, "Serre duality and Riemann-Roch on e<=3, |a|,|b|<=8", duality_box},
        {3, "log Chern classes against the closed forms, m<=5, coefficients<=4", chern_scan},
        {4, "plane stability classifier, m<=5, d_i<=4", stability_scan},
        {5, "exceptional-curve bundle for 2h+3f", exceptional_bundle},
        {6, "canonical extension invariants", canonical_extensions},
        {7, "Ext^1 dimensions", ext_dimensions},
        {8, "blow-up transform identity", blowup_identity},
        {9, "gstab certification, 2<=delta<=50", gstab},
        {10, "tangent bundle sections at e=1", tangent_sections},
        {11, "full catalog verification and README examples", full_catalog},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = c.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %s (%lld ms)%s%s\n", err.empty() ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    static_cast<long long>(ms), err.empty() ? "" : ": ", err.c_str());
        failed += err.empty() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
