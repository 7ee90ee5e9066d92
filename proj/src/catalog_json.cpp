#include <json.hpp>

#include "hirzlog/catalog.hpp"

namespace hirzlog {

using Json = nlohmann::ordered_json;

namespace {

Json class_json(const DivisorClass& d) {
    Json j = Json::object();
    const auto labels = d.surface().basis_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) j[labels[i]] = d[i];
    return j;
}

Json arrangement_json(const Arrangement& a) {
    Json curves = Json::array();
    for (const auto& g : a.groups()) {
        curves.push_back({{"a", g.cls[0]}, {"b", g.cls[1]}, {"count", g.count}});
    }
    return {{"surface", {{"type", "F"}, {"e", a.surface().e()}}}, {"curves", std::move(curves)}};
}

Json claimed_json(const ClaimedForm& form) {
    struct Visitor {
        Json operator()(const SplitForm& s) const {
            return {{"kind", "split"},
                    {"basis", s.first.surface().name()},
                    {"summands", Json::array({class_json(s.first), class_json(s.second)})}};
        }
        Json operator()(const ExtensionPresentation& p) const {
            return {{"kind", "extension"},
                    {"sub", class_json(p.sub)},
                    {"quot", class_json(p.quot)},
                    {"z_length", p.z_length},
                    {"ext_class", to_string(p.ext_class)}};
        }
        Json operator()(const PullbackTwist& pt) const {
            return {{"kind", "pullback_twist"},
                    {"form", pt.tag},
                    {"base_c1", pt.base_c1},
                    {"base_c2", pt.base_c2},
                    {"twist", class_json(pt.twist)}};
        }
    };
    return std::visit(Visitor{}, form);
}

Json checks_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return checks;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json entry_json(const CatalogEntry& e) {
    const BundleDescriptor b = claimed_bundle(e);
    Json j;
    j["id"] = e.id;
    j["source"] = e.source;
    j["arrangement"] = arrangement_json(e.arrangement);
    j["claimed_form"] = claimed_json(e.claimed);
    j["c1"] = class_json(b.c1);
    j["c2"] = b.c2;
    j["claimed_dr"] = e.claimed_dr ? Json::array({e.claimed_dr->first, e.claimed_dr->second}) : Json(nullptr);
    j["ext1_dimension"] = optional_json(e.ext1_dimension);
    j["plane_degrees"] = optional_json(e.plane_degrees);
    Json restrictions = Json::array();
    for (const auto& [curve, type] : e.restrictions)
        restrictions.push_back({{"curve", to_string(curve)}, {"splitting", {type.first, type.second}}});
    j["restrictions"] = std::move(restrictions);
    if (e.verdict) {
        j["verdict"] = {{"polarization", class_json(e.verdict->polarization)},
                        {"status", to_string(e.verdict->status)}};
    } else {
        j["verdict"] = nullptr;
    }
    j["note"] = e.note;
    const VerificationReport r = verify_entry(e);
    j["checks"] = checks_json(r);
    j["all_passed"] = r.all_passed();
    return j;
}

} // namespace

std::string catalog_json(std::int64_t max_m) {
    Json entries = Json::array();
    for (const auto& e : catalog(max_m)) entries.push_back(entry_json(e));
    Json j;
    j["surface"] = "F1";
    j["entries"] = std::move(entries);
    return j.dump(2);
}

std::string report_json(const VerificationReport& report) {
    Json j;
    j["id"] = report.id;
    j["checks"] = checks_json(report);
    j["all_passed"] = report.all_passed();
    return j.dump(2);
}

} // namespace hirzlog
