#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli_parse.hpp"
#include "hirzlog/hirzlog.h"

namespace {

using hirzlog::cli::ArrangementSpec;
using hirzlog::cli::ParseError;
using hirzlog::cli::SurfaceSpec;
using hirzlog::cli::SurfaceType;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kSemantic = 3 };

struct Failure {
    int code;
    std::string message;
};

void check(hl_status st) {
    if (st == HL_OK) return;
    throw Failure{st == HL_E_INTERNAL ? kInternal : kSemantic, hl_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};

using SurfacePtr = std::unique_ptr<hl_surface, Deleter<hl_surface, hl_surface_free>>;
using ArrangementPtr = std::unique_ptr<hl_arrangement, Deleter<hl_arrangement, hl_arrangement_free>>;
using BundlePtr = std::unique_ptr<hl_bundle, Deleter<hl_bundle, hl_bundle_free>>;
using VerdictPtr = std::unique_ptr<hl_verdict, Deleter<hl_verdict, hl_verdict_free>>;
using ReportPtr = std::unique_ptr<hl_report, Deleter<hl_report, hl_report_free>>;

SurfacePtr make_surface(const SurfaceSpec& s) {
    hl_surface* out = nullptr;
    switch (s.type) {
    case SurfaceType::P1: check(hl_surface_projective_line(&out)); break;
    case SurfaceType::P2: check(hl_surface_projective_plane(&out)); break;
    case SurfaceType::F: check(hl_surface_hirzebruch(s.e, &out)); break;
    case SurfaceType::BlP2: check(hl_surface_blowup(1, &out)); break;
    }
    return SurfacePtr(out);
}

template <typename Fn>
std::string fetch_string(Fn&& fn) {
    size_t needed = 0;
    hl_status st = fn(nullptr, 0, &needed);
    if (st != HL_E_BUFFER_TOO_SMALL) check(st);
    std::string buf(needed, '\0');
    check(fn(buf.data(), buf.size(), &needed));
    buf.resize(needed - 1);
    return buf;
}

using Coords = std::vector<int64_t>;

struct Chern {
    Coords c1;
    int64_t c2 = 0;
};

Chern chern_of(const hl_bundle* b, size_t rank) {
    Chern c{Coords(rank), 0};
    check(hl_bundle_chern(b, c.c1.data(), rank, &c.c2));
    return c;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string join(const Coords& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

// Two-column table with the value column aligned.
class Table {
public:
    Table& row(std::string key, std::string value) {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    void print(std::ostream& os) const {
        size_t w = 0;
        for (const auto& r : rows_) w = std::max(w, r.first.size());
        for (const auto& [k, v] : rows_) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Context {
    bool json = false;
};

void emit(const Context& ctx, const Json& j, const Table& t) {
    if (ctx.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        t.print(std::cout);
    }
}

SurfaceSpec surface_arg(const std::string& text) { return hirzlog::cli::parse_surface(text); }

Coords divisor_arg(const std::string& text, const SurfaceSpec& s) { return hirzlog::cli::parse_divisor(text, s); }

std::string show(const Coords& c, const SurfaceSpec& s) {
    const std::string t = hirzlog::cli::format_divisor(c, s);
    return s.type == SurfaceType::F ? "(" + t + ")" : t;
}

// ---- commands ----

struct CohArgs {
    std::string surface = "F1";
    std::string divisor;
};

int run_coh(const Context& ctx, const CohArgs& a) {
    const SurfaceSpec spec = surface_arg(a.surface);
    const Coords d = divisor_arg(a.divisor, spec);
    const SurfacePtr s = make_surface(spec);
    hl_cohomology t{};
    check(hl_line_cohomology(s.get(), d.data(), d.size(), &t));
    Json j{{"surface", spec.name()}, {"class", d}, {"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"chi", t.chi}};
    Table tab;
    tab.row("surface", spec.name())
        .row("class", show(d, spec))
        .row("h0", std::to_string(t.h0))
        .row("h1", std::to_string(t.h1))
        .row("h2", std::to_string(t.h2))
        .row("chi", std::to_string(t.chi));
    emit(ctx, j, tab);
    return kOk;
}

struct ChernArgs {
    std::string file;
    std::string degrees;
};

int run_chern(const Context& ctx, const ChernArgs& a) {
    if (a.file.empty() == a.degrees.empty()) throw ParseError("give either an arrangement file or --degrees");
    ArrangementSpec arr;
    if (!a.file.empty()) {
        arr = hirzlog::cli::parse_arrangement_file(a.file);
    } else {
        arr.surface = {SurfaceType::P2, 0};
        for (auto d : hirzlog::cli::parse_degrees(a.degrees)) {
            arr.classes.push_back({d});
            arr.counts.push_back(1);
        }
    }
    const SurfacePtr s = make_surface(arr.surface);
    Coords flat;
    for (const auto& c : arr.classes) flat.insert(flat.end(), c.begin(), c.end());
    hl_arrangement* raw = nullptr;
    check(hl_arrangement_new(s.get(), flat.data(), arr.counts.data(), arr.classes.size(), &raw));
    const ArrangementPtr arrangement(raw);
    hl_bundle* braw = nullptr;
    check(hl_log_chern(arrangement.get(), &braw));
    const BundlePtr b(braw);
    const Chern c = chern_of(b.get(), arr.surface.rank());

    int64_t curves = 0;
    for (auto n : arr.counts) curves += n;
    Json j;
    j["arrangement"] = hirzlog::cli::arrangement_to_json(arr);
    j["log_bundle"] = {{"c1", c.c1}, {"c2", c.c2}};
    Table tab;
    tab.row("surface", arr.surface.name())
        .row("curves", std::to_string(curves))
        .row("c1", show(c.c1, arr.surface))
        .row("c2", std::to_string(c.c2));
    emit(ctx, j, tab);
    return kOk;
}

struct TwistArgs {
    std::string surface = "F1";
    std::string c1;
    int64_t c2 = 0;
    std::string by;
};

int run_twist(const Context& ctx, const TwistArgs& a) {
    const SurfaceSpec spec = surface_arg(a.surface);
    const Coords c1 = divisor_arg(a.c1, spec), l = divisor_arg(a.by, spec);
    const SurfacePtr s = make_surface(spec);
    hl_bundle* raw = nullptr;
    check(hl_bundle_new(s.get(), c1.data(), c1.size(), a.c2, &raw));
    const BundlePtr b(raw);
    check(hl_bundle_twist(b.get(), l.data(), l.size(), &raw));
    const BundlePtr t(raw);
    const Chern c = chern_of(t.get(), spec.rank());
    int64_t chi = 0;
    const bool has_chi = spec.type != SurfaceType::P1;
    if (has_chi) check(hl_chi_rank2(s.get(), c.c1.data(), c.c1.size(), c.c2, &chi));

    Json j{{"surface", spec.name()}, {"c1", c.c1}, {"c2", c.c2}};
    Table tab;
    tab.row("surface", spec.name()).row("c1", show(c.c1, spec)).row("c2", std::to_string(c.c2));
    if (has_chi) {
        j["chi"] = chi;
        tab.row("chi", std::to_string(chi));
    }
    emit(ctx, j, tab);
    return kOk;
}

int run_stab_p2(const Context& ctx, const std::string& degrees_text) {
    Coords d = hirzlog::cli::parse_degrees(degrees_text);
    hl_verdict* raw = nullptr;
    check(hl_classify_p2_log(d.data(), d.size(), &raw));
    const VerdictPtr v(raw);
    int listed = 0, semistable = 0;
    int64_t sections = 0;
    check(hl_in_exceptional_set(d.data(), d.size(), &listed));
    check(hl_normalized_h0(d.data(), d.size(), &sections));
    check(hl_semistable_p2(d.data(), d.size(), &semistable));
    std::sort(d.begin(), d.end(), std::greater<>());

    const std::string status = hl_stability_name(hl_verdict_status(v.get()));
    Json witness = nullptr;
    std::string witness_text = "-";
    if (hl_verdict_has_witness(v.get())) {
        int64_t w = 0;
        size_t n = 0;
        check(hl_verdict_witness(v.get(), &w, 1, &n));
        witness = Json::array({w});
        witness_text = "O(" + std::to_string(w) + ")";
    }
    Json j{{"degrees", d},
           {"verdict", status},
           {"witness", witness},
           {"routes", {{"exceptional_set", listed != 0}, {"normalized_h0", sections}}},
           {"semistable", semistable != 0}};
    Table tab;
    tab.row("degrees", join(d))
        .row("verdict", status)
        .row("witness", witness_text)
        .row("exceptional set", yes_no(listed != 0))
        .row("normalized h0", std::to_string(sections))
        .row("semistable", yes_no(semistable != 0));
    emit(ctx, j, tab);
    return kOk;
}

struct PresentationArgs {
    std::string surface = "F1";
    std::string sub;
    std::string quot;
    int64_t z = 0;
    std::string ext = "unknown";
};

hl_ext_class ext_arg(const std::string& text) {
    if (text == "zero") return HL_EXT_ZERO;
    if (text == "nonzero_generic") return HL_EXT_NONZERO_GENERIC;
    if (text == "unknown") return HL_EXT_UNKNOWN;
    throw ParseError("unknown extension class '" + text + "' (expected zero, nonzero_generic or unknown)");
}

BundlePtr presented_bundle(const SurfacePtr& s, const SurfaceSpec& spec, const PresentationArgs& a) {
    const Coords sub = divisor_arg(a.sub, spec), quot = divisor_arg(a.quot, spec);
    const hl_ext_class ext = ext_arg(a.ext);
    hl_bundle* raw = nullptr;
    check(hl_bundle_extension(s.get(), sub.data(), quot.data(), sub.size(), a.z, ext, &raw));
    return BundlePtr(raw);
}

struct DestabArgs {
    PresentationArgs p;
    std::string polarization;
    bool strict = false;
};

int run_destab(const Context& ctx, const DestabArgs& a) {
    const SurfaceSpec spec = surface_arg(a.p.surface);
    const SurfacePtr s = make_surface(spec);
    const BundlePtr b = presented_bundle(s, spec, a.p);
    const Coords l = divisor_arg(a.polarization, spec);
    const Chern c = chern_of(b.get(), spec.rank());
    int64_t num = 0, den = 1;
    check(hl_slope(s.get(), c.c1.data(), c.c1.size(), 2, l.data(), &num, &den));
    const std::string mu = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);

    hl_verdict* raw = nullptr;
    check(hl_destabilizer_search(b.get(), l.data(), l.size(), a.strict ? 1 : 0, &raw));
    const VerdictPtr v(raw);
    const std::string status = hl_stability_name(hl_verdict_status(v.get()));

    Json witness = nullptr;
    std::string witness_text = "-";
    if (hl_verdict_has_witness(v.get())) {
        Coords w(spec.rank());
        size_t n = 0;
        check(hl_verdict_witness(v.get(), w.data(), w.size(), &n));
        witness = w;
        witness_text = "O(" + hirzlog::cli::format_divisor(w, spec) + ")";
    }
    Json notes = Json::array();
    for (size_t i = 0; i < hl_verdict_note_count(v.get()); ++i) notes.push_back(hl_verdict_note(v.get(), i));

    Json j{{"surface", spec.name()}, {"polarization", l}, {"slope", mu}, {"verdict", status},
           {"witness", witness},     {"notes", notes}};
    Table tab;
    tab.row("surface", spec.name())
        .row("polarization", show(l, spec))
        .row("slope", mu)
        .row("verdict", status)
        .row("witness", witness_text);
    for (const auto& n : notes) tab.row("note", n.get<std::string>());
    emit(ctx, j, tab);
    return kOk;
}

int run_canext(const Context& ctx, const PresentationArgs& a) {
    const SurfaceSpec spec = surface_arg(a.surface);
    const SurfacePtr s = make_surface(spec);
    const BundlePtr b = presented_bundle(s, spec, a);
    hl_canonical ci{};
    check(hl_canonical_invariants(b.get(), &ci));
    const std::string certainty = ci.exact ? "Exact" : "Bounded";
    Json j{{"d", ci.d}, {"r", ci.r}, {"deg_z", ci.deg_z}, {"certainty", certainty}};
    Table tab;
    tab.row("d", std::to_string(ci.d))
        .row("r", std::to_string(ci.r))
        .row("deg Z", std::to_string(ci.deg_z))
        .row("certainty", certainty);
    emit(ctx, j, tab);
    return kOk;
}

int run_blowup(const Context& ctx, const std::string& degrees_text) {
    const Coords d = hirzlog::cli::parse_degrees(degrees_text);
    hl_bundle* raw = nullptr;
    check(hl_blowup_transform(d.data(), d.size(), &raw));
    const BundlePtr b(raw);
    const Chern c = chern_of(b.get(), 2);
    int64_t hf[2] = {0, 0};
    check(hl_blowup_to_hirzebruch(c.c1.data(), hf));
    int ok = 0;
    check(hl_theorem_main_check(d.data(), d.size(), &ok));

    const SurfaceSpec bl{SurfaceType::BlP2, 0}, f1{SurfaceType::F, 1};
    const Coords hf_c{hf[0], hf[1]};
    Json j{{"degrees", d}, {"c1", c.c1}, {"c1_hf", hf_c}, {"c2", c.c2}, {"pullback_check", ok != 0}};
    Table tab;
    tab.row("degrees", join(d))
        .row("c1", show(c.c1, bl))
        .row("c1 in (h,f)", show(hf_c, f1))
        .row("c2", std::to_string(c.c2))
        .row("pullback check", ok ? "pass" : "FAIL");
    emit(ctx, j, tab);
    return ok ? kOk : kInternal;
}

std::vector<std::string> catalog_ids(int64_t max_m) {
    const std::string text =
        fetch_string([&](char* buf, size_t cap, size_t* needed) { return hl_catalog_ids(max_m, buf, cap, needed); });
    std::vector<std::string> ids;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) ids.push_back(line);
    return ids;
}

int run_catalog(const Context& ctx, int64_t max_m) {
    const std::string text =
        fetch_string([&](char* buf, size_t cap, size_t* needed) { return hl_catalog_json(max_m, buf, cap, needed); });
    const Json cat = Json::parse(text);
    if (ctx.json) {
        std::cout << cat.dump(2) << "\n";
        return kOk;
    }
    const SurfaceSpec f1{SurfaceType::F, 1};
    Table tab;
    bool all = true;
    for (const auto& e : cat.at("entries")) {
        const Coords c1{e.at("c1").at("h").get<int64_t>(), e.at("c1").at("f").get<int64_t>()};
        const bool pass = e.at("all_passed").get<bool>();
        all = all && pass;
        std::string kind = e.at("claimed_form").at("kind").get<std::string>();
        kind.resize(std::max<size_t>(kind.size(), 16), ' ');
        std::string chern = "c1=" + show(c1, f1) + " c2=" + std::to_string(e.at("c2").get<int64_t>());
        chern.resize(std::max<size_t>(chern.size(), 20), ' ');
        tab.row(e.at("id").get<std::string>(), kind + chern + (pass ? "pass" : "FAIL"));
    }
    tab.print(std::cout);
    return all ? kOk : kInternal;
}

ReportPtr verify_one(const std::string& id) {
    hl_report* raw = nullptr;
    check(hl_verify_entry(id.c_str(), &raw));
    return ReportPtr(raw);
}

void print_report(const hl_report* r, const std::string& id) {
    std::cout << id << "\n";
    Table tab;
    for (size_t i = 0; i < hl_report_check_count(r); ++i) {
        tab.row(std::string("  ") + (hl_report_check_passed(r, i) ? "pass  " : "FAIL  ") + hl_report_check_name(r, i),
                hl_report_check_detail(r, i));
    }
    tab.print(std::cout);
}

Json report_as_json(const hl_report* r) {
    return Json::parse(
        fetch_string([&](char* buf, size_t cap, size_t* needed) { return hl_report_json(r, buf, cap, needed); }));
}

struct VerifyArgs {
    std::string entry;
    bool all = false;
    int64_t max_m = 3;
    int64_t tangent = -1;
};

int run_verify(const Context& ctx, const VerifyArgs& a) {
    const int chosen = (a.entry.empty() ? 0 : 1) + (a.all ? 1 : 0) + (a.tangent >= 0 ? 1 : 0);
    if (chosen != 1) throw ParseError("give exactly one of --entry, --all or --tangent");

    std::vector<std::pair<std::string, ReportPtr>> reports;
    if (a.tangent >= 0) {
        hl_report* raw = nullptr;
        check(hl_verify_tangent(a.tangent, &raw));
        reports.emplace_back("tangent_F" + std::to_string(a.tangent), ReportPtr(raw));
    } else if (a.all) {
        for (const auto& id : catalog_ids(a.max_m)) reports.emplace_back(id, verify_one(id));
    } else {
        reports.emplace_back(a.entry, verify_one(a.entry));
    }

    bool all = true;
    for (const auto& [id, r] : reports) all = all && hl_report_all_passed(r.get());
    if (ctx.json) {
        if (reports.size() == 1 && !a.all) {
            std::cout << report_as_json(reports.front().second.get()).dump(2) << "\n";
        } else {
            Json arr = Json::array();
            for (const auto& [id, r] : reports) arr.push_back(report_as_json(r.get()));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& [id, r] : reports) print_report(r.get(), id);
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? kOk : kInternal;
}

bool json_mode(const std::string& mode) {
    if (mode == "json") return true;
    if (mode == "table") return false;
    throw ParseError("unknown output mode '" + mode + "' (expected table or json)");
}

void add_presentation(CLI::App* cmd, PresentationArgs& p) {
    cmd->add_option("--surface", p.surface, "F<e> or BlP2")->capture_default_str();
    cmd->add_option("--sub", p.sub, "sub line bundle O(sub)")->required();
    cmd->add_option("--quot", p.quot, "quotient I_Z(quot)")->required();
    cmd->add_option("--z", p.z, "length of Z")->capture_default_str();
    cmd->add_option("--ext", p.ext, "extension class: zero, nonzero_generic or unknown")->capture_default_str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact intersection theory, cohomology and stability of logarithmic bundles on rational surfaces"};
    app.name("hirzlog");
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_extras(false);

    std::string output;
    bool json_flag = false;
    app.add_option("--output", output, "table or json (default: $HIRZLOG_OUTPUT, else table)");
    app.add_flag("--json", json_flag, "same as --output json");

    CohArgs coh;
    auto* coh_cmd = app.add_subcommand("coh", "h^i of a line bundle");
    coh_cmd->add_option("--surface", coh.surface, "P1, P2, F<e> or BlP2")->capture_default_str();
    coh_cmd->add_option("class", coh.divisor, "divisor class")->required();

    ChernArgs chern;
    auto* chern_cmd = app.add_subcommand("chern", "Chern classes of the logarithmic cotangent bundle");
    chern_cmd->add_option("file", chern.file, "arrangement JSON file");
    chern_cmd->add_option("--degrees", chern.degrees, "plane curve degrees, e.g. 2,1 or 2;2,1");

    TwistArgs twist;
    auto* twist_cmd = app.add_subcommand("twist", "twist a rank-2 bundle by a line bundle");
    twist_cmd->add_option("--surface", twist.surface, "P2, F<e> or BlP2")->capture_default_str();
    twist_cmd->add_option("--c1", twist.c1, "first Chern class")->required();
    twist_cmd->add_option("--c2", twist.c2, "second Chern class")->required();
    twist_cmd->add_option("--by", twist.by, "twisting class")->required();

    std::string stab_degrees;
    auto* stab_cmd = app.add_subcommand("stab-p2", "stability of the logarithmic bundle of plane curves");
    stab_cmd->add_option("--degrees", stab_degrees, "degrees, e.g. 2,1 or 2;2,1")->required();

    DestabArgs destab;
    auto* destab_cmd = app.add_subcommand("destab", "destabilizing line subbundle search for a presented bundle");
    add_presentation(destab_cmd, destab.p);
    destab_cmd->add_option("--polarization", destab.polarization, "ample class")->required();
    destab_cmd->add_flag("--strict", destab.strict, "only look for subsheaves of larger slope");

    PresentationArgs canext;
    auto* canext_cmd = app.add_subcommand("canext", "canonical extension invariants (d, r, deg Z)");
    add_presentation(canext_cmd, canext);

    std::string blowup_degrees;
    auto* blowup_cmd = app.add_subcommand("blowup", "invariants after blowing up a point off the curves");
    blowup_cmd->add_option("--degrees", blowup_degrees, "plane curve degrees")->required();

    int64_t catalog_max_m = 3;
    auto* catalog_cmd = app.add_subcommand("catalog", "list the worked-example catalog");
    catalog_cmd->add_option("--max-m", catalog_max_m, "largest m for families")->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the checks of catalog entries");
    verify_cmd->add_option("--entry", verify.entry, "entry id");
    verify_cmd->add_flag("--all", verify.all, "every entry");
    verify_cmd->add_option("--max-m", verify.max_m, "largest m for families with --all")->capture_default_str();
    verify_cmd->add_option("--tangent", verify.tangent, "tangent bundle of F<e>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        Context ctx;
        if (json_flag) {
            ctx.json = true;
        } else if (!output.empty()) {
            ctx.json = json_mode(output);
        } else if (const char* env = std::getenv("HIRZLOG_OUTPUT"); env && *env) {
            ctx.json = json_mode(env);
        }

        if (*coh_cmd) return run_coh(ctx, coh);
        if (*chern_cmd) return run_chern(ctx, chern);
        if (*twist_cmd) return run_twist(ctx, twist);
        if (*stab_cmd) return run_stab_p2(ctx, stab_degrees);
        if (*destab_cmd) return run_destab(ctx, destab);
        if (*canext_cmd) return run_canext(ctx, canext);
        if (*blowup_cmd) return run_blowup(ctx, blowup_degrees);
        if (*catalog_cmd) return run_catalog(ctx, catalog_max_m);
        if (*verify_cmd) return run_verify(ctx, verify);
    } catch (const ParseError& e) {
        std::cerr << "hirzlog: parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Failure& f) {
        std::cerr << "hirzlog: " << (f.code == kInternal ? "internal inconsistency: " : "error: ") << f.message
                  << "\n";
        return f.code;
    }
    return kParse;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
