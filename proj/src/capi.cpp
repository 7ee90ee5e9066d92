#include "hirzlog/hirzlog.h"

#include <cstring>
#include <new>
#include <string>

#include "hirzlog/canext.hpp"
#include "hirzlog/catalog.hpp"
#include "hirzlog/cohom.hpp"
#include "hirzlog/error.hpp"
#include "hirzlog/logchern.hpp"
#include "hirzlog/stab.hpp"

struct hl_surface {
    hirzlog::Surface s;
};

struct hl_arrangement {
    hirzlog::Arrangement a;
};

struct hl_bundle {
    hirzlog::BundleDescriptor b;
};

struct hl_verdict {
    hirzlog::StabilityVerdict v;
};

struct hl_report {
    hirzlog::VerificationReport r;
};

namespace {

using namespace hirzlog;

thread_local std::string last_error;

hl_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return HL_E_INVALID_ARGUMENT;
    case ErrorCode::SurfaceMismatch: return HL_E_SURFACE_MISMATCH;
    case ErrorCode::Unsupported: return HL_E_UNSUPPORTED;
    case ErrorCode::Semantic: return HL_E_SEMANTIC;
    case ErrorCode::Internal: return HL_E_INTERNAL;
    case ErrorCode::Overflow: return HL_E_OVERFLOW;
    case ErrorCode::NotFound: return HL_E_NOT_FOUND;
    }
    return HL_E_INTERNAL;
}

template <typename Fn>
hl_status guarded(Fn&& fn) {
    try {
        fn();
        return HL_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HL_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HL_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

const Surface& surf(const hl_surface* s) {
    need(s, "surface");
    return s->s;
}

DivisorClass cls(const hl_surface* s, const int64_t* d, size_t n) {
    const Surface& sf = surf(s);
    if (n != sf.picard_rank())
        fail(ErrorCode::InvalidArgument, "expected " + std::to_string(sf.picard_rank()) + " coordinates on " +
                                             sf.name() + ", got " + std::to_string(n));
    need(d, "class");
    return {sf, std::vector<std::int64_t>(d, d + n)};
}

DivisorClass bundle_class(const hl_bundle* b, const int64_t* d, size_t n) {
    need(b, "bundle");
    hl_surface s{b->b.surface};
    return cls(&s, d, n);
}

std::vector<std::int64_t> degrees_of(const int64_t* degrees, size_t m) {
    if (m > 0) need(degrees, "degrees");
    return {degrees, degrees + m};
}

void write_coords(const DivisorClass& d, int64_t* out, size_t n) {
    need(out, "output");
    if (n != d.coords().size())
        fail(ErrorCode::InvalidArgument, "output needs " + std::to_string(d.coords().size()) + " coordinates");
    std::copy(d.coords().begin(), d.coords().end(), out);
}

hl_status copy_string(const std::string& text, char* buf, size_t cap, size_t* needed) {
    if (needed == nullptr) {
        last_error = "needed is null";
        return HL_E_INVALID_ARGUMENT;
    }
    *needed = text.size() + 1;
    if (cap < *needed) {
        last_error = "buffer of " + std::to_string(cap) + " bytes, need " + std::to_string(*needed);
        return HL_E_BUFFER_TOO_SMALL;
    }
    if (buf == nullptr) {
        last_error = "buffer is null";
        return HL_E_INVALID_ARGUMENT;
    }
    std::memcpy(buf, text.c_str(), *needed);
    return HL_OK;
}

template <typename T>
T* own(T value) {
    return new T(std::move(value));
}

hl_status make_surface(Surface s, hl_surface** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_surface{s});
    });
}

hl_status predicate(bool (*pred)(const DivisorClass&), const hl_surface* s, const int64_t* d, size_t n, int* out) {
    return guarded([&] {
        need(out, "out");
        *out = pred(cls(s, d, n)) ? 1 : 0;
    });
}

Curve curve_of(hl_curve c) {
    switch (c) {
    case HL_CURVE_FIBER: return Curve::Fiber;
    case HL_CURVE_SECTION_H: return Curve::SectionH;
    case HL_CURVE_EXCEPTIONAL: return Curve::Exceptional;
    }
    fail(ErrorCode::InvalidArgument, "unknown curve kind");
}

ExtClass ext_of(hl_ext_class e) {
    switch (e) {
    case HL_EXT_ZERO: return ExtClass::Zero;
    case HL_EXT_NONZERO_GENERIC: return ExtClass::NonzeroGeneric;
    case HL_EXT_UNKNOWN: return ExtClass::Unknown;
    }
    fail(ErrorCode::InvalidArgument, "unknown extension class");
}

} // namespace

extern "C" {

const char* hl_last_error(void) { return last_error.c_str(); }

const char* hl_status_name(hl_status status) {
    switch (status) {
    case HL_OK: return "ok";
    case HL_E_INVALID_ARGUMENT: return "invalid argument";
    case HL_E_SURFACE_MISMATCH: return "surface mismatch";
    case HL_E_UNSUPPORTED: return "unsupported";
    case HL_E_SEMANTIC: return "semantic error";
    case HL_E_INTERNAL: return "internal inconsistency";
    case HL_E_OVERFLOW: return "integer overflow";
    case HL_E_NOT_FOUND: return "not found";
    case HL_E_BUFFER_TOO_SMALL: return "buffer too small";
    }
    return "unknown status";
}

hl_status hl_surface_projective_line(hl_surface** out) { return make_surface(Surface::projective_line(), out); }

hl_status hl_surface_projective_plane(hl_surface** out) { return make_surface(Surface::projective_plane(), out); }

hl_status hl_surface_hirzebruch(int64_t e, hl_surface** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_surface{Surface::hirzebruch(e)});
    });
}

hl_status hl_surface_blowup(int64_t points, hl_surface** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_surface{Surface::blowup_plane(points)});
    });
}

void hl_surface_free(hl_surface* s) { delete s; }

size_t hl_surface_rank(const hl_surface* s) { return s ? s->s.picard_rank() : 0; }

hl_status hl_surface_name(const hl_surface* s, char* buf, size_t cap, size_t* needed) {
    std::string name;
    const hl_status st = guarded([&] { name = surf(s).name(); });
    return st != HL_OK ? st : copy_string(name, buf, cap, needed);
}

hl_status hl_intersect(const hl_surface* s, const int64_t* d1, const int64_t* d2, size_t n, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = intersect(cls(s, d1, n), cls(s, d2, n));
    });
}

hl_status hl_canonical_class(const hl_surface* s, int64_t* out, size_t n) {
    return guarded([&] { write_coords(canonical_class(surf(s)), out, n); });
}

hl_status hl_is_effective(const hl_surface* s, const int64_t* d, size_t n, int* out) {
    return predicate(is_effective, s, d, n, out);
}

hl_status hl_is_ample(const hl_surface* s, const int64_t* d, size_t n, int* out) {
    return predicate(is_ample, s, d, n, out);
}

hl_status hl_is_very_ample(const hl_surface* s, const int64_t* d, size_t n, int* out) {
    return predicate(is_very_ample, s, d, n, out);
}

hl_status hl_has_irreducible_member(const hl_surface* s, const int64_t* d, size_t n, int* out) {
    return predicate(has_irreducible_member, s, d, n, out);
}

hl_status hl_restriction_degree(const hl_surface* s, const int64_t* d, size_t n, hl_curve curve, size_t index,
                                int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = restriction_degree(cls(s, d, n), curve_of(curve), index);
    });
}

hl_status hl_blowup_to_hirzebruch(const int64_t in[2], int64_t out[2]) {
    return guarded([&] {
        need(in, "input");
        write_coords(blowup_to_hirzebruch(DivisorClass(Surface::blowup_plane(1), {in[0], in[1]})), out, 2);
    });
}

hl_status hl_hirzebruch_to_blowup(const int64_t in[2], int64_t out[2]) {
    return guarded([&] {
        need(in, "input");
        write_coords(hirzebruch_to_blowup(DivisorClass(Surface::hirzebruch(1), {in[0], in[1]})), out, 2);
    });
}

hl_status hl_line_cohomology(const hl_surface* s, const int64_t* d, size_t n, hl_cohomology* out) {
    return guarded([&] {
        need(out, "out");
        const CohomologyTable t = line_cohomology(cls(s, d, n));
        *out = {t.h0, t.h1, t.h2, t.chi};
    });
}

hl_status hl_chi_rank2(const hl_surface* s, const int64_t* c1, size_t n, int64_t c2, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = chi_rank2(cls(s, c1, n), c2);
    });
}

hl_status hl_ext1_vs_ideal(const hl_surface* s, const int64_t* sub, const int64_t* quot, size_t n, int64_t deg_z,
                           int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = ext1_vs_ideal(cls(s, sub, n), cls(s, quot, n), deg_z);
    });
}

hl_status hl_arrangement_new(const hl_surface* s, const int64_t* classes, const int64_t* counts, size_t ncurves,
                             hl_arrangement** out) {
    return guarded([&] {
        need(out, "out");
        const size_t rank = surf(s).picard_rank();
        std::vector<CurveGroup> groups;
        for (size_t i = 0; i < ncurves; ++i) {
            need(classes, "classes");
            groups.push_back({cls(s, classes + i * rank, rank), counts ? counts[i] : 1});
        }
        *out = own(hl_arrangement{Arrangement(surf(s), std::move(groups))});
    });
}

hl_status hl_arrangement_plane(const int64_t* degrees, size_t m, hl_arrangement** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_arrangement{Arrangement::plane(degrees_of(degrees, m))});
    });
}

void hl_arrangement_free(hl_arrangement* a) { delete a; }

hl_status hl_bundle_new(const hl_surface* s, const int64_t* c1, size_t n, int64_t c2, hl_bundle** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_bundle{BundleDescriptor(cls(s, c1, n), c2)});
    });
}

hl_status hl_bundle_split(const hl_surface* s, const int64_t* d1, const int64_t* d2, size_t n, hl_bundle** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_bundle{BundleDescriptor::split(cls(s, d1, n), cls(s, d2, n))});
    });
}

hl_status hl_bundle_extension(const hl_surface* s, const int64_t* sub, const int64_t* quot, size_t n,
                              int64_t z_length, hl_ext_class ext, hl_bundle** out) {
    return guarded([&] {
        need(out, "out");
        if (z_length < 0) fail(ErrorCode::InvalidArgument, "length of Z must be >= 0");
        const ExtensionPresentation p{cls(s, sub, n), cls(s, quot, n), z_length, ext_of(ext)};
        *out = own(hl_bundle{BundleDescriptor::extension(p)});
    });
}

hl_status hl_log_chern(const hl_arrangement* a, hl_bundle** out) {
    return guarded([&] {
        need(a, "arrangement");
        need(out, "out");
        *out = own(hl_bundle{log_chern(a->a)});
    });
}

hl_status hl_bundle_twist(const hl_bundle* b, const int64_t* l, size_t n, hl_bundle** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_bundle{twist_rank2(b->b, bundle_class(b, l, n))});
    });
}

hl_status hl_bundle_chern(const hl_bundle* b, int64_t* c1, size_t n, int64_t* c2) {
    return guarded([&] {
        need(b, "bundle");
        need(c2, "c2");
        write_coords(b->b.c1, c1, n);
        *c2 = b->b.c2;
    });
}

hl_status hl_bundle_surface(const hl_bundle* b, hl_surface** out) {
    return guarded([&] {
        need(b, "bundle");
        need(out, "out");
        *out = own(hl_surface{b->b.surface});
    });
}

void hl_bundle_free(hl_bundle* b) { delete b; }

hl_status hl_normalizing_twist(int64_t c1, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = normalizing_twist(c1);
    });
}

hl_status hl_ancona_h0(const int64_t* degrees, size_t m, int64_t twist, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = ancona_h0(degrees_of(degrees, m), twist);
    });
}

hl_status hl_in_exceptional_set(const int64_t* degrees, size_t m, int* out) {
    return guarded([&] {
        need(out, "out");
        *out = in_exceptional_set(degrees_of(degrees, m)) ? 1 : 0;
    });
}

hl_status hl_normalized_h0(const int64_t* degrees, size_t m, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = normalized_h0(degrees_of(degrees, m));
    });
}

hl_status hl_classify_p2_log(const int64_t* degrees, size_t m, hl_verdict** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_verdict{classify_p2_log(degrees_of(degrees, m))});
    });
}

hl_status hl_semistable_p2(const int64_t* degrees, size_t m, int* out) {
    return guarded([&] {
        need(out, "out");
        *out = semistable_p2(degrees_of(degrees, m)) ? 1 : 0;
    });
}

hl_status hl_deg_z(const hl_surface* s, const int64_t* c1, size_t n, int64_t c2, int64_t d, int64_t r, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = deg_z(cls(s, c1, n), c2, d, r);
    });
}

hl_status hl_h0_bounds(const hl_bundle* b, const int64_t* twist, size_t n, int64_t* lower, int64_t* upper,
                       int* exact) {
    return guarded([&] {
        need(lower, "lower");
        need(upper, "upper");
        need(exact, "exact");
        const H0Bounds hb = h0_bounds(b->b, bundle_class(b, twist, n));
        *lower = hb.lower;
        *upper = hb.upper;
        *exact = hb.exact ? 1 : 0;
    });
}

hl_status hl_canonical_invariants(const hl_bundle* b, hl_canonical* out) {
    return guarded([&] {
        need(b, "bundle");
        need(out, "out");
        const CanonicalInvariants ci = canonical_invariants(b->b);
        *out = {ci.d, ci.r, ci.deg_z, ci.certainty == Certainty::Exact ? 1 : 0};
    });
}

hl_status hl_slope(const hl_surface* s, const int64_t* c1, size_t n, int64_t rank, const int64_t* polarization,
                   int64_t* num, int64_t* den) {
    return guarded([&] {
        need(num, "num");
        need(den, "den");
        const Rational q = slope(cls(s, c1, n), rank, Polarization(cls(s, polarization, n)));
        *num = q.num();
        *den = q.den();
    });
}

hl_status hl_destabilizer_search(const hl_bundle* b, const int64_t* polarization, size_t n, int strict,
                                 hl_verdict** out) {
    return guarded([&] {
        need(out, "out");
        const Polarization pol(bundle_class(b, polarization, n));
        *out = own(hl_verdict{destabilizer_search(b->b, pol, strict != 0)});
    });
}

hl_stability hl_verdict_status(const hl_verdict* v) {
    if (!v) return HL_UNDECIDED;
    switch (v->v.status) {
    case StabilityStatus::Stable: return HL_STABLE;
    case StabilityStatus::StrictlySemistable: return HL_STRICTLY_SEMISTABLE;
    case StabilityStatus::Unstable: return HL_UNSTABLE;
    case StabilityStatus::Undecided: return HL_UNDECIDED;
    }
    return HL_UNDECIDED;
}

const char* hl_stability_name(hl_stability s) {
    switch (s) {
    case HL_STABLE: return "Stable";
    case HL_STRICTLY_SEMISTABLE: return "StrictlySemistable";
    case HL_UNSTABLE: return "Unstable";
    case HL_UNDECIDED: return "Undecided";
    }
    return "?";
}

int hl_verdict_has_witness(const hl_verdict* v) { return v && v->v.witness ? 1 : 0; }

hl_status hl_verdict_witness(const hl_verdict* v, int64_t* out, size_t cap, size_t* n) {
    bool short_buffer = false;
    const hl_status st = guarded([&] {
        need(v, "verdict");
        need(n, "n");
        if (!v->v.witness) fail(ErrorCode::NotFound, "verdict carries no witness");
        const auto c = v->v.witness->coords();
        *n = c.size();
        if (cap < c.size()) {
            short_buffer = true;
            return;
        }
        need(out, "out");
        std::copy(c.begin(), c.end(), out);
    });
    if (st == HL_OK && short_buffer) {
        last_error = "witness needs " + std::to_string(*n) + " slots";
        return HL_E_BUFFER_TOO_SMALL;
    }
    return st;
}

size_t hl_verdict_note_count(const hl_verdict* v) { return v ? v->v.notes.size() : 0; }

const char* hl_verdict_note(const hl_verdict* v, size_t i) {
    return v && i < v->v.notes.size() ? v->v.notes[i].c_str() : nullptr;
}

void hl_verdict_free(hl_verdict* v) { delete v; }

hl_status hl_gstab_feasibility(int64_t delta, int64_t* num, int64_t* den, int* certified) {
    return guarded([&] {
        need(num, "num");
        need(den, "den");
        need(certified, "certified");
        const GstabResult g = gstab_feasibility(delta);
        *num = g.max_slope_bound.num();
        *den = g.max_slope_bound.den();
        *certified = g.stable_certified ? 1 : 0;
    });
}

hl_status hl_blowup_transform(const int64_t* degrees, size_t m, hl_bundle** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_bundle{blowup_transform(degrees_of(degrees, m))});
    });
}

hl_status hl_theorem_main_check(const int64_t* degrees, size_t m, int* out) {
    return guarded([&] {
        need(out, "out");
        *out = theorem_main_check(degrees_of(degrees, m)) ? 1 : 0;
    });
}

hl_status hl_moduli_invariants_equal_degree(int64_t m, int64_t d, int64_t c1[2], int64_t* c2) {
    return guarded([&] {
        need(c2, "c2");
        const ModuliInvariants mi = moduli_invariants_equal_degree(m, d);
        write_coords(mi.c1, c1, 2);
        *c2 = mi.c2;
    });
}

hl_status hl_catalog_json(int64_t max_m, char* buf, size_t cap, size_t* needed) {
    std::string text;
    const hl_status st = guarded([&] { text = catalog_json(max_m); });
    return st != HL_OK ? st : copy_string(text, buf, cap, needed);
}

hl_status hl_catalog_ids(int64_t max_m, char* buf, size_t cap, size_t* needed) {
    std::string text;
    const hl_status st = guarded([&] {
        for (const auto& e : catalog(max_m)) text += e.id + "\n";
    });
    return st != HL_OK ? st : copy_string(text, buf, cap, needed);
}

hl_status hl_verify_entry(const char* id, hl_report** out) {
    return guarded([&] {
        need(id, "id");
        need(out, "out");
        *out = own(hl_report{verify_entry(find_entry(id))});
    });
}

hl_status hl_verify_tangent(int64_t e, hl_report** out) {
    return guarded([&] {
        need(out, "out");
        *out = own(hl_report{verify_tangent_restrictions(e)});
    });
}

int hl_report_all_passed(const hl_report* r) { return r && r->r.all_passed() ? 1 : 0; }

size_t hl_report_check_count(const hl_report* r) { return r ? r->r.checks.size() : 0; }

const char* hl_report_check_name(const hl_report* r, size_t i) {
    return r && i < r->r.checks.size() ? r->r.checks[i].name.c_str() : nullptr;
}

int hl_report_check_passed(const hl_report* r, size_t i) {
    return r && i < r->r.checks.size() && r->r.checks[i].passed ? 1 : 0;
}

const char* hl_report_check_detail(const hl_report* r, size_t i) {
    return r && i < r->r.checks.size() ? r->r.checks[i].detail.c_str() : nullptr;
}

hl_status hl_report_json(const hl_report* r, char* buf, size_t cap, size_t* needed) {
    std::string text;
    const hl_status st = guarded([&] {
        need(r, "report");
        text = report_json(r->r);
    });
    return st != HL_OK ? st : copy_string(text, buf, cap, needed);
}

void hl_report_free(hl_report* r) { delete r; }

} // extern "C"
