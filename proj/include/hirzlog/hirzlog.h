#ifndef HIRZLOG_H
#define HIRZLOG_H

/* C interface to the hirzlog library.
 *
 * Every function returns an hl_status; on failure a message is available from
 * hl_last_error() (thread-local, valid until the next failing call on the same
 * thread).  Divisor classes are passed as int64 coordinate arrays in the
 * surface's Picard basis: (d) on P2, (a, b) for ah + bf on F_e, (x, y1..yk)
 * for xH + sum yi Ei on the blow-up.  Handles are owned by the caller and
 * released with the matching *_free function.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HL_API __declspec(dllexport)
#else
#define HL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_E_INVALID_ARGUMENT = 1,
    HL_E_SURFACE_MISMATCH = 2,
    HL_E_UNSUPPORTED = 3,
    HL_E_SEMANTIC = 4,
    HL_E_INTERNAL = 5,
    HL_E_OVERFLOW = 6,
    HL_E_NOT_FOUND = 7,
    HL_E_BUFFER_TOO_SMALL = 8
} hl_status;

typedef enum hl_curve { HL_CURVE_FIBER = 0, HL_CURVE_SECTION_H = 1, HL_CURVE_EXCEPTIONAL = 2 } hl_curve;

typedef enum hl_ext_class { HL_EXT_ZERO = 0, HL_EXT_NONZERO_GENERIC = 1, HL_EXT_UNKNOWN = 2 } hl_ext_class;

typedef enum hl_stability {
    HL_STABLE = 0,
    HL_STRICTLY_SEMISTABLE = 1,
    HL_UNSTABLE = 2,
    HL_UNDECIDED = 3
} hl_stability;

typedef struct hl_surface hl_surface;
typedef struct hl_arrangement hl_arrangement;
typedef struct hl_bundle hl_bundle;
typedef struct hl_verdict hl_verdict;
typedef struct hl_report hl_report;

typedef struct hl_cohomology {
    int64_t h0, h1, h2, chi;
} hl_cohomology;

typedef struct hl_canonical {
    int64_t d, r, deg_z;
    int exact; /* 0 when some section count along the search was only bounded */
} hl_canonical;

HL_API const char* hl_last_error(void);
HL_API const char* hl_status_name(hl_status status);

/* Strings are copied into buf (NUL-terminated).  *needed receives the length
 * including the terminator; HL_E_BUFFER_TOO_SMALL is returned if cap < *needed.
 * buf may be NULL when cap is 0. */

/* surfaces */
HL_API hl_status hl_surface_projective_line(hl_surface** out);
HL_API hl_status hl_surface_projective_plane(hl_surface** out);
HL_API hl_status hl_surface_hirzebruch(int64_t e, hl_surface** out);
HL_API hl_status hl_surface_blowup(int64_t points, hl_surface** out);
HL_API void hl_surface_free(hl_surface* s);
HL_API size_t hl_surface_rank(const hl_surface* s);
HL_API hl_status hl_surface_name(const hl_surface* s, char* buf, size_t cap, size_t* needed);

/* lattice */
HL_API hl_status hl_intersect(const hl_surface* s, const int64_t* d1, const int64_t* d2, size_t n, int64_t* out);
HL_API hl_status hl_canonical_class(const hl_surface* s, int64_t* out, size_t n);
HL_API hl_status hl_is_effective(const hl_surface* s, const int64_t* d, size_t n, int* out);
HL_API hl_status hl_is_ample(const hl_surface* s, const int64_t* d, size_t n, int* out);
HL_API hl_status hl_is_very_ample(const hl_surface* s, const int64_t* d, size_t n, int* out);
HL_API hl_status hl_has_irreducible_member(const hl_surface* s, const int64_t* d, size_t n, int* out);
HL_API hl_status hl_restriction_degree(const hl_surface* s, const int64_t* d, size_t n, hl_curve curve, size_t index,
                                       int64_t* out);
/* (H, E) on the one-point blow-up <-> (h, f) on F1 */
HL_API hl_status hl_blowup_to_hirzebruch(const int64_t in[2], int64_t out[2]);
HL_API hl_status hl_hirzebruch_to_blowup(const int64_t in[2], int64_t out[2]);

/* cohomology */
HL_API hl_status hl_line_cohomology(const hl_surface* s, const int64_t* d, size_t n, hl_cohomology* out);
HL_API hl_status hl_chi_rank2(const hl_surface* s, const int64_t* c1, size_t n, int64_t c2, int64_t* out);
HL_API hl_status hl_ext1_vs_ideal(const hl_surface* s, const int64_t* sub, const int64_t* quot, size_t n,
                                  int64_t deg_z, int64_t* out);

/* arrangements; classes holds ncurves * rank coordinates, counts may be NULL */
HL_API hl_status hl_arrangement_new(const hl_surface* s, const int64_t* classes, const int64_t* counts,
                                    size_t ncurves, hl_arrangement** out);
HL_API hl_status hl_arrangement_plane(const int64_t* degrees, size_t m, hl_arrangement** out);
HL_API void hl_arrangement_free(hl_arrangement* a);

/* rank-2 bundles */
HL_API hl_status hl_bundle_new(const hl_surface* s, const int64_t* c1, size_t n, int64_t c2, hl_bundle** out);
HL_API hl_status hl_bundle_split(const hl_surface* s, const int64_t* d1, const int64_t* d2, size_t n,
                                 hl_bundle** out);
HL_API hl_status hl_bundle_extension(const hl_surface* s, const int64_t* sub, const int64_t* quot, size_t n,
                                     int64_t z_length, hl_ext_class ext, hl_bundle** out);
HL_API hl_status hl_log_chern(const hl_arrangement* a, hl_bundle** out);
HL_API hl_status hl_bundle_twist(const hl_bundle* b, const int64_t* l, size_t n, hl_bundle** out);
HL_API hl_status hl_bundle_chern(const hl_bundle* b, int64_t* c1, size_t n, int64_t* c2);
HL_API hl_status hl_bundle_surface(const hl_bundle* b, hl_surface** out);
HL_API void hl_bundle_free(hl_bundle* b);

/* plane curves */
HL_API hl_status hl_normalizing_twist(int64_t c1, int64_t* out);
HL_API hl_status hl_ancona_h0(const int64_t* degrees, size_t m, int64_t twist, int64_t* out);
HL_API hl_status hl_in_exceptional_set(const int64_t* degrees, size_t m, int* out);
HL_API hl_status hl_normalized_h0(const int64_t* degrees, size_t m, int64_t* out);
HL_API hl_status hl_classify_p2_log(const int64_t* degrees, size_t m, hl_verdict** out);
HL_API hl_status hl_semistable_p2(const int64_t* degrees, size_t m, int* out);

/* canonical extensions */
HL_API hl_status hl_deg_z(const hl_surface* s, const int64_t* c1, size_t n, int64_t c2, int64_t d, int64_t r,
                          int64_t* out);
HL_API hl_status hl_h0_bounds(const hl_bundle* b, const int64_t* twist, size_t n, int64_t* lower, int64_t* upper,
                              int* exact);
HL_API hl_status hl_canonical_invariants(const hl_bundle* b, hl_canonical* out);

/* stability; slopes are returned as reduced fractions num/den */
HL_API hl_status hl_slope(const hl_surface* s, const int64_t* c1, size_t n, int64_t rank, const int64_t* polarization,
                          int64_t* num, int64_t* den);
HL_API hl_status hl_destabilizer_search(const hl_bundle* b, const int64_t* polarization, size_t n, int strict,
                                        hl_verdict** out);
HL_API hl_stability hl_verdict_status(const hl_verdict* v);
HL_API const char* hl_stability_name(hl_stability s);
HL_API int hl_verdict_has_witness(const hl_verdict* v);
/* witness coordinates; *n receives the rank */
HL_API hl_status hl_verdict_witness(const hl_verdict* v, int64_t* out, size_t cap, size_t* n);
HL_API size_t hl_verdict_note_count(const hl_verdict* v);
HL_API const char* hl_verdict_note(const hl_verdict* v, size_t i);
HL_API void hl_verdict_free(hl_verdict* v);
HL_API hl_status hl_gstab_feasibility(int64_t delta, int64_t* num, int64_t* den, int* certified);

/* blow-up of P2 at a point off the curves */
HL_API hl_status hl_blowup_transform(const int64_t* degrees, size_t m, hl_bundle** out);
HL_API hl_status hl_theorem_main_check(const int64_t* degrees, size_t m, int* out);
HL_API hl_status hl_moduli_invariants_equal_degree(int64_t m, int64_t d, int64_t c1[2], int64_t* c2);

/* catalog */
HL_API hl_status hl_catalog_json(int64_t max_m, char* buf, size_t cap, size_t* needed);
HL_API hl_status hl_catalog_ids(int64_t max_m, char* buf, size_t cap, size_t* needed); /* newline separated */
HL_API hl_status hl_verify_entry(const char* id, hl_report** out);
HL_API hl_status hl_verify_tangent(int64_t e, hl_report** out);
HL_API int hl_report_all_passed(const hl_report* r);
HL_API size_t hl_report_check_count(const hl_report* r);
HL_API const char* hl_report_check_name(const hl_report* r, size_t i);
HL_API int hl_report_check_passed(const hl_report* r, size_t i);
HL_API const char* hl_report_check_detail(const hl_report* r, size_t i);
HL_API hl_status hl_report_json(const hl_report* r, char* buf, size_t cap, size_t* needed);
HL_API void hl_report_free(hl_report* r);

#ifdef __cplusplus
}
#endif

#endif /* HIRZLOG_H */
