#include "hirzlog/cohom.hpp"

#include <algorithm>

#include "hirzlog/checked.hpp"
#include "hirzlog/error.hpp"

namespace hirzlog {

namespace {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

// sum_{j=0}^{n} max(0, c + s*j), closed form.
std::int64_t positive_part_sum(std::int64_t c, std::int64_t s, std::int64_t n) {
    if (n < 0) return 0;
    std::int64_t lo = 0, hi = n;
    if (s == 0) {
        return c > 0 ? mul(add(n, 1), c) : 0;
    }
    if (s > 0) {
        if (c <= 0) lo = add(checked::floor_div(neg(c), s), 1);
    } else {
        if (c <= 0) return 0;
        hi = std::min(n, checked::floor_div(sub(c, 1), neg(s)));
    }
    if (lo > hi) return 0;
    const std::int64_t count = add(sub(hi, lo), 1);
    // sum of j over [lo, hi] = count * (lo + hi) / 2
    const std::int64_t lohi = add(lo, hi);
    const std::int64_t jsum = (count % 2 == 0) ? mul(count / 2, lohi) : mul(count, lohi / 2);
    return add(mul(count, c), mul(s, jsum));
}

std::int64_t h0_p1(std::int64_t d) { return d >= -1 ? add(d, 1) : 0; }
std::int64_t h1_p1(std::int64_t d) { return d <= -1 ? sub(neg(d), 1) : 0; }

std::int64_t h0_p2(std::int64_t d) {
    if (d < 0) return 0;
    const std::int64_t x = add(d, 1), y = add(d, 2);
    return (x % 2 == 0) ? mul(x / 2, y) : mul(x, y / 2);
}

struct FibrationNumbers {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
};

// h^0 and h^1 via the ruling; h^2 via h^1 of the higher direct image.
FibrationNumbers fibration_numbers(std::int64_t a, std::int64_t b, std::int64_t e) {
    FibrationNumbers out;
    if (a >= 0) {
        out.h0 = positive_part_sum(add(b, 1), neg(e), a);
        out.h1 = positive_part_sum(sub(neg(b), 1), e, a);
    } else if (a <= -2) {
        const std::int64_t n = sub(neg(a), 2);
        out.h1 = positive_part_sum(add(add(b, e), 1), e, n);
        out.h2 = positive_part_sum(sub(sub(neg(b), e), 1), neg(e), n);
    }
    return out;
}

std::int64_t h0_hirzebruch(std::int64_t a, std::int64_t b, std::int64_t e) { return fibration_numbers(a, b, e).h0; }

DivisorClass supported_class(const DivisorClass& d) {
    DivisorClass w = to_working_basis(d);
    if (w.surface().kind() == SurfaceKind::BlowupPlane)
        fail(ErrorCode::Unsupported, "line bundle cohomology is not modelled on " + d.surface().name());
    return w;
}

} // namespace

FibrationPushforward fibration_pushforward(const DivisorClass& d) {
    const DivisorClass w = to_working_basis(d);
    if (w.surface().kind() != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, "no ruling on " + d.surface().name());
    const std::int64_t a = w[0], b = w[1], e = w.surface().param();
    FibrationPushforward out;
    if (a >= 0) {
        for (std::int64_t j = 0; j <= a; ++j) out.direct.push_back(sub(b, mul(j, e)));
    } else if (a <= -2) {
        for (std::int64_t j = 0; j <= -a - 2; ++j) out.higher.push_back(add(b, mul(j + 1, e)));
    }
    return out;
}

CohomologyTable line_cohomology(const DivisorClass& d) {
    const DivisorClass w = supported_class(d);
    const Surface& s = w.surface();
    CohomologyTable t;
    switch (s.kind()) {
    case SurfaceKind::ProjLine:
        t.h0 = h0_p1(w[0]);
        t.h1 = h1_p1(w[0]);
        break;
    case SurfaceKind::ProjPlane:
        t.h0 = h0_p2(w[0]);
        t.h2 = h0_p2(sub(-3, w[0]));
        break;
    case SurfaceKind::Hirzebruch: {
        const std::int64_t a = w[0], b = w[1], e = s.param();
        const FibrationNumbers fib = fibration_numbers(a, b, e);
        const DivisorClass dual = canonical_class(s) - w;
        t.h0 = fib.h0;
        t.h1 = fib.h1;
        t.h2 = h0_hirzebruch(dual[0], dual[1], e);
        break;
    }
    case SurfaceKind::BlowupPlane: break;  // rejected above
    }
    t.chi = sub(add(t.h0, t.h2), t.h1);
    const std::int64_t rr = chi_line(w);
    if (rr != t.chi) {
        fail(ErrorCode::Internal, "cohomology of " + w.surface().name() + w.str() + " has chi " +
                                      std::to_string(t.chi) + " but Riemann-Roch gives " + std::to_string(rr));
    }
    return t;
}

std::int64_t chi_line(const DivisorClass& d) {
    const Surface& s = d.surface();
    if (!s.is_surface()) return add(d[0], 1);
    const DivisorClass k = canonical_class(s);
    const std::int64_t twice = intersect(d, d - k);
    // D.(D-K) is even on every surface here (adjunction)
    return add(1, twice / 2);
}

std::int64_t chi_rank2(const DivisorClass& c1, std::int64_t c2) {
    const Surface& s = c1.surface();
    if (!s.is_surface()) fail(ErrorCode::Unsupported, "rank-2 Riemann-Roch needs a surface");
    const std::int64_t twice = intersect(c1, c1 - canonical_class(s));
    return sub(add(2, twice / 2), c2);
}

std::int64_t h0_line(const DivisorClass& d) { return line_cohomology(d).h0; }

std::int64_t h1_line(const DivisorClass& d) { return line_cohomology(d).h1; }

std::int64_t ext1_line(const DivisorClass& from, const DivisorClass& to) { return h1_line(to - from); }

std::int64_t ext1_vs_ideal(const DivisorClass& sub_class, const DivisorClass& quot, std::int64_t deg_z) {
    if (deg_z < 0) fail(ErrorCode::InvalidArgument, "deg Z must be >= 0, got " + std::to_string(deg_z));
    if (to_working_basis(sub_class).surface().kind() != SurfaceKind::Hirzebruch)
        fail(ErrorCode::Unsupported, "ideal-sheaf extensions are modelled on F_e only");
    return add(deg_z, h1_line(sub_class - quot));
}

} // namespace hirzlog
