#include <doctest.h>

#include "hirzlog/canext.hpp"
#include "hirzlog/cohom.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hirzlog;

namespace {

const Surface F1 = Surface::hirzebruch(1);

DivisorClass f1(std::int64_t a, std::int64_t b) { return {F1, {a, b}}; }

BundleDescriptor presented(DivisorClass sub, DivisorClass quot, ExtClass ext, std::int64_t z = 0) {
    return BundleDescriptor::extension({std::move(sub), std::move(quot), z, ext});
}

} // namespace

TEST_CASE("deg Z matches the F1 closed form") {
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b)
            for (std::int64_t c2 = -4; c2 <= 4; ++c2)
                for (std::int64_t d = -2; d <= 2; ++d)
                    for (std::int64_t r = -2; r <= 2; ++r)
                        REQUIRE(deg_z(f1(a, b), c2, d, r) == oracle::deg_z_f1(a, b, c2, d, r));
    // the blow-up basis is converted first: -3H + 2E is -h - 3f
    CHECK(deg_z(DivisorClass(Surface::blowup_plane(1), {-3, 2}), 2, 0, -2) == 0);
    CHECK(code_of([] { deg_z(DivisorClass(Surface::projective_plane(), {1}), 0, 0, 0); }) == ErrorCode::Unsupported);
}

TEST_CASE("split bundles") {
    CHECK(invariants_of_split(f1(0, 1), f1(-2, -1)).d == 0);
    CHECK(invariants_of_split(f1(0, 1), f1(-2, -1)).r == 1);
    CHECK(invariants_of_split(f1(0, -1), f1(0, -3)).r == -1);
    CHECK(invariants_of_split(f1(-1, 5), f1(0, -4)).r == -4);
    for (std::int64_t m = 1; m <= 8; ++m) {
        const CanonicalInvariants ci = canonical_invariants(BundleDescriptor::split(f1(0, m - 2), f1(-2, -1)));
        CHECK(ci == CanonicalInvariants{0, m - 2, 0, Certainty::Exact});
        CHECK(is_pi_uniform(BundleDescriptor::split(f1(0, m - 2), f1(-2, -1))));
    }
    CHECK(code_of([] { invariants_of_split(f1(0, 0), DivisorClass(Surface::hirzebruch(2), {0, 0})); }) ==
          ErrorCode::SurfaceMismatch);
}

TEST_CASE("non-split presentations") {
    const BundleDescriptor ex_h = presented(f1(0, -2), f1(-1, -1), ExtClass::NonzeroGeneric);
    CHECK(canonical_invariants(ex_h) == CanonicalInvariants{0, -2, 0, Certainty::Exact});
    const BundleDescriptor ltilde = presented(f1(0, -2), f1(-1, 0), ExtClass::NonzeroGeneric);
    CHECK(canonical_invariants(ltilde) == CanonicalInvariants{0, -2, 0, Certainty::Exact});
    CHECK(ltilde.c2 == 2);
    CHECK(to_string(Certainty::Bounded) == "Bounded");

    // same classes on the blow-up
    const Surface bl = Surface::blowup_plane(1);
    const BundleDescriptor on_bl =
        presented(hirzebruch_to_blowup(f1(0, -2)), hirzebruch_to_blowup(f1(-1, -1)), ExtClass::NonzeroGeneric);
    CHECK(on_bl.surface == bl);
    CHECK(canonical_invariants(on_bl) == CanonicalInvariants{0, -2, 0, Certainty::Exact});
}

TEST_CASE("section bounds") {
    const BundleDescriptor ex_h = presented(f1(0, -2), f1(-1, -1), ExtClass::NonzeroGeneric);
    CHECK(h0_bounds(ex_h, f1(0, 2)) == H0Bounds{1, 1, true});
    CHECK(h0_bounds(ex_h, f1(1, 2)) == H0Bounds{1, 3, true});
    // h^1 of the sub twist is 1, so the quotient section may not lift
    CHECK(h0_bounds(ex_h, f1(1, 1)) == H0Bounds{0, 1, false});
    // split bundles: the bounds close and add up
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            const BundleDescriptor s = BundleDescriptor::split(f1(0, 1), f1(-1, -2));
            const H0Bounds hb = h0_bounds(s, f1(a, b));
            REQUIRE(hb.exact);
            REQUIRE(hb.upper == h0_line(f1(a, b + 1)) + h0_line(f1(a - 1, b - 2)));
        }
    // with points in Z only a range is known
    const BundleDescriptor with_z = presented(f1(0, 0), f1(0, 0), ExtClass::Unknown, 1);
    const H0Bounds hz = h0_bounds(with_z, f1(0, 0));
    CHECK(hz.lower == 1);
    CHECK(hz.upper == 2);
    CHECK_FALSE(hz.exact);
    CHECK(code_of([&] { h0_bounds(BundleDescriptor(f1(0, 0), 0), f1(0, 0)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { h0_bounds(ex_h, DivisorClass(Surface::hirzebruch(2), {0, 0})); }) ==
          ErrorCode::SurfaceMismatch);
}

TEST_CASE("invariants move with twists") {
    const std::vector<BundleDescriptor> bundles{
        presented(f1(0, -2), f1(-1, -1), ExtClass::NonzeroGeneric),
        presented(f1(0, -2), f1(-1, 0), ExtClass::NonzeroGeneric),
        presented(f1(1, 0), f1(-1, 2), ExtClass::NonzeroGeneric),
        BundleDescriptor::split(f1(0, 1), f1(-2, -1)),
        BundleDescriptor::split(f1(1, -1), f1(1, 2)),
    };
    for (const auto& b : bundles) {
        const CanonicalInvariants base = canonical_invariants(b);
        for (std::int64_t x = -2; x <= 2; ++x)
            for (std::int64_t y = -3; y <= 3; ++y) {
                const CanonicalInvariants moved = canonical_invariants(twist_rank2(b, f1(x, y)));
                REQUIRE(moved.d == base.d + x);
                REQUIRE(moved.r == base.r + y);
                REQUIRE(moved.deg_z == base.deg_z);
                REQUIRE(moved.certainty == base.certainty);
            }
    }
}

TEST_CASE("unsupported inputs") {
    const Surface p2 = Surface::projective_plane();
    const BundleDescriptor plane = BundleDescriptor::split(DivisorClass(p2, {0}), DivisorClass(p2, {-1}));
    CHECK(code_of([&] { canonical_invariants(plane); }) == ErrorCode::Unsupported);
    CHECK(code_of([] { canonical_invariants(BundleDescriptor(f1(0, 0), 0)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { is_pi_uniform(BundleDescriptor(f1(0, 0), 0)); }) == ErrorCode::InvalidArgument);
}
