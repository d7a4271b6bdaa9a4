#include <catch2/catch_amalgamated.hpp>

#include "syzstab/cohomology.hpp"
#include "syzstab/core.hpp"
#include "syzstab/surfaces.hpp"

using namespace syzstab;

TEST_CASE("plane section counts are binomial") {
    const auto S = SurfaceModel::p2();
    const Int expected[] = {1, 3, 6, 10, 15, 21};
    for (Int d = 0; d <= 5; ++d) {
        CAPTURE(d);
        CHECK(h0_exact(S, DivisorClass({d})) == expected[d]);
        CHECK(chi(S, DivisorClass({d})) == expected[d]);
    }
    CHECK(h0_exact(S, DivisorClass({-1})) == 0);
    CHECK(h0_exact(S, DivisorClass({20})) == 231);
}

TEST_CASE("hirzebruch section counts sum fiber degrees") {
    const auto f0 = SurfaceModel::hirzebruch(0);
    const auto f1 = SurfaceModel::hirzebruch(1);
    const auto f2 = SurfaceModel::hirzebruch(2);
    CHECK(h0_exact(f0, DivisorClass({1, 1})) == 4);
    CHECK(h0_exact(f1, DivisorClass({1, 2})) == 5);
    CHECK(h0_exact(f2, DivisorClass({1, 3})) == 6);
    // Non-nef classes still have honest section counts.
    CHECK(h0_exact(f2, DivisorClass({2, 3})) == 6);
    CHECK(h0_exact(f2, DivisorClass({-1, 5})) == 0);
    CHECK(h0_exact(f2, DivisorClass({1, -1})) == 0);
    CHECK(h0_exact(f2, DivisorClass({0, 0})) == 1);
}

TEST_CASE("euler characteristic matches riemann-roch") {
    const auto f2 = SurfaceModel::hirzebruch(2);
    const DivisorClass L({1, 3});
    CHECK(chi(f2, L) == 6);
    CHECK(chi(f2, DivisorClass({0, 0})) == 1);

    const auto d6 = SurfaceModel::del_pezzo(6);
    CHECK(chi(d6, -d6.K()) == 4);

    CHECK(chi(NumericSurfaceData{10, 0, 0, 1, 0}) == 6);
    CHECK(chi(NumericSurfaceData{4, -4, 4, 1, 0}) == 5);
}

TEST_CASE("certified section counts") {
    const auto f1 = SurfaceModel::hirzebruch(1);
    CHECK(h0_certified(f1, DivisorClass({1, 2})) == 5);

    const auto d2 = SurfaceModel::del_pezzo(2);
    CHECK(h0_certified(d2, DivisorClass({3, -1, -1})) == 8);
    const auto d6 = SurfaceModel::del_pezzo(6);
    CHECK(h0_certified(d6, -d6.K()) == 4);

    const auto d1 = SurfaceModel::del_pezzo(1);
    CHECK_FALSE(h0_certified(d1, DivisorClass({0, 1})).has_value());
}

TEST_CASE("h1 vanishing decisions") {
    const auto p2 = SurfaceModel::p2();
    CHECK(h1_is_zero(p2, DivisorClass({0})) == Tri::yes);
    CHECK(h1_is_zero(p2, DivisorClass({-3})) == Tri::yes);

    const auto f0 = SurfaceModel::hirzebruch(0);
    CHECK(h1_is_zero(f0, DivisorClass({1, -1})) == Tri::yes);
    // O(1,-2) on the quadric has h1 = 2; the toric count decides "no".
    CHECK(h1_is_zero(f0, DivisorClass({1, -2})) == Tri::no);

    const auto d2 = SurfaceModel::del_pezzo(2);
    CHECK(h1_is_zero(d2, DivisorClass({1, 0, 0})) == Tri::yes);
    // h - e1 - e2 is itself a ray (D^2 = -1) and D - K is nef but not
    // ample, so neither decision rule applies.
    CHECK(h1_is_zero(d2, DivisorClass({1, -1, -1})) == Tri::unknown);
    CHECK(h1_is_zero(d2, -DivisorClass({0, 1, 0})) == Tri::unknown);

    const auto d1 = SurfaceModel::del_pezzo(1);
    // 2h - 3e1 is not nef but (2h - 3e1) - K is ample: Kodaira rule fires.
    CHECK(h1_is_zero(d1, DivisorClass({2, -3})) == Tri::yes);

    const auto num = SurfaceModel::numeric({10, 0, 0, 1, 0});
    CHECK(h1_is_zero(num, DivisorClass(std::vector<Int>{})) == Tri::unknown);
}

TEST_CASE("curve section counts in the nonspecial range") {
    CHECK(h0_curve_nonspecial(0, 4) == 5);
    CHECK(h0_curve_nonspecial(1, 3) == 3);
    CHECK(h0_curve_nonspecial(3, 5) == 3);
    CHECK(h0_curve_nonspecial(2, -1) == 0);
    CHECK_FALSE(h0_curve_nonspecial(2, 2).has_value());
    CHECK_THROWS_AS(h0_curve_nonspecial(-1, 3), input_error);
}

TEST_CASE("analyze bundles the checks") {
    const auto p2 = SurfaceModel::p2();
    const auto r = analyze(p2, DivisorClass({2}));
    CHECK(r.h0 == 6);
    CHECK(r.h1_zero == Tri::yes);
    CHECK(r.h2_zero == Tri::yes);
    CHECK(r.chi == 6);
    CHECK(r.method == "exact-formula");

    const auto d6 = SurfaceModel::del_pezzo(6);
    const auto rn = analyze(d6, -d6.K());
    CHECK(rn.h0 == 4);
    CHECK(rn.method == "chi-plus-vanishing");

    const auto d2 = SurfaceModel::del_pezzo(2);
    const auto ru = analyze(d2, -DivisorClass({0, 1, 0}));
    CHECK_FALSE(ru.h0.has_value());
    CHECK(ru.method == "unknown");
}
