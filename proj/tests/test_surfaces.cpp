#include <catch2/catch_amalgamated.hpp>

#include "syzstab/core.hpp"
#include "syzstab/surfaces.hpp"

using namespace syzstab;

TEST_CASE("projective plane model") {
    const auto S = SurfaceModel::p2();
    CHECK(S.rank() == 1);
    CHECK(S.basis_labels() == std::vector<std::string>{"h"});
    CHECK(S.K() == DivisorClass({-3}));
    CHECK(S.pair(S.K(), S.K()) == 9);
    CHECK(S.chiO() == 1);
    CHECK(S.q() == 0);
    CHECK(S.extremal_rays().size() == 1);
    CHECK(S.descriptor() == "p2");
}

TEST_CASE("hirzebruch model invariants") {
    for (int n = 0; n <= 4; ++n) {
        const auto S = SurfaceModel::hirzebruch(n);
        CAPTURE(n);
        CHECK(S.rank() == 2);
        CHECK(S.K() == DivisorClass({-2, -(n + 2)}));
        CHECK(S.pair(S.K(), S.K()) == 8);
        CHECK(S.pair(DivisorClass({1, 0}), DivisorClass({1, 0})) == -n);
        CHECK(S.pair(DivisorClass({1, 0}), DivisorClass({0, 1})) == 1);
        CHECK(S.pair(DivisorClass({0, 1}), DivisorClass({0, 1})) == 0);
        CHECK(S.extremal_rays().size() == 2);
    }
    CHECK(SurfaceModel::hirzebruch(3).descriptor() == "hirzebruch:3");
    CHECK_THROWS_AS(SurfaceModel::hirzebruch(-1), input_error);
}

TEST_CASE("del pezzo model invariants") {
    for (int r = 1; r <= 8; ++r) {
        const auto S = SurfaceModel::del_pezzo(r);
        CAPTURE(r);
        CHECK(S.rank() == r + 1);
        CHECK(S.pair(S.K(), S.K()) == 9 - r);
        CHECK(is_ample(S, -S.K()));
        std::vector<Int> k(static_cast<size_t>(r) + 1, 1);
        k[0] = -3;
        CHECK(S.K() == DivisorClass(std::move(k)));
    }
    CHECK(SurfaceModel::del_pezzo(2).basis_labels() ==
          std::vector<std::string>{"h", "e1", "e2"});
    CHECK_THROWS_AS(SurfaceModel::del_pezzo(9), input_error);
}

TEST_CASE("minus-one curve enumeration at small r") {
    CHECK(minus_one_curves(SurfaceModel::del_pezzo(1)).size() == 1);
    CHECK(minus_one_curves(SurfaceModel::del_pezzo(2)).size() == 3);
    CHECK(minus_one_curves(SurfaceModel::del_pezzo(3)).size() == 6);
    CHECK(minus_one_curves(SurfaceModel::del_pezzo(4)).size() == 10);
    CHECK(minus_one_curves(SurfaceModel::del_pezzo(5)).size() == 16);

    const auto S = SurfaceModel::del_pezzo(3);
    for (const auto& C : minus_one_curves(S)) {
        CHECK(S.pair(C, C) == -1);
        CHECK(S.pair(C, S.K()) == -1);
    }
}

TEST_CASE("extremal rays of small del pezzos") {
    const auto d1 = SurfaceModel::del_pezzo(1);
    REQUIRE(d1.extremal_rays().size() == 2);
    CHECK(d1.extremal_rays()[0] == DivisorClass({0, 1}));
    CHECK(d1.extremal_rays()[1] == DivisorClass({1, -1}));

    CHECK(SurfaceModel::del_pezzo(2).extremal_rays().size() == 3);
    CHECK(SurfaceModel::del_pezzo(3).extremal_rays().size() == 6);
}

TEST_CASE("nef and ample membership") {
    const auto p2 = SurfaceModel::p2();
    CHECK(is_ample(p2, DivisorClass({1})));
    CHECK(is_nef(p2, DivisorClass({0})));
    CHECK_FALSE(is_ample(p2, DivisorClass({0})));
    CHECK_FALSE(is_nef(p2, DivisorClass({-1})));

    const auto f2 = SurfaceModel::hirzebruch(2);
    CHECK(is_nef(f2, DivisorClass({1, 2})));
    CHECK_FALSE(is_ample(f2, DivisorClass({1, 2})));
    CHECK(is_ample(f2, DivisorClass({1, 3})));

    const auto d3 = SurfaceModel::del_pezzo(3);
    const DivisorClass conic({2, -1, -1, -1});
    CHECK(is_nef(d3, conic));
    CHECK_FALSE(is_ample(d3, conic));
    CHECK(is_ample(d3, DivisorClass({3, -1, -1, -1})));
    CHECK_FALSE(is_nef(d3, DivisorClass({1, -1, -1, 0})));

    const auto num = SurfaceModel::numeric({10, 0, 0, 1, 0});
    CHECK_THROWS_AS(is_ample(num, DivisorClass({1})), input_error);
}

TEST_CASE("global generation rules") {
    const auto f1 = SurfaceModel::hirzebruch(1);
    CHECK(is_globally_generated(f1, DivisorClass({1, 1})) == Tri::yes);
    CHECK(is_globally_generated(f1, DivisorClass({1, 0})) == Tri::no);

    const auto d7 = SurfaceModel::del_pezzo(7);
    CHECK(is_globally_generated(d7, -d7.K()) == Tri::yes);

    // On delpezzo:8 the anticanonical class is nef with (-K).(-K) = 1 and
    // has a base point, so degree-1 classes stay undecided.
    const auto d8 = SurfaceModel::del_pezzo(8);
    CHECK(is_globally_generated(d8, -d8.K()) == Tri::unknown);
    CHECK(is_globally_generated(d8, -2 * d8.K()) == Tri::yes);
}

TEST_CASE("irreducible member heuristic") {
    const auto p2 = SurfaceModel::p2();
    CHECK(has_irreducible_member(p2, DivisorClass({2}), false) == MemberStatus::verified);
    CHECK(has_irreducible_member(p2, DivisorClass({-1}), false) == MemberStatus::unknown);
    CHECK(has_irreducible_member(p2, DivisorClass({-1}), true) == MemberStatus::asserted);

    // A fiber class generates a free pencil: not covered by the rule.
    const auto f1 = SurfaceModel::hirzebruch(1);
    CHECK(has_irreducible_member(f1, DivisorClass({0, 1}), false) == MemberStatus::unknown);
}

TEST_CASE("descriptor parsing round-trips") {
    for (const char* d : {"p2", "hirzebruch:0", "hirzebruch:3", "delpezzo:1", "delpezzo:8",
                          "numeric:L2=10,LK=0,K2=0,chiO=1,q=0"}) {
        CAPTURE(d);
        CHECK(parse_surface(d).descriptor() == d);
    }
    CHECK(parse_surface("p2") == SurfaceModel::p2());
    CHECK(parse_surface("delpezzo:4") == SurfaceModel::del_pezzo(4));
    CHECK(parse_surface("p2") != SurfaceModel::hirzebruch(1));
}

TEST_CASE("descriptor parsing rejects malformed input") {
    for (const char* d : {"", "p3", "hirzebruch", "hirzebruch:x", "hirzebruch:-1",
                          "delpezzo:9", "numeric:", "numeric:L2=1", "numeric:L2=1,LK=0,K2=0,chiO=1,q=0,z=3"}) {
        CAPTURE(d);
        CHECK_THROWS_AS(parse_surface(d), input_error);
    }
}

TEST_CASE("numeric surface carries its data") {
    const auto S = parse_surface("numeric:L2=10,LK=0,K2=0,chiO=1,q=0");
    CHECK_FALSE(S.has_lattice());
    CHECK(S.numeric_data().L2 == 10);
    CHECK(S.numeric_data().k_numerically_trivial());
    CHECK_FALSE(NumericSurfaceData{10, -2, 1, 1, 0}.k_numerically_trivial());
    CHECK_THROWS_AS(S.K(), input_error);
    CHECK_THROWS_AS(S.form(), input_error);
}
