#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace netpres;

namespace {
IntMat2 cols(int a, int c, int b, int d) {
    return IntMat2{{Int(a), Int(c)}, {Int(b), Int(d)}};
}
ExtendedSlope slope(int p, int q) { return ExtendedSlope::make(Int(p), Int(q)); }
}  // namespace

TEST_CASE("slope normal form", "[euclid]") {
    CHECK(slope(2, 4) == slope(1, 2));
    CHECK(slope(-2, -4) == slope(1, 2));
    CHECK(slope(2, -4) == slope(-1, 2));
    CHECK(slope(3, 0) == ExtendedSlope::infinity());
    CHECK(slope(-3, 0) == ExtendedSlope::infinity());
    CHECK(to_string(slope(-1, 2)) == "-1/2");
    CHECK(to_string(slope(4, 2)) == "2");
    CHECK(to_string(ExtendedSlope::infinity()) == "inf");
}

TEST_CASE("affine map of a diagram", "[euclid]") {
    PresentationDiagram rabbit = parse(oracles::read_data_file("rabbit.netmap"));
    Affine f = affine_of(rabbit);
    CHECK(f.a == cols(0, -1, 2, 1));
    CHECK(f.b == IntVec2{Int(2), Int(1)});  // b = lambda2

    PresentationDiagram lodge = parse(oracles::read_data_file("lodge.netmap"));
    Affine g = affine_of(lodge);
    CHECK(g.a == cols(3, 0, 1, 1));
    CHECK(g.b == IntVec2{Int(3), Int(0)});  // b = lambda1

    PresentationDiagram linear = oracles::degenerate_diagram(cols(2, 0, 0, 1), {0, 0});
    CHECK(affine_of(linear).b == IntVec2{Int(0), Int(0)});
}

TEST_CASE("degree", "[euclid]") {
    CHECK(degree(parse(oracles::read_data_file("rabbit.netmap"))) == 2);
    CHECK(degree(parse(oracles::read_data_file("lodge.netmap"))) == 3);
}

TEST_CASE("slope pullbacks of the worked examples", "[euclid]") {
    IntMat2 a = cols(4, 1, 2, 2);
    CHECK(preimage_slope(a, ExtendedSlope::zero()) == SlopePullback{slope(-1, 2), Int(6)});
    CHECK(preimage_slope(a, ExtendedSlope::infinity()) == SlopePullback{slope(-2, 1), Int(3)});

    IntMat2 lodge = cols(3, 0, 1, 1);
    CHECK(preimage_slope(lodge, ExtendedSlope::zero()) == SlopePullback{slope(0, 1), Int(3)});
    CHECK(preimage_slope(lodge, ExtendedSlope::infinity()) == SlopePullback{slope(-3, 1), Int(3)});
}

TEST_CASE("matrix reconstruction from pullback data", "[euclid]") {
    CHECK(matrix_from_pullback_data(slope(-1, 2), Int(6), slope(-2, 1), Int(3)) ==
          cols(4, 1, 2, 2));
    CHECK(matrix_from_pullback_data(slope(0, 1), Int(3), slope(-3, 1), Int(3)) ==
          cols(3, 0, 1, 1));
    IntMat2 rabbit = matrix_from_pullback_data(slope(1, 1), Int(2), slope(0, 1), Int(1));
    CHECK((rabbit == cols(0, -1, 2, 1) || rabbit == -cols(0, -1, 2, 1)));

    CHECK_THROWS_AS(matrix_from_pullback_data(slope(1, 2), Int(1), slope(1, 2), Int(1)),
                    SingularInput);
    CHECK_THROWS_AS(matrix_from_pullback_data(slope(1, 1), Int(1), slope(-1, 1), Int(2)),
                    NonIntegralResult);
}

TEST_CASE("slope pullback properties, fuzz", "[euclid]") {
    oracles::Rng rng(51);
    for (int k = 0; k < 4000; ++k) {
        IntMat2 a = oracles::random_matrix_with_det_in(rng, 2, 100);
        SlopePullback p0 = preimage_slope(a, ExtendedSlope::zero());
        SlopePullback pi = preimage_slope(a, ExtendedSlope::infinity());
        REQUIRE(det(a) % p0.local_degree == 0);
        REQUIRE(det(a) % pi.local_degree == 0);
        IntMat2 rec =
            matrix_from_pullback_data(p0.slope, p0.local_degree, pi.slope, pi.local_degree);
        REQUIRE((rec == a || rec == -a));

        // invariance under negating the matrix, on a random slope
        Int sp = oracles::rand_int(rng, -9, 9);
        Int sq = oracles::rand_int(rng, -9, 9);
        if (sp == 0 && sq == 0) continue;
        ExtendedSlope s = ExtendedSlope::make(sp, sq);
        REQUIRE(preimage_slope(a, s) == preimage_slope(-a, s));
        REQUIRE(det(a) % preimage_slope(a, s).local_degree == 0);
    }
}

TEST_CASE("scalar matrices fix every slope", "[euclid]") {
    oracles::Rng rng(52);
    for (int k = 2; k <= 12; ++k) {
        IntMat2 a = IntMat2::diagonal(Int(k), Int(k));
        for (int t = 0; t < 40; ++t) {
            Int sp = oracles::rand_int(rng, -20, 20);
            Int sq = oracles::rand_int(rng, -20, 20);
            if (sp == 0 && sq == 0) continue;
            ExtendedSlope s = ExtendedSlope::make(sp, sq);
            SlopePullback pb = preimage_slope(a, s);
            REQUIRE(pb.slope == s);
            REQUIRE(pb.local_degree == k);
        }
        REQUIRE(preimage_slope(a, ExtendedSlope::infinity()) ==
                SlopePullback{ExtendedSlope::infinity(), Int(k)});
    }
}
