#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support.hpp"
#include "toric/fan.hpp"
#include "toric/sections.hpp"

using namespace toric;
using testsupport::decomposes;
using testsupport::hull_polytope;

namespace {

std::vector<Rat> coeffs(std::initializer_list<int> d) {
    std::vector<Rat> out;
    for (int v : d) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("dilate scales the bounds", "[sections]") {
    Fan h1 = hirzebruch(1);
    HPolytope trap = divisor_polytope(h1, coeffs({0, 0, 1, 1}));
    HPolytope same = dilate(trap, 1);
    for (size_t i = 0; i < trap.constraints().size(); ++i)
        CHECK(same.constraints()[i].bound == trap.constraints()[i].bound);

    HPolytope seg = anticanonical_polytope(projective_space(1));
    auto box = bounding_box(dilate(seg, 3));
    REQUIRE(box);
    CHECK(box->lo == std::vector<Int>{-3});
    CHECK(box->hi == std::vector<Int>{3});

    CHECK(lattice_points(dilate(trap, 2)).size() == 12);
    CHECK_THROWS_AS(dilate(trap, 0), std::invalid_argument);
}

TEST_CASE("normality holds for the built-in polytopes", "[sections]") {
    Fan h1 = hirzebruch(1);
    HPolytope trap = divisor_polytope(h1, coeffs({0, 0, 1, 1}));
    CHECK(normality_check(trap, 4).pass);

    // unit segment [0,1]
    HPolytope seg(1, {{LatticeVector{1}, Rat(0)}, {LatticeVector{-1}, Rat(-1)}});
    CHECK(normality_check(seg, 5).pass);

    CHECK(normality_check(anticanonical_polytope(projective_space(2)), 3).pass);
}

TEST_CASE("normality decompositions re-verify exhaustively", "[sections]") {
    Fan h1 = hirzebruch(1);
    HPolytope trap = divisor_polytope(h1, coeffs({0, 0, 1, 1}));
    auto base = lattice_points(trap);
    for (int k : {2, 3})
        for (const auto& z : lattice_points(dilate(trap, k))) CHECK(decomposes(z, k, base));
}

TEST_CASE("the Reeve simplex fails normality with a re-checkable point", "[sections]") {
    // lattice tetrahedron (0,0,0),(1,0,0),(0,1,0),(1,1,2): its only lattice
    // points are the vertices, and 2P holds points of odd height
    HPolytope reeve(3, {{LatticeVector{0, 0, 1}, Rat(0)},
                        {LatticeVector{0, 2, -1}, Rat(0)},
                        {LatticeVector{2, 0, -1}, Rat(0)},
                        {LatticeVector{-2, -2, 1}, Rat(-2)}});
    REQUIRE(lattice_points(reeve).size() == 4);
    NormalityReport r = normality_check(reeve, 3);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->first == 2);
    CHECK(contains(dilate(reeve, 2), r.counterexample->second));
    CHECK_FALSE(decomposes(r.counterexample->second, 2, lattice_points(reeve)));
}

TEST_CASE("normality_check rejects degenerate input", "[sections]") {
    HPolytope empty(1, {{LatticeVector{1}, Rat(1)}, {LatticeVector{-1}, Rat(0)}});
    CHECK_THROWS_AS(normality_check(empty, 2), std::invalid_argument);
    HPolytope halfline(2, {{LatticeVector{1, 0}, Rat(0)}});
    CHECK_THROWS_AS(normality_check(halfline, 2), UnboundedPolytopeError);
}

TEST_CASE("random lattice polygons are always normal", "[sections]") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> coord(-5, 5);
    int done = 0;
    while (done < 20) {
        std::vector<LatticeVector> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(LatticeVector{coord(rng), coord(rng)});
        try {
            HPolytope poly = hull_polytope(std::move(pts));
            NormalityReport r = normality_check(poly, 4);
            CHECK(r.pass);
            ++done;
        } catch (const std::invalid_argument&) {
            continue;  // collinear sample, draw again
        }
    }
}
