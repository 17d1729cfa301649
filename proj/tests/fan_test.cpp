#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "toric/fan.hpp"

using namespace toric;

namespace {

std::vector<LatticeVector> sorted_rays(const Fan& f) {
    auto rays = f.rays();
    std::sort(rays.begin(), rays.end());
    return rays;
}

Fan cross_polytope_3d() {
    std::vector<LatticeVector> rays;
    for (int axis = 0; axis < 3; ++axis)
        for (int sign : {1, -1}) {
            LatticeVector v = LatticeVector::zero(3);
            v[axis] = sign;
            rays.push_back(std::move(v));
        }
    // rays: +x,-x,+y,-y,+z,-z; octants pick one per axis
    std::vector<std::vector<int>> cones;
    for (int sx : {0, 1})
        for (int sy : {0, 1})
            for (int sz : {0, 1}) cones.push_back({sx, 2 + sy, 4 + sz});
    return build_fan(3, std::move(rays), cones);
}

}  // namespace

TEST_CASE("build_fan validates and primitivizes", "[fan]") {
    Fan p1 = build_fan(1, {LatticeVector{1}, LatticeVector{-1}}, {{0}, {1}});
    CHECK(p1.rays().size() == 2);
    CHECK(is_complete(p1) == Completeness::Complete);

    Fan h2 = hirzebruch(2);
    CHECK(is_complete(h2) == Completeness::Complete);
    CHECK(h2.rays()[3] == LatticeVector{-1, 2});

    // scaled input rays come out primitive
    Fan scaled = build_fan(2,
                           {LatticeVector{3, 0}, LatticeVector{0, 2}, LatticeVector{0, -5},
                            LatticeVector{-2, 2}},
                           {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
    CHECK(scaled.rays()[0] == LatticeVector{1, 0});
    CHECK(scaled.rays()[3] == LatticeVector{-1, 1});

    CHECK_THROWS_MATCHES(
        build_fan(2, {LatticeVector{1, 0}, LatticeVector{-1, 0}}, {{0, 1}}), std::invalid_argument,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("strongly convex")));
    CHECK_THROWS_MATCHES(
        build_fan(2, {LatticeVector{1, 0}, LatticeVector{2, 0}}, {{0, 1}}), std::invalid_argument,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("duplicate ray")));
    CHECK_THROWS_MATCHES(
        build_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, -1}}, {{0, 1}}),
        std::invalid_argument,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("unused")));
    // overlapping cones do not intersect in a common face
    CHECK_THROWS_MATCHES(
        build_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}},
                  {{0, 1}, {0, 2}}),
        std::invalid_argument,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("common face")));
}

TEST_CASE("completeness is decided exactly in low dimension", "[fan]") {
    CHECK(is_complete(projective_space(2)) == Completeness::Complete);
    Fan affine = build_fan(2, {LatticeVector{1, 0}, LatticeVector{0, 1}}, {{0, 1}});
    CHECK(is_complete(affine) == Completeness::Incomplete);
    Fan halfline = build_fan(1, {LatticeVector{1}}, {{0}});
    CHECK(is_complete(halfline) == Completeness::Incomplete);
    // one quadrant missing
    Fan punctured = build_fan(2,
                              {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{-1, 0},
                               LatticeVector{0, -1}},
                              {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_complete(punctured) == Completeness::Incomplete);
}

TEST_CASE("facet pairing certifies the cross-polytope fan", "[fan]") {
    Fan f = cross_polytope_3d();
    CHECK(f.max_cones().size() == 8);
    CHECK(is_complete(f) == Completeness::Complete);
    // removing one octant breaks the pairing
    std::vector<std::vector<int>> cones;
    for (size_t i = 0; i + 1 < f.max_cones().size(); ++i) cones.push_back(f.max_cone(static_cast<int>(i)).rays);
    std::vector<LatticeVector> rays = f.rays();
    Fan broken = build_fan(3, std::move(rays), cones);
    CHECK(is_complete(broken) == Completeness::Unverified);
}

TEST_CASE("product fans multiply cones and concatenate rays", "[fan]") {
    Fan p1 = projective_space(1);
    Fan sq = product_fan(p1, p1);
    CHECK(sq.dim() == 2);
    CHECK(sq.rays().size() == 4);
    CHECK(sq.max_cones().size() == 4);
    CHECK(is_complete(sq) == Completeness::Complete);

    Fan h1 = hirzebruch(1);
    Fan h1sq = product_fan(h1, h1);
    CHECK(h1sq.rays().size() == 8);
    CHECK(h1sq.max_cones().size() == 16);

    Fan p2 = projective_space(2);
    CHECK(product_fan(p2, h1).rays().size() == p2.rays().size() + h1.rays().size());
}

TEST_CASE("product fan is associative up to ray reordering", "[fan]") {
    Fan a = projective_space(1);
    Fan b = hirzebruch(1);
    Fan c = projective_space(2);
    Fan left = product_fan(product_fan(a, b), c);
    Fan right = product_fan(a, product_fan(b, c));
    CHECK(sorted_rays(left) == sorted_rays(right));
    CHECK(left.max_cones().size() == right.max_cones().size());
    CHECK(left.dim() == right.dim());
}

TEST_CASE("builtin fans match their descriptions", "[fan]") {
    Fan p2 = projective_space(2);
    CHECK(p2.rays().size() == 3);
    CHECK(p2.max_cones().size() == 3);

    Fan h0 = hirzebruch(0);
    Fan sq = product_fan(projective_space(1), projective_space(1));
    CHECK(sorted_rays(h0) == sorted_rays(sq));
    CHECK(h0.max_cones().size() == sq.max_cones().size());

    CHECK(hirzebruch(3).rays()[3] == LatticeVector{-1, 3});

    for (int a = 0; a <= 5; ++a) CHECK(is_complete(hirzebruch(a)) == Completeness::Complete);
    for (int n = 1; n <= 4; ++n) CHECK(is_complete(projective_space(n)) == Completeness::Complete);
}

TEST_CASE("dual_cone_contains tests all ray pairings", "[fan]") {
    Fan h1 = hirzebruch(1);
    const Cone& quadrant = h1.max_cone(0);  // rays (1,0),(0,1)
    for (const auto& cone : h1.max_cones())
        CHECK(dual_cone_contains(h1, cone, FractionalPoint(LatticeVector{0, 0}, 2)));
    CHECK(dual_cone_contains(h1, quadrant, FractionalPoint(LatticeVector{1, 1}, 2)));

    // chart spanned by (0,-1),(-1,1): pairing of (1/2,0) with (-1,1) is -1/2
    const Cone& back = h1.max_cone(1);  // rays 1,3 = (0,1),(-1,1)
    CHECK(h1.ray(3) == LatticeVector{-1, 1});
    CHECK_FALSE(dual_cone_contains(h1, Cone{{2, 3}}, FractionalPoint(LatticeVector{1, 0}, 2)));
    CHECK(dual_cone_contains(h1, back, FractionalPoint(LatticeVector{0, 2}, 2)));
}

TEST_CASE("dual cone membership flips with one negated pairing", "[fan]") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(0, 6);
    for (const Fan& f : {hirzebruch(2), projective_space(2)}) {
        for (const auto& cone : f.max_cones()) {
            REQUIRE(cone.rays.size() == 2);
            const LatticeVector& v1 = f.ray(cone.rays[0]);
            const LatticeVector& v2 = f.ray(cone.rays[1]);
            const Int det = v1[0] * v2[1] - v1[1] * v2[0];
            REQUIRE(det != 0);
            for (int trial = 0; trial < 20; ++trial) {
                Int t1 = coeff(rng), t2 = coeff(rng);
                // u with <u,v1> = t1*det^2, <u,v2> = t2*det^2 (integer by Cramer)
                LatticeVector u{det * (t1 * v2[1] - t2 * v1[1]), det * (t2 * v1[0] - t1 * v2[0])};
                FractionalPoint fu(u, 3);
                CHECK(dual_cone_contains(f, cone, fu));
                LatticeVector flip{det * (-(t1 + 1) * v2[1] - t2 * v1[1]),
                                   det * (t2 * v1[0] + (t1 + 1) * v2[0])};
                CHECK_FALSE(dual_cone_contains(f, cone, FractionalPoint(flip, 3)));
            }
        }
    }
}
