#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "toric/oracle.hpp"

using namespace toric;

namespace {

FractionalPoint fp(std::initializer_list<int> nums, int den) {
    std::vector<Int> v;
    for (int n : nums) v.emplace_back(n);
    return FractionalPoint(LatticeVector(std::move(v)), den);
}

}  // namespace

TEST_CASE("chart grids truncate the dual cone exactly", "[oracle]") {
    Fan h1 = hirzebruch(1);
    ChartGrid quad = chart_grid(h1, 0, 2, 1);  // first quadrant, q=2, B=1
    CHECK(quad.points.size() == 9);
    for (const auto& u : quad.points) {
        CHECK(dual_cone_contains(h1, h1.max_cone(0), u));
        CHECK(u.coordinate(0) <= 1);
        CHECK(u.coordinate(1) <= 1);
    }

    ChartGrid zero = chart_grid(h1, 0, 3, 0);
    REQUIRE(zero.points.size() == 1);
    CHECK(zero.points[0].numerators().is_zero());

    // F_2 chart spanned by (-1,2),(0,-1) at q=1, B=1, enumerated independently
    Fan h2 = hirzebruch(2);
    REQUIRE(h2.max_cone(2).rays == std::vector<int>{2, 3});
    ChartGrid sing = chart_grid(h2, 2, 1, 1);
    std::set<LatticeVector> expected;
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) {
            int t1 = -y, t2 = -x + 2 * y;
            if (t1 >= 0 && t1 <= 1 && t2 >= 0 && t2 <= 1) expected.insert(LatticeVector{x, y});
        }
    REQUIRE(expected.size() == 4);
    std::set<LatticeVector> got;
    for (const auto& u : sing.points) got.insert(u.numerators());
    CHECK(got == expected);

    // grids need full-dimensional cones
    Fan line = build_fan(2, {LatticeVector{1, 0}}, {{0}});
    CHECK_THROWS_AS(chart_grid(line, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("brute force regularity agrees with the pairing criterion", "[oracle]") {
    Fan h1 = hirzebruch(1);
    for (int ci = 0; ci < 4; ++ci)
        CHECK(brute_force_regularity(fp({0, 0}, 2), h1, ci, 2, 3).pass);

    // chart {(0,-1),(-1,1)}: a = (1/2,-1/2) pairs to -1, the oracle must
    // exhibit an escaping translate
    REQUIRE(h1.max_cone(2).rays == std::vector<int>{2, 3});
    OracleReport bad = brute_force_regularity(fp({1, -1}, 2), h1, 2, 2, 2);
    REQUIRE_FALSE(bad.pass);
    REQUIRE(bad.counterexample);
    REQUIRE(bad.counterexample->elements.size() == 1);
    const FractionalPoint& u = bad.counterexample->elements[0];
    FractionalPoint sum = fp({1, -1}, 2) + u;
    REQUIRE(sum.is_integral());
    CHECK_FALSE(dual_cone_contains(h1, h1.max_cone(2), sum));
    CHECK(bad.counterexample->image == LaurentPolynomial::monomial(sum.to_exponent()));

    // failures persist as the bound grows, with the counterexample replaying
    for (int B : {3, 4, 5}) {
        OracleReport later = brute_force_regularity(fp({1, -1}, 2), h1, 2, 2, B);
        CHECK_FALSE(later.pass);
    }

    // basis points extend to every chart
    for (const auto& a : splitting_basis(h1, 2))
        for (int ci = 0; ci < 4; ++ci) CHECK(brute_force_regularity(a, h1, ci, 2, 3).pass);
}

TEST_CASE("brute force regularity matches regular_on_chart at a safe bound", "[oracle]") {
    std::mt19937 rng(1618);
    for (const Fan& f : {hirzebruch(1), projective_space(2), hirzebruch(3)}) {
        const Int q = 2;
        auto box = bounding_box(anticanonical_polytope(f));
        REQUIRE(box);
        std::uniform_int_distribution<long long> nx(
            (q * box->lo[0]).convert_to<long long>(), (q * box->hi[0]).convert_to<long long>());
        std::uniform_int_distribution<long long> ny(
            (q * box->lo[1]).convert_to<long long>(), (q * box->hi[1]).convert_to<long long>());
        for (int trial = 0; trial < 25; ++trial) {
            FractionalPoint a(LatticeVector{Int(nx(rng)), Int(ny(rng))}, q);
            Int maxpair = 0;
            for (const auto& ray : f.rays()) {
                Int m = abs(dot(a.numerators(), ray));
                if (m > maxpair) maxpair = m;
            }
            const Int B = q * (1 + ceil_div(maxpair, q));
            for (int ci = 0; ci < static_cast<int>(f.max_cones().size()); ++ci) {
                CAPTURE(a.str(), ci, B.str());
                CHECK(brute_force_regularity(a, f, ci, q, B).pass ==
                      regular_on_chart(a, f, f.max_cone(ci)));
            }
        }
    }
}

TEST_CASE("splitting law oracle", "[oracle]") {
    Fan p2 = projective_space(2);
    CHECK(verify_splitting_law(canonical_splitting(p2, 2), 3).pass);

    SplittingMap twice = make_splitting(p2, 2, {{fp({0, 0}, 2), Int(2)}});
    OracleReport doubled = verify_splitting_law(twice, 2);
    REQUIRE_FALSE(doubled.pass);
    REQUIRE(doubled.counterexample);
    // every integer point fails for this map, u = 0 included; the report
    // carries the first one scanned and it replays exactly
    CHECK(apply(twice, fp({0, 0}, 2)) == LaurentPolynomial::monomial(LatticeVector::zero(2), 2));
    const FractionalPoint& u = doubled.counterexample->elements[0];
    CHECK(apply(twice, u) == doubled.counterexample->image);
    CHECK(doubled.counterexample->image.coefficient(u.to_exponent()) == 2);

    SplittingMap pd = diagonal_splitting(hirzebruch(1), 2);
    CHECK(verify_splitting_law(pd, 2).pass);
}

TEST_CASE("diagonal compatibility oracle accepts the constructed splitting", "[oracle]") {
    for (auto [fan, q] : std::vector<std::pair<Fan, int>>{{projective_space(1), 2},
                                                          {projective_space(1), 3},
                                                          {hirzebruch(1), 2},
                                                          {hirzebruch(2), 3}}) {
        CAPTURE(q);
        SplittingMap pd = diagonal_splitting(fan, q);
        OracleReport r = verify_diagonal_compatibility(fan, q, pd, 2);
        CHECK(r.pass);
        CHECK(r.elements_checked > 0);
    }
}

TEST_CASE("diagonal compatibility oracle rejects pi_0", "[oracle]") {
    Fan p1 = projective_space(1);
    SplittingMap pi0 = canonical_splitting(product_fan(p1, p1), 2);
    OracleReport r = verify_diagonal_compatibility(p1, 2, pi0, 3);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample);
    REQUIRE(r.counterexample->elements.size() == 2);
    // the binomial difference restricts to a unit monomial: the constant 1
    // shifted by the common slot-sum
    REQUIRE(r.counterexample->image.size() == 1);
    const auto& [exp, coef] = *r.counterexample->image.terms().begin();
    CHECK((coef == 1 || coef == -1));
    // replay: recompute the two restrictions
    const FractionalPoint& b1 = r.counterexample->elements[0];
    const FractionalPoint& b2 = r.counterexample->elements[1];
    LaurentPolynomial diff = restrict_semidiagonal(apply(pi0, b1), p1.dim(), 1) -
                             restrict_semidiagonal(apply(pi0, b2), p1.dim(), 1);
    CHECK(diff == r.counterexample->image);
}

TEST_CASE("semidiagonal compatibility oracle", "[oracle]") {
    // n = 2, i = 1 gives the diagonal verdicts
    Fan p1 = projective_space(1);
    SplittingMap pd = diagonal_splitting(p1, 2);
    CHECK(verify_semidiagonal_compatibility(p1, 2, 2, 1, pd, 3).pass ==
          verify_diagonal_compatibility(p1, 2, pd, 3).pass);

    SplittingMap semi = semidiagonal_splitting(p1, 2, 3);
    CHECK(verify_semidiagonal_compatibility(p1, 2, 3, 1, semi, 2).pass);
    CHECK(verify_semidiagonal_compatibility(p1, 2, 3, 2, semi, 2).pass);
    CHECK(verify_splitting_law(semi, 2).pass);

    SplittingMap pi0_cube = canonical_splitting(power_fan(p1, 3), 2);
    for (int i : {1, 2})
        CHECK_FALSE(verify_semidiagonal_compatibility(p1, 2, 3, i, pi0_cube, 2).pass);

    CHECK_THROWS_AS(verify_semidiagonal_compatibility(p1, 2, 3, 3, semi, 2),
                    std::invalid_argument);
}

TEST_CASE("adjacent-pair fallback maps are honestly rejected", "[oracle]") {
    // no difference-regular system exists for hirzebruch(2) at q=3, so the
    // constructed map cannot be (and is not) semidiagonal compatible
    Fan h2 = hirzebruch(2);
    SplittingMap fallback = semidiagonal_splitting(h2, 3, 3);
    CHECK(verify_splitting_law(fallback, 2).pass);
    OracleReport r = verify_semidiagonal_compatibility(h2, 3, 3, 1, fallback, 2);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample);
    const FractionalPoint& b1 = r.counterexample->elements[0];
    const FractionalPoint& b2 = r.counterexample->elements[1];
    LaurentPolynomial diff = restrict_semidiagonal(apply(fallback, b1), 2, 1) -
                             restrict_semidiagonal(apply(fallback, b2), 2, 1);
    CHECK(diff == r.counterexample->image);
    CHECK_FALSE(diff.is_zero());
}

TEST_CASE("monomial ideal oracle on the canonical splitting", "[oracle]") {
    SplittingMap pi0_h3 = canonical_splitting(hirzebruch(3), 2);
    CHECK(verify_monomial_ideal_compatibility(pi0_h3, hirzebruch(3),
                                              union_of_divisors_predicate(), 2)
              .pass);

    Fan p2 = projective_space(2);
    SplittingMap pi0_p2 = canonical_splitting(p2, 2);
    for (int r = 0; r < 3; ++r)
        CHECK(verify_monomial_ideal_compatibility(pi0_p2, p2,
                                                  orbit_closure_predicate(p2, Cone{{r}}), 2)
                  .pass);
    for (const auto& cone : p2.max_cones())
        CHECK(verify_monomial_ideal_compatibility(pi0_p2, p2, orbit_closure_predicate(p2, cone), 2)
                  .pass);
}

TEST_CASE("monomial ideal oracle catches a term that exits the ideal", "[oracle]") {
    Fan h1 = hirzebruch(1);
    // a = (-1/2, 1/2) is a basis point; a + (1/2, 1/2) = (0, 1) leaves the
    // ideal of the divisor orbit of the ray (1,0)
    SplittingMap pi = make_splitting(h1, 2, {{fp({0, 0}, 2), Int(1)}, {fp({-1, 1}, 2), Int(1)}});
    OracleReport r =
        verify_monomial_ideal_compatibility(pi, h1, orbit_closure_predicate(h1, Cone{{0}}), 2);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample);
    // replay
    CHECK(apply(pi, r.counterexample->elements[0]) == r.counterexample->image);
    CHECK_THROWS_AS(
        verify_monomial_ideal_compatibility(pi, h1, IdealPredicate{"broken", nullptr}, 2),
        std::invalid_argument);
}

TEST_CASE("compatibility failures persist as the bound grows", "[oracle]") {
    Fan p1 = projective_space(1);
    SplittingMap pi0 = canonical_splitting(product_fan(p1, p1), 2);
    for (int B : {2, 3, 4}) CHECK_FALSE(verify_diagonal_compatibility(p1, 2, pi0, B).pass);
}
