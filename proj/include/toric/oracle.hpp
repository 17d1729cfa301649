#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"
#include "toric/splitting.hpp"

namespace toric {

/**
 * Brute-force verification engine over affine-chart semigroup rings. Each
 * chart of a full-dimensional pointed cone sigma is truncated to the finite
 * grid of u in sigma-dual with 0 <= <u, v_rho> <= B, and properties are
 * checked exhaustively on it. The oracle is deliberately redundant with the
 * closed-form operations: it exists to catch implementation errors.
 */

/// Truncation of sigma-dual cap (1/q)M by the pairing bound B.
struct ChartGrid {
    int cone_index;
    Int q;
    Int bound;
    std::vector<FractionalPoint> points;  // lexicographic by numerators
};

inline ChartGrid chart_grid(const Fan& fan, int cone_index, const Int& q, const Int& B) {
    if (cone_index < 0 || cone_index >= static_cast<int>(fan.max_cones().size()))
        throw std::invalid_argument("chart_grid: cone index out of range");
    if (B < 0) throw std::invalid_argument("chart_grid: bound must be >= 0");
    const Cone& cone = fan.max_cone(cone_index);
    std::vector<LatticeVector> rays;
    for (int i : cone.rays) rays.push_back(fan.ray(i));
    if (integer_rank(rays) != fan.dim())
        throw std::invalid_argument("chart_grid: cone is not full-dimensional, truncation is infinite");
    std::vector<std::pair<LatticeVector, Rat>> cs;
    for (const auto& v : rays) {
        cs.emplace_back(v, Rat(0));
        cs.emplace_back(-v, Rat(-B));
    }
    HPolytope trunc(fan.dim(), std::move(cs));
    return ChartGrid{cone_index, q, B, fractional_points(trunc, q)};
}

struct Counterexample {
    int chart = 0;
    std::vector<FractionalPoint> elements;
    LaurentPolynomial image;
};

struct OracleReport {
    bool pass = true;
    long long elements_checked = 0;
    std::optional<Counterexample> counterexample;
};

/// Exhaustive check that a + u stays in sigma-dual for every grid point u
/// with a + u in M. Agrees with regular_on_chart once B is large enough to
/// expose an escaping translate.
inline OracleReport brute_force_regularity(const FractionalPoint& a, const Fan& fan,
                                           int cone_index, const Int& q, const Int& B) {
    if (a.den() != q) throw std::invalid_argument("brute_force_regularity: denominator mismatch");
    ChartGrid grid = chart_grid(fan, cone_index, q, B);
    const Cone& cone = fan.max_cone(cone_index);
    OracleReport report;
    for (const auto& u : grid.points) {
        FractionalPoint s = a + u;
        if (!s.is_integral()) continue;
        ++report.elements_checked;
        LatticeVector w = s.to_exponent();
        if (!dual_cone_contains(fan, cone, FractionalPoint::integral(w, 1))) {
            report.pass = false;
            report.counterexample =
                Counterexample{cone_index, {u}, LaurentPolynomial::monomial(w)};
            return report;
        }
    }
    return report;
}

/// pi composed with pullback must fix every monomial: apply(pi, u) = x^u for
/// all integer points u of every chart grid.
inline OracleReport verify_splitting_law(const SplittingMap& pi, const Int& B) {
    const Fan& ambient = pi.ambient();
    OracleReport report;
    for (int ci = 0; ci < static_cast<int>(ambient.max_cones().size()); ++ci) {
        ChartGrid grid = chart_grid(ambient, ci, 1, B);
        for (const auto& u : grid.points) {
            LatticeVector exp = u.to_exponent();
            FractionalPoint lifted = FractionalPoint::integral(exp, pi.q());
            ++report.elements_checked;
            LaurentPolynomial img = apply(pi, lifted);
            if (img != LaurentPolynomial::monomial(exp)) {
                report.pass = false;
                report.counterexample = Counterexample{ci, {lifted}, img};
                return report;
            }
        }
    }
    return report;
}

namespace detail {

/// Shared scan for diagonal/semidiagonal compatibility. On each chart
/// sigma^n of base^n the binomials x^b - x^b' with b, b' agreeing outside
/// slots i, i+1 and having equal slot-sum generate the chart part of the
/// semidiagonal ideal up to the bound; pi is compatible iff the restricted
/// images within every such group coincide.
inline OracleReport compatibility_scan(const Fan& base, const Int& q, int n, int i,
                                       const SplittingMap& pi, const Int& B) {
    if (i < 1 || i >= n) throw std::invalid_argument("compatibility: need 1 <= i < n");
    if (pi.q() != q) throw std::invalid_argument("compatibility: q mismatch");
    const int d = base.dim();
    if (pi.ambient().dim() != n * d)
        throw std::invalid_argument("compatibility: map ambient is not base^n");

    // terms sliced per slot
    struct TermSlots {
        std::vector<LatticeVector> slots;
        Int coef;
    };
    std::vector<TermSlots> terms;
    for (const auto& [nums, c] : pi.term_numerators()) {
        TermSlots t;
        t.coef = c;
        for (int s = 0; s < n; ++s) {
            std::vector<Int> part(nums.begin() + s * d, nums.begin() + (s + 1) * d);
            t.slots.emplace_back(std::move(part));
        }
        terms.push_back(std::move(t));
    }

    OracleReport report;
    for (int ci = 0; ci < static_cast<int>(base.max_cones().size()); ++ci) {
        ChartGrid grid = chart_grid(base, ci, q, B);
        const long long g = static_cast<long long>(grid.points.size());
        {
            Int tuples = 1;
            for (int s = 0; s < n; ++s) tuples *= g;
            if (tuples > 1000000000)
                throw EnumerationLimitError("compatibility scan too large: " + tuples.str() +
                                            " tuples on one chart");
        }

        // memo[t][s][gi]: exponent of (term slot + grid point)/q when integral
        std::vector<std::vector<std::vector<std::optional<LatticeVector>>>> memo(terms.size());
        for (size_t t = 0; t < terms.size(); ++t) {
            memo[t].assign(n, std::vector<std::optional<LatticeVector>>(g));
            for (int s = 0; s < n; ++s)
                for (long long gi = 0; gi < g; ++gi) {
                    std::vector<Int> e(d);
                    bool ok = true;
                    for (int j = 0; j < d && ok; ++j) {
                        Int sum = terms[t].slots[s][j] + grid.points[gi].numerators()[j];
                        if (sum % q != 0)
                            ok = false;
                        else
                            e[j] = sum / q;
                    }
                    if (ok) memo[t][s][gi] = LatticeVector(std::move(e));
                }
        }

        auto tuple_point = [&](long long flat) {
            std::vector<long long> idx(n);
            for (int s = n - 1; s >= 0; --s) {
                idx[s] = flat % g;
                flat /= g;
            }
            std::vector<Int> nums;
            nums.reserve(n * d);
            for (int s = 0; s < n; ++s)
                for (int j = 0; j < d; ++j) nums.push_back(grid.points[idx[s]].numerators()[j]);
            return FractionalPoint(LatticeVector(std::move(nums)), q);
        };

        std::map<std::vector<Int>, std::pair<long long, LaurentPolynomial>> groups;
        std::vector<long long> idx(n, 0);
        long long flat = 0;
        while (true) {
            // group key: slots outside {i, i+1} verbatim, merged slots summed
            std::vector<Int> key;
            key.reserve((n - 1) * d);
            for (int s = 0; s < n; ++s) {
                if (s == i) continue;
                for (int j = 0; j < d; ++j) {
                    Int v = grid.points[idx[s]].numerators()[j];
                    if (s == i - 1) v += grid.points[idx[i]].numerators()[j];
                    key.push_back(std::move(v));
                }
            }
            // restricted image of apply(pi, b)
            LaurentPolynomial r;
            for (size_t t = 0; t < terms.size(); ++t) {
                bool all = true;
                for (int s = 0; s < n && all; ++s) all = memo[t][s][idx[s]].has_value();
                if (!all) continue;
                std::vector<Int> e;
                e.reserve((n - 1) * d);
                for (int s = 0; s < n; ++s) {
                    if (s == i) continue;
                    const LatticeVector& part = *memo[t][s][idx[s]];
                    for (int j = 0; j < d; ++j) {
                        Int v = part[j];
                        if (s == i - 1) v += (*memo[t][i][idx[i]])[j];
                        e.push_back(std::move(v));
                    }
                }
                r.add_term(LatticeVector(std::move(e)), terms[t].coef);
            }
            ++report.elements_checked;

            auto [it, inserted] = groups.try_emplace(key, flat, r);
            if (!inserted && it->second.second != r) {
                report.pass = false;
                report.counterexample = Counterexample{
                    ci, {tuple_point(it->second.first), tuple_point(flat)}, it->second.second - r};
                return report;
            }

            int s = n - 1;
            while (s >= 0) {
                if (++idx[s] < g) break;
                idx[s] = 0;
                --s;
            }
            ++flat;
            if (s < 0) break;
        }
    }
    return report;
}

}  // namespace detail

/// Compatibility of pi (on fan x fan) with the diagonal, up to bound B.
inline OracleReport verify_diagonal_compatibility(const Fan& fan, const Int& q,
                                                  const SplittingMap& pi, const Int& B) {
    return detail::compatibility_scan(fan, q, 2, 1, pi, B);
}

/// Compatibility of pi (on fan^n) with the semidiagonal Delta_i, 1 <= i < n.
inline OracleReport verify_semidiagonal_compatibility(const Fan& fan, const Int& q, int n, int i,
                                                      const SplittingMap& pi, const Int& B) {
    return detail::compatibility_scan(fan, q, n, i, pi, B);
}

/// Chart-local membership test for a T-invariant monomial ideal.
struct IdealPredicate {
    std::string name;
    std::function<bool(const Fan&, const Cone&, const FractionalPoint&)> member;
};

/// Ideal of the union of the invariant divisors: x^u with u in the interior
/// of sigma-dual, i.e. all ray pairings strictly positive.
inline IdealPredicate union_of_divisors_predicate() {
    return IdealPredicate{
        "union-of-invariant-divisors", [](const Fan& fan, const Cone& cone, const FractionalPoint& u) {
            for (int i : cone.rays)
                if (dot(u.numerators(), fan.ray(i)) <= 0) return false;
            return true;
        }};
}

/// Ideal of the orbit closure of a face: x^u with u outside the orthogonal
/// complement of the face, i.e. some face ray pairs nonzero.
inline IdealPredicate orbit_closure_predicate(const Fan& fan, const Cone& face) {
    std::vector<LatticeVector> face_rays;
    for (int i : face.rays) face_rays.push_back(fan.ray(i));
    return IdealPredicate{"orbit-closure",
                          [face_rays](const Fan&, const Cone&, const FractionalPoint& u) {
                              for (const auto& v : face_rays)
                                  if (dot(u.numerators(), v) != 0) return true;
                              return false;
                          }};
}

/// For every chart and every grid point u in the ideal, every monomial of
/// apply(pi, u) must stay in the ideal (degree-one integral version).
inline OracleReport verify_monomial_ideal_compatibility(const SplittingMap& pi, const Fan& fan,
                                                        const IdealPredicate& pred, const Int& B) {
    if (!pred.member) throw std::invalid_argument("verify_monomial_ideal_compatibility: unknown predicate");
    if (pi.ambient().dim() != fan.dim())
        throw std::invalid_argument("verify_monomial_ideal_compatibility: fan dimension mismatch");
    OracleReport report;
    for (int ci = 0; ci < static_cast<int>(fan.max_cones().size()); ++ci) {
        ChartGrid grid = chart_grid(fan, ci, pi.q(), B);
        const Cone& cone = fan.max_cone(ci);
        for (const auto& u : grid.points) {
            if (!pred.member(fan, cone, u)) continue;
            ++report.elements_checked;
            LaurentPolynomial img = apply(pi, u);
            for (const auto& [w, c] : img.terms()) {
                if (!pred.member(fan, cone, FractionalPoint::integral(w, 1))) {
                    report.pass = false;
                    report.counterexample = Counterexample{ci, {u}, img};
                    return report;
                }
            }
        }
    }
    return report;
}

}  // namespace toric
