#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// kP: every bound scaled by k.
inline HPolytope dilate(const HPolytope& p, const Int& k) {
    if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
    std::vector<std::pair<LatticeVector, Rat>> cs;
    for (const auto& c : p.constraints()) cs.emplace_back(c.normal, Rat(k) * c.bound);
    return HPolytope(p.dim(), std::move(cs));
}

struct NormalityReport {
    Int k_max;
    bool pass = true;
    // lattice point of kP with no decomposition into k points of P
    std::optional<std::pair<Int, LatticeVector>> counterexample;
    long long points_checked = 0;
};

/**
 * Degree-one generation check for the polytope semigroup: for each
 * 2 <= k <= k_max, every lattice point of kP must be a sum of k lattice
 * points of P. The k-fold sum sets are built incrementally, so a reported
 * counterexample is re-checkable by exhaustive decomposition search.
 *
 * This corroborates normal generation of the associated section ring; it
 * does not touch degree-two relations or Koszulness.
 */
inline NormalityReport normality_check(const HPolytope& p, const Int& k_max) {
    if (k_max < 1) throw std::invalid_argument("normality_check: k_max must be >= 1");
    std::vector<LatticeVector> base = lattice_points(p);  // throws when unbounded
    if (base.empty()) throw std::invalid_argument("normality_check: polytope has no lattice point");

    NormalityReport report;
    report.k_max = k_max;
    std::set<LatticeVector> sums(base.begin(), base.end());
    for (Int k = 2; k <= k_max; ++k) {
        std::set<LatticeVector> next;
        for (const auto& s : sums)
            for (const auto& b : base) next.insert(s + b);
        sums = std::move(next);
        for (const auto& z : lattice_points(dilate(p, k))) {
            ++report.points_checked;
            if (!sums.count(z)) {
                report.pass = false;
                report.counterexample = {k, z};
                return report;
            }
        }
    }
    return report;
}

}  // namespace toric
