#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/linalg.hpp"

namespace toric {

struct UnboundedPolytopeError : std::runtime_error {
    explicit UnboundedPolytopeError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Rational polyhedron in H-representation: the set of u with
 * <u, normal> >= bound for every constraint. Membership and strict
 * membership are decided exactly over the rationals; the scaled integer
 * form of each bound is cached so point tests stay in integer arithmetic.
 */
class HPolytope {
public:
    struct Constraint {
        LatticeVector normal;
        Rat bound;
        Int bound_num, bound_den;  // bound = bound_num / bound_den, bound_den > 0
    };

    HPolytope(int dim, std::vector<std::pair<LatticeVector, Rat>> constraints) : dim_(dim) {
        for (auto& [normal, bound] : constraints) {
            if (normal.dim() != dim) throw std::invalid_argument("HPolytope: normal dimension mismatch");
            if (normal.is_zero()) throw std::invalid_argument("HPolytope: zero normal");
            Constraint c{std::move(normal), bound, numerator(bound), denominator(bound)};
            cs_.push_back(std::move(c));
        }
    }

    int dim() const { return dim_; }
    const std::vector<Constraint>& constraints() const { return cs_; }

private:
    int dim_;
    std::vector<Constraint> cs_;
};

/// P_D for D = sum d_rho D_rho: constraints <u, v_rho> >= -d_rho in ray order.
inline HPolytope divisor_polytope(const Fan& fan, const std::vector<Rat>& d) {
    if (d.size() != fan.rays().size())
        throw std::invalid_argument("divisor_polytope: need one coefficient per ray");
    std::vector<std::pair<LatticeVector, Rat>> cs;
    for (size_t i = 0; i < d.size(); ++i) cs.emplace_back(fan.ray(static_cast<int>(i)), -d[i]);
    return HPolytope(fan.dim(), std::move(cs));
}

/// P_{-K}: all divisor coefficients 1.
inline HPolytope anticanonical_polytope(const Fan& fan) {
    return divisor_polytope(fan, std::vector<Rat>(fan.rays().size(), Rat(1)));
}

/// The polytope whose interior coset coverage decides diagonal splitting:
/// -1 <= <u, v_rho> <= 1 for every ray. Equals P_{-K} intersect -P_{-K}.
inline HPolytope diagonal_splitting_polytope(const Fan& fan) {
    std::vector<std::pair<LatticeVector, Rat>> cs;
    for (const auto& r : fan.rays()) {
        cs.emplace_back(r, Rat(-1));
        cs.emplace_back(-r, Rat(-1));
    }
    return HPolytope(fan.dim(), std::move(cs));
}

inline bool contains(const HPolytope& p, const FractionalPoint& u) {
    if (u.dim() != p.dim()) throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& c : p.constraints())
        if (c.bound_den * dot(u.numerators(), c.normal) < c.bound_num * u.den()) return false;
    return true;
}

inline bool contains_strict(const HPolytope& p, const FractionalPoint& u) {
    if (u.dim() != p.dim()) throw std::invalid_argument("contains_strict: dimension mismatch");
    for (const auto& c : p.constraints())
        if (c.bound_den * dot(u.numerators(), c.normal) <= c.bound_num * u.den()) return false;
    return true;
}

inline bool contains(const HPolytope& p, const LatticeVector& u) {
    return contains(p, FractionalPoint::integral(u, 1));
}
inline bool contains_strict(const HPolytope& p, const LatticeVector& u) {
    return contains_strict(p, FractionalPoint::integral(u, 1));
}

/// Axis-aligned integer box, lower <= upper per coordinate.
struct IntegerBox {
    std::vector<Int> lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const IntegerBox& other) const {
        for (int i = 0; i < dim(); ++i)
            if (other.lo[i] < lo[i] || other.hi[i] > hi[i]) return false;
        return true;
    }
    bool operator==(const IntegerBox& o) const { return lo == o.lo && hi == o.hi; }
    std::string str() const {
        std::string s;
        for (int i = 0; i < dim(); ++i) {
            if (i) s += "x";
            s += "[" + lo[i].str() + "," + hi[i].str() + "]";
        }
        return s;
    }
};

namespace detail {

inline LinearSystem to_system(const HPolytope& p) {
    LinearSystem sys;
    sys.dim = p.dim();
    for (const auto& c : p.constraints()) {
        std::vector<Int> a(p.dim());
        for (int i = 0; i < p.dim(); ++i) a[i] = c.bound_den * c.normal[i];
        sys.add(std::move(a), c.bound_num);
    }
    return sys;
}

}  // namespace detail

/// Smallest integer box containing P, by exact per-coordinate Fourier-Motzkin
/// elimination (floor of the minimum, ceiling of the maximum). Returns
/// nullopt when P is empty; throws when some coordinate is unbounded.
inline std::optional<IntegerBox> bounding_box(const HPolytope& p) {
    const LinearSystem sys = detail::to_system(p);
    IntegerBox box;
    for (int j = 0; j < p.dim(); ++j) {
        CoordinateBounds b = fm_coordinate_bounds(sys, j);
        if (!b.feasible) return std::nullopt;
        if (!b.lower || !b.upper)
            throw UnboundedPolytopeError("polyhedron is unbounded in coordinate " +
                                         std::to_string(j));
        box.lo.push_back(rat_floor(*b.lower));
        box.hi.push_back(rat_ceil(*b.upper));
    }
    return box;
}

namespace detail {

// Lexicographic scan of the (1/q)-grid over the bounding box. The callback
// may return false to stop early.
inline void scan_box_points(const HPolytope& p, const Int& q,
                            const std::function<bool(const FractionalPoint&)>& visit) {
    auto box = bounding_box(p);
    if (!box) return;
    const int n = p.dim();
    std::vector<Int> lo(n), hi(n), cur(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = q * box->lo[i];
        hi[i] = q * box->hi[i];
        cur[i] = lo[i];
    }
    while (true) {
        if (!visit(FractionalPoint(LatticeVector(cur), q))) return;
        int i = n - 1;
        while (i >= 0) {
            if (++cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            --i;
        }
        if (i < 0) return;
    }
}

}  // namespace detail

/// All points of (1/q)Z^n in P (closed), lexicographic by numerators.
inline std::vector<FractionalPoint> fractional_points(const HPolytope& p, const Int& q) {
    std::vector<FractionalPoint> out;
    detail::scan_box_points(p, q, [&](const FractionalPoint& u) {
        if (contains(p, u)) out.push_back(u);
        return true;
    });
    return out;
}

/// All points of (1/q)Z^n strictly inside P, lexicographic by numerators.
inline std::vector<FractionalPoint> interior_points(const HPolytope& p, const Int& q) {
    std::vector<FractionalPoint> out;
    detail::scan_box_points(p, q, [&](const FractionalPoint& u) {
        if (contains_strict(p, u)) out.push_back(u);
        return true;
    });
    return out;
}

/// All integer points of P (closed), lexicographic.
inline std::vector<LatticeVector> lattice_points(const HPolytope& p) {
    std::vector<LatticeVector> out;
    detail::scan_box_points(p, 1, [&](const FractionalPoint& u) {
        if (contains(p, u)) out.push_back(u.numerators());
        return true;
    });
    return out;
}

}  // namespace toric
