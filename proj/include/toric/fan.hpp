#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/linalg.hpp"

namespace toric {

/// Cone of a fan, stored as indices into the fan's ray list. No face lattice
/// is cached; every criterion computation below needs only ray pairings.
struct Cone {
    std::vector<int> rays;  // sorted, distinct
};

enum class Completeness { Complete, Incomplete, Unverified };

inline const char* to_string(Completeness c) {
    switch (c) {
        case Completeness::Complete: return "verified-complete";
        case Completeness::Incomplete: return "verified-incomplete";
        default: return "unverified";
    }
}

class Fan {
public:
    Fan(int dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones,
        Completeness complete)
        : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)),
          complete_(complete) {}

    int dim() const { return dim_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(int i) const { return rays_[i]; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    const Cone& max_cone(int i) const { return max_cones_[i]; }
    Completeness completeness() const { return complete_; }

private:
    int dim_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> max_cones_;
    Completeness complete_;
};

inline Completeness is_complete(const Fan& f) { return f.completeness(); }

namespace detail {

// 2D angle order: upper half-plane (y > 0, or y = 0 and x > 0) first,
// then by exact cross-product comparison within each half.
inline int half_of(const LatticeVector& v) {
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
    return 1;
}

inline Int cross2(const LatticeVector& a, const LatticeVector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

inline bool angle_less(const LatticeVector& a, const LatticeVector& b) {
    const int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

// Is there u with <u, v> >= 1 for all given v?  Equivalent to the cone they
// generate being strongly convex (pointed).
inline bool strictly_positive_functional_exists(int dim, const std::vector<LatticeVector>& vs) {
    LinearSystem sys;
    sys.dim = dim;
    for (const auto& v : vs) sys.add(v.coords(), Int(1));
    return fm_feasible(std::move(sys));
}

// Proper separation test for two simplicial cones sharing the ray set
// `common`: feasible iff the cones intersect exactly in the face spanned by
// the common rays.
inline bool separable_along_common_face(int dim, const std::vector<LatticeVector>& only_a,
                                        const std::vector<LatticeVector>& only_b,
                                        const std::vector<LatticeVector>& common) {
    LinearSystem sys;
    sys.dim = dim;
    for (const auto& v : common) {
        sys.add(v.coords(), Int(0));
        sys.add((-v).coords(), Int(0));
    }
    for (const auto& v : only_a) sys.add(v.coords(), Int(1));
    for (const auto& v : only_b) sys.add((-v).coords(), Int(1));
    return fm_feasible(std::move(sys));
}

inline bool simplicial(const Fan& rays_holder, const Cone& c) {
    std::vector<LatticeVector> vs;
    for (int i : c.rays) vs.push_back(rays_holder.ray(i));
    return integer_rank(vs) == static_cast<int>(vs.size());
}

}  // namespace detail

/// True iff <u, v_rho> >= 0 for every ray of the cone; sufficient for
/// membership in the dual cone because the cone is generated by its rays.
inline bool dual_cone_contains(const Fan& fan, const Cone& cone, const FractionalPoint& u) {
    if (u.dim() != fan.dim()) throw std::invalid_argument("dual_cone_contains: dimension mismatch");
    for (int i : cone.rays)
        if (dot(u.numerators(), fan.ray(i)) < 0) return false;
    return true;
}

namespace detail {

inline Completeness evaluate_completeness(int dim, const std::vector<LatticeVector>& rays,
                                          const std::vector<Cone>& cones, bool faces_verified) {
    if (dim == 1) {
        bool plus = false, minus = false;
        for (const auto& r : rays) (r[0] > 0 ? plus : minus) = true;
        return (plus && minus) ? Completeness::Complete : Completeness::Incomplete;
    }
    if (dim == 2) {
        const int k = static_cast<int>(rays.size());
        if (k < 3) return Completeness::Incomplete;
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return angle_less(rays[a], rays[b]); });
        std::set<std::pair<int, int>> expected;
        for (int i = 0; i < k; ++i) {
            int a = order[i], b = order[(i + 1) % k];
            if (cross2(rays[a], rays[b]) <= 0) return Completeness::Incomplete;  // gap >= pi
            expected.insert(std::minmax(a, b));
        }
        std::set<std::pair<int, int>> listed;
        for (const auto& c : cones) {
            if (c.rays.size() != 2) continue;
            listed.insert(std::minmax(c.rays[0], c.rays[1]));
        }
        return listed == expected ? Completeness::Complete : Completeness::Incomplete;
    }
    // dim >= 3: facet-pairing criterion. Needs full-dimensional simplicial
    // cones; anything else stays unverified.
    if (!faces_verified) return Completeness::Unverified;
    std::map<std::vector<int>, int> facet_count;
    for (const auto& c : cones) {
        if (static_cast<int>(c.rays.size()) != dim) return Completeness::Unverified;
        std::vector<LatticeVector> vs;
        for (int i : c.rays) vs.push_back(rays[i]);
        if (integer_rank(vs) != dim) return Completeness::Unverified;  // not full-dimensional
        for (int drop = 0; drop < dim; ++drop) {
            std::vector<int> facet;
            for (int j = 0; j < dim; ++j)
                if (j != drop) facet.push_back(c.rays[j]);
            ++facet_count[facet];
        }
    }
    for (const auto& [facet, count] : facet_count)
        if (count != 2) return Completeness::Unverified;
    return Completeness::Complete;
}

}  // namespace detail

/// Validates and normalizes fan data: rays are primitivized, cones must be
/// strongly convex, every ray must be used, and (where decidable) cones must
/// pairwise intersect in common faces. Completeness is evaluated exactly in
/// dim <= 2 and by the facet-pairing criterion for simplicial fans above.
inline Fan build_fan(int dim, std::vector<LatticeVector> rays,
                     const std::vector<std::vector<int>>& max_cones) {
    if (dim < 1) throw std::invalid_argument("build_fan: dimension must be >= 1");
    for (auto& r : rays) {
        if (r.dim() != dim) throw std::invalid_argument("build_fan: ray dimension mismatch");
        r = primitive(r);
    }
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j])
                throw std::invalid_argument("build_fan: duplicate ray " + rays[i].str());

    std::vector<Cone> cones;
    std::set<std::vector<int>> seen;
    std::vector<bool> used(rays.size(), false);
    for (const auto& idx : max_cones) {
        Cone c;
        c.rays = idx;
        std::sort(c.rays.begin(), c.rays.end());
        if (std::adjacent_find(c.rays.begin(), c.rays.end()) != c.rays.end())
            throw std::invalid_argument("build_fan: repeated ray index in cone");
        for (int i : c.rays) {
            if (i < 0 || i >= static_cast<int>(rays.size()))
                throw std::invalid_argument("build_fan: ray index out of range");
            used[i] = true;
        }
        if (c.rays.empty()) throw std::invalid_argument("build_fan: empty cone");
        if (seen.insert(c.rays).second) cones.push_back(std::move(c));
    }
    if (cones.empty()) throw std::invalid_argument("build_fan: no cones");
    for (size_t i = 0; i < rays.size(); ++i)
        if (!used[i])
            throw std::invalid_argument("build_fan: ray " + rays[i].str() + " unused by any cone");

    // strong convexity, per cone
    for (const auto& c : cones) {
        std::vector<LatticeVector> vs;
        for (int i : c.rays) vs.push_back(rays[i]);
        if (!detail::strictly_positive_functional_exists(dim, vs))
            throw std::invalid_argument("build_fan: cone is not strongly convex (contains a line)");
    }

    // In 2D every listed ray of a cone must be an angular extreme: a third
    // generator would lie inside the cone and is not a face of it.
    if (dim == 2) {
        for (const auto& c : cones)
            if (c.rays.size() > 2)
                throw std::invalid_argument("build_fan: 2D cone with redundant ray generator");
    }

    // Pairwise intersection-in-common-face. Exact (separation by a functional
    // vanishing on the shared rays) whenever both cones are simplicial; for
    // non-simplicial higher-dimensional input it is skipped and the fan stays
    // unverified.
    bool all_simplicial = true;
    {
        Fan tmp(dim, rays, cones, Completeness::Unverified);
        for (const auto& c : cones)
            if (!detail::simplicial(tmp, c)) all_simplicial = false;
    }
    if (all_simplicial) {
        for (size_t i = 0; i < cones.size(); ++i)
            for (size_t j = i + 1; j < cones.size(); ++j) {
                std::vector<LatticeVector> only_a, only_b, common;
                std::set<int> b_set(cones[j].rays.begin(), cones[j].rays.end());
                std::set<int> a_set(cones[i].rays.begin(), cones[i].rays.end());
                for (int r : cones[i].rays)
                    (b_set.count(r) ? common : only_a).push_back(rays[r]);
                for (int r : cones[j].rays)
                    if (!a_set.count(r)) only_b.push_back(rays[r]);
                if (!detail::separable_along_common_face(dim, only_a, only_b, common))
                    throw std::invalid_argument(
                        "build_fan: cones do not intersect in a common face");
            }
    }

    Completeness complete = detail::evaluate_completeness(dim, rays, cones, all_simplicial);
    return Fan(dim, std::move(rays), std::move(cones), complete);
}

/// Fan of F x G: rays embedded in the two coordinate blocks, maximal cones
/// all pairwise unions. Products of valid fans are valid, so no revalidation.
inline Fan product_fan(const Fan& f, const Fan& g) {
    const int dim = f.dim() + g.dim();
    std::vector<LatticeVector> rays;
    for (const auto& r : f.rays()) rays.push_back(concat(r, LatticeVector::zero(g.dim())));
    for (const auto& r : g.rays()) rays.push_back(concat(LatticeVector::zero(f.dim()), r));
    std::vector<Cone> cones;
    for (const auto& cf : f.max_cones())
        for (const auto& cg : g.max_cones()) {
            Cone c;
            c.rays = cf.rays;
            for (int i : cg.rays) c.rays.push_back(i + static_cast<int>(f.rays().size()));
            std::sort(c.rays.begin(), c.rays.end());
            cones.push_back(std::move(c));
        }
    Completeness complete;
    if (f.completeness() == Completeness::Complete && g.completeness() == Completeness::Complete)
        complete = Completeness::Complete;
    else if (f.completeness() == Completeness::Incomplete ||
             g.completeness() == Completeness::Incomplete)
        complete = Completeness::Incomplete;
    else
        complete = Completeness::Unverified;
    return Fan(dim, std::move(rays), std::move(cones), complete);
}

/// fan^n by iterated products.
inline Fan power_fan(const Fan& f, int n) {
    if (n < 1) throw std::invalid_argument("power_fan: n must be >= 1");
    Fan out = f;
    for (int i = 1; i < n; ++i) out = product_fan(out, f);
    return out;
}

/// P^n: rays e_1..e_n and -(e_1+...+e_n), maximal cones all n-subsets.
inline Fan projective_space(int n) {
    if (n < 1) throw std::invalid_argument("projective_space: n must be >= 1");
    std::vector<LatticeVector> rays;
    for (int i = 0; i < n; ++i) {
        LatticeVector e = LatticeVector::zero(n);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    LatticeVector m = LatticeVector::zero(n);
    for (int i = 0; i < n; ++i) m[i] = -1;
    rays.push_back(std::move(m));
    std::vector<std::vector<int>> cones;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(std::move(c));
    }
    return build_fan(n, std::move(rays), cones);
}

/// Hirzebruch surface F_a: rays (1,0), (0,1), (0,-1), (-1,a).
inline Fan hirzebruch(const Int& a) {
    if (a < 0) throw std::invalid_argument("hirzebruch: a must be >= 0");
    std::vector<LatticeVector> rays = {
        LatticeVector{Int(1), Int(0)},
        LatticeVector{Int(0), Int(1)},
        LatticeVector{Int(0), Int(-1)},
        LatticeVector{Int(-1), a},
    };
    std::vector<std::vector<int>> cones = {{0, 1}, {1, 3}, {3, 2}, {2, 0}};
    return build_fan(2, std::move(rays), cones);
}

}  // namespace toric
