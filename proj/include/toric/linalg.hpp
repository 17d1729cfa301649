#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/numeric.hpp"

namespace toric {

/// System of linear inequalities sum_i a[i] x_i >= b over the rationals,
/// stored with integer data (clear denominators before building rows).
struct LinearSystem {
    struct Row {
        std::vector<Int> a;
        Int b;

        bool operator==(const Row& o) const { return a == o.a && b == o.b; }
        bool operator<(const Row& o) const {
            if (a != o.a) return std::lexicographical_compare(a.begin(), a.end(), o.a.begin(), o.a.end());
            return b < o.b;
        }
    };

    int dim = 0;
    std::vector<Row> rows;

    void add(std::vector<Int> a, Int b) { rows.push_back(Row{std::move(a), std::move(b)}); }
};

namespace detail {

inline void normalize_row(LinearSystem::Row& r) {
    Int g = 0;
    for (const Int& c : r.a) g = boost::multiprecision::gcd(g, c);
    g = boost::multiprecision::gcd(g, r.b);
    if (g > 1) {
        for (Int& c : r.a) c /= g;
        r.b /= g;
    }
}

inline bool is_zero_row(const LinearSystem::Row& r) {
    return std::all_of(r.a.begin(), r.a.end(), [](const Int& c) { return c == 0; });
}

inline void dedupe(std::vector<LinearSystem::Row>& rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace detail

/// One Fourier-Motzkin step: eliminate variable k. Rows with a[k] = 0 carry
/// over; each (positive, negative) pair combines into a new row. A constant
/// row 0 >= b with b > 0 means the system is infeasible; we keep such rows so
/// callers can detect them.
inline LinearSystem fm_eliminate(const LinearSystem& sys, int k) {
    std::vector<const LinearSystem::Row*> pos, neg;
    LinearSystem out;
    out.dim = sys.dim;
    for (const auto& r : sys.rows) {
        if (r.a[k] > 0)
            pos.push_back(&r);
        else if (r.a[k] < 0)
            neg.push_back(&r);
        else
            out.rows.push_back(r);
    }
    for (const auto* p : pos)
        for (const auto* n : neg) {
            // (-n_k) * p + p_k * n, both multipliers positive
            const Int mp = -n->a[k];
            const Int mn = p->a[k];
            LinearSystem::Row r;
            r.a.resize(sys.dim);
            for (int i = 0; i < sys.dim; ++i) r.a[i] = mp * p->a[i] + mn * n->a[i];
            r.b = mp * p->b + mn * n->b;
            detail::normalize_row(r);
            // drop rows that are trivially true
            if (detail::is_zero_row(r) && r.b <= 0) continue;
            out.rows.push_back(std::move(r));
        }
    detail::dedupe(out.rows);
    return out;
}

/// Exact feasibility over the rationals: eliminate everything and look for a
/// contradictory constant row.
inline bool fm_feasible(LinearSystem sys) {
    for (int k = 0; k < sys.dim; ++k) {
        for (const auto& r : sys.rows)
            if (detail::is_zero_row(r) && r.b > 0) return false;
        sys = fm_eliminate(sys, k);
    }
    for (const auto& r : sys.rows)
        if (r.b > 0) return false;
    return true;
}

struct CoordinateBounds {
    bool feasible = true;
    std::optional<Rat> lower, upper;  // nullopt = unbounded on that side
};

/// Exact extrema of coordinate `var` over the solution set, via elimination
/// of all other variables.
inline CoordinateBounds fm_coordinate_bounds(LinearSystem sys, int var) {
    for (int k = 0; k < sys.dim; ++k) {
        if (k == var) continue;
        sys = fm_eliminate(sys, k);
    }
    CoordinateBounds out;
    for (const auto& r : sys.rows) {
        const Int& c = r.a[var];
        if (c == 0) {
            if (r.b > 0) {
                out.feasible = false;
                return out;
            }
            continue;
        }
        Rat bound = c > 0 ? Rat(r.b, c) : Rat(-r.b, -c);
        if (c > 0) {
            if (!out.lower || bound > *out.lower) out.lower = bound;
        } else {
            if (!out.upper || bound < *out.upper) out.upper = bound;
        }
    }
    if (out.lower && out.upper && *out.lower > *out.upper) out.feasible = false;
    return out;
}

/// Rank of an integer matrix (rows as vectors), by fraction-free elimination.
inline int integer_rank(const std::vector<LatticeVector>& rows) {
    if (rows.empty()) return 0;
    const int m = static_cast<int>(rows.size());
    const int n = rows[0].dim();
    std::vector<std::vector<Int>> a(m);
    for (int i = 0; i < m; ++i) a[i] = rows[i].coords();
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            const Int f1 = a[rank][col];
            const Int f2 = a[i][col];
            for (int j = col; j < n; ++j) a[i][j] = f1 * a[i][j] - f2 * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace toric
