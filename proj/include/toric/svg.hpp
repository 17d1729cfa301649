#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/splitting.hpp"

namespace toric {

namespace detail {

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline double rat_to_double(const Rat& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

// Vertices of a bounded full-dimensional 2D H-polytope: intersect constraint
// lines pairwise, keep feasible points, order them around the centroid.
inline std::vector<std::pair<Rat, Rat>> polygon_vertices(const HPolytope& p) {
    const auto& cs = p.constraints();
    auto satisfies = [&](const Rat& x, const Rat& y) {
        for (const auto& c : cs)
            if (Rat(c.normal[0]) * x + Rat(c.normal[1]) * y < c.bound) return false;
        return true;
    };
    std::set<std::pair<Rat, Rat>> verts;
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j) {
            const Int det = cs[i].normal[0] * cs[j].normal[1] - cs[i].normal[1] * cs[j].normal[0];
            if (det == 0) continue;
            Rat x = (cs[i].bound * Rat(cs[j].normal[1]) - cs[j].bound * Rat(cs[i].normal[1])) / Rat(det);
            Rat y = (Rat(cs[i].normal[0]) * cs[j].bound - Rat(cs[j].normal[0]) * cs[i].bound) / Rat(det);
            if (satisfies(x, y)) verts.insert({std::move(x), std::move(y)});
        }
    std::vector<std::pair<Rat, Rat>> out(verts.begin(), verts.end());
    if (out.size() < 3) return out;
    Rat cx(0), cy(0);
    for (const auto& [x, y] : out) {
        cx += x;
        cy += y;
    }
    cx /= out.size();
    cy /= out.size();
    auto half = [&](const std::pair<Rat, Rat>& v) {
        Rat dy = v.second - cy, dx = v.first - cx;
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        // exact cross product of the direction vectors
        Rat cr = (a.first - cx) * (b.second - cy) - (a.second - cy) * (b.first - cx);
        if (cr != 0) return cr > 0;
        return a < b;
    });
    return out;
}

}  // namespace detail

/// Figure of the diagonal splitting polytope with the (1/q)-grid: certificate
/// representatives highlighted, or every candidate of the uncovered class
/// crossed out. Exact rational coordinates are only rounded at render time.
inline std::string render_decision_svg(const Fan& fan, const Int& q, const SplitDecision& decision,
                                       const std::string& caption) {
    if (fan.dim() != 2) throw std::invalid_argument("svg rendering needs a 2-dimensional fan");
    const HPolytope fx = diagonal_splitting_polytope(fan);
    auto boxOpt = bounding_box(fx);
    if (!boxOpt) throw std::logic_error("empty splitting polytope");
    const IntegerBox& box = *boxOpt;

    const double scale = 90.0, pad = 45.0;
    const double lox = box.lo[0].convert_to<double>(), hix = box.hi[0].convert_to<double>();
    const double loy = box.lo[1].convert_to<double>(), hiy = box.hi[1].convert_to<double>();
    auto X = [&](const Rat& x) { return pad + (detail::rat_to_double(x) - lox) * scale; };
    auto Y = [&](const Rat& y) { return pad + (hiy - detail::rat_to_double(y)) * scale; };
    const double width = 2 * pad + (hix - lox) * scale;
    const double height = 2 * pad + (hiy - loy) * scale + 20.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + detail::fmt2(width) +
           " " + detail::fmt2(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + detail::fmt2(pad) + "\" y=\"24\" font-family=\"monospace\" font-size=\"14\">" +
           caption + "</text>\n";

    // polygon outline
    auto verts = detail::polygon_vertices(fx);
    if (!verts.empty()) {
        svg += "<polygon points=\"";
        for (size_t i = 0; i < verts.size(); ++i) {
            if (i) svg += " ";
            svg += detail::fmt2(X(verts[i].first)) + "," + detail::fmt2(Y(verts[i].second));
        }
        svg += "\" fill=\"#4682b4\" fill-opacity=\"0.15\" stroke=\"#4682b4\" stroke-width=\"1.5\"/>\n";
    }

    // axes through the origin
    svg += "<line x1=\"" + detail::fmt2(X(Rat(box.lo[0]))) + "\" y1=\"" + detail::fmt2(Y(Rat(0))) +
           "\" x2=\"" + detail::fmt2(X(Rat(box.hi[0]))) + "\" y2=\"" + detail::fmt2(Y(Rat(0))) +
           "\" stroke=\"#bbbbbb\" stroke-width=\"0.8\"/>\n";
    svg += "<line x1=\"" + detail::fmt2(X(Rat(0))) + "\" y1=\"" + detail::fmt2(Y(Rat(box.lo[1]))) +
           "\" x2=\"" + detail::fmt2(X(Rat(0))) + "\" y2=\"" + detail::fmt2(Y(Rat(box.hi[1]))) +
           "\" stroke=\"#bbbbbb\" stroke-width=\"0.8\"/>\n";

    std::set<LatticeVector> highlight;
    std::optional<LatticeVector> missing_residues;
    if (is_split(decision)) {
        for (const auto& [cls, rep] : std::get<SplitCertificate>(decision).reps)
            highlight.insert(rep.numerators());
    } else {
        missing_residues = std::get<NonSplitWitness>(decision).missing.residues();
    }

    // the (1/q)-grid over the box
    for (Int nx = q * box.lo[0]; nx <= q * box.hi[0]; ++nx)
        for (Int ny = q * box.lo[1]; ny <= q * box.hi[1]; ++ny) {
            FractionalPoint u(LatticeVector{nx, ny}, q);
            const std::string px = detail::fmt2(X(u.coordinate(0)));
            const std::string py = detail::fmt2(Y(u.coordinate(1)));
            const bool inside = contains_strict(fx, u);
            if (missing_residues && coset_class(u).residues() == *missing_residues) {
                // uncovered class: cross out every candidate representative
                svg += "<g stroke=\"#cc2222\" stroke-width=\"1.6\"><line x1=\"" +
                       detail::fmt2(X(u.coordinate(0)) - 4) + "\" y1=\"" +
                       detail::fmt2(Y(u.coordinate(1)) - 4) + "\" x2=\"" +
                       detail::fmt2(X(u.coordinate(0)) + 4) + "\" y2=\"" +
                       detail::fmt2(Y(u.coordinate(1)) + 4) + "\"/><line x1=\"" +
                       detail::fmt2(X(u.coordinate(0)) - 4) + "\" y1=\"" +
                       detail::fmt2(Y(u.coordinate(1)) + 4) + "\" x2=\"" +
                       detail::fmt2(X(u.coordinate(0)) + 4) + "\" y2=\"" +
                       detail::fmt2(Y(u.coordinate(1)) - 4) + "\"/></g>\n";
            } else if (highlight.count(u.numerators())) {
                svg += "<circle cx=\"" + px + "\" cy=\"" + py +
                       "\" r=\"5\" fill=\"#2e8b57\"><title>representative " + u.str() +
                       " of class " + coset_class(u).str() + "</title></circle>\n";
            } else {
                svg += "<circle cx=\"" + px + "\" cy=\"" + py + "\" r=\"2\" fill=\"" +
                       (inside ? "#4682b4" : "#c8c8c8") + "\"/>\n";
            }
        }
    svg += "</svg>\n";
    return svg;
}

}  // namespace toric
