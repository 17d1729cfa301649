#pragma once

// Shared helpers for the test binaries: driving the CLI and independent
// brute-force oracles kept deliberately separate from the library paths they
// check.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace testsupport {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

inline std::string cli_binary() {
    const char* bin = std::getenv("TORICSPLIT_BIN");
    if (!bin || !*bin) throw std::runtime_error("TORICSPLIT_BIN is not set (run through ctest)");
    return bin;
}

inline CmdResult run_cli(const std::string& args) {
    std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CmdResult result;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
    int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

// exhaustive k-fold decomposition search over a base point set
inline bool decomposes(const toric::LatticeVector& target, int k,
                       const std::vector<toric::LatticeVector>& base) {
    if (k == 1) {
        for (const auto& b : base)
            if (b == target) return true;
        return false;
    }
    for (const auto& b : base)
        if (decomposes(target - b, k - 1, base)) return true;
    return false;
}

// integer convex hull (monotone chain) -> H-representation; throws on
// degenerate input
inline toric::HPolytope hull_polytope(std::vector<toric::LatticeVector> pts) {
    using toric::Int;
    using toric::LatticeVector;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<LatticeVector> hull;
    for (int pass = 0; pass < 2; ++pass) {
        size_t start = hull.size();
        auto scan = [&](const LatticeVector& p) {
            while (hull.size() >= start + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        };
        if (pass == 0)
            for (const auto& p : pts) scan(p);
        else
            for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
        hull.pop_back();
    }
    if (hull.size() < 3) throw std::invalid_argument("degenerate hull");
    std::vector<std::pair<LatticeVector, toric::Rat>> cs;
    for (size_t i = 0; i < hull.size(); ++i) {
        const LatticeVector& a = hull[i];
        const LatticeVector& b = hull[(i + 1) % hull.size()];
        LatticeVector n{-(b[1] - a[1]), b[0] - a[0]};
        cs.emplace_back(n, toric::Rat(dot(n, a)));
    }
    return toric::HPolytope(2, std::move(cs));
}

}  // namespace testsupport
