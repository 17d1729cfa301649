#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace toric {

// All core arithmetic is exact. Strict inequalities at polytope boundaries
// carry the whole criterion, so there is no floating point anywhere below
// the SVG renderer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0; cpp_int division truncates toward zero.
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(numerator(r), denominator(r)); }

inline std::string to_string(const Int& v) { return v.str(); }

// "3", "-1/2"
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

}  // namespace toric
