#pragma once
#include <iterator>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

/// Point of a rank-n lattice. Whether it lives in M (characters) or N (ray
/// directions) is contextual; the arithmetic is the same.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> coords) : c_(std::move(coords)) {}
    LatticeVector(std::initializer_list<Int> coords) : c_(coords) {}

    static LatticeVector zero(int dim) { return LatticeVector(std::vector<Int>(dim, Int(0))); }

    int dim() const { return static_cast<int>(c_.size()); }
    const Int& operator[](int i) const { return c_[i]; }
    Int& operator[](int i) { return c_[i]; }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
    }

    const std::vector<Int>& coords() const { return c_; }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return a.c_ != b.c_; }
    // lexicographic; the canonical order everywhere (enumeration, witness
    // selection, polynomial terms)
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        LatticeVector r = a;
        for (int i = 0; i < r.dim(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        LatticeVector r = a;
        for (int i = 0; i < r.dim(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend LatticeVector operator-(const LatticeVector& a) {
        LatticeVector r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend LatticeVector operator*(const Int& k, const LatticeVector& a) {
        LatticeVector r = a;
        for (auto& v : r.c_) v *= k;
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Int> c_;
};

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline LatticeVector concat(const LatticeVector& a, const LatticeVector& b) {
    std::vector<Int> c = a.coords();
    c.insert(c.end(), b.begin(), b.end());
    return LatticeVector(std::move(c));
}

/// Shortest integer vector in the same direction.
inline LatticeVector primitive(const LatticeVector& v) {
    if (v.is_zero()) throw std::invalid_argument("primitive: not a ray direction (zero vector)");
    Int g = 0;
    for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
    LatticeVector r = v;
    for (int i = 0; i < r.dim(); ++i) r[i] /= g;
    return r;
}

/// Element of (1/q)M stored as numerators over a fixed denominator q.
/// No gcd reduction: the denominator stays pinned to the ambient q so coset
/// arithmetic and mixed sums are uniform.
class FractionalPoint {
public:
    FractionalPoint(LatticeVector numerators, Int den)
        : nums_(std::move(numerators)), den_(std::move(den)) {
        if (den_ < 1) throw std::invalid_argument("FractionalPoint: denominator must be positive");
    }

    /// u in M embedded in (1/q)M.
    static FractionalPoint integral(const LatticeVector& u, const Int& den) {
        return FractionalPoint(den * u, den);
    }

    int dim() const { return nums_.dim(); }
    const LatticeVector& numerators() const { return nums_; }
    const Int& den() const { return den_; }
    Rat coordinate(int i) const { return Rat(nums_[i], den_); }

    bool is_integral() const {
        for (const Int& n : nums_)
            if (n % den_ != 0) return false;
        return true;
    }

    /// Exact coordinates in M; only valid when is_integral().
    LatticeVector to_exponent() const {
        std::vector<Int> e;
        e.reserve(nums_.dim());
        for (const Int& n : nums_) {
            if (n % den_ != 0) throw std::invalid_argument("to_exponent: point is not integral");
            e.push_back(n / den_);
        }
        return LatticeVector(std::move(e));
    }

    FractionalPoint operator-() const { return FractionalPoint(-nums_, den_); }

    friend FractionalPoint operator+(const FractionalPoint& a, const FractionalPoint& b) {
        if (a.den_ != b.den_) throw std::invalid_argument("FractionalPoint: denominator mismatch");
        return FractionalPoint(a.nums_ + b.nums_, a.den_);
    }

    /// u + m for integral m.
    FractionalPoint translated(const LatticeVector& m) const {
        return FractionalPoint(nums_ + den_ * m, den_);
    }

    friend bool operator==(const FractionalPoint& a, const FractionalPoint& b) {
        return a.den_ == b.den_ && a.nums_ == b.nums_;
    }
    friend bool operator!=(const FractionalPoint& a, const FractionalPoint& b) { return !(a == b); }
    friend bool operator<(const FractionalPoint& a, const FractionalPoint& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.nums_ < b.nums_;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += to_string(coordinate(i));
        }
        return s + ")";
    }

private:
    LatticeVector nums_;
    Int den_;
};

/// Exact value of <u, v> as a rational.
inline Rat pairing(const FractionalPoint& u, const LatticeVector& v) {
    return Rat(dot(u.numerators(), v), u.den());
}

/// Class of u in (1/q)M / M, canonical residues in [0, q)^n.
class CosetClass {
public:
    CosetClass(LatticeVector residues, Int den) : res_(std::move(residues)), den_(std::move(den)) {
        if (den_ < 1) throw std::invalid_argument("CosetClass: denominator must be positive");
        for (const Int& r : res_)
            if (r < 0 || r >= den_) throw std::invalid_argument("CosetClass: residue out of [0,q)");
    }

    int dim() const { return res_.dim(); }
    const LatticeVector& residues() const { return res_; }
    const Int& den() const { return den_; }

    /// The canonical representative (residues)/q.
    FractionalPoint canonical_representative() const { return FractionalPoint(res_, den_); }

    friend bool operator==(const CosetClass& a, const CosetClass& b) {
        return a.den_ == b.den_ && a.res_ == b.res_;
    }
    friend bool operator!=(const CosetClass& a, const CosetClass& b) { return !(a == b); }
    friend bool operator<(const CosetClass& a, const CosetClass& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.res_ < b.res_;
    }

    std::string str() const { return res_.str() + "/" + den_.str(); }

private:
    LatticeVector res_;
    Int den_;
};

inline CosetClass coset_class(const FractionalPoint& u) {
    std::vector<Int> res;
    res.reserve(u.dim());
    for (const Int& n : u.numerators()) {
        Int r = n % u.den();
        if (r < 0) r += u.den();
        res.push_back(std::move(r));
    }
    return CosetClass(LatticeVector(std::move(res)), u.den());
}

struct EnumerationLimitError : std::runtime_error {
    explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::int64_t kDefaultEnumerationCap = 100000000;  // 1e8 classes

/// q^dim, guarded by the enumeration cap.
inline Int class_count(int dim, const Int& q, const Int& cap = kDefaultEnumerationCap) {
    if (dim < 1) throw std::invalid_argument("class_count: dimension must be >= 1");
    if (q < 2) throw std::invalid_argument("class_count: q must be >= 2");
    Int n = 1;
    for (int i = 0; i < dim; ++i) {
        n *= q;
        if (n > cap)
            throw EnumerationLimitError("enumeration too large: q^n exceeds cap " + cap.str());
    }
    return n;
}

/// Class at position `index` in the lexicographic enumeration.
inline CosetClass class_at(int dim, const Int& q, Int index) {
    std::vector<Int> res(dim);
    for (int i = dim - 1; i >= 0; --i) {
        res[i] = index % q;
        index /= q;
    }
    return CosetClass(LatticeVector(std::move(res)), q);
}

/// Contiguous slab [lo, hi) of the lexicographic class enumeration.
/// Concatenating a partition into ranges reproduces the full stream, which is
/// what makes parallel scans deterministic.
class ClassRange {
public:
    ClassRange(int dim, Int q, Int lo, Int hi)
        : dim_(dim), q_(std::move(q)), lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ < 0 || hi_ < lo_) throw std::invalid_argument("ClassRange: bad bounds");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = CosetClass;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = CosetClass;

        iterator(const ClassRange* r, Int index) : r_(r), index_(std::move(index)) {}
        CosetClass operator*() const { return class_at(r_->dim_, r_->q_, index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++index_;
            return old;
        }
        bool operator==(const iterator& o) const { return index_ == o.index_; }
        bool operator!=(const iterator& o) const { return index_ != o.index_; }

    private:
        const ClassRange* r_;
        Int index_;
    };

    iterator begin() const { return iterator(this, lo_); }
    iterator end() const { return iterator(this, hi_); }
    Int size() const { return hi_ - lo_; }
    const Int& lo() const { return lo_; }
    const Int& hi() const { return hi_; }

    ClassRange slice(const Int& lo, const Int& hi) const {
        if (lo < lo_ || hi > hi_) throw std::invalid_argument("ClassRange: slice out of range");
        return ClassRange(dim_, q_, lo, hi);
    }

private:
    int dim_;
    Int q_;
    Int lo_, hi_;
};

inline ClassRange enumerate_classes(int dim, const Int& q,
                                    const Int& cap = kDefaultEnumerationCap) {
    Int n = class_count(dim, q, cap);
    return ClassRange(dim, q, 0, n);
}

}  // namespace toric
