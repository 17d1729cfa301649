#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/parallel.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Finite integer combination of lattice monomials x^u, u in M (or M^k for
/// product fans). Value type for applying splittings; no zero coefficients
/// are stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return {}; }
    static LaurentPolynomial monomial(const LatticeVector& exp, Int coef = 1) {
        LaurentPolynomial p;
        p.add_term(exp, coef);
        return p;
    }

    void add_term(const LatticeVector& exp, const Int& coef) {
        if (coef == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coef);
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<LatticeVector, Int>& terms() const { return terms_; }

    Int coefficient(const LatticeVector& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
        return LaurentPolynomial::zero() - a;
    }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return !(a == b);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const Int mag = neg ? Int(-c) : c;
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            first = false;
            if (e.is_zero()) {
                s += mag.str();
            } else {
                if (mag != 1) s += mag.str() + "*";
                s += "x^" + e.str();
            }
        }
        return s;
    }

private:
    std::map<LatticeVector, Int> terms_;
};

/// pi_a extends to the chart of `cone` iff <a, v_rho> > -1 for each of its
/// rays.
inline bool regular_on_chart(const FractionalPoint& a, const Fan& fan, const Cone& cone) {
    if (a.dim() != fan.dim()) throw std::invalid_argument("regular_on_chart: dimension mismatch");
    for (int i : cone.rays)
        if (dot(a.numerators(), fan.ray(i)) <= -a.den()) return false;
    return true;
}

/**
 * Finite integer combination sum c_a pi_a of the eigenbasis maps
 * pi_a(x^u) = x^{a+u} if a+u in M, else 0, anchored to an ambient fan and q.
 *
 * Built through make_splitting the terms are validated to lie strictly
 * inside P_{-K}(ambient), so the map is regular on the whole toric variety;
 * torus_map skips that validation and represents an arbitrary element of
 * Hom(F_* Z[T], Z[T]). It is a splitting iff the coefficient of a = 0 is 1.
 */
class SplittingMap {
public:
    const Fan& ambient() const { return ambient_; }
    const Int& q() const { return q_; }
    const std::map<LatticeVector, Int>& term_numerators() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool regular_on_variety() const { return x_regular_; }

    Int coefficient(const FractionalPoint& a) const {
        auto it = terms_.find(a.numerators());
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// c_0 == 1.
    bool is_splitting() const {
        auto it = terms_.find(LatticeVector::zero(ambient_.dim()));
        return it != terms_.end() && it->second == 1;
    }

    static SplittingMap torus_map(Fan ambient, Int q,
                                  const std::vector<std::pair<FractionalPoint, Int>>& terms) {
        return SplittingMap(std::move(ambient), std::move(q), terms, false);
    }

    friend SplittingMap make_splitting(Fan ambient, Int q,
                                       const std::vector<std::pair<FractionalPoint, Int>>& terms);

private:
    SplittingMap(Fan ambient, Int q, const std::vector<std::pair<FractionalPoint, Int>>& terms,
                 bool validate)
        : ambient_(std::move(ambient)), q_(std::move(q)) {
        if (q_ < 2) throw std::invalid_argument("SplittingMap: q must be >= 2");
        for (const auto& [a, c] : terms) {
            if (a.den() != q_) throw std::invalid_argument("SplittingMap: term denominator mismatch");
            if (a.dim() != ambient_.dim())
                throw std::invalid_argument("SplittingMap: term dimension mismatch");
            if (c == 0) continue;
            terms_[a.numerators()] += c;
            if (terms_[a.numerators()] == 0) terms_.erase(a.numerators());
        }
        x_regular_ = true;
        for (const auto& [nums, c] : terms_) {
            for (const auto& ray : ambient_.rays()) {
                if (dot(nums, ray) <= -q_) {  // <a, v> <= -1
                    x_regular_ = false;
                    if (validate)
                        throw std::invalid_argument(
                            "SplittingMap: term a=" + FractionalPoint(nums, q_).str() +
                            " not regular on X: pairing with ray " + ray.str() +
                            " is <= -1 (a must lie strictly inside P_{-K})");
                }
            }
        }
    }

    Fan ambient_;
    Int q_;
    std::map<LatticeVector, Int> terms_;
    bool x_regular_ = false;
};

/// Validating constructor: every term must lie strictly inside P_{-K}.
/// Maps with c_0 != 1 are constructible but flagged (is_splitting() false).
inline SplittingMap make_splitting(Fan ambient, Int q,
                                   const std::vector<std::pair<FractionalPoint, Int>>& terms) {
    return SplittingMap(std::move(ambient), std::move(q), terms, true);
}

/// pi_0, the canonical splitting: x^u -> x^u for u in M, 0 otherwise.
inline SplittingMap canonical_splitting(Fan fan, const Int& q) {
    const int dim = fan.dim();
    return make_splitting(std::move(fan), q,
                          {{FractionalPoint(LatticeVector::zero(dim), q), Int(1)}});
}

/// pi(x^u) = sum over terms a with a + u in M of c_a x^{a+u}.
inline LaurentPolynomial apply(const SplittingMap& pi, const FractionalPoint& u) {
    if (u.den() != pi.q()) throw std::invalid_argument("apply: denominator mismatch");
    if (u.dim() != pi.ambient().dim()) throw std::invalid_argument("apply: dimension mismatch");
    LaurentPolynomial out;
    const Int& q = pi.q();
    for (const auto& [a, c] : pi.term_numerators()) {
        std::vector<Int> e(a.dim());
        bool integral = true;
        for (int i = 0; i < a.dim() && integral; ++i) {
            Int s = a[i] + u.numerators()[i];
            if (s % q != 0)
                integral = false;
            else
                e[i] = s / q;
        }
        if (integral) out.add_term(LatticeVector(std::move(e)), c);
    }
    return out;
}

/// Linear extension to finite integer combinations of fractional monomials.
inline LaurentPolynomial apply_combination(
    const SplittingMap& pi, const std::vector<std::pair<FractionalPoint, Int>>& element) {
    LaurentPolynomial out;
    for (const auto& [u, c] : element) {
        LaurentPolynomial img = apply(pi, u);
        for (const auto& [e, k] : img.terms()) out.add_term(e, c * k);
    }
    return out;
}

/// Restriction of functions on X^n to the semidiagonal Delta_i (1 <= i < n):
/// exponent slots i and i+1 are merged by addition, coefficients collected.
inline LaurentPolynomial restrict_semidiagonal(const LaurentPolynomial& p, int slot_dim, int i) {
    if (p.is_zero()) return p;
    const int total = p.terms().begin()->first.dim();
    if (slot_dim < 1 || total % slot_dim != 0)
        throw std::invalid_argument("restrict_semidiagonal: bad slot dimension");
    const int n = total / slot_dim;
    if (i < 1 || i >= n) throw std::invalid_argument("restrict_semidiagonal: slot index out of range");
    LaurentPolynomial out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<Int> merged;
        merged.reserve(total - slot_dim);
        for (int s = 0; s < n; ++s) {
            if (s == i) continue;  // folded into slot i-1 below
            for (int j = 0; j < slot_dim; ++j) {
                Int v = e[s * slot_dim + j];
                if (s == i - 1) v += e[(s + 1) * slot_dim + j];
                merged.push_back(std::move(v));
            }
        }
        out.add_term(LatticeVector(std::move(merged)), c);
    }
    return out;
}

/// Witness data for the positive verdict: one strict-interior representative
/// of F_X per coset class.
struct SplitCertificate {
    Int q;
    std::map<CosetClass, FractionalPoint> reps;
};

/// Witness data for the negative verdict: a class with no strict-interior
/// representative, re-checkable by exhausting (class + Z^n) over the box.
struct NonSplitWitness {
    Int q;
    CosetClass missing;
    IntegerBox box;
};

using SplitDecision = std::variant<SplitCertificate, NonSplitWitness>;

inline bool is_split(const SplitDecision& d) {
    return std::holds_alternative<SplitCertificate>(d);
}

struct NotDiagonallySplitError : std::runtime_error {
    explicit NotDiagonallySplitError(NonSplitWitness w)
        : std::runtime_error("not diagonally split: class " + w.missing.str() +
                             " has no representative strictly inside the splitting polytope"),
          witness(std::move(w)) {}
    NonSplitWitness witness;
};

struct DecisionOptions {
    bool assume_complete = false;
    Int cap = kDefaultEnumerationCap;
    int workers = 1;
    bool cross_check = true;  // run the dual interior-enumeration algorithm
};

namespace detail {

/// Lexicographically smallest representative of `cls` whose numerators lie in
/// q*box and which is strictly inside `poly`; nullopt when the box holds none.
inline std::optional<FractionalPoint> first_interior_representative(const HPolytope& poly,
                                                                    const IntegerBox& box,
                                                                    const CosetClass& cls) {
    const Int& q = cls.den();
    const int n = cls.dim();
    std::vector<Int> kmin(n), kmax(n), cur(n);
    for (int j = 0; j < n; ++j) {
        const Int& r = cls.residues()[j];
        kmin[j] = ceil_div(q * box.lo[j] - r, q);
        kmax[j] = floor_div(q * box.hi[j] - r, q);
        if (kmin[j] > kmax[j]) return std::nullopt;
        cur[j] = kmin[j];
    }
    while (true) {
        std::vector<Int> nums(n);
        for (int j = 0; j < n; ++j) nums[j] = cls.residues()[j] + q * cur[j];
        FractionalPoint u(LatticeVector(std::move(nums)), q);
        if (contains_strict(poly, u)) return u;
        int j = n - 1;
        while (j >= 0) {
            if (++cur[j] <= kmax[j]) break;
            cur[j] = kmin[j];
            --j;
        }
        if (j < 0) return std::nullopt;
    }
}

}  // namespace detail

/// Dual decision algorithm: enumerate the strict-interior fractional points
/// of F_X and check that their reductions cover all q^n classes.
inline bool covers_all_classes_by_enumeration(const Fan& fan, const Int& q,
                                              const Int& cap = kDefaultEnumerationCap) {
    const Int total = class_count(fan.dim(), q, cap);
    const HPolytope fx = diagonal_splitting_polytope(fan);
    std::set<LatticeVector> covered;
    for (const auto& u : interior_points(fx, q)) covered.insert(coset_class(u).residues());
    return Int(covered.size()) == total;
}

/**
 * The decision procedure: X is diagonally split for q iff the interior of
 * F_X contains a representative of every class of (1/q)M / M.
 *
 * Scans classes in lexicographic order; per class, representatives inside
 * bounding_box(F_X) are searched in lexicographic order, so certificates hold
 * the lexicographically smallest strict-interior representative and the
 * witness is the lexicographically first uncovered class regardless of the
 * worker count. The independent enumeration algorithm cross-checks the
 * verdict unless disabled.
 */
inline SplitDecision is_diagonally_split(const Fan& fan, const Int& q, DecisionOptions opt = {}) {
    if (q < 2) throw std::invalid_argument("is_diagonally_split: q must be >= 2");
    if (fan.completeness() != Completeness::Complete && !opt.assume_complete)
        throw std::invalid_argument(
            "is_diagonally_split: fan is not verified complete (" +
            std::string(to_string(fan.completeness())) + "); pass assume-complete to override");
    const HPolytope fx = diagonal_splitting_polytope(fan);
    auto box = bounding_box(fx);  // UnboundedPolytopeError when rays do not positively span
    if (!box) throw std::logic_error("is_diagonally_split: empty splitting polytope");

    const Int total = class_count(fan.dim(), q, opt.cap);
    const long long total_ll = total.convert_to<long long>();
    int workers = opt.workers < 1 ? 1 : opt.workers;
    if (static_cast<long long>(workers) > total_ll) workers = static_cast<int>(total_ll);

    std::vector<std::vector<FractionalPoint>> chunk_reps(workers);
    std::vector<long long> chunk_fail(workers, -1);
    run_chunked(total_ll, workers, [&](int chunk, long long lo, long long hi) {
        auto& reps = chunk_reps[chunk];
        for (long long idx = lo; idx < hi; ++idx) {
            CosetClass cls = class_at(fan.dim(), q, Int(idx));
            auto rep = detail::first_interior_representative(fx, *box, cls);
            if (!rep) {
                chunk_fail[chunk] = idx;
                return;
            }
            reps.push_back(std::move(*rep));
        }
    });

    long long first_fail = -1;
    for (long long f : chunk_fail)
        if (f >= 0 && (first_fail < 0 || f < first_fail)) first_fail = f;

    SplitDecision decision =
        first_fail >= 0
            ? SplitDecision(NonSplitWitness{q, class_at(fan.dim(), q, Int(first_fail)), *box})
            : SplitDecision([&] {
                  SplitCertificate cert{q, {}};
                  long long idx = 0;
                  for (const auto& reps : chunk_reps)
                      for (const auto& rep : reps)
                          cert.reps.emplace(class_at(fan.dim(), q, Int(idx++)), rep);
                  return cert;
              }());

    if (opt.cross_check &&
        covers_all_classes_by_enumeration(fan, q, opt.cap) != is_split(decision))
        throw std::logic_error("is_diagonally_split: decision algorithms disagree");
    return decision;
}

struct QScanRow {
    Int q;
    bool split = false;
    std::optional<CosetClass> witness;
    Int classes;  // q^dim
};

/// Verdict per q over [q_min, q_max]; rows are independent computations and
/// may be distributed across workers without changing the output.
inline std::vector<QScanRow> split_q_scan(const Fan& fan, const Int& q_min, const Int& q_max,
                                          DecisionOptions opt = {}) {
    if (q_min < 2 || q_max < q_min)
        throw std::invalid_argument("split_q_scan: need 2 <= q_min <= q_max");
    const long long count = Int(q_max - q_min + 1).convert_to<long long>();
    std::vector<QScanRow> rows(count);
    DecisionOptions per_q = opt;
    per_q.workers = 1;
    run_chunked(count, opt.workers, [&](int, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            const Int q = q_min + i;
            SplitDecision d = is_diagonally_split(fan, q, per_q);
            QScanRow row;
            row.q = q;
            row.classes = class_count(fan.dim(), q, opt.cap);
            row.split = is_split(d);
            if (!row.split) row.witness = std::get<NonSplitWitness>(d).missing;
            rows[i] = std::move(row);
        }
    });
    return rows;
}

/// Fractional points indexing the Hom-space basis: strict interior of P_{-K}.
inline std::vector<FractionalPoint> splitting_basis(const Fan& fan, const Int& q) {
    return interior_points(anticanonical_polytope(fan), q);
}

/// pi_Delta = pi_0 + sum over nonzero classes of pi_{(a, -a)}, built from the
/// certificate representatives. Ambient is fan x fan.
inline SplittingMap diagonal_splitting(const Fan& fan, const Int& q, const SplitCertificate& cert) {
    Fan square = product_fan(fan, fan);
    std::vector<std::pair<FractionalPoint, Int>> terms;
    terms.emplace_back(FractionalPoint(LatticeVector::zero(square.dim()), q), Int(1));
    for (const auto& [cls, rep] : cert.reps) {
        if (cls.residues().is_zero()) continue;
        terms.emplace_back(FractionalPoint(concat(rep.numerators(), (-rep).numerators()), q),
                           Int(1));
    }
    return make_splitting(std::move(square), q, terms);
}

inline SplittingMap diagonal_splitting(const Fan& fan, const Int& q, DecisionOptions opt = {}) {
    SplitDecision d = is_diagonally_split(fan, q, opt);
    if (!is_split(d)) throw NotDiagonallySplitError(std::get<NonSplitWitness>(d));
    return diagonal_splitting(fan, q, std::get<SplitCertificate>(d));
}

/**
 * Representative system for the semidiagonal chain construction: one strict
 * interior point of F_X per coset class such that every pairwise difference
 * of representatives lies strictly inside P_{-K}. Found by deterministic
 * backtracking over the class-grouped interior points (lexicographic
 * candidate order, so the result is reproducible); nullopt when no such
 * system exists, which does happen (hirzebruch(2) at q = 3 has none).
 */
inline std::optional<std::map<CosetClass, FractionalPoint>> difference_regular_system(
    const Fan& fan, const Int& q, long long node_cap = 1000000) {
    const HPolytope fx = diagonal_splitting_polytope(fan);
    const HPolytope pk = anticanonical_polytope(fan);
    std::map<CosetClass, std::vector<FractionalPoint>> candidates;
    for (const auto& u : interior_points(fx, q)) candidates[coset_class(u)].push_back(u);
    const Int total = class_count(fan.dim(), q);
    if (Int(candidates.size()) != total) return std::nullopt;  // not diagonally split

    std::vector<std::vector<FractionalPoint>> pools;
    pools.reserve(candidates.size());
    for (auto& [cls, pool] : candidates) pools.push_back(std::move(pool));

    std::vector<FractionalPoint> chosen;
    long long nodes = 0;
    auto difference_ok = [&](const FractionalPoint& a, const FractionalPoint& b) {
        // a - b strictly inside P_{-K}; the reverse order is checked too, so
        // together the differences land strictly inside F_X
        return contains_strict(pk, FractionalPoint(a.numerators() - b.numerators(), q));
    };
    auto search = [&](auto&& self, size_t depth) -> bool {
        if (depth == pools.size()) return true;
        for (const auto& cand : pools[depth]) {
            if (++nodes > node_cap) return false;
            bool ok = true;
            for (const auto& prev : chosen)
                if (!difference_ok(cand, prev) || !difference_ok(prev, cand)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(cand);
            if (self(self, depth + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    std::map<CosetClass, FractionalPoint> out;
    for (const auto& rep : chosen) out.emplace(coset_class(rep), rep);
    return out;
}

/**
 * Splitting of fan^n built to be compatible with every semidiagonal Delta_i.
 *
 * For n = 2 this is the diagonal splitting. For n >= 3 the terms are indexed
 * by tuples (s_1, ..., s_{n-1}) of coset classes with slot components
 * A(s_{k-1}) - A(s_k) (s_0 = s_n = 0), where A is a difference-regular
 * representative system: the slot sums telescope, which is what makes every
 * restriction to a semidiagonal well defined on equal-slot-sum binomials.
 * Term count is q^{d(n-1)}.
 *
 * When no difference-regular system exists the adjacent-pair construction
 * (certificate representative in slot i, its negative in slot i+1) is
 * returned instead; it is a valid splitting of fan^n but fails semidiagonal
 * compatibility in general, which the oracle reports faithfully.
 */
inline SplittingMap semidiagonal_splitting(const Fan& fan, const Int& q, int n,
                                           const SplitCertificate& cert) {
    if (n < 2) throw std::invalid_argument("semidiagonal_splitting: n must be >= 2");
    if (n == 2) return diagonal_splitting(fan, q, cert);
    Fan power = power_fan(fan, n);
    const int d = fan.dim();

    if (auto system = difference_regular_system(fan, q)) {
        std::vector<std::pair<FractionalPoint, Int>> terms;
        const Int tuples = class_count(fan.dim() * (n - 1), q);
        for (Int index = 0; index < tuples; ++index) {
            // decode (s_1, ..., s_{n-1}); s_0 = s_n = 0
            std::vector<const FractionalPoint*> reps(n + 1);
            FractionalPoint zero(LatticeVector::zero(d), q);
            reps[0] = reps[n] = &zero;
            Int rest = index;
            for (int k = n - 1; k >= 1; --k) {
                Int block = 1;
                for (int j = 0; j < d; ++j) block *= q;
                Int cls_index = rest % block;
                rest /= block;
                reps[k] = &system->at(class_at(d, q, cls_index));
            }
            LatticeVector nums = LatticeVector::zero(n * d);
            for (int k = 1; k <= n; ++k)
                for (int j = 0; j < d; ++j)
                    nums[(k - 1) * d + j] =
                        reps[k - 1]->numerators()[j] - reps[k]->numerators()[j];
            terms.emplace_back(FractionalPoint(std::move(nums), q), Int(1));
        }
        return make_splitting(std::move(power), q, terms);
    }

    std::vector<std::pair<FractionalPoint, Int>> terms;
    terms.emplace_back(FractionalPoint(LatticeVector::zero(power.dim()), q), Int(1));
    for (int i = 1; i < n; ++i) {
        for (const auto& [cls, rep] : cert.reps) {
            if (cls.residues().is_zero()) continue;
            LatticeVector nums = LatticeVector::zero(n * d);
            for (int j = 0; j < d; ++j) {
                nums[(i - 1) * d + j] = rep.numerators()[j];
                nums[i * d + j] = -rep.numerators()[j];
            }
            terms.emplace_back(FractionalPoint(std::move(nums), q), Int(1));
        }
    }
    return make_splitting(std::move(power), q, terms);
}

inline SplittingMap semidiagonal_splitting(const Fan& fan, const Int& q, int n,
                                           DecisionOptions opt = {}) {
    SplitDecision d = is_diagonally_split(fan, q, opt);
    if (!is_split(d)) throw NotDiagonallySplitError(std::get<NonSplitWitness>(d));
    return semidiagonal_splitting(fan, q, n, std::get<SplitCertificate>(d));
}

/// Full re-validation of a certificate: exactly q^n distinct canonical
/// classes, each representative reduces to its key and lies strictly inside
/// F_X. Returns an explanation for the first violation, nullopt when valid.
inline std::optional<std::string> validate_certificate(const Fan& fan, const SplitCertificate& cert,
                                                       const Int& cap = kDefaultEnumerationCap) {
    if (cert.q < 2) return "certificate q must be >= 2";
    Int total;
    try {
        total = class_count(fan.dim(), cert.q, cap);
    } catch (const std::exception& e) {
        return std::string(e.what());
    }
    if (Int(cert.reps.size()) != total)
        return "certificate has " + std::to_string(cert.reps.size()) + " classes, expected " +
               total.str();
    const HPolytope fx = diagonal_splitting_polytope(fan);
    for (const auto& [cls, rep] : cert.reps) {
        if (cls.den() != cert.q || rep.den() != cert.q)
            return "entry " + cls.str() + ": denominator mismatch";
        if (cls.dim() != fan.dim() || rep.dim() != fan.dim())
            return "entry " + cls.str() + ": dimension mismatch";
        if (coset_class(rep) != cls)
            return "representative " + rep.str() + " does not reduce to class " + cls.str();
        if (!contains_strict(fx, rep))
            return "representative " + rep.str() + " is not strictly inside the splitting polytope";
    }
    return std::nullopt;
}

/// Re-validation of a witness: the stored box must cover bounding_box(F_X)
/// and exhaustive search over it must find no strict-interior representative.
inline std::optional<std::string> validate_witness(const Fan& fan, const NonSplitWitness& w) {
    if (w.q < 2) return "witness q must be >= 2";
    if (w.missing.den() != w.q) return "witness class denominator mismatch";
    if (w.missing.dim() != fan.dim()) return "witness class dimension mismatch";
    const HPolytope fx = diagonal_splitting_polytope(fan);
    auto bb = bounding_box(fx);
    if (!bb) return "splitting polytope is empty";
    if (w.box.dim() != fan.dim() || !w.box.contains(*bb))
        return "stored box does not cover the bounding box of the splitting polytope";
    if (detail::first_interior_representative(fx, w.box, w.missing))
        return "class " + w.missing.str() + " does have a strict-interior representative";
    return std::nullopt;
}

}  // namespace toric
