#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace ybx {

// Coordinate vector relative to an algebra's basis.
using Element = std::vector<Scalar>;

inline Element element_zero(std::size_t n, const FieldDescriptor& fd) {
    return Element(n, Scalar::zero(fd));
}

inline bool element_is_zero(const Element& x) {
    for (const Scalar& s : x)
        if (!s.is_zero()) return false;
    return true;
}

inline Element element_add(const Element& x, const Element& y) {
    Element r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

inline Element element_sub(const Element& x, const Element& y) {
    Element r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

inline Element element_scaled(const Element& x, const Scalar& lambda) {
    Element r(x);
    for (Scalar& s : r) s *= lambda;
    return r;
}

inline std::string element_str(const Element& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ", ";
        out += x[i].str();
    }
    return out + ")";
}

// Finite-dimensional algebra given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k. The product is any bilinear map; nothing
// about associativity or symmetry is assumed, that is what the checks below
// establish. A declared unit is verified at construction; a declared Z2
// grading must make every basis product homogeneous.
class FiniteAlgebra {
public:
    FiniteAlgebra(std::size_t dim, const FieldDescriptor& fd, std::vector<Scalar> table,
                  std::vector<std::string> basis_labels,
                  std::optional<Element> unit = std::nullopt,
                  std::optional<std::vector<int>> grading = std::nullopt)
        : n_(dim), fd_(fd), c_(std::move(table)), labels_(std::move(basis_labels)),
          unit_(std::move(unit)), grading_(std::move(grading)) {
        if (n_ == 0)
            throw std::invalid_argument("algebra dimension must be positive");
        if (c_.size() != n_ * n_ * n_)
            throw std::invalid_argument("structure constant table must have dim^3 entries (got " +
                                        std::to_string(c_.size()) + ", want " +
                                        std::to_string(n_ * n_ * n_) + ")");
        for (const Scalar& s : c_) require_same_field(fd_, s.field(), "structure constant");
        if (labels_.size() != n_)
            throw std::invalid_argument("basis label count must equal the dimension");
        if (grading_) {
            if (grading_->size() != n_)
                throw std::invalid_argument("grading length must equal the dimension");
            for (int g : *grading_)
                if (g != 0 && g != 1)
                    throw std::invalid_argument("grading entries must be 0 or 1");
            validate_grading_homogeneity();
        }
        if (unit_) {
            if (unit_->size() != n_)
                throw std::invalid_argument("unit vector length must equal the dimension");
            for (const Scalar& s : *unit_) require_same_field(fd_, s.field(), "unit entry");
            validate_unit();
        }
    }

    std::size_t dim() const { return n_; }
    const FieldDescriptor& field() const { return fd_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<Element>& unit() const { return unit_; }
    const std::optional<std::vector<int>>& grading() const { return grading_; }
    bool is_graded() const { return grading_.has_value(); }

    const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    const std::vector<Scalar>& table() const { return c_; }

    Element basis_element(std::size_t i) const {
        Element e = element_zero(n_, fd_);
        e[i] = Scalar::one(fd_);
        return e;
    }

    Element multiply(const Element& x, const Element& y) const {
        if (x.size() != n_ || y.size() != n_)
            throw std::invalid_argument("multiply: element length must equal the dimension");
        Element r = element_zero(n_, fd_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < n_; ++k) {
                    const Scalar& c = structure_constant(i, j, k);
                    if (!c.is_zero()) r[k] += xy * c;
                }
            }
        }
        return r;
    }

    // Same table with a different grading (or a grading added).
    FiniteAlgebra with_grading(std::vector<int> grading) const {
        return FiniteAlgebra(n_, fd_, c_, labels_, unit_, std::move(grading));
    }

private:
    void validate_unit() {
        for (std::size_t i = 0; i < n_; ++i) {
            Element e = basis_element(i);
            if (multiply(*unit_, e) != e || multiply(e, *unit_) != e)
                throw std::invalid_argument("declared unit fails u*e_" + std::to_string(i) +
                                            " = e_" + std::to_string(i) + " = e_" +
                                            std::to_string(i) + "*u");
        }
    }

    void validate_grading_homogeneity() {
        const std::vector<int>& g = *grading_;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!structure_constant(i, j, k).is_zero() && g[k] != ((g[i] + g[j]) & 1))
                        throw std::invalid_argument(
                            "grading is not homogeneous: product e_" + std::to_string(i) +
                            "*e_" + std::to_string(j) + " has a component of the wrong parity");
    }

    std::size_t n_;
    FieldDescriptor fd_;
    std::vector<Scalar> c_;
    std::vector<std::string> labels_;
    std::optional<Element> unit_;
    std::optional<std::vector<int>> grading_;
};

// Multilinear identities are checked on basis tuples only; that suffices
// because both sides are (tri)linear in each slot.

inline CheckReport is_associative(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element ei = a.basis_element(i), ej = a.basis_element(j), ek = a.basis_element(k);
                Element lhs = a.multiply(a.multiply(ei, ej), ek);
                Element rhs = a.multiply(ei, a.multiply(ej, ek));
                if (lhs != rhs)
                    return CheckReport::fail(
                        "associative", {i, j, k},
                        "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                            std::to_string(k) + " = " + element_str(lhs) + " but e" +
                            std::to_string(i) + " (e" + std::to_string(j) + " e" +
                            std::to_string(k) + ") = " + element_str(rhs));
            }
    return CheckReport::pass("associative");
}

inline CheckReport is_commutative(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Element lhs = a.multiply(a.basis_element(i), a.basis_element(j));
            Element rhs = a.multiply(a.basis_element(j), a.basis_element(i));
            if (lhs != rhs)
                return CheckReport::fail("commutative", {i, j},
                                         "e" + std::to_string(i) + " e" + std::to_string(j) +
                                             " = " + element_str(lhs) + " but e" +
                                             std::to_string(j) + " e" + std::to_string(i) +
                                             " = " + element_str(rhs));
        }
    return CheckReport::pass("commutative");
}

// Solves the 2n^2 linear conditions u*e_i = e_i = e_i*u. A two-sided unit is
// unique when it exists, so a consistent system pins it down.
inline std::optional<Element> find_unit(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    const FieldDescriptor& fd = a.field();
    Matrix sys(2 * n * n, n, fd);
    std::vector<Scalar> rhs;
    rhs.reserve(2 * n * n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) sys.set(row, i, a.structure_constant(i, j, k));
            rhs.push_back(j == k ? Scalar::one(fd) : Scalar::zero(fd));
            ++row;
        }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) sys.set(row, i, a.structure_constant(j, i, k));
            rhs.push_back(j == k ? Scalar::one(fd) : Scalar::zero(fd));
            ++row;
        }
    std::optional<std::vector<Scalar>> u = solve(sys, rhs);
    if (!u) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        Element e = a.basis_element(i);
        if (a.multiply(*u, e) != e || a.multiply(e, *u) != e) return std::nullopt;
    }
    return u;
}

// Lie check: alternating on basis vectors (the characteristic-2-correct form),
// antisymmetry on pairs, Jacobi on triples.
inline CheckReport is_lie(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Element sq = a.multiply(a.basis_element(i), a.basis_element(i));
        if (!element_is_zero(sq))
            return CheckReport::fail("lie", {i},
                                     "[e" + std::to_string(i) + ", e" + std::to_string(i) +
                                         "] = " + element_str(sq) + ", not zero");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Element lhs = a.multiply(a.basis_element(i), a.basis_element(j));
            Element rhs = a.multiply(a.basis_element(j), a.basis_element(i));
            if (!element_is_zero(element_add(lhs, rhs)))
                return CheckReport::fail("lie", {i, j},
                                         "[e" + std::to_string(i) + ", e" + std::to_string(j) +
                                             "] + [e" + std::to_string(j) + ", e" +
                                             std::to_string(i) + "] is nonzero");
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element ei = a.basis_element(i), ej = a.basis_element(j), ek = a.basis_element(k);
                Element sum = element_add(
                    element_add(a.multiply(a.multiply(ei, ej), ek),
                                a.multiply(a.multiply(ej, ek), ei)),
                    a.multiply(a.multiply(ek, ei), ej));
                if (!element_is_zero(sum))
                    return CheckReport::fail("lie", {i, j, k},
                                             "Jacobi sum at (e" + std::to_string(i) + ", e" +
                                                 std::to_string(j) + ", e" + std::to_string(k) +
                                                 ") = " + element_str(sum));
            }
    return CheckReport::pass("lie");
}

// Super-Lie check on homogeneous basis vectors: homogeneity of the grading,
// super antisymmetry [x,y] = -(-1)^{|x||y|}[y,x], alternating squares for the
// even part, and the signed Jacobi identity.
inline CheckReport is_super_lie(const FiniteAlgebra& a) {
    if (!a.is_graded())
        throw std::invalid_argument("is_super_lie: algebra carries no grading");
    const std::size_t n = a.dim();
    const std::vector<int>& g = *a.grading();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!a.structure_constant(i, j, k).is_zero() && g[k] != ((g[i] + g[j]) & 1))
                    return CheckReport::fail("super_lie", {i, j, k},
                                             "product e" + std::to_string(i) + " e" +
                                                 std::to_string(j) +
                                                 " is not homogeneous of the expected parity");
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i] != 0) continue;
        Element sq = a.multiply(a.basis_element(i), a.basis_element(i));
        if (!element_is_zero(sq))
            return CheckReport::fail("super_lie", {i},
                                     "[e" + std::to_string(i) + ", e" + std::to_string(i) +
                                         "] nonzero on an even basis vector");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Element lhs = a.multiply(a.basis_element(i), a.basis_element(j));
            Element rhs = a.multiply(a.basis_element(j), a.basis_element(i));
            bool odd_pair = g[i] == 1 && g[j] == 1;
            // [x,y] + (-1)^{|x||y|} [y,x] must vanish
            Element sum = odd_pair ? element_sub(lhs, rhs) : element_add(lhs, rhs);
            if (!element_is_zero(sum))
                return CheckReport::fail("super_lie", {i, j},
                                         "super antisymmetry fails at (e" + std::to_string(i) +
                                             ", e" + std::to_string(j) + ")");
        }
    const FieldDescriptor& fd = a.field();
    Scalar plus = Scalar::one(fd), minus = -Scalar::one(fd);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element ei = a.basis_element(i), ej = a.basis_element(j), ek = a.basis_element(k);
                const Scalar& s1 = (g[k] == 1 && g[i] == 1) ? minus : plus;
                const Scalar& s2 = (g[i] == 1 && g[j] == 1) ? minus : plus;
                const Scalar& s3 = (g[j] == 1 && g[k] == 1) ? minus : plus;
                Element sum = element_add(
                    element_add(element_scaled(a.multiply(ei, a.multiply(ej, ek)), s1),
                                element_scaled(a.multiply(ej, a.multiply(ek, ei)), s2)),
                    element_scaled(a.multiply(ek, a.multiply(ei, ej)), s3));
                if (!element_is_zero(sum))
                    return CheckReport::fail("super_lie", {i, j, k},
                                             "signed Jacobi sum at (e" + std::to_string(i) +
                                                 ", e" + std::to_string(j) + ", e" +
                                                 std::to_string(k) + ") = " + element_str(sum));
            }
    return CheckReport::pass("super_lie");
}

// Elements z with z*e_i = 0 = e_i*z for every basis vector: for a bracket
// algebra this is the center. Returns a basis of the solution space.
inline std::vector<Element> center(const FiniteAlgebra& a) {
    const std::size_t n = a.dim();
    Matrix sys(2 * n * n, n, a.field());
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) sys.set(row, i, a.structure_constant(i, j, k));
            ++row;
        }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) sys.set(row, i, a.structure_constant(j, i, k));
            ++row;
        }
    return nullspace(sys);
}

// (ab)c + (bc)a + (ca)b = a(bc) + b(ca) + c(ab), checked on basis triples.
inline CheckReport satisfies_unified_identity(const FiniteAlgebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Element a = alg.basis_element(i), b = alg.basis_element(j), c = alg.basis_element(k);
                Element ab = alg.multiply(a, b), bc = alg.multiply(b, c), ca = alg.multiply(c, a);
                Element lhs = element_add(element_add(alg.multiply(ab, c), alg.multiply(bc, a)),
                                          alg.multiply(ca, b));
                Element rhs = element_add(element_add(alg.multiply(a, bc), alg.multiply(b, ca)),
                                          alg.multiply(c, ab));
                if (lhs != rhs)
                    return CheckReport::fail("unified_identity", {i, j, k},
                                             "sides differ at basis triple (e" +
                                                 std::to_string(i) + ", e" + std::to_string(j) +
                                                 ", e" + std::to_string(k) + "): " +
                                                 element_str(lhs) + " vs " + element_str(rhs));
            }
    return CheckReport::pass("unified_identity");
}

// (x^2 y) x = x^2 (y x) is degree 3 in each coordinate of x and linear in y,
// so it vanishes identically iff it vanishes for x in the grid {0,1,2,3}^n
// and y a basis vector (per-coordinate interpolation). Over GF(p) the grid
// values must stay distinct, hence p > 3 is required.
inline CheckReport satisfies_jordan_identity(const FiniteAlgebra& a) {
    std::int64_t ch = a.field().characteristic();
    if (ch == 2 || ch == 3)
        throw std::domain_error(
            "the degree-3 evaluation grid needs 4 distinct field values; GF(" +
            std::to_string(ch) + ") is not supported");
    const std::size_t n = a.dim();
    const FieldDescriptor& fd = a.field();
    std::vector<std::size_t> digits(n, 0);
    while (true) {
        Element x = element_zero(n, fd);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = Scalar::from_int(fd, static_cast<long long>(digits[i]));
        Element xx = a.multiply(x, x);
        for (std::size_t yi = 0; yi < n; ++yi) {
            Element y = a.basis_element(yi);
            Element lhs = a.multiply(a.multiply(xx, y), x);
            Element rhs = a.multiply(xx, a.multiply(y, x));
            if (lhs != rhs) {
                std::vector<std::size_t> w(digits);
                w.push_back(yi);
                return CheckReport::fail(
                    "jordan_identity", std::move(w),
                    "(x^2 y) x != x^2 (y x) at x = " + element_str(x) + ", y = e" +
                        std::to_string(yi) + ": " + element_str(lhs) + " vs " +
                        element_str(rhs));
            }
        }
        std::size_t pos = 0;
        while (pos < n && digits[pos] == 3) digits[pos++] = 0;
        if (pos == n) break;
        ++digits[pos];
    }
    return CheckReport::pass("jordan_identity");
}

inline CheckReport is_jordan(const FiniteAlgebra& a) {
    CheckReport comm = is_commutative(a);
    if (!comm.holds)
        return CheckReport::fail("jordan", comm.witness_indices,
                                 "not commutative: " + comm.witness_detail);
    CheckReport jid = satisfies_jordan_identity(a);
    if (!jid.holds)
        return CheckReport::fail("jordan", jid.witness_indices, jid.witness_detail);
    return CheckReport::pass("jordan");
}

// Two-dimensional commutative family in which squaring swaps the basis:
// a^2 = b, b^2 = a, ab = ba = alpha*a + beta*b. Those four products
// determine the whole table.
inline FiniteAlgebra make_square_swap_algebra(const Scalar& alpha, const Scalar& beta) {
    require_same_field(alpha.field(), beta.field(), "square-swap parameters");
    const FieldDescriptor& fd = alpha.field();
    Scalar z = Scalar::zero(fd), o = Scalar::one(fd);
    // c[i][j][k] flattened as (i*2 + j)*2 + k
    std::vector<Scalar> c = {
        z, o,            // a*a = b
        alpha, beta,     // a*b
        alpha, beta,     // b*a
        o, z,            // b*b = a
    };
    return FiniteAlgebra(2, fd, std::move(c), {"a", "b"});
}

struct SquareSwapRow {
    Scalar alpha, beta;
    bool jordan = false;
    bool associative = false;
};

inline SquareSwapRow square_swap_verdicts(const Scalar& alpha, const Scalar& beta) {
    FiniteAlgebra a = make_square_swap_algebra(alpha, beta);
    return SquareSwapRow{alpha, beta, is_jordan(a).holds, is_associative(a).holds};
}

// Verdict table over a caller-supplied parameter grid (used over Q).
inline std::vector<SquareSwapRow> scan_square_swap_family(
    const std::vector<std::pair<Scalar, Scalar>>& params) {
    std::vector<SquareSwapRow> rows;
    rows.reserve(params.size());
    for (const auto& [alpha, beta] : params)
        rows.push_back(square_swap_verdicts(alpha, beta));
    return rows;
}

// Exhaustive table over GF(p), lexicographic in (alpha, beta).
inline std::vector<SquareSwapRow> scan_square_swap_family_gf(std::int64_t p) {
    FieldDescriptor fd = FieldDescriptor::prime_field(p);
    std::vector<SquareSwapRow> rows;
    rows.reserve(static_cast<std::size_t>(p * p));
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            rows.push_back(square_swap_verdicts(Scalar::from_int(fd, a), Scalar::from_int(fd, b)));
    return rows;
}

}  // namespace ybx
