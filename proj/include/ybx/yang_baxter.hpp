#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"

namespace ybx {

// Result of checking one operator equation. On failure (row, col) locates a
// differing entry of the two composed sides: col indexes the input basis
// tensor e_i (x) e_j (x) e_k (col = (i*d + j)*d + k), row the output
// coordinate. Re-evaluating that entry on both sides reproduces the gap.
struct EquationCheck {
    bool holds = false;
    std::size_t row = 0, col = 0;
};

inline EquationCheck first_difference(const Matrix& lhs, const Matrix& rhs) {
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs.at(i, j) != rhs.at(i, j)) return EquationCheck{false, i, j};
    return EquationCheck{true, 0, 0};
}

// r12 r23 r12 = r23 r12 r23 on V (x) V (x) V
inline EquationCheck check_braid(const Matrix& r, std::size_t d) {
    require_operator_shape(r, d, "check_braid");
    Matrix a = lift12(r, d), b = lift23(r, d);
    return first_difference(a * b * a, b * a * b);
}

// r12 r13 r23 = r23 r13 r12 on V (x) V (x) V
inline EquationCheck check_qybe(const Matrix& r, std::size_t d) {
    require_operator_shape(r, d, "check_qybe");
    Matrix a = lift12(r, d), m = lift13(r, d), b = lift23(r, d);
    return first_difference(a * m * b, b * m * a);
}

struct YBVerdict {
    EquationCheck braid;
    EquationCheck qybe;
    bool invertible = false;
};

inline YBVerdict full_verdict(const Matrix& r, std::size_t d) {
    return YBVerdict{check_braid(r, d), check_qybe(r, d), r.inverse().has_value()};
}

// The braid form holds for r exactly when the QYBE holds for r*tau, and
// exactly when it holds for tau*r. transfer_check computes all three
// verdicts so callers can confirm the equivalence on concrete operators.
struct TransferVerdict {
    EquationCheck braid;
    EquationCheck qybe_r_tau;
    EquationCheck qybe_tau_r;

    bool consistent() const {
        return braid.holds == qybe_r_tau.holds && braid.holds == qybe_tau_r.holds;
    }
};

inline TransferVerdict transfer_check(const Matrix& r, std::size_t d) {
    require_operator_shape(r, d, "transfer_check");
    Matrix t = twist(d, r.field());
    return TransferVerdict{check_braid(r, d), check_qybe(r * t, d), check_qybe(t * r, d)};
}

// Operator on A (x) A from a unital algebra:
//   a (x) b  |->  alpha*(ab) (x) 1  +  beta* 1 (x) (ab)  -  gamma* a (x) b.
// The unit must be declared on the algebra or discoverable from the table.
inline Matrix build_assoc_operator(const FiniteAlgebra& alg, const Scalar& alpha,
                                   const Scalar& beta, const Scalar& gamma) {
    const FieldDescriptor& fd = alg.field();
    require_same_field(fd, alpha.field(), "assoc operator alpha");
    require_same_field(fd, beta.field(), "assoc operator beta");
    require_same_field(fd, gamma.field(), "assoc operator gamma");
    std::optional<Element> unit = alg.unit();
    if (!unit) unit = find_unit(alg);
    if (!unit)
        throw std::invalid_argument("assoc operator needs a unital algebra, and no unit exists");
    const std::size_t n = alg.dim();
    Matrix r(n * n, n * n, fd);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t col = i * n + j;
            Element prod = alg.multiply(alg.basis_element(i), alg.basis_element(j));
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar v = alpha * prod[k] * (*unit)[l] + beta * (*unit)[k] * prod[l];
                    if (!v.is_zero()) r.add_at(k * n + l, col, v);
                }
            r.add_at(col, col, -gamma);
        }
    return r;
}

// Parameter classification for the operator above. The operator satisfies
// the braid equation for every unital algebra iff at least one case applies;
// the converse is algebra-dependent (one-dimensional algebras admit more).
struct ParamClass {
    bool case_i = false;    // alpha = gamma != 0, beta != 0
    bool case_ii = false;   // beta = gamma != 0, alpha != 0
    bool case_iii = false;  // alpha = beta = 0, gamma != 0

    bool any() const { return case_i || case_ii || case_iii; }
};

inline ParamClass classify_params(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    require_same_field(alpha.field(), beta.field(), "classify_params");
    require_same_field(alpha.field(), gamma.field(), "classify_params");
    ParamClass c;
    c.case_i = alpha == gamma && !alpha.is_zero() && !beta.is_zero();
    c.case_ii = beta == gamma && !beta.is_zero() && !alpha.is_zero();
    c.case_iii = alpha.is_zero() && beta.is_zero() && !gamma.is_zero();
    return c;
}

// Operator on L (x) L from a super bracket and a fixed even central z:
//   x (x) y  |->  alpha*[x,y] (x) z  +  (-1)^{|x||y|} y (x) x.
// Validates the super-Lie axioms, centrality of z, and that z is supported
// on even basis vectors only.
inline Matrix build_superlie_operator(const FiniteAlgebra& alg, const Element& z,
                                      const Scalar& alpha) {
    const FieldDescriptor& fd = alg.field();
    require_same_field(fd, alpha.field(), "superlie operator alpha");
    if (z.size() != alg.dim())
        throw std::invalid_argument("superlie operator: z has the wrong length");
    for (const Scalar& s : z) require_same_field(fd, s.field(), "superlie operator z");
    CheckReport axioms = is_super_lie(alg);
    if (!axioms.holds)
        throw std::invalid_argument("superlie operator: algebra fails the super-Lie axioms (" +
                                    axioms.witness_detail + ")");
    const std::vector<int>& g = *alg.grading();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!z[i].is_zero() && g[i] != 0)
            throw std::invalid_argument("superlie operator: z has an odd component at e" +
                                        std::to_string(i));
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Element e = alg.basis_element(i);
        if (!element_is_zero(alg.multiply(z, e)) || !element_is_zero(alg.multiply(e, z)))
            throw std::invalid_argument("superlie operator: z is not central ([z, e" +
                                        std::to_string(i) + "] != 0)");
    }
    const std::size_t n = alg.dim();
    Matrix r(n * n, n * n, fd);
    Scalar one = Scalar::one(fd);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t col = i * n + j;
            Element br = alg.multiply(alg.basis_element(i), alg.basis_element(j));
            for (std::size_t k = 0; k < n; ++k) {
                if (br[k].is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (z[l].is_zero()) continue;
                    r.add_at(k * n + l, col, alpha * br[k] * z[l]);
                }
            }
            r.add_at(j * n + i, col, (g[i] == 1 && g[j] == 1) ? -one : one);
        }
    return r;
}

struct ScanRow {
    std::int64_t alpha = 0, beta = 0, gamma = 0;
    bool predicted = false;
    bool braid_holds = false;
    bool invertible = false;
};

// Exhaustive (alpha, beta, gamma) sweep over GF(p) for one algebra,
// comparing the classification against the measured braid verdict.
// Rows are ordered lexicographically; the work is embarrassingly parallel.
inline std::vector<ScanRow> scan_assoc_family(const FiniteAlgebra& alg, unsigned workers = 1) {
    if (!alg.field().is_prime_field())
        throw std::invalid_argument("scan_assoc_family: exhaustive sweep needs a finite field");
    const std::int64_t p = alg.field().modulus();
    const FieldDescriptor fd = alg.field();
    const std::size_t total = static_cast<std::size_t>(p) * p * p;
    std::vector<ScanRow> rows(total);
    auto run = [&](std::size_t begin, std::size_t step) {
        for (std::size_t t = begin; t < total; t += step) {
            std::int64_t a = static_cast<std::int64_t>(t / (p * p));
            std::int64_t b = static_cast<std::int64_t>((t / p) % p);
            std::int64_t g = static_cast<std::int64_t>(t % p);
            Scalar sa = Scalar::from_int(fd, a), sb = Scalar::from_int(fd, b),
                   sg = Scalar::from_int(fd, g);
            Matrix r = build_assoc_operator(alg, sa, sb, sg);
            ScanRow& row = rows[t];
            row.alpha = a;
            row.beta = b;
            row.gamma = g;
            row.predicted = classify_params(sa, sb, sg).any();
            row.braid_holds = check_braid(r, alg.dim()).holds;
            row.invertible = r.inverse().has_value();
        }
    };
    if (workers <= 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (std::thread& th : pool) th.join();
    }
    return rows;
}

}  // namespace ybx
