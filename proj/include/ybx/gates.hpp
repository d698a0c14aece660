#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "yang_baxter.hpp"

namespace ybx {

// k[X]/(X^2 - c), basis {1, x}, with the unit declared.
inline FiniteAlgebra make_quadratic_algebra(const Scalar& c) {
    const FieldDescriptor& fd = c.field();
    Scalar z = Scalar::zero(fd), o = Scalar::one(fd);
    std::vector<Scalar> table = {
        o, z,  // 1*1 = 1
        z, o,  // 1*x = x
        z, o,  // x*1 = x
        c, z,  // x*x = c*1
    };
    return FiniteAlgebra(2, fd, std::move(table), {"1", "x"}, Element{o, z});
}

struct GateParams {
    int eta = 0;  // 0 or 1
    Scalar q;     // nonzero
};

inline void validate_gate_params(const GateParams& p) {
    if (p.eta != 0 && p.eta != 1)
        throw std::invalid_argument("gate family: eta must be 0 or 1");
    if (p.q.is_zero())
        throw std::invalid_argument("gate family: q must be nonzero");
}

// The two-parameter 4x4 gate family, in its printed rows-as-images layout:
//   (1, 0,   0, 0)
//   (0, 1,   0, 0)
//   (0, 1-q, q, 0)
//   (eta, 0, 0, -q)
// Row i lists the image coordinates of the i-th basis tensor; the column
// convention form is the transpose.
inline Matrix gate_matrix(const GateParams& p) {
    validate_gate_params(p);
    const FieldDescriptor& fd = p.q.field();
    Scalar o = Scalar::one(fd);
    Matrix m = Matrix::identity(4, fd);
    m.set(2, 1, o - p.q);
    m.set(2, 2, p.q);
    m.set(3, 0, Scalar::from_int(fd, p.eta));
    m.set(3, 3, -p.q);
    return m;
}

struct GateRealization {
    Matrix display;      // rows-as-images, equals gate_matrix on success
    Matrix column_form;  // the library-convention matrix (transpose of display)
    bool matches = false;
    std::string convention;
};

// Reconstructs the gate family from algebra data: over A = k[X]/(X^2 - c)
// with c = eta/(1+q), the operator (a (x) b |-> q*ab (x) 1 + 1 (x) ab - q*a (x) b)
// composed with the twist reproduces the printed matrix, read rows-as-images
// in the basis order (1(x)1, 1(x)x, x(x)1, x(x)x). Rejected: q = 0, and
// eta = 1 with q = -1 (c would divide by zero).
inline GateRealization realize_gate_from_algebra(const GateParams& p) {
    validate_gate_params(p);
    const FieldDescriptor& fd = p.q.field();
    Scalar one = Scalar::one(fd);
    Scalar c = Scalar::zero(fd);
    if (p.eta == 1) {
        Scalar denom = one + p.q;
        if (denom.is_zero())
            throw std::invalid_argument("gate family: eta = 1 with q = -1 has no realization "
                                        "(1/(1+q) undefined)");
        c = one / denom;
    }
    FiniteAlgebra alg = make_quadratic_algebra(c);
    Matrix r = build_assoc_operator(alg, p.q, one, p.q);
    Matrix column_form = r * twist(2, fd);
    Matrix display = column_form.transposed();
    bool matches = display == gate_matrix(p);
    std::string convention =
        "basis order (1x1, 1xx, xx1, xxx); display rows are images; library "
        "columns are images; x^2 = " + c.str() + " * 1";
    return GateRealization{std::move(display), std::move(column_form), matches,
                           std::move(convention)};
}

inline Matrix cz_matrix(const FieldDescriptor& fd) {
    return gate_matrix(GateParams{0, Scalar::one(fd)});
}

inline Matrix cnot_matrix(const FieldDescriptor& fd) {
    Matrix m(4, 4, fd);
    Scalar o = Scalar::one(fd);
    m.set(0, 0, o);
    m.set(1, 1, o);
    m.set(2, 3, o);
    m.set(3, 2, o);
    return m;
}

// Unnormalized Hadamard: [[1,1],[1,-1]], so H*H = 2*I and no square roots
// enter the scalar field.
inline Matrix unnormalized_hadamard(const FieldDescriptor& fd) {
    Matrix h(2, 2, fd);
    Scalar o = Scalar::one(fd);
    h.set(0, 0, o);
    h.set(0, 1, o);
    h.set(1, 0, o);
    h.set(1, 1, -o);
    return h;
}

// (I (x) H) * CZ * (I (x) H) = 2 * CNOT, exactly, over the integers.
inline CheckReport cz_cnot_bridge() {
    FieldDescriptor fd = FieldDescriptor::rationals();
    Matrix conj = kron(Matrix::identity(2, fd), unnormalized_hadamard(fd));
    Matrix lhs = conj * cz_matrix(fd) * conj;
    Matrix rhs = cnot_matrix(fd).scaled(Scalar::from_int(fd, 2));
    if (lhs == rhs) return CheckReport::pass("cz_cnot_bridge");
    EquationCheck diff = first_difference(lhs, rhs);
    return CheckReport::fail("cz_cnot_bridge", {diff.row, diff.col},
                             "conjugated CZ differs from 2*CNOT at entry (" +
                                 std::to_string(diff.row) + "," + std::to_string(diff.col) + ")");
}

struct GateScanRow {
    GateParams params;
    EquationCheck qybe;
    bool invertible = false;
};

// QYBE sweep of the printed family over a parameter grid. The equation is
// invariant under transposition, so checking the display matrix settles the
// column-convention form as well.
inline std::vector<GateScanRow> gate_qybe_scan(const std::vector<GateParams>& grid) {
    std::vector<GateScanRow> rows;
    rows.reserve(grid.size());
    for (const GateParams& p : grid) {
        Matrix m = gate_matrix(p);
        rows.push_back(GateScanRow{p, check_qybe(m, 2), m.inverse().has_value()});
    }
    return rows;
}

}  // namespace ybx
