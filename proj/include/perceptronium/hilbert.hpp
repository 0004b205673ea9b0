#pragma once

#include "perceptronium/types.hpp"

#include <array>
#include <utility>

namespace perceptronium {

/// Kronecker (tensor) product: entry (ii', jj') = a(i,j) * b(i',j').
Matrix kron(const Matrix& a, const Matrix& b);

enum class Factor { First, Second };

/// Partial trace of a square matrix with dim = shape.l * shape.m.
/// Tracing out the first factor leaves an m x m matrix, the second an
/// l x l matrix.
Matrix ptrace(const Matrix& a, const FactorShape& shape, Factor which);

inline Matrix ptrace_first(const Matrix& a, const FactorShape& shape) {
    return ptrace(a, shape, Factor::First);
}
inline Matrix ptrace_second(const Matrix& a, const FactorShape& shape) {
    return ptrace(a, shape, Factor::Second);
}

/// Hilbert-Schmidt inner product (A,B) = tr A^dagger B.
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Frobenius norm; ||A||^2 = sum |a_ij|^2.
double hs_norm(const Matrix& a);

/// Dot/cross pair on Hermitian matrices: dot = (A,B) (real part),
/// cross = i[A,B] (again Hermitian, orthogonal to both factors).
std::pair<double, Matrix> hs_dot_cross(const Matrix& a, const Matrix& b);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Orthogonal decomposition H = H0 + H1 + H2 + H3 for a given bipartition:
/// H0 carries the trace, H1 and H2 the two additively separable parts,
/// H3 the non-separable residual (both partial traces vanish).
struct HsComponents {
    Matrix h0, h1, h2, h3;
    std::array<double, 4> norms() const {
        return {hs_norm(h0), hs_norm(h1), hs_norm(h2), hs_norm(h3)};
    }
};
HsComponents hs_projectors(const Matrix& h, const FactorShape& shape);

/// Same decomposition restricted to a diagonal operator, expressed on the
/// l x m grid of its eigenvalues (row index = first factor):
/// H0 = Q_l G Q_m, H1 = P_l G Q_m, H2 = Q_l G P_m, H3 = P_l G P_m with
/// (Q_k)_ij = 1/k and P_k = I - Q_k.
struct GridComponents {
    RealMatrix h0, h1, h2, h3;
};
GridComponents diag_projectors(const RealVector& eigs, const FactorShape& shape);

/// Reshapes n = l*m eigenvalues into the l x m grid (row-major; first
/// factor on rows).
RealMatrix eig_grid(const RealVector& eigs, const FactorShape& shape);

/// rho(t) = e^{iHt} rho e^{-iHt} via eigendecomposition of h.
Matrix evolve(const Matrix& rho, const Matrix& h, double t);

/// Averaging superoperators T1 A = (1/l) I (x) tr_1 A and
/// T2 A = (1/m) (tr_2 A) (x) I; both self-adjoint idempotents.
Matrix t1_superop(const Matrix& a, const FactorShape& shape);
Matrix t2_superop(const Matrix& a, const FactorShape& shape);

/// Subsystem-exchange: (A*)_{i'i,j'j} = A_{ii',jj'}. The result uses the
/// swapped shape (m,l); star(star(A)) = A.
Matrix star(const Matrix& a, const FactorShape& shape);

/// k-th diagonal block: (pr_k A)_{ij} = A_{ki,kj}, an m x m matrix.
Matrix pr(const Matrix& a, const FactorShape& shape, Eigen::Index k);

/// Conditional state on the second factor given outcome k on the first:
/// probability p_k = (tr_2 rho)_kk and branch = pr_k(rho) / p_k.
/// Throws if p_k is at or below tol.
std::pair<double, Matrix> branch_project(const Matrix& rho, const FactorShape& shape,
                                         Eigen::Index k, double tol = 1e-12);

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted
/// descending (eigensolver order is not canonical; downstream permutation
/// searches rely on this ordering).
struct HermitianEigen {
    RealVector values;   // descending
    Matrix vectors;      // columns match values
};
HermitianEigen eigh_sorted(const Matrix& h);

Matrix identity(Eigen::Index n);

}  // namespace perceptronium
