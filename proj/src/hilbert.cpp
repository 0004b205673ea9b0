#include "perceptronium/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace perceptronium {

void require_density_matrix(const Matrix& rho, const char* who) {
    require_square(rho, who);
    const double scale = std::max(1.0, rho.norm());
    if ((rho - rho.adjoint()).norm() > 1e-12 * scale)
        throw InvalidStateError(std::string(who) + ": density matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
        throw InvalidStateError(std::string(who) + ": density matrix trace != 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw InvalidStateError(std::string(who) + ": density matrix has negative eigenvalue");
}

bool is_unitary(const Matrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    Matrix residual = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
    return residual.cwiseAbs().maxCoeff() <= tol;
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix ptrace(const Matrix& a, const FactorShape& shape, Factor which) {
    require_shape(a, shape, "ptrace");
    const Eigen::Index l = shape.l, m = shape.m;
    if (which == Factor::First) {
        Matrix out = Matrix::Zero(m, m);
        for (Eigen::Index k = 0; k < l; ++k)
            out += a.block(k * m, k * m, m, m);
        return out;
    }
    Matrix out = Matrix::Zero(l, l);
    for (Eigen::Index i = 0; i < l; ++i)
        for (Eigen::Index j = 0; j < l; ++j) {
            Complex s = 0.0;
            for (Eigen::Index k = 0; k < m; ++k)
                s += a(i * m + k, j * m + k);
            out(i, j) = s;
        }
    return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "hs_inner");
    return (a.adjoint() * b).trace();
}

double hs_norm(const Matrix& a) { return a.norm(); }

std::pair<double, Matrix> hs_dot_cross(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "hs_dot_cross");
    const double dot = hs_inner(a, b).real();
    Matrix cross = Complex(0.0, 1.0) * commutator(a, b);
    return {dot, cross};
}

HsComponents hs_projectors(const Matrix& h, const FactorShape& shape) {
    require_shape(h, shape, "hs_projectors");
    const Eigen::Index n = shape.dim();
    HsComponents c;
    c.h0 = (h.trace() / static_cast<double>(n)) * identity(n);
    c.h1 = kron(ptrace_second(h, shape) / static_cast<double>(shape.m), identity(shape.m)) - c.h0;
    c.h2 = kron(identity(shape.l), ptrace_first(h, shape) / static_cast<double>(shape.l)) - c.h0;
    c.h3 = h - c.h0 - c.h1 - c.h2;
    return c;
}

RealMatrix eig_grid(const RealVector& eigs, const FactorShape& shape) {
    if (eigs.size() != shape.dim())
        throw ShapeError("eig_grid: eigenvalue count != l*m");
    RealMatrix g(shape.l, shape.m);
    for (Eigen::Index i = 0; i < shape.l; ++i)
        for (Eigen::Index j = 0; j < shape.m; ++j)
            g(i, j) = eigs(i * shape.m + j);
    return g;
}

GridComponents diag_projectors(const RealVector& eigs, const FactorShape& shape) {
    RealMatrix g = eig_grid(eigs, shape);
    RealMatrix ql = RealMatrix::Constant(shape.l, shape.l, 1.0 / static_cast<double>(shape.l));
    RealMatrix qm = RealMatrix::Constant(shape.m, shape.m, 1.0 / static_cast<double>(shape.m));
    RealMatrix pl = RealMatrix::Identity(shape.l, shape.l) - ql;
    RealMatrix pm = RealMatrix::Identity(shape.m, shape.m) - qm;
    GridComponents c;
    c.h0 = ql * g * qm;
    c.h1 = pl * g * qm;
    c.h2 = ql * g * pm;
    c.h3 = pl * g * pm;
    return c;
}

HermitianEigen eigh_sorted(const Matrix& h) {
    require_hermitian(h, "eigh_sorted");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::Index n = h.rows();
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    const RealVector& vals = es.eigenvalues();
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return vals(a) > vals(b); });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = vals(order[k]);
        out.vectors.col(k) = es.eigenvectors().col(order[k]);
    }
    return out;
}

Matrix evolve(const Matrix& rho, const Matrix& h, double t) {
    require_same_dim(rho, h, "evolve");
    require_hermitian(h, "evolve");
    HermitianEigen eh = eigh_sorted(h);
    Vector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases(k) = std::exp(Complex(0.0, eh.values(k) * t));
    Matrix u = eh.vectors * phases.asDiagonal() * eh.vectors.adjoint();
    return u * rho * u.adjoint();
}

Matrix t1_superop(const Matrix& a, const FactorShape& shape) {
    return kron(identity(shape.l), ptrace_first(a, shape)) / static_cast<double>(shape.l);
}

Matrix t2_superop(const Matrix& a, const FactorShape& shape) {
    return kron(ptrace_second(a, shape), identity(shape.m)) / static_cast<double>(shape.m);
}

Matrix star(const Matrix& a, const FactorShape& shape) {
    require_shape(a, shape, "star");
    const Eigen::Index l = shape.l, m = shape.m;
    Matrix out(l * m, l * m);
    for (Eigen::Index i = 0; i < l; ++i)
        for (Eigen::Index ip = 0; ip < m; ++ip)
            for (Eigen::Index j = 0; j < l; ++j)
                for (Eigen::Index jp = 0; jp < m; ++jp)
                    out(ip * l + i, jp * l + j) = a(i * m + ip, j * m + jp);
    return out;
}

Matrix pr(const Matrix& a, const FactorShape& shape, Eigen::Index k) {
    require_shape(a, shape, "pr");
    if (k < 0 || k >= shape.l)
        throw ShapeError("pr: block index out of range");
    return a.block(k * shape.m, k * shape.m, shape.m, shape.m);
}

std::pair<double, Matrix> branch_project(const Matrix& rho, const FactorShape& shape,
                                         Eigen::Index k, double tol) {
    const Matrix marginal = ptrace_second(rho, shape);
    if (k < 0 || k >= shape.l)
        throw ShapeError("branch_project: branch index out of range");
    const double pk = marginal(k, k).real();
    if (pk <= tol)
        throw InvalidStateError("branch_project: zero-probability branch");
    return {pk, pr(rho, shape, k) / pk};
}

}  // namespace perceptronium
