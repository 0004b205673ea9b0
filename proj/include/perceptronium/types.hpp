#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace perceptronium {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Declares a bipartition of an n = l*m dimensional space into factors of
/// dimension l (first) and m (second). Composite index convention:
/// alpha = m*i + i', first factor most significant. This convention is
/// fixed project-wide; reshaping eigenvalues into an l x m grid puts the
/// first factor on rows.
struct FactorShape {
    Eigen::Index l = 0;
    Eigen::Index m = 0;

    FactorShape() = default;
    FactorShape(Eigen::Index first, Eigen::Index second) : l(first), m(second) {
        if (l < 1 || m < 1) throw std::invalid_argument("FactorShape: factor dims must be >= 1");
    }

    Eigen::Index dim() const { return l * m; }
    FactorShape swapped() const { return {m, l}; }
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols())
        throw ShapeError(std::string(who) + ": matrix must be square");
}

inline void require_shape(const Matrix& a, const FactorShape& shape, const char* who) {
    require_square(a, who);
    if (a.rows() != shape.dim())
        throw ShapeError(std::string(who) + ": dim " + std::to_string(a.rows()) +
                         " != l*m = " + std::to_string(shape.dim()));
}

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(who) + ": dimension mismatch");
}

inline bool is_hermitian(const Matrix& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.norm());
    return (a - a.adjoint()).norm() <= tol * scale;
}

inline void require_hermitian(const Matrix& a, const char* who) {
    if (!is_hermitian(a))
        throw InvalidStateError(std::string(who) + ": matrix is not Hermitian");
}

/// Validates density-matrix invariants: Hermitian, unit trace, eigenvalues
/// >= -1e-10 (eigensolver noise allowance).
void require_density_matrix(const Matrix& rho, const char* who);

/// U U^dagger = I within 1e-10 per entry.
bool is_unitary(const Matrix& u, double tol = 1e-10);

}  // namespace perceptronium
