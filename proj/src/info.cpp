#include "perceptronium/info.hpp"

#include <cmath>

namespace perceptronium {

RealVector clamp_probabilities(const RealVector& p) {
    RealVector out = p;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (out(i) < -1e-10)
            throw InvalidStateError("probability vector: entry below -1e-10");
        if (out(i) < 0.0) out(i) = 0.0;
    }
    return out;
}

void require_probability_vector(const RealVector& p, const char* who) {
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) < -1e-12)
            throw InvalidStateError(std::string(who) + ": negative probability");
    if (std::abs(p.sum() - 1.0) > 1e-10)
        throw InvalidStateError(std::string(who) + ": probabilities do not sum to 1");
}

double shannon_entropy(const RealVector& p) {
    RealVector q = clamp_probabilities(p);
    double s = 0.0;
    for (Eigen::Index i = 0; i < q.size(); ++i)
        if (q(i) > 0.0) s -= q(i) * std::log2(q(i));
    return s;
}

double von_neumann_entropy(const Matrix& rho) {
    return shannon_entropy(eigh_sorted(rho).values);
}

InfoReport mutual_information(const Matrix& rho, const FactorShape& shape) {
    require_shape(rho, shape, "mutual_information");
    InfoReport r;
    r.s_total = von_neumann_entropy(rho);
    r.s_first = von_neumann_entropy(ptrace_second(rho, shape));
    r.s_second = von_neumann_entropy(ptrace_first(rho, shape));
    r.mutual_info = r.s_first + r.s_second - r.s_total;
    return r;
}

double linear_entropy(const Matrix& rho) {
    return 1.0 - (rho * rho).trace().real();
}

RealVector spectral_density(const Matrix& rho, const Matrix& h) {
    require_same_dim(rho, h, "spectral_density");
    HermitianEigen eh = eigh_sorted(h);
    RealVector p(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        p(k) = (eh.vectors.col(k).adjoint() * rho * eh.vectors.col(k))(0, 0).real();
    return clamp_probabilities(p);
}

double energy_coherence(const Matrix& rho, const Matrix& h) {
    require_same_dim(rho, h, "energy_coherence");
    const Matrix hr = h * rho;
    const double val = (hr * hr.adjoint()).trace().real() - (hr * hr).trace().real();
    return std::sqrt(std::max(0.0, val));
}

double probability_velocity(const Matrix& rho, const Matrix& h, const Matrix& basis) {
    require_same_dim(rho, h, "probability_velocity");
    const Matrix rho_dot = Complex(0.0, 1.0) * commutator(h, rho);
    const Matrix rotated = basis.adjoint() * rho_dot * basis;
    double v2 = 0.0;
    for (Eigen::Index k = 0; k < rotated.rows(); ++k) {
        const double d = rotated(k, k).real();
        v2 += d * d;
    }
    return std::sqrt(v2);
}

std::pair<double, Matrix> probability_velocity_max(const Matrix& rho, const Matrix& h) {
    const Matrix rho_dot = Complex(0.0, 1.0) * commutator(h, rho);
    HermitianEigen e = eigh_sorted(rho_dot);
    return {std::sqrt(2.0) * energy_coherence(rho, h), e.vectors};
}

}  // namespace perceptronium
