#include "perceptronium/emergent.hpp"

#include <cmath>
#include <stdexcept>

namespace perceptronium {

Matrix qubit_oscillator(int b) {
    if (b < 1 || b > 12) throw std::invalid_argument("qubit_oscillator: b must be in [1, 12]");
    Matrix sz(2, 2);
    sz << -1.0, 0.0, 0.0, 1.0;  // |0> -> -1, |1> -> +1 so indices read as binary
    const Eigen::Index dim = Eigen::Index(1) << b;
    Matrix h = Matrix::Zero(dim, dim);
    for (int j = 1; j <= b; ++j) {
        Matrix term = identity(1);
        // Qubit j has weight 2^{j-1}; qubit b is the leftmost (most
        // significant) factor.
        for (int pos = b; pos >= 1; --pos) term = kron(term, pos == j ? sz : identity(2));
        h += (0.5 * std::pow(2.0, j - 1)) * term;
    }
    return h;
}

CouplingMap nearest_neighbor_couplings(double mu, double gamma) {
    CouplingMap c;
    c[{0, 0, 0}] = mu * mu + 6.0 * gamma * gamma;
    for (int axis = 0; axis < 3; ++axis) {
        std::array<int, 3> r{0, 0, 0};
        r[axis] = 1;
        c[r] = -gamma * gamma;
        r[axis] = -1;
        c[r] = -gamma * gamma;
    }
    return c;
}

double lattice_dispersion(const CouplingMap& couplings, const std::array<double, 3>& kappa) {
    for (const auto& [r, a] : couplings) {
        const std::array<int, 3> neg{-r[0], -r[1], -r[2]};
        auto it = couplings.find(neg);
        if (it == couplings.end() || std::abs(it->second - a) > 1e-12)
            throw std::invalid_argument("lattice_dispersion: couplings must satisfy a_r = a_{-r}");
    }
    Complex omega2 = 0.0;
    for (const auto& [r, a] : couplings) {
        const double arg = kappa[0] * r[0] + kappa[1] * r[1] + kappa[2] * r[2];
        omega2 += a * Complex(std::cos(arg), -std::sin(arg));
    }
    if (std::abs(omega2.imag()) > 1e-12)
        throw InvalidStateError("lattice_dispersion: non-real omega^2 from symmetric couplings");
    return omega2.real();
}

std::vector<double> lattice_normal_modes(int side, double mu, double gamma) {
    if (side < 1 || side > 8)
        throw std::invalid_argument("lattice_normal_modes: side must be in [1, 8]");
    const int n = side * side * side;
    auto site = [side](int x, int y, int z) {
        auto wrap = [side](int v) { return ((v % side) + side) % side; };
        return (wrap(x) * side + wrap(y)) * side + wrap(z);
    };
    RealMatrix a = RealMatrix::Zero(n, n);
    const CouplingMap couplings = nearest_neighbor_couplings(mu, gamma);
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            for (int z = 0; z < side; ++z)
                for (const auto& [r, val] : couplings)
                    a(site(x, y, z), site(x + r[0], y + r[1], z + r[2])) += val;
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(a);
    std::vector<double> freqs;
    freqs.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const double w2 = es.eigenvalues()(i);
        if (w2 < -1e-12) throw InvalidStateError("lattice_normal_modes: tachyonic mode");
        freqs.push_back(std::sqrt(std::max(0.0, w2)));
    }
    return freqs;  // SelfAdjointEigenSolver returns ascending order
}

}  // namespace perceptronium
