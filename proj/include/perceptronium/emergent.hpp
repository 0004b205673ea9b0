#pragma once

#include "perceptronium/hilbert.hpp"

#include <array>
#include <map>
#include <vector>

namespace perceptronium {

/// Truncated-oscillator Hamiltonian decomposed into b qubits:
/// H = (1/2) sum_j 2^{j-1} sigma_z_j (most significant qubit leftmost),
/// built via kron. Diagonal entry at basis index k is exactly
/// k - (2^b - 1)/2, so the basis index is the binary label of the
/// eigenstate.
Matrix qubit_oscillator(int b);

using CouplingMap = std::map<std::array<int, 3>, double>;

/// Nearest-neighbor couplings on a 3D lattice reproducing
/// omega^2 = mu^2 + 4 gamma^2 sum_i sin^2(kappa_i / 2).
CouplingMap nearest_neighbor_couplings(double mu, double gamma);

/// omega(kappa)^2 = sum_r a_r e^{-i kappa . r}. Couplings must satisfy
/// a_r = a_{-r} so the result is real (imaginary residue < 1e-12).
double lattice_dispersion(const CouplingMap& couplings, const std::array<double, 3>& kappa);

/// Normal-mode frequencies of H = |p|^2/2 + q^T A q / 2 on a periodic
/// side^3 lattice with nearest-neighbor couplings: eigenfrequencies of the
/// circulant A, sorted ascending. Throws on tachyonic modes (omega^2 < 0).
std::vector<double> lattice_normal_modes(int side, double mu, double gamma);

}  // namespace perceptronium
