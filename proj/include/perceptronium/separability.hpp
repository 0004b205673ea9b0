#pragma once

#include "perceptronium/hilbert.hpp"
#include "perceptronium/quantum_phi.hpp"
#include "perceptronium/rng.hpp"

#include <array>
#include <vector>

namespace perceptronium {

struct SeparabilityReport {
    std::array<double, 4> norms{};   // ||H0||..||H3|| at the optimum
    double integration_energy = 0.0; // min over factorizations of ||H3||
    /// Optimal eigenvalue arrangement, row-major on the l x m grid, as
    /// indices into the descending-sorted spectrum.
    std::vector<int> permutation;
    RealVector arranged_eigs;
    bool certified = true;
};

/// Minimum of ||H3|| over Hilbert-space factorizations. The minimum is
/// attained in the energy eigenbasis, so the search runs over permutations
/// of h's eigenvalues arranged into the l x m grid. Exhaustive for
/// dim <= 8; simulated annealing otherwise.
SeparabilityReport integration_energy(const Matrix& h, const FactorShape& shape,
                                      SearchMode mode = SearchMode::Exhaustive,
                                      std::uint64_t seed = 1);

/// ||H3|| for a concrete grid arrangement of eigenvalues.
double grid_h3_norm(const RealVector& eigs, const FactorShape& shape);

/// Max over a complete basis of n^2 anti-Hermitian generators A of
/// |(Pi3 h, [A, h])| / (||Pi3 h|| ||h|| + eps). Near zero at separability
/// optima; eps = 1e-15 keeps the exactly-separable case finite.
double stationarity_residual(const Matrix& h, const FactorShape& shape);

/// True iff the sorted eigenvalue spectrum majorizes the sorted diagonal
/// (prefix sums dominate, totals equal within 1e-10). Requires h PSD;
/// shift by -lambda_min first if needed.
bool majorization_check(const Matrix& h);

struct FrozenSubspace {
    Matrix projector;   // full-dimension projector onto the kept eigenspaces
    Matrix h_eff;       // Hamiltonian restricted to the kept subspace
    Matrix rho_eff;     // state restricted to the kept subspace
    Matrix kept_basis;  // columns: kept energy eigenvectors
    RealVector kept_energies;
};

/// Discards energy eigenstates whose spectral density is at or below
/// `threshold`; the restricted pair evolves identically to the full one
/// when the discarded weight is zero.
FrozenSubspace freeze_subspace(const Matrix& rho, const Matrix& h, double threshold);

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with
/// the R-diagonal phase correction (plain QR is not Haar).
Matrix haar_random_unitary(Eigen::Index n, Rng& rng);

}  // namespace perceptronium
