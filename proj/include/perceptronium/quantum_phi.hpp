#pragma once

#include "perceptronium/info.hpp"
#include "perceptronium/rng.hpp"

#include <vector>

namespace perceptronium {

enum class SearchMode { Exhaustive, Heuristic };

struct QuantumPhiResult {
    double phi = 0.0;
    /// Eigenvalues (sorted descending on input) arranged row-major into the
    /// l x m grid achieving the minimum.
    RealVector arrangement;
    bool certified = true;  // false when the heuristic search was used
};

/// Mutual information of a diagonal state whose eigenvalues are arranged
/// row-major in the l x m grid: I = S(row sums) + S(col sums) - S(all).
double grid_mutual_information(const RealMatrix& grid);

/// True iff the grid is an outer product of its row-sum and column-sum
/// vectors within tol (equivalently, zero mutual information).
bool grid_separable(const RealMatrix& grid, double tol = 1e-10);

/// Integrated information Phi = min_U I(U rho U^dagger). By the diagonality
/// of the minimizer this reduces to arranging rho's eigenvalues into the
/// l x m grid; the largest eigenvalue can be pinned to the top-left cell
/// without loss. Exhaustive mode requires dim <= 8; heuristic mode runs
/// simulated annealing over eigenvalue swaps and flags its result as
/// non-certified.
QuantumPhiResult quantum_phi(const Matrix& rho, const FactorShape& shape,
                             SearchMode mode = SearchMode::Exhaustive,
                             std::uint64_t seed = 1);

/// Same search applied directly to an eigenvalue multiset.
QuantumPhiResult spectrum_phi(const RealVector& eigs, const FactorShape& shape,
                              SearchMode mode = SearchMode::Exhaustive,
                              std::uint64_t seed = 1);

/// Phi of a rank-k projection spectrum whose equal eigenvalues are arranged
/// in the Young-diagram pattern given by `partition` (positive,
/// non-increasing parts summing to k, fitting the l x m grid):
/// Phi = S(p) + S(p*) - log2 k with p_i = k_i / k and p* the conjugate.
double young_phi(const std::vector<int>& partition, const FactorShape& shape);

std::vector<int> conjugate_partition(const std::vector<int>& partition);

struct BestYoung {
    double phi = 0.0;
    std::vector<int> partition;
};
/// Best projection-state Phi over all k and all partitions fitting the grid.
BestYoung best_young_phi(const FactorShape& shape);

struct MaxPhiResult {
    double best_phi = 0.0;
    RealVector best_spectrum;
    double best_random_phi = 0.0;  // best among the random (non-projection) trials
};
/// Scores `trials` Dirichlet-uniform random spectra plus every projection
/// spectrum (k equal eigenvalues 1/k); the winner is a projection spectrum.
MaxPhiResult max_phi_search(Eigen::Index n, const FactorShape& shape, int trials,
                            std::uint64_t seed);

}  // namespace perceptronium
