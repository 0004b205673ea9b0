#pragma once

#include "perceptronium/hilbert.hpp"
#include "perceptronium/info.hpp"
#include "perceptronium/rng.hpp"

#include <vector>

namespace perceptronium {

/// n-level system with a uniformly spaced, traceless energy spectrum
/// E_k = (k - (n-1)/2) * omega (hbar = 1), together with the unitary DFT
/// relating the energy and position bases and the position operator
/// x = F h F^dagger (same spectrum as h as a multiset).
struct EquispacedSystem {
    Eigen::Index n = 0;
    double omega = 1.0;
    Matrix h;            // diagonal in the energy basis
    Matrix fourier;      // unitary DFT, F_jk = e^{2 pi i j k / n} / sqrt(n)
    Matrix position_op;  // F h F^dagger

    /// Energy of level k.
    double energy(Eigen::Index k) const;
};

EquispacedSystem equispaced_system(Eigen::Index n, double omega = 1.0);

/// Overlap of a position eigenstate with itself rotated by phase phi:
/// sin(n phi) / (n sin phi), continuously extended at phi = multiples of pi.
double overlap_fn(Eigen::Index n, double phi);

/// Position-basis amplitudes of the order-alpha apodized wave packet on a
/// ring of n sites, centered at site 0 and normalized. alpha = 0 is a
/// position eigenstate; 1..4 are closed forms; 5..8 iterate convolution
/// with the alpha=2 kernel (1/2, 1, 1/2). Coefficients below 1e-12 are
/// dropped before wrapping onto the ring.
RealVector apodized_state(int alpha, Eigen::Index n);

struct ToeplitzResult {
    RealVector coeffs;   // unit-norm energy-basis amplitudes
    double eigenvalue = 0.0;
    bool degenerate = false;  // minimal eigenvalue not isolated
};

/// Unit-norm coefficient vector minimizing the quadratic penalty
/// integral |g_n(theta)|^2 w(theta) dtheta, i.e. the eigenvector of the
/// n x n symmetric Toeplitz matrix built from w's Fourier cosine
/// coefficients (w_fourier[j] multiplies cos(j theta), j = 0 constant term)
/// with the smallest eigenvalue. Throws if the matrix is not PSD.
ToeplitzResult toeplitz_optimal_state(Eigen::Index n, const RealVector& w_fourier);

/// H* = tr2{(I (x) rho2) h3}: the interaction averaged over the
/// environment state.
Matrix effective_interaction(const Matrix& h3, const Matrix& rho2, const FactorShape& shape);

/// d^2/dt^2 of the reduced linear entropy at t = 0 for the separable state
/// rho1 (x) rho2 under the full Hamiltonian h:
///   2 tr{rho1 tr2[H3,[H3,rho]]} - 2 ||[H*, rho1]||^2,
/// with H3 the canonical non-separable component of h. Independent of the
/// local parts of h.
double slin_second_derivative(const Matrix& rho1, const Matrix& rho2, const Matrix& h,
                              const FactorShape& shape);

/// Full second derivative of the reduced state at t = 0 for rho1 (x) rho2:
///   -rho1'' = [H1,[H1,rho1]] - i[K, rho1] + [H1,[H*,rho1]] + [H*,[H1,rho1]]
///             + tr2[H3,[H3,rho]],
/// with K = i tr2{(I (x) [H2, rho2]) H3}.
Matrix rho1_second_derivative(const Matrix& rho1, const Matrix& rho2, const Matrix& h,
                              const FactorShape& shape);

enum class Potential { Sinusoidal, Gaussian };

struct AutonomyReport {
    double delta_h = 0.0;
    double tau_dyn = 0.0;
    double tau_ind = 0.0;
    double autonomy = 0.0;
    double slin_final = 0.0;                    // reduced linear entropy at t = T
    std::vector<std::pair<double, double>> slin_curve;  // (t, S1_lin(t))
};

/// One-orbit decoherence run: an n = 2^b equispaced system coupled to a
/// single environment qubit starting in |up>, with H2 = omega2 sigma_x and
/// H3 = coupling * V(x) (x) sigma_x. The system starts in the order-alpha
/// apodized packet. Evolution is exact (eigendecomposition stepping).
AutonomyReport sliding_simulation(int b, Potential potential, int alpha, double omega2,
                                  double coupling, int samples, double omega = 1.0);

struct FactorizationResult {
    Matrix u;
    double objective = 0.0;       // f(U) = 1 - (1/m) sum ||tr1 U rho(t_i) U+||^2
    double mean_entropy = 0.0;    // time-averaged Shannon entropy of tr1(U rho U+)
    bool converged = true;
    std::vector<double> trace;    // objective after each accepted step
};

/// Minimizes f(U) over unitaries parameterized as exp of an anti-Hermitian
/// generator, by restarted descent with a finite-difference gradient.
/// `times` are the evolution samples entering the objective.
FactorizationResult factorization_optimize(const Matrix& rho0, const Matrix& h,
                                           const FactorShape& shape,
                                           const std::vector<double>& times, int budget,
                                           std::uint64_t seed);

}  // namespace perceptronium
