#pragma once

#include "perceptronium/hilbert.hpp"

namespace perceptronium {

/// Clamps eigensolver noise in [-1e-10, 0) to zero and renormalizes checks;
/// values below -1e-10 raise InvalidStateError.
RealVector clamp_probabilities(const RealVector& p);

void require_probability_vector(const RealVector& p, const char* who);

/// -sum p_i log2 p_i with 0 log 0 := 0. Bits.
double shannon_entropy(const RealVector& p);

/// Shannon entropy of rho's eigenvalues. Bits.
double von_neumann_entropy(const Matrix& rho);

struct InfoReport {
    double s_total = 0.0;
    double s_first = 0.0;
    double s_second = 0.0;
    double mutual_info = 0.0;
};

/// I = S(rho_1) + S(rho_2) - S(rho) across the given bipartition.
InfoReport mutual_information(const Matrix& rho, const FactorShape& shape);

/// S_lin = 1 - tr rho^2.
double linear_entropy(const Matrix& rho);

/// p_n = <E_n|rho|E_n> in h's (descending-sorted) eigenbasis; invariant
/// under evolution by h.
RealVector spectral_density(const Matrix& rho, const Matrix& h);

/// deltaH = (1/sqrt 2) ||rho_dot|| = sqrt(tr[H^2 rho^2 - H rho H rho]).
/// Equals the energy uncertainty for pure states; time-invariant.
double energy_coherence(const Matrix& rho, const Matrix& h);

/// v^2 = sum_k (rho_dot_kk)^2 in the basis given by the columns of u;
/// maximized over bases at sqrt(2) * deltaH (eigenbasis of rho_dot).
double probability_velocity(const Matrix& rho, const Matrix& h, const Matrix& basis);

/// The maximizing value sqrt(2) * deltaH together with a maximizing basis
/// (eigenvectors of rho_dot).
std::pair<double, Matrix> probability_velocity_max(const Matrix& rho, const Matrix& h);

}  // namespace perceptronium
