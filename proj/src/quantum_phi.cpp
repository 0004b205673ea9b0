#include "perceptronium/quantum_phi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perceptronium {

double grid_mutual_information(const RealMatrix& grid) {
    RealVector rows = grid.rowwise().sum();
    RealVector cols = grid.colwise().sum();
    RealVector all(Eigen::Map<const RealVector>(grid.data(), grid.size()));
    return shannon_entropy(rows) + shannon_entropy(cols) - shannon_entropy(all);
}

bool grid_separable(const RealMatrix& grid, double tol) {
    RealVector rows = grid.rowwise().sum();
    RealVector cols = grid.colwise().sum();
    RealMatrix outer = rows * cols.transpose();
    return (grid - outer).cwiseAbs().maxCoeff() <= tol;
}

namespace {

RealMatrix to_grid(const RealVector& vals, const FactorShape& shape) {
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>(vals.data(), shape.l, shape.m);
}

QuantumPhiResult exhaustive_spectrum_phi(RealVector eigs, const FactorShape& shape) {
    const Eigen::Index n = shape.dim();
    std::sort(eigs.data(), eigs.data() + n, std::greater<double>());
    // Largest eigenvalue pinned to the top-left cell; the remaining n-1
    // values are permuted. next_permutation over the sorted multiset visits
    // each distinct arrangement exactly once.
    std::vector<double> rest(eigs.data() + 1, eigs.data() + n);
    std::sort(rest.begin(), rest.end());
    QuantumPhiResult best;
    bool have = false;
    RealVector arranged(n);
    arranged(0) = eigs(0);
    do {
        for (Eigen::Index i = 1; i < n; ++i) arranged(i) = rest[i - 1];
        const double phi = grid_mutual_information(to_grid(arranged, shape));
        if (!have || phi < best.phi - 1e-12) {
            best.phi = phi;
            best.arrangement = arranged;
            have = true;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    best.phi = std::max(0.0, best.phi);
    return best;
}

QuantumPhiResult annealed_spectrum_phi(RealVector eigs, const FactorShape& shape,
                                       std::uint64_t seed) {
    const Eigen::Index n = shape.dim();
    std::sort(eigs.data(), eigs.data() + n, std::greater<double>());
    Rng rng(seed);
    RealVector current = eigs;
    double cur_val = grid_mutual_information(to_grid(current, shape));
    QuantumPhiResult best;
    best.phi = cur_val;
    best.arrangement = current;
    best.certified = false;
    // Geometric cooling, 200 sweeps of n^2 proposed swaps each.
    double temp = 0.5;
    const double cooling = 0.97;
    for (int sweep = 0; sweep < 200; ++sweep) {
        for (Eigen::Index trial = 0; trial < n * n; ++trial) {
            const Eigen::Index a = 1 + static_cast<Eigen::Index>(rng.index(n - 1));
            const Eigen::Index b = 1 + static_cast<Eigen::Index>(rng.index(n - 1));
            if (a == b || current(a) == current(b)) continue;
            std::swap(current(a), current(b));
            const double val = grid_mutual_information(to_grid(current, shape));
            const double delta = val - cur_val;
            if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temp)) {
                cur_val = val;
                if (val < best.phi) {
                    best.phi = val;
                    best.arrangement = current;
                }
            } else {
                std::swap(current(a), current(b));
            }
        }
        temp *= cooling;
    }
    best.phi = std::max(0.0, best.phi);
    return best;
}

}  // namespace

QuantumPhiResult spectrum_phi(const RealVector& eigs, const FactorShape& shape,
                              SearchMode mode, std::uint64_t seed) {
    if (eigs.size() != shape.dim())
        throw ShapeError("spectrum_phi: eigenvalue count != l*m");
    if (mode == SearchMode::Exhaustive) {
        if (shape.dim() > 8)
            throw std::invalid_argument("spectrum_phi: exhaustive mode requires dim <= 8");
        return exhaustive_spectrum_phi(eigs, shape);
    }
    return annealed_spectrum_phi(eigs, shape, seed);
}

QuantumPhiResult quantum_phi(const Matrix& rho, const FactorShape& shape, SearchMode mode,
                             std::uint64_t seed) {
    require_shape(rho, shape, "quantum_phi");
    require_density_matrix(rho, "quantum_phi");
    RealVector eigs = clamp_probabilities(eigh_sorted(rho).values);
    return spectrum_phi(eigs, shape, mode, seed);
}

std::vector<int> conjugate_partition(const std::vector<int>& partition) {
    std::vector<int> conj;
    if (partition.empty()) return conj;
    for (int j = 0; j < partition.front(); ++j) {
        int count = 0;
        for (int part : partition)
            if (part > j) ++count;
        conj.push_back(count);
    }
    return conj;
}

double young_phi(const std::vector<int>& partition, const FactorShape& shape) {
    if (partition.empty()) throw std::invalid_argument("young_phi: empty partition");
    int k = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] <= 0) throw std::invalid_argument("young_phi: parts must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw std::invalid_argument("young_phi: parts must be non-increasing");
        k += partition[i];
    }
    if (static_cast<Eigen::Index>(partition.size()) > shape.l || partition.front() > shape.m)
        throw std::invalid_argument("young_phi: partition does not fit the grid");
    const double kd = static_cast<double>(k);
    RealVector p(partition.size());
    for (std::size_t i = 0; i < partition.size(); ++i) p(i) = partition[i] / kd;
    std::vector<int> conj = conjugate_partition(partition);
    RealVector pstar(conj.size());
    for (std::size_t i = 0; i < conj.size(); ++i) pstar(i) = conj[i] / kd;
    return shannon_entropy(p) + shannon_entropy(pstar) - std::log2(kd);
}

namespace {

void enumerate_partitions(int remaining, int max_part, int max_parts,
                          std::vector<int>& current, const FactorShape& shape,
                          BestYoung& best) {
    if (remaining == 0) {
        const double phi = young_phi(current, shape);
        if (phi > best.phi + 1e-15) {
            best.phi = phi;
            best.partition = current;
        }
        return;
    }
    if (max_parts == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_partitions(remaining - part, part, max_parts - 1, current, shape, best);
        current.pop_back();
    }
}

}  // namespace

BestYoung best_young_phi(const FactorShape& shape) {
    BestYoung best;
    best.phi = 0.0;
    best.partition = {1};
    const int kmax = static_cast<int>(shape.dim());
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> current;
        enumerate_partitions(k, static_cast<int>(shape.m), static_cast<int>(shape.l), current,
                             shape, best);
    }
    return best;
}

MaxPhiResult max_phi_search(Eigen::Index n, const FactorShape& shape, int trials,
                            std::uint64_t seed) {
    if (n != shape.dim()) throw ShapeError("max_phi_search: n != l*m");
    MaxPhiResult out;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        RealVector spectrum(n);
        for (Eigen::Index i = 0; i < n; ++i) spectrum(i) = -std::log(1.0 - rng.uniform());
        spectrum /= spectrum.sum();
        const double phi = spectrum_phi(spectrum, shape).phi;
        out.best_random_phi = std::max(out.best_random_phi, phi);
        if (phi > out.best_phi) {
            out.best_phi = phi;
            out.best_spectrum = spectrum;
        }
    }
    for (Eigen::Index k = 1; k <= n; ++k) {
        RealVector spectrum = RealVector::Zero(n);
        for (Eigen::Index i = 0; i < k; ++i) spectrum(i) = 1.0 / static_cast<double>(k);
        const double phi = spectrum_phi(spectrum, shape).phi;
        if (phi > out.best_phi) {
            out.best_phi = phi;
            out.best_spectrum = spectrum;
        }
    }
    return out;
}

}  // namespace perceptronium
