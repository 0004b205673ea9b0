#include "perceptronium/separability.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace perceptronium {

double grid_h3_norm(const RealVector& eigs, const FactorShape& shape) {
    return diag_projectors(eigs, shape).h3.norm();
}

namespace {

struct GridSearchResult {
    double h3 = 0.0;
    RealVector arranged;
    bool certified = true;
};

GridSearchResult exhaustive_h3_min(RealVector eigs, const FactorShape& shape) {
    const Eigen::Index n = shape.dim();
    std::sort(eigs.data(), eigs.data() + n, std::greater<double>());
    // Permutations within degenerate blocks are no-ops; next_permutation
    // over the multiset already skips them.
    std::vector<double> vals(eigs.data(), eigs.data() + n);
    std::sort(vals.begin(), vals.end());
    GridSearchResult best;
    bool have = false;
    RealVector arranged(n);
    do {
        for (Eigen::Index i = 0; i < n; ++i) arranged(i) = vals[i];
        const double h3 = grid_h3_norm(arranged, shape);
        if (!have || h3 < best.h3 - 1e-13) {
            best.h3 = h3;
            best.arranged = arranged;
            have = true;
        }
    } while (std::next_permutation(vals.begin(), vals.end()));
    return best;
}

GridSearchResult annealed_h3_min(RealVector eigs, const FactorShape& shape,
                                 std::uint64_t seed) {
    const Eigen::Index n = shape.dim();
    std::sort(eigs.data(), eigs.data() + n, std::greater<double>());
    Rng rng(seed);
    RealVector current = eigs;
    double cur_val = grid_h3_norm(current, shape);
    GridSearchResult best{cur_val, current, false};
    double temp = 0.1 * std::max(1.0, eigs.cwiseAbs().maxCoeff());
    for (int sweep = 0; sweep < 300; ++sweep) {
        for (Eigen::Index trial = 0; trial < n * n; ++trial) {
            const Eigen::Index a = static_cast<Eigen::Index>(rng.index(n));
            const Eigen::Index b = static_cast<Eigen::Index>(rng.index(n));
            if (a == b || current(a) == current(b)) continue;
            std::swap(current(a), current(b));
            const double val = grid_h3_norm(current, shape);
            const double delta = val - cur_val;
            if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temp)) {
                cur_val = val;
                if (val < best.h3) {
                    best.h3 = val;
                    best.arranged = current;
                }
            } else {
                std::swap(current(a), current(b));
            }
        }
        temp *= 0.975;
    }
    return best;
}

}  // namespace

SeparabilityReport integration_energy(const Matrix& h, const FactorShape& shape,
                                      SearchMode mode, std::uint64_t seed) {
    require_shape(h, shape, "integration_energy");
    require_hermitian(h, "integration_energy");
    RealVector eigs = eigh_sorted(h).values;

    GridSearchResult search;
    if (mode == SearchMode::Exhaustive) {
        if (shape.dim() > 8)
            throw std::invalid_argument("integration_energy: exhaustive mode requires dim <= 8");
        search = exhaustive_h3_min(eigs, shape);
    } else {
        search = annealed_h3_min(eigs, shape, seed);
    }

    SeparabilityReport report;
    report.integration_energy = search.h3;
    report.arranged_eigs = search.arranged;
    report.certified = search.certified;
    GridComponents grid = diag_projectors(search.arranged, shape);
    report.norms = {grid.h0.norm(), grid.h1.norm(), grid.h2.norm(), grid.h3.norm()};

    // Recover grid position -> sorted-spectrum index, consuming duplicate
    // eigenvalues in order.
    std::vector<bool> used(eigs.size(), false);
    report.permutation.resize(eigs.size());
    for (Eigen::Index i = 0; i < search.arranged.size(); ++i) {
        for (Eigen::Index j = 0; j < eigs.size(); ++j) {
            if (!used[j] && eigs(j) == search.arranged(i)) {
                report.permutation[i] = static_cast<int>(j);
                used[j] = true;
                break;
            }
        }
    }
    return report;
}

double stationarity_residual(const Matrix& h, const FactorShape& shape) {
    require_shape(h, shape, "stationarity_residual");
    const Eigen::Index n = h.rows();
    const Matrix pi3 = hs_projectors(h, shape).h3;
    const double denom = pi3.norm() * h.norm() + 1e-15;
    double worst = 0.0;
    // Complete anti-Hermitian basis: i E_kk, (E_jk - E_kj), i(E_jk + E_kj).
    auto probe = [&](const Matrix& a) {
        worst = std::max(worst, std::abs(hs_inner(pi3, commutator(a, h))));
    };
    for (Eigen::Index k = 0; k < n; ++k) {
        Matrix a = Matrix::Zero(n, n);
        a(k, k) = Complex(0.0, 1.0);
        probe(a);
    }
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            Matrix a = Matrix::Zero(n, n);
            a(j, k) = 1.0;
            a(k, j) = -1.0;
            probe(a);
            a(j, k) = Complex(0.0, 1.0);
            a(k, j) = Complex(0.0, 1.0);
            probe(a);
        }
    return worst / denom;
}

bool majorization_check(const Matrix& h) {
    require_hermitian(h, "majorization_check");
    const Eigen::Index n = h.rows();
    RealVector eigs = eigh_sorted(h).values;
    if (eigs(n - 1) < -1e-10) throw InvalidStateError("majorization_check: h must be PSD");
    RealVector diag(n);
    for (Eigen::Index i = 0; i < n; ++i) diag(i) = h(i, i).real();
    std::sort(diag.data(), diag.data() + n, std::greater<double>());
    double prefix_e = 0.0, prefix_d = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        prefix_e += eigs(i);
        prefix_d += diag(i);
        if (i + 1 < n && prefix_e < prefix_d - 1e-10) return false;
    }
    return std::abs(prefix_e - prefix_d) <= 1e-10 * std::max(1.0, std::abs(prefix_e));
}

FrozenSubspace freeze_subspace(const Matrix& rho, const Matrix& h, double threshold) {
    require_same_dim(rho, h, "freeze_subspace");
    if (threshold < 0.0 || threshold >= 1.0)
        throw std::invalid_argument("freeze_subspace: threshold must be in [0, 1)");
    HermitianEigen eh = eigh_sorted(h);
    const Eigen::Index n = h.rows();
    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double pk = (eh.vectors.col(k).adjoint() * rho * eh.vectors.col(k))(0, 0).real();
        if (pk > threshold) kept.push_back(k);
    }
    if (kept.empty()) throw InvalidStateError("freeze_subspace: no eigenstate above threshold");

    FrozenSubspace out;
    out.kept_basis.resize(n, static_cast<Eigen::Index>(kept.size()));
    out.kept_energies.resize(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out.kept_basis.col(static_cast<Eigen::Index>(i)) = eh.vectors.col(kept[i]);
        out.kept_energies(static_cast<Eigen::Index>(i)) = eh.values(kept[i]);
    }
    out.projector = out.kept_basis * out.kept_basis.adjoint();
    out.h_eff = out.kept_basis.adjoint() * h * out.kept_basis;
    out.rho_eff = out.kept_basis.adjoint() * rho * out.kept_basis;
    return out;
}

Matrix haar_random_unitary(Eigen::Index n, Rng& rng) {
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            g(i, j) = Complex(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        q.col(k) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace perceptronium
