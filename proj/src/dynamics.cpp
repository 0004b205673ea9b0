#include "perceptronium/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perceptronium {

namespace {
constexpr double kPi = std::numbers::pi;
}

double EquispacedSystem::energy(Eigen::Index k) const {
    return (static_cast<double>(k) - static_cast<double>(n - 1) / 2.0) * omega;
}

EquispacedSystem equispaced_system(Eigen::Index n, double omega) {
    if (n < 2) throw std::invalid_argument("equispaced_system: n must be >= 2");
    EquispacedSystem sys;
    sys.n = n;
    sys.omega = omega;
    sys.h = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) sys.h(k, k) = sys.energy(k);
    sys.fourier.resize(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double arg = 2.0 * kPi * static_cast<double>(j) * static_cast<double>(k) /
                               static_cast<double>(n);
            sys.fourier(j, k) = scale * Complex(std::cos(arg), std::sin(arg));
        }
    sys.position_op = sys.fourier * sys.h * sys.fourier.adjoint();
    return sys;
}

double overlap_fn(Eigen::Index n, double phi) {
    const double nd = static_cast<double>(n);
    const double s = std::sin(phi);
    if (std::abs(s) < 1e-9) {
        // phi near a multiple of pi: sin(n phi)/(n sin phi) -> cos(n phi)/cos(phi)
        // by l'Hopital, evaluated at the nearest multiple for continuity.
        const double m = std::round(phi / kPi);
        return std::cos(nd * m * kPi) / std::cos(m * kPi);
    }
    return std::sin(nd * phi) / (nd * s);
}

namespace {

/// Half-line apodization coefficients c_k, k >= 0 (c_{-k} = c_k), down to
/// the 1e-12 truncation threshold.
std::vector<double> apodization_coeffs(int alpha) {
    constexpr double kTrunc = 1e-12;
    auto infinite_form = [](auto term) {
        std::vector<double> c{term(0)};
        for (long k = 1; k < 2'000'000; ++k) {
            const double v = term(k);
            if (std::abs(v) < kTrunc) break;
            c.push_back(v);
        }
        return c;
    };
    switch (alpha) {
        case 0:
            return {1.0};
        case 1:
            return infinite_form([](long k) {
                return std::cos(kPi * k) / (1.0 - 4.0 * static_cast<double>(k * k));
            });
        case 2:
            return {1.0, 0.5};
        case 3:
            return infinite_form([](long k) {
                const double k2 = static_cast<double>(k * k);
                return std::cos(kPi * k) / ((1.0 - 4.0 * k2) * (1.0 - 4.0 * k2 / 9.0));
            });
        case 4:
            return {1.0, 2.0 / 3.0, 1.0 / 6.0};
        default: {
            // cos^alpha = cos^(alpha-2) * cos^2: convolve with the alpha=2
            // kernel (1/2, 1, 1/2).
            std::vector<double> prev = apodization_coeffs(alpha - 2);
            std::vector<double> out(prev.size() + 1, 0.0);
            auto at = [&prev](long k) {
                const std::size_t idx = static_cast<std::size_t>(std::abs(k));
                return idx < prev.size() ? prev[idx] : 0.0;
            };
            for (std::size_t k = 0; k < out.size(); ++k) {
                const long kl = static_cast<long>(k);
                out[k] = at(kl) + 0.5 * (at(kl - 1) + at(kl + 1));
            }
            while (out.size() > 1 && std::abs(out.back()) < kTrunc) out.pop_back();
            return out;
        }
    }
}

}  // namespace

RealVector apodized_state(int alpha, Eigen::Index n) {
    if (alpha < 0 || alpha > 8)
        throw std::invalid_argument("apodized_state: alpha must be in [0, 8]");
    if (n < 1) throw std::invalid_argument("apodized_state: n must be positive");
    const std::vector<double> c = apodization_coeffs(alpha);
    RealVector psi = RealVector::Zero(n);
    psi(0) += c[0];
    for (std::size_t k = 1; k < c.size(); ++k) {
        const Eigen::Index fwd = static_cast<Eigen::Index>(k % static_cast<std::size_t>(n));
        psi(fwd) += c[k];
        psi((n - fwd) % n) += c[k];
    }
    psi /= psi.norm();
    return psi;
}

ToeplitzResult toeplitz_optimal_state(Eigen::Index n, const RealVector& w_fourier) {
    if (n < 4) throw std::invalid_argument("toeplitz_optimal_state: n must be >= 4");
    if (w_fourier.size() < 1)
        throw std::invalid_argument("toeplitz_optimal_state: empty penalty series");
    // Quadratic form of the penalty integral in the coefficient vector:
    // T_jd = w_hat(j-d) with w_hat(0) = w_0 and w_hat(+-j) = w_j / 2 for the
    // cosine series w(theta) = w_0 + sum_j w_j cos(j theta).
    RealMatrix t = RealMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            const Eigen::Index d = std::abs(j - k);
            if (d < w_fourier.size()) t(j, k) = (d == 0) ? w_fourier(0) : 0.5 * w_fourier(d);
        }
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(t);
    const RealVector vals = es.eigenvalues();  // ascending
    const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    if (vals(0) < -1e-10 * scale)
        throw InvalidStateError("toeplitz_optimal_state: penalty is not PSD-representable");
    ToeplitzResult out;
    out.eigenvalue = vals(0);
    out.degenerate = (n > 1) && (vals(1) - vals(0) <= 1e-10 * scale);
    out.coeffs = es.eigenvectors().col(0);
    Eigen::Index imax = 0;
    out.coeffs.cwiseAbs().maxCoeff(&imax);
    if (out.coeffs(imax) < 0.0) out.coeffs = -out.coeffs;
    out.coeffs /= out.coeffs.norm();
    return out;
}

Matrix effective_interaction(const Matrix& h3, const Matrix& rho2, const FactorShape& shape) {
    require_shape(h3, shape, "effective_interaction");
    if (rho2.rows() != shape.m || rho2.cols() != shape.m)
        throw ShapeError("effective_interaction: rho2 must be m x m");
    return ptrace_second(kron(identity(shape.l), rho2) * h3, shape);
}

namespace {

struct LocalSplit {
    Matrix a1;  // l x l local part (tr_2 h / m)
    Matrix a2;  // m x m local part (tr_1 h / l)
    Matrix h3;  // canonical non-separable part
};

LocalSplit split_hamiltonian(const Matrix& h, const FactorShape& shape) {
    LocalSplit out;
    out.a1 = ptrace_second(h, shape) / static_cast<double>(shape.m);
    out.a2 = ptrace_first(h, shape) / static_cast<double>(shape.l);
    out.h3 = hs_projectors(h, shape).h3;
    return out;
}

}  // namespace

double slin_second_derivative(const Matrix& rho1, const Matrix& rho2, const Matrix& h,
                              const FactorShape& shape) {
    require_density_matrix(rho1, "slin_second_derivative");
    require_density_matrix(rho2, "slin_second_derivative");
    require_shape(h, shape, "slin_second_derivative");
    if (rho1.rows() != shape.l || rho2.rows() != shape.m)
        throw ShapeError("slin_second_derivative: factor state dims do not match shape");
    const Matrix h3 = hs_projectors(h, shape).h3;
    const Matrix rho = kron(rho1, rho2);
    const Matrix inner = ptrace_second(commutator(h3, commutator(h3, rho)), shape);
    const double term1 = 2.0 * (rho1 * inner).trace().real();
    const Matrix hstar = effective_interaction(h3, rho2, shape);
    const double comm_norm = hs_norm(commutator(hstar, rho1));
    return term1 - 2.0 * comm_norm * comm_norm;
}

Matrix rho1_second_derivative(const Matrix& rho1, const Matrix& rho2, const Matrix& h,
                              const FactorShape& shape) {
    require_density_matrix(rho1, "rho1_second_derivative");
    require_density_matrix(rho2, "rho1_second_derivative");
    require_shape(h, shape, "rho1_second_derivative");
    const LocalSplit parts = split_hamiltonian(h, shape);
    const Matrix hstar = effective_interaction(parts.h3, rho2, shape);
    const Matrix k = Complex(0.0, 1.0) *
                     ptrace_second(kron(identity(shape.l), commutator(parts.a2, rho2)) * parts.h3,
                                   shape);
    const Matrix rho = kron(rho1, rho2);
    Matrix minus_ddot = commutator(parts.a1, commutator(parts.a1, rho1));
    minus_ddot -= Complex(0.0, 1.0) * commutator(k, rho1);
    minus_ddot += commutator(parts.a1, commutator(hstar, rho1));
    minus_ddot += commutator(hstar, commutator(parts.a1, rho1));
    minus_ddot += ptrace_second(commutator(parts.h3, commutator(parts.h3, rho)), shape);
    return -minus_ddot;
}

AutonomyReport sliding_simulation(int b, Potential potential, int alpha, double omega2,
                                  double coupling, int samples, double omega) {
    if (b < 2 || b > 10) throw std::invalid_argument("sliding_simulation: b must be in [2, 10]");
    if (samples < 2) throw std::invalid_argument("sliding_simulation: samples must be >= 2");
    const Eigen::Index n = Eigen::Index(1) << b;
    const EquispacedSystem sys = equispaced_system(n, omega);

    // Diagonal of V in the position basis, on the integer grid x_k = k-(n-1)/2.
    RealVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double x = static_cast<double>(k) - static_cast<double>(n - 1) / 2.0;
        v(k) = (potential == Potential::Sinusoidal)
                   ? std::sin(2.0 * kPi * x / static_cast<double>(n))
                   : std::exp(4.0 * (std::cos(2.0 * kPi * x / static_cast<double>(n)) - 1.0));
    }
    // V expressed in the energy basis.
    const Matrix v_energy = sys.fourier * v.cast<Complex>().asDiagonal() * sys.fourier.adjoint();

    Matrix sigma_x(2, 2);
    sigma_x << 0.0, 1.0, 1.0, 0.0;
    const FactorShape shape{n, 2};
    const Matrix h_full = kron(sys.h, identity(2)) + kron(identity(n), omega2 * sigma_x) +
                          coupling * kron(v_energy, sigma_x);

    // Initial state: apodized packet (position basis) x environment |up>.
    const RealVector packet = apodized_state(alpha, n);
    const Eigen::VectorXcd psi_sys = sys.fourier * packet.cast<Complex>();
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) psi0(2 * i) = psi_sys(i);

    AutonomyReport report;
    // Pure state: deltaH equals the energy uncertainty.
    const Eigen::VectorXcd hpsi = h_full * psi0;
    const double mean_e = psi0.dot(hpsi).real();
    report.delta_h = std::sqrt(std::max(0.0, hpsi.squaredNorm() - mean_e * mean_e));
    report.tau_dyn = 1.0 / report.delta_h;

    // ddot S1_lin(0) for the pure product state, using the canonical
    // (partial-trace-free) interaction: V gets centered, sigma_x is traceless.
    {
        const RealVector vc = v.array() - v.mean();
        const Matrix vc_energy =
            sys.fourier * vc.cast<Complex>().asDiagonal() * sys.fourier.adjoint();
        const Matrix h3 = coupling * kron(vc_energy, sigma_x);
        Matrix rho1_kron = Matrix::Zero(2 * n, 2 * n);  // rho1 (x) I_2
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Complex val = psi_sys(i) * std::conj(psi_sys(j));
                rho1_kron(2 * i, 2 * j) = val;
                rho1_kron(2 * i + 1, 2 * j + 1) = val;
            }
        const Eigen::VectorXcd h3psi = h3 * psi0;
        const Eigen::VectorXcd h3h3psi = h3 * h3psi;
        // tr{(rho1 x I)(H3^2 rho + rho H3^2 - 2 H3 rho H3)} with rho pure.
        const Complex t1 = psi0.dot(rho1_kron * h3h3psi);
        const Complex t2 = h3h3psi.dot(rho1_kron * psi0);
        const Complex t3 = h3psi.dot(rho1_kron * h3psi);
        const double term1 = 2.0 * (t1 + t2 - 2.0 * t3).real();
        // H* vanishes for the |up> environment (tr sigma_x rho2 = 0), but
        // compute it anyway so non-default environments stay correct.
        Matrix rho2 = Matrix::Zero(2, 2);
        rho2(0, 0) = 1.0;
        const Matrix hstar = effective_interaction(h3, rho2, shape);
        const Matrix rho1 = psi_sys * psi_sys.adjoint();
        const double cn = hs_norm(commutator(hstar, rho1));
        const double sddot = term1 - 2.0 * cn * cn;
        report.tau_ind = 1.0 / std::sqrt(std::max(sddot, 1e-300));
    }
    report.autonomy = report.tau_ind / report.tau_dyn;

    // Exact evolution of the pure state over one orbit.
    Eigen::SelfAdjointEigenSolver<Matrix> es(h_full);
    const Eigen::VectorXcd coeff = es.eigenvectors().adjoint() * psi0;
    const double period = 2.0 * kPi / omega;
    report.slin_curve.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        const double t = period * static_cast<double>(s) / static_cast<double>(samples - 1);
        Eigen::VectorXcd phased = coeff;
        for (Eigen::Index i = 0; i < phased.size(); ++i)
            phased(i) *= Complex(std::cos(es.eigenvalues()(i) * t),
                                 std::sin(es.eigenvalues()(i) * t));
        const Eigen::VectorXcd psi_t = es.eigenvectors() * phased;
        // S1_lin = 1 - ||M^dagger M||^2 for the n x 2 reshape of psi.
        Eigen::MatrixXcd m(n, 2);
        for (Eigen::Index i = 0; i < n; ++i) {
            m(i, 0) = psi_t(2 * i);
            m(i, 1) = psi_t(2 * i + 1);
        }
        const Eigen::Matrix2cd gram = m.adjoint() * m;
        const double slin = std::max(0.0, 1.0 - gram.squaredNorm());
        report.slin_curve.emplace_back(t, slin);
    }
    report.slin_final = report.slin_curve.back().second;
    return report;
}

namespace {

Matrix exp_antihermitian(const Eigen::VectorXd& params, Eigen::Index n) {
    // A = -iB with B Hermitian; exp(A) = V e^{-i lambda} V^dagger.
    Matrix b = Matrix::Zero(n, n);
    Eigen::Index p = 0;
    for (Eigen::Index k = 0; k < n; ++k) b(k, k) = -params(p++);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            b(j, k) += Complex(0.0, 1.0) * params(p);
            b(k, j) += Complex(0.0, -1.0) * params(p);
            ++p;
            b(j, k) += -params(p);
            b(k, j) += -params(p);
            ++p;
        }
    Eigen::SelfAdjointEigenSolver<Matrix> es(b);
    Eigen::VectorXcd phases(n);
    for (Eigen::Index i = 0; i < n; ++i)
        phases(i) = Complex(std::cos(es.eigenvalues()(i)), -std::sin(es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

FactorizationResult factorization_optimize(const Matrix& rho0, const Matrix& h,
                                           const FactorShape& shape,
                                           const std::vector<double>& times, int budget,
                                           std::uint64_t seed) {
    require_shape(rho0, shape, "factorization_optimize");
    require_same_dim(rho0, h, "factorization_optimize");
    require_density_matrix(rho0, "factorization_optimize");
    if (linear_entropy(rho0) > 1e-10)
        throw InvalidStateError("factorization_optimize: rho0 must be pure");
    if (times.empty()) throw std::invalid_argument("factorization_optimize: no time samples");
    const Eigen::Index n = shape.dim();
    const Eigen::Index n_params = n * n;

    std::vector<Matrix> snapshots;
    snapshots.reserve(times.size());
    for (double t : times) snapshots.push_back(evolve(rho0, h, t));

    long evals = 0;
    auto objective = [&](const Eigen::VectorXd& params, Matrix* u_out = nullptr) {
        ++evals;
        const Matrix u = exp_antihermitian(params, n);
        double acc = 0.0;
        for (const Matrix& rho_t : snapshots) {
            const Matrix reduced = ptrace_first(u * rho_t * u.adjoint(), shape);
            acc += reduced.squaredNorm();
        }
        if (u_out) *u_out = u;
        return 1.0 - acc / static_cast<double>(snapshots.size());
    };

    Rng rng(seed);
    FactorizationResult best;
    best.objective = 2.0;
    const int restarts = 8;
    for (int r = 0; r < restarts && evals < budget; ++r) {
        Eigen::VectorXd params = Eigen::VectorXd::Zero(n_params);
        if (r > 0)
            for (Eigen::Index i = 0; i < n_params; ++i) params(i) = 0.5 * rng.normal();
        double f = objective(params);
        std::vector<double> trace{f};
        bool converged = false;
        const double grad_eps = 1e-6;
        while (evals + 2 * n_params < budget) {
            Eigen::VectorXd grad(n_params);
            for (Eigen::Index i = 0; i < n_params; ++i) {
                Eigen::VectorXd p = params;
                p(i) += grad_eps;
                const double fp = objective(p);
                p(i) -= 2.0 * grad_eps;
                grad(i) = (fp - objective(p)) / (2.0 * grad_eps);
            }
            const double gnorm = grad.norm();
            if (gnorm < 1e-10) {
                converged = true;
                break;
            }
            double step = 1.0 / std::max(1.0, gnorm);
            bool accepted = false;
            for (int ls = 0; ls < 30 && evals < budget; ++ls) {
                const Eigen::VectorXd cand = params - step * grad;
                const double fc = objective(cand);
                if (fc < f - 1e-15) {
                    params = cand;
                    f = fc;
                    trace.push_back(f);
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) {
                converged = true;  // no descent direction at line-search resolution
                break;
            }
            if (f < 1e-14) {
                converged = true;
                break;
            }
        }
        if (f < best.objective) {
            best.objective = f;
            objective(params, &best.u);
            best.converged = converged;
            best.trace = std::move(trace);
        }
    }

    double entropy_acc = 0.0;
    for (const Matrix& rho_t : snapshots) {
        const Matrix reduced = ptrace_first(best.u * rho_t * best.u.adjoint(), shape);
        entropy_acc += von_neumann_entropy(reduced);
    }
    best.mean_entropy = entropy_acc / static_cast<double>(snapshots.size());
    return best;
}

}  // namespace perceptronium
