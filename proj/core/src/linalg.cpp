#include "tpb/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

namespace tpb {

namespace {

// Power iteration accelerated by a Krylov space: Lanczos with full
// reorthogonalization and explicit restarts from the top Ritz vector.
// Ritz values are lower bounds for the top eigenvalue of B.
NormEstimate krylov_power(const Eigen::MatrixXcd& B, Eigen::VectorXcd x, double tol, int max_matvecs) {
    const Eigen::Index n = B.cols();
    const Eigen::Index m = std::min<Eigen::Index>(n, 128);
    NormEstimate est;
    double theta = 0.0;
    x.normalize();
    while (est.iterations < max_matvecs) {
        Eigen::MatrixXcd Q(n, m);
        std::vector<double> alpha, beta;
        Q.col(0) = x;
        Eigen::Index j = 0;
        bool invariant = false;
        double resid = 0.0;
        Eigen::VectorXd s;
        for (; j < m && est.iterations < max_matvecs; ++j) {
            Eigen::VectorXcd w = B * Q.col(j);
            ++est.iterations;
            const double a = Q.col(j).dot(w).real();
            alpha.push_back(a);
            for (int pass = 0; pass < 2; ++pass) {
                const Eigen::VectorXcd h = Q.leftCols(j + 1).adjoint() * w;
                w -= Q.leftCols(j + 1) * h;
            }
            const double b = w.norm();

            const auto k = static_cast<Eigen::Index>(alpha.size());
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
            for (Eigen::Index i = 0; i < k; ++i) {
                T(i, i) = alpha[static_cast<std::size_t>(i)];
                if (i + 1 < k) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
            theta = es.eigenvalues()(k - 1);
            s = es.eigenvectors().col(k - 1);
            resid = b * std::abs(s(k - 1));
            if (resid <= tol * std::abs(theta) || b <= 1e-14 * std::max(std::abs(theta), 1e-300)) {
                invariant = b <= 1e-14 * std::max(std::abs(theta), 1e-300);
                ++j;
                break;
            }
            beta.push_back(b);
            if (j + 1 < m) Q.col(j + 1) = w / b;
        }
        const Eigen::Index k = static_cast<Eigen::Index>(alpha.size());
        x = Q.leftCols(k) * s;
        x.normalize();
        if (resid <= tol * std::abs(theta) || invariant) {
            est.converged = true;
            break;
        }
    }
    est.value = std::sqrt(std::max(theta, 0.0));
    return est;
}

}  // namespace

NormEstimate section_norm(const Eigen::MatrixXcd& A, double tol, int max_iterations) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (A.size() == 0) return {0.0, 0, true};
    const Eigen::MatrixXcd B = A.adjoint() * A;
    const auto n = B.cols();

    const auto first = krylov_power(B, Eigen::VectorXcd::Ones(n), tol, max_iterations);

    std::mt19937_64 rng(0x7e0b1172ULL);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd start(n);
    for (Eigen::Index i = 0; i < n; ++i) start[i] = cplx(gauss(rng), gauss(rng));
    const auto second = krylov_power(B, start, tol, max_iterations);

    NormEstimate best = second.value > first.value ? second : first;
    best.iterations = first.iterations + second.iterations;
    best.converged = first.converged && second.converged;
    return best;
}

NormEstimate section_norm(const SectionOperator& A, double tol, int max_iterations) {
    return section_norm(A.matrix, tol, max_iterations);
}

Eigen::MatrixXcd inverse_sqrt_hermitian(const Eigen::MatrixXcd& H, double rel_floor) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw DomainError("Gram matrix eigendecomposition failed");
    const auto& ev = es.eigenvalues();
    const double top = ev.maxCoeff();
    const double bottom = ev.minCoeff();
    if (!(top > 0.0) || bottom < rel_floor * top) {
        std::ostringstream msg;
        msg << "Gram matrix is singular beyond tolerance: eigenvalue range [" << bottom << ", " << top
            << "], condition " << (bottom > 0 ? top / bottom : INFINITY);
        throw DomainError(msg.str());
    }
    Eigen::VectorXd d = ev.array().rsqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace tpb
