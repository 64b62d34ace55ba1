#pragma once

#include <Eigen/Dense>

#include "tpb/hardy.hpp"

namespace tpb {

struct NormEstimate {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Largest singular value by Krylov-accelerated power iteration on A^H A
/// (restarted Lanczos), stopping when the Ritz residual falls below tol times
/// the Ritz value. Two deterministic starts are run (all-ones, then a
/// fixed-seed vector) and the larger estimate kept. `iterations` counts
/// products with A^H A.
NormEstimate section_norm(const Eigen::MatrixXcd& A, double tol = 1e-10, int max_iterations = 5000);
NormEstimate section_norm(const SectionOperator& A, double tol = 1e-10, int max_iterations = 5000);

/// H^{-1/2} for a Hermitian positive definite H. Eigenvalues below
/// rel_floor * (largest) raise DomainError with the observed condition number.
Eigen::MatrixXcd inverse_sqrt_hermitian(const Eigen::MatrixXcd& H, double rel_floor = 1e-12);

}  // namespace tpb
