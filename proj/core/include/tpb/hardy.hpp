#pragma once

// Hardy-space machinery on polynomial truncations: Toeplitz and multiplier
// sections, outer functions, reproducing kernels, Poisson extensions.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "tpb/fourier.hpp"
#include "tpb/symbol.hpp"

namespace tpb {

enum class SectionKind { Toeplitz, AnalyticMultiplier, Product, Carleson };

/// (M+1) x (N+1) matrix acting on coefficient vectors of polynomials of degree <= N.
struct SectionOperator {
    Eigen::MatrixXcd matrix;
    int input_degree = 0;
    int output_degree = 0;
    SectionKind kind = SectionKind::Toeplitz;
};

/// Entry (j,k) = g^(j-k). Requires g to cover [-N, M].
SectionOperator toeplitz_section(const FourierSeries& g, int N, int M);

/// Lower-triangular Toeplitz matrix of u's Taylor coefficients, entry (j,k) = c_{j-k}.
SectionOperator analytic_multiplier_section(const SymbolExpr& u, int N, int M);

/// Taylor coefficients c_0..c_degree of f by FFT on the circle |z| = r with r^{-n} rescaling.
std::vector<cplx> taylor_coefficients_on_circle(const std::function<cplx(cplx)>& f, int degree, double r = 0.9);

/// Taylor coefficients 0..degree of the outer function with boundary modulus phi,
/// where phi is sampled on the L-th roots of unity. Isolated zeros of phi are
/// allowed; the log sample there is replaced by a local power-law estimate.
FourierSeries outer_from_modulus(std::span<const double> phi, int degree);

/// Truncated Szego kernel k_x(z) = 1/(1 - conj(x) z): coefficient n is conj(x)^n.
struct KernelVector {
    cplx point;
    bool normalized = false;
    Eigen::VectorXcd coefficients;
    /// l2 norm of the discarded tail of the (possibly normalized) kernel.
    double truncation_bound = 0.0;
};

KernelVector kernel_vector(cplx x, int degree, bool normalized = false);

struct ReproducingValue {
    cplx direct;
    cplx via_kernel;
    /// |direct - via_kernel| is at most this (Cauchy-Schwarz on the kernel tail).
    double truncation_bound = 0.0;
};

/// f(x) by Horner evaluation and as <f, k_x>; only the analytic part of f is used.
ReproducingValue reproducing_eval(const FourierSeries& f, cplx x, int kernel_degree = 512);

/// Poisson integral (1/L) sum_j h_j (1-|w|^2)/|zeta_j - w|^2; non-finite samples are skipped.
double poisson_extension(std::span<const double> h, cplx w);

/// Adaptive Poisson integral of h(theta) on [0, 2 pi). `breakpoints` are angles
/// where h is singular or kinked; the integral is split there and near arg w.
double poisson_extension(const std::function<double(double)>& h, cplx w, std::span<const double> breakpoints = {});

/// Coefficients 0..N of P(|v|^2 k_x), the reproducing kernel of the range of T_conj(v)
/// written as an element of that range.
FourierSeries range_kernel(const SymbolExpr& v, cplx x, int N);

/// Range of T_conj(v) for outer v, restricted to polynomials of degree <= N, with the
/// norm that makes T_conj(v) an isometry. On polynomials the section of T_conj(v)
/// is exact and upper triangular with diagonal conj(v(0)).
class RangeSpace {
public:
    RangeSpace(const SymbolExpr& v, int N);

    int degree() const noexcept { return N_; }
    /// T_conj(v) f.
    Eigen::VectorXcd apply(const Eigen::VectorXcd& f) const;
    /// The polynomial f with T_conj(v) f = h.
    Eigen::VectorXcd preimage(const Eigen::VectorXcd& h) const;
    /// <h1, h2> in the range norm.
    cplx inner(const Eigen::VectorXcd& h1, const Eigen::VectorXcd& h2) const;

private:
    int N_;
    Eigen::MatrixXcd T_;
};

/// Evaluate sum_n c_n x^n (Horner).
cplx polynomial_value(std::span<const cplx> c, cplx x);

}  // namespace tpb
