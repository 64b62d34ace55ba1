#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tpb/symbol.hpp"

namespace tpb {

/// Coefficients f^(n) for n in [min_index, max_index]; zero outside.
class FourierSeries {
public:
    FourierSeries() : FourierSeries(0, 0) {}
    FourierSeries(int min_index, int max_index);
    FourierSeries(int min_index, std::vector<cplx> coefficients);

    int min_index() const noexcept { return min_; }
    int max_index() const noexcept { return min_ + static_cast<int>(c_.size()) - 1; }

    /// Zero outside the stored range.
    cplx operator[](int n) const noexcept;
    /// Throws DomainError outside the stored range.
    cplx& at(int n);

    std::span<const cplx> coefficients() const noexcept { return c_; }

    double norm_squared() const noexcept;
    double norm() const noexcept;

    /// Restrict (or zero-extend) to [lo, hi].
    FourierSeries window(int lo, int hi) const;

private:
    int min_;
    std::vector<cplx> c_;
};

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator-(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator*(cplx s, const FourierSeries& a);

/// Keep n >= 0.
FourierSeries riesz_project(const FourierSeries& s);

/// Smallest power of two >= max(8 * degree, 8192).
std::size_t quadrature_grid_size(int degree);

/// (1/L) sum_j x_j e^{-2 pi i jk/L}, k = 0..L-1. L must be a power of two.
std::vector<cplx> dft(std::span<const cplx> x);
/// sum_k X_k e^{2 pi i jk/L}.
std::vector<cplx> inverse_dft(std::span<const cplx> coefficients);

/// Coefficients in [lo, hi] from samples on the L-th roots of unity.
/// Non-finite samples (excluded pole points) count as zero.
FourierSeries fourier_from_samples(std::span<const cplx> samples, int lo, int hi);
/// Values of the trigonometric polynomial at the L-th roots of unity.
std::vector<cplx> samples_from_fourier(const FourierSeries& s, std::size_t grid_size);

/// Riesz projection of boundary samples, computed in the frequency domain.
/// The Nyquist mode is treated as negative.
std::vector<cplx> riesz_project_samples(std::span<const cplx> samples);

/// True when every boundary factor exponent is > -1/2 on the circle.
bool square_integrable_on_circle(const SymbolExpr& e) noexcept;

/// Coefficients for |n| <= degree by FFT quadrature with the pole grid points excluded.
/// Throws DomainError for a symbol that is not square-integrable on the circle.
FourierSeries fourier_coefficients(const SymbolExpr& e, int degree);
FourierSeries fourier_coefficients(const SymbolExpr& e, int degree, std::size_t grid_size);
/// Plus part fills n >= 0; conj(minus) fills n < 0 with conj of the minus part's coefficients.
FourierSeries fourier_coefficients(const L2Symbol& v, int degree);
FourierSeries fourier_coefficients(const L2Symbol& v, int degree, std::size_t grid_size);

}  // namespace tpb
