#include "tpb/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>

namespace tpb {

namespace {

// Planner calls are not thread-safe in FFTW; execution with new arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<cplx> transform(std::span<const cplx> x, int sign) {
    const std::size_t n = x.size();
    if (n == 0 || !std::has_single_bit(n)) throw DomainError("transform length must be a power of two");
    std::vector<cplx> in(x.begin(), x.end());
    std::vector<cplx> out(n);
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), pin, pout, sign, FFTW_ESTIMATE);
    }
    fftw_execute_dft(plan, pin, pout);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

FourierSeries::FourierSeries(int min_index, int max_index) : min_(min_index) {
    if (max_index < min_index) throw DomainError("empty coefficient range");
    c_.assign(static_cast<std::size_t>(max_index - min_index) + 1, cplx{});
}

FourierSeries::FourierSeries(int min_index, std::vector<cplx> coefficients)
    : min_(min_index), c_(std::move(coefficients)) {
    if (c_.empty()) c_.push_back(cplx{});
}

cplx FourierSeries::operator[](int n) const noexcept {
    if (n < min_ || n > max_index()) return {};
    return c_[static_cast<std::size_t>(n - min_)];
}

cplx& FourierSeries::at(int n) {
    if (n < min_ || n > max_index()) throw DomainError("coefficient index out of range");
    return c_[static_cast<std::size_t>(n - min_)];
}

double FourierSeries::norm_squared() const noexcept {
    double s = 0.0;
    for (cplx x : c_) s += std::norm(x);
    return s;
}

double FourierSeries::norm() const noexcept { return std::sqrt(norm_squared()); }

FourierSeries FourierSeries::window(int lo, int hi) const {
    FourierSeries out(lo, hi);
    for (int n = lo; n <= hi; ++n) out.at(n) = (*this)[n];
    return out;
}

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
    const int lo = std::min(a.min_index(), b.min_index());
    const int hi = std::max(a.max_index(), b.max_index());
    FourierSeries out(lo, hi);
    for (int n = lo; n <= hi; ++n) out.at(n) = a[n] + b[n];
    return out;
}

FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) { return a + cplx{-1.0, 0.0} * b; }

FourierSeries operator*(cplx s, const FourierSeries& a) {
    std::vector<cplx> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c) x *= s;
    return FourierSeries(a.min_index(), std::move(c));
}

FourierSeries riesz_project(const FourierSeries& s) {
    if (s.max_index() < 0) return FourierSeries(0, 0);
    return s.window(std::max(0, s.min_index()), s.max_index());
}

std::size_t quadrature_grid_size(int degree) {
    const std::size_t want = std::max<std::size_t>(8 * static_cast<std::size_t>(std::max(degree, 1)), 8192);
    return std::bit_ceil(want);
}

std::vector<cplx> dft(std::span<const cplx> x) {
    auto out = transform(x, FFTW_FORWARD);
    const double inv = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= inv;
    return out;
}

std::vector<cplx> inverse_dft(std::span<const cplx> coefficients) { return transform(coefficients, FFTW_BACKWARD); }

FourierSeries fourier_from_samples(std::span<const cplx> samples, int lo, int hi) {
    const auto L = static_cast<long long>(samples.size());
    if (hi - lo + 1 > L) throw DomainError("coefficient range exceeds the grid size");
    std::vector<cplx> clean(samples.begin(), samples.end());
    for (auto& s : clean) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) s = {};
    }
    const auto X = dft(clean);
    FourierSeries out(lo, hi);
    for (int n = lo; n <= hi; ++n) {
        const long long k = ((n % L) + L) % L;
        out.at(n) = X[static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<cplx> samples_from_fourier(const FourierSeries& s, std::size_t grid_size) {
    const auto L = static_cast<long long>(grid_size);
    if (s.max_index() - s.min_index() + 1 > L) throw DomainError("grid too small for the series");
    std::vector<cplx> X(grid_size);
    for (int n = s.min_index(); n <= s.max_index(); ++n) {
        X[static_cast<std::size_t>(((n % L) + L) % L)] += s[n];
    }
    return inverse_dft(X);
}

std::vector<cplx> riesz_project_samples(std::span<const cplx> samples) {
    auto X = dft(samples);
    const std::size_t L = X.size();
    for (std::size_t k = L / 2; k < L; ++k) X[k] = {};
    return inverse_dft(X);
}

bool square_integrable_on_circle(const SymbolExpr& e) noexcept {
    for (cplx t : e.boundary_points()) {
        for (const auto& term : e.terms()) {
            if (!(term.exponent_at(t) > -0.5)) return false;
        }
    }
    return true;
}

FourierSeries fourier_coefficients(const SymbolExpr& e, int degree) {
    return fourier_coefficients(e, degree, quadrature_grid_size(degree));
}

FourierSeries fourier_coefficients(const SymbolExpr& e, int degree, std::size_t grid_size) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    if (!square_integrable_on_circle(e)) throw DomainError("symbol is not square-integrable on the circle");
    return fourier_from_samples(boundary_sample(e, grid_size), -degree, degree);
}

FourierSeries fourier_coefficients(const L2Symbol& v, int degree) {
    return fourier_coefficients(v, degree, quadrature_grid_size(degree));
}

FourierSeries fourier_coefficients(const L2Symbol& v, int degree, std::size_t grid_size) {
    if (degree < 1) throw DomainError("degree must be >= 1");
    FourierSeries out(-degree, degree);
    if (!v.plus().is_zero()) {
        const auto p = fourier_coefficients(v.plus(), degree, grid_size);
        for (int n = 0; n <= degree; ++n) out.at(n) = p[n];
    }
    if (!v.minus().is_zero()) {
        const auto m = fourier_coefficients(v.minus(), degree, grid_size);
        for (int n = 1; n <= degree; ++n) out.at(-n) = std::conj(m[n]);
    }
    return out;
}

}  // namespace tpb
