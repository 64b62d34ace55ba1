#include "tpb/hardy.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace tpb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(cplx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SectionOperator toeplitz_section(const FourierSeries& g, int N, int M) {
    if (N < 0 || M < 0) throw DomainError("section degrees must be non-negative");
    if (g.min_index() > -N || g.max_index() < M) {
        throw DomainError("insufficient coefficient coverage: need indices [" + std::to_string(-N) + ", " +
                          std::to_string(M) + "]");
    }
    SectionOperator s;
    s.kind = SectionKind::Toeplitz;
    s.input_degree = N;
    s.output_degree = M;
    s.matrix.resize(M + 1, N + 1);
    for (int j = 0; j <= M; ++j) {
        for (int k = 0; k <= N; ++k) s.matrix(j, k) = g[j - k];
    }
    return s;
}

SectionOperator analytic_multiplier_section(const SymbolExpr& u, int N, int M) {
    if (N < 0 || M < 0) throw DomainError("section degrees must be non-negative");
    if (!u.analytic_in_disk()) throw DomainError("multiplier has a singularity inside the disk");
    const auto c = taylor_coefficients(u, M);
    SectionOperator s;
    s.kind = SectionKind::AnalyticMultiplier;
    s.input_degree = N;
    s.output_degree = M;
    s.matrix = Eigen::MatrixXcd::Zero(M + 1, N + 1);
    for (int k = 0; k <= N; ++k) {
        for (int j = k; j <= M; ++j) s.matrix(j, k) = c[static_cast<std::size_t>(j - k)];
    }
    return s;
}

std::vector<cplx> taylor_coefficients_on_circle(const std::function<cplx(cplx)>& f, int degree, double r) {
    if (degree < 0) throw DomainError("degree must be non-negative");
    if (!(r > 0.0 && r < 1.0)) throw DomainError("sampling radius must lie in (0, 1)");
    const std::size_t L = std::bit_ceil(std::max<std::size_t>(4 * (static_cast<std::size_t>(degree) + 1), 1024));
    std::vector<cplx> samples(L);
    for (std::size_t j = 0; j < L; ++j) {
        samples[j] = f(std::polar(r, kTwoPi * static_cast<double>(j) / static_cast<double>(L)));
    }
    const auto X = dft(samples);
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    double scale = 1.0;
    for (int n = 0; n <= degree; ++n) {
        c[n] = X[n] / scale;
        scale *= r;
    }
    return c;
}

FourierSeries outer_from_modulus(std::span<const double> phi, int degree) {
    const std::size_t L = phi.size();
    if (L < 8 || !std::has_single_bit(L)) throw DomainError("modulus grid must be a power of two >= 8");
    if (degree < 0 || 2 * static_cast<std::size_t>(degree) >= L) throw DomainError("degree too large for the grid");

    std::vector<std::size_t> zeros;
    for (std::size_t j = 0; j < L; ++j) {
        if (!(phi[j] >= 0.0) || !std::isfinite(phi[j])) throw DomainError("modulus must be finite and non-negative");
        if (phi[j] == 0.0) zeros.push_back(j);
    }
    if (zeros.size() * 8 > L) throw DomainError("modulus vanishes on a positive-measure portion of the grid");
    for (std::size_t z : zeros) {
        const std::size_t nxt = (z + 1) % L;
        const std::size_t prv = (z + L - 1) % L;
        if (phi[nxt] == 0.0 || phi[prv] == 0.0 || phi[(z + 2) % L] == 0.0 || phi[(z + L - 2) % L] == 0.0) {
            throw DomainError("modulus vanishes on a positive-measure portion of the grid");
        }
    }

    std::vector<cplx> logs(L);
    for (std::size_t j = 0; j < L; ++j) logs[j] = phi[j] > 0.0 ? std::log(phi[j]) : 0.0;

    // Near an isolated zero, phi ~ |zeta - zeta_0|^a; estimate a from the two
    // neighbours on each side and substitute the cell average of a log|.|.
    const double h = std::numbers::pi / static_cast<double>(L);
    const double chord_ratio = std::log(std::sin(2.0 * h) / std::sin(h));
    const double cell_shift = std::log(2.0 * static_cast<double>(L) * std::sin(h));
    for (std::size_t z : zeros) {
        const double r1 = logs[(z + 1) % L].real();
        const double r2 = logs[(z + 2) % L].real();
        const double l1 = logs[(z + L - 1) % L].real();
        const double l2 = logs[(z + L - 2) % L].real();
        const double a = 0.5 * ((r2 - r1) + (l2 - l1)) / chord_ratio;
        logs[z] = 0.5 * (r1 + l1) - a * cell_shift;
    }

    const auto Lc = dft(logs);
    std::vector<cplx> hcoef(static_cast<std::size_t>(degree) + 1);
    hcoef[0] = Lc[0];
    for (int n = 1; n <= degree; ++n) hcoef[n] = 2.0 * Lc[static_cast<std::size_t>(n)];

    // g = exp(h):  n g_n = sum_{k=1}^n k h_k g_{n-k}
    std::vector<cplx> g(static_cast<std::size_t>(degree) + 1);
    g[0] = std::exp(hcoef[0]);
    for (int n = 1; n <= degree; ++n) {
        cplx s{};
        for (int k = 1; k <= n; ++k) s += static_cast<double>(k) * hcoef[k] * g[n - k];
        g[n] = s / static_cast<double>(n);
    }
    return FourierSeries(0, std::move(g));
}

KernelVector kernel_vector(cplx x, int degree, bool normalized) {
    if (!(std::abs(x) < 1.0)) throw DomainError("kernel point must lie in the open disk");
    if (degree < 0) throw DomainError("degree must be non-negative");
    KernelVector k;
    k.point = x;
    k.normalized = normalized;
    k.coefficients.resize(degree + 1);
    const cplx xc = std::conj(x);
    const double rho2 = std::norm(x);
    const double scale = normalized ? std::sqrt(1.0 - rho2) : 1.0;
    cplx p = scale;
    for (int n = 0; n <= degree; ++n) {
        k.coefficients[n] = p;
        p *= xc;
    }
    k.truncation_bound = scale * std::pow(std::abs(x), degree + 1) / std::sqrt(1.0 - rho2);
    return k;
}

cplx polynomial_value(std::span<const cplx> c, cplx x) {
    cplx v{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

ReproducingValue reproducing_eval(const FourierSeries& f, cplx x, int kernel_degree) {
    if (!(std::abs(x) < 1.0)) throw DomainError("evaluation point must lie in the open disk");
    const int hi = std::max(f.max_index(), 0);
    std::vector<cplx> c(static_cast<std::size_t>(hi) + 1);
    for (int n = 0; n <= hi; ++n) c[n] = f[n];

    ReproducingValue out;
    out.direct = polynomial_value(c, x);

    const auto k = kernel_vector(x, kernel_degree);
    cplx acc{};
    const int top = std::min(hi, kernel_degree);
    for (int n = 0; n <= top; ++n) acc += c[n] * std::conj(k.coefficients[n]);
    out.via_kernel = acc;

    double tail = 0.0;
    for (int n = top + 1; n <= hi; ++n) tail += std::norm(c[n]);
    out.truncation_bound = std::sqrt(tail) * k.truncation_bound + 1e-15 * std::abs(out.direct);
    return out;
}

double poisson_extension(std::span<const double> h, cplx w) {
    if (!(std::abs(w) < 1.0)) throw DomainError("Poisson point must lie in the open disk");
    const std::size_t L = h.size();
    if (L == 0) throw DomainError("empty sample table");
    const double mass = 1.0 - std::norm(w);
    double acc = 0.0;
    for (std::size_t j = 0; j < L; ++j) {
        if (!std::isfinite(h[j])) continue;
        const cplx zeta = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(L));
        acc += h[j] * mass / std::norm(zeta - w);
    }
    return acc / static_cast<double>(L);
}

double poisson_extension(const std::function<double(double)>& h, cplx w, std::span<const double> breakpoints) {
    const double r = std::abs(w);
    if (!(r < 1.0)) throw DomainError("Poisson point must lie in the open disk");
    const double phi = std::arg(w);
    const double mass = 1.0 - r * r;

    std::vector<double> cuts{0.0, kTwoPi};
    auto add = [&](double a) {
        a = std::fmod(a, kTwoPi);
        if (a < 0) a += kTwoPi;
        cuts.push_back(a);
    };
    for (double b : breakpoints) add(b);
    if (r > 0.0) {
        add(phi);
        for (double s : {1.0, 8.0, 64.0, 512.0}) {
            const double d = s * (1.0 - r);
            if (d >= std::numbers::pi) break;
            add(phi - d);
            add(phi + d);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return b - a < 1e-15; }), cuts.end());

    auto integrand = [&](double t) {
        const double v = h(t);
        if (!std::isfinite(v)) return 0.0;
        return v * mass / (1.0 - 2.0 * r * std::cos(t - phi) + r * r);
    };
    boost::math::quadrature::tanh_sinh<double> integrator(12);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += integrator.integrate(integrand, cuts[i], cuts[i + 1], 1e-10);
    }
    return total / kTwoPi;
}

FourierSeries range_kernel(const SymbolExpr& v, cplx x, int N) {
    if (!(std::abs(x) < 1.0)) throw DomainError("kernel point must lie in the open disk");
    if (N < 0) throw DomainError("degree must be non-negative");
    if (!v.h2_claimed()) throw DomainError("range kernel needs an analytic H^2 symbol");
    const std::size_t L = quadrature_grid_size(std::max(N, 1));
    auto samples = boundary_sample(v, L);
    const cplx xc = std::conj(x);
    for (std::size_t j = 0; j < L; ++j) {
        if (!finite(samples[j])) continue;
        const cplx zeta = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(L));
        samples[j] = std::norm(samples[j]) / (1.0 - xc * zeta);
    }
    return fourier_from_samples(samples, 0, N);
}

RangeSpace::RangeSpace(const SymbolExpr& v, int N) : N_(N) {
    if (N < 0) throw DomainError("degree must be non-negative");
    if (!v.h2_claimed()) throw DomainError("range space needs an analytic H^2 symbol");
    const auto c = taylor_coefficients(v, N);
    if (std::abs(c[0]) < 1e-14) throw DomainError("symbol vanishes at 0, so it is not outer");
    T_ = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    for (int j = 0; j <= N; ++j) {
        for (int k = j; k <= N; ++k) T_(j, k) = std::conj(c[static_cast<std::size_t>(k - j)]);
    }
}

Eigen::VectorXcd RangeSpace::apply(const Eigen::VectorXcd& f) const {
    if (f.size() != N_ + 1) throw DomainError("vector length does not match the range-space degree");
    return T_ * f;
}

Eigen::VectorXcd RangeSpace::preimage(const Eigen::VectorXcd& h) const {
    if (h.size() != N_ + 1) throw DomainError("vector length does not match the range-space degree");
    return T_.triangularView<Eigen::Upper>().solve(h);
}

cplx RangeSpace::inner(const Eigen::VectorXcd& h1, const Eigen::VectorXcd& h2) const {
    // Eigen's dot conjugates the first argument.
    return preimage(h2).dot(preimage(h1));
}

}  // namespace tpb
