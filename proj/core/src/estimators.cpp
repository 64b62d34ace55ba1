#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "tpb/analyzer.hpp"

namespace tpb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(cplx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx grid_point(std::size_t j, std::size_t L) {
    return std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(L));
}

std::vector<cplx> all_boundary_points(const SymbolExpr& u, const L2Symbol& v) {
    std::vector<cplx> pts = u.boundary_points();
    for (const auto* e : {&v.plus(), &v.minus()}) {
        for (cplx p : e->boundary_points()) {
            if (std::none_of(pts.begin(), pts.end(), [&](cplx q) { return same_point(p, q); })) pts.push_back(p);
        }
    }
    return pts;
}

int resolve_output_degree(int N, int M) {
    if (N < 0) throw DomainError("section degree must be non-negative");
    if (M < 0) M = 2 * N;
    return M;
}

// Samples of Pi_M P(v f_k) on an L-grid for f_k = z^k, k = 0..N (one column per k).
Eigen::MatrixXcd projected_columns(const L2Symbol& v, int N, int M, std::size_t L) {
    const auto vc = fourier_coefficients(v, std::max(N, M), L);
    Eigen::MatrixXcd S(static_cast<Eigen::Index>(L), N + 1);
    for (int k = 0; k <= N; ++k) {
        FourierSeries col(0, M);
        for (int n = 0; n <= M; ++n) col.at(n) = vc[n - k];
        const auto s = samples_from_fourier(col, L);
        for (std::size_t j = 0; j < L; ++j) S(static_cast<Eigen::Index>(j), k) = s[j];
    }
    return S;
}

}  // namespace

SectionOperator product_section(const SymbolExpr& u, const L2Symbol& v, int N, int M) {
    M = resolve_output_degree(N, M);
    const auto vc = fourier_coefficients(v, std::max({N, M, 1}));
    const auto Tv = toeplitz_section(vc, N, M);
    const auto Mu = analytic_multiplier_section(u, M, M);
    SectionOperator s;
    s.kind = SectionKind::Product;
    s.input_degree = N;
    s.output_degree = M;
    s.matrix = Mu.matrix * Tv.matrix;
    return s;
}

std::vector<std::size_t> default_grid_schedule() { return {512, 1024, 2048, 4096, 8192, 16384}; }

RefinementTable ess_sup_product(const SymbolExpr& u, const L2Symbol& v, const std::vector<std::size_t>& grids,
                                const TrendThresholds& th) {
    RefinementTable table;
    std::vector<double> values;
    for (std::size_t L : grids) {
        const auto us = boundary_sample(u, L);
        const auto vs = boundary_sample(v, L);
        double m = 0.0;
        for (std::size_t j = 0; j < L; ++j) {
            const cplx p = us[j] * vs[j];
            if (finite(p)) m = std::max(m, std::abs(p));
        }
        table.rows.push_back({L, m});
        values.push_back(m);
    }
    table.trend = classify_trend(values, th);
    return table;
}

namespace {

SarasonTable sarason_impl(const std::function<double(double)>& hu, const std::function<double(double)>& hv,
                          std::vector<double> breaks, const std::vector<double>& radii, int angles,
                          const SarasonThresholds& th) {
    if (angles < 1) throw DomainError("angle count must be positive");
    std::vector<double> thetas;
    for (int k = 0; k < angles; ++k) thetas.push_back(kTwoPi * k / angles);
    for (double b : breaks) {
        if (std::none_of(thetas.begin(), thetas.end(), [&](double t) { return std::abs(t - b) < 1e-14; })) {
            thetas.push_back(b);
        }
    }

    SarasonTable table;
    for (double r : radii) {
        if (!(r >= 0.0 && r < 1.0)) throw DomainError("Sarason radii must lie in [0, 1)");
        SarasonRow row;
        row.radius = r;
        row.value = -1.0;
        for (double th_angle : thetas) {
            const cplx w = std::polar(r, th_angle);
            const double val = poisson_extension(hu, w, breaks) * poisson_extension(hv, w, breaks);
            if (val > row.value) {
                row.value = val;
                row.angle = th_angle;
            }
        }
        table.rows.push_back(row);
    }

    // Fit on the radii closest to the circle.
    const std::size_t n = table.rows.size();
    if (n >= 3) {
        const std::size_t start = n / 2;
        std::vector<double> x, y;
        for (std::size_t i = start; i < n; ++i) {
            x.push_back(std::log(1.0 - table.rows[i].radius));
            y.push_back(std::log(table.rows[i].value));
        }
        table.growth_exponent = -fit_slope(x, y);
        if (!std::isfinite(table.growth_exponent)) table.trend = Trend::Inconclusive;
        else if (table.growth_exponent <= th.finite_exponent) table.trend = Trend::Finite;
        else if (table.growth_exponent >= th.growth_exponent) table.trend = Trend::Growth;
        else table.trend = Trend::Inconclusive;
    }
    return table;
}

std::vector<double> angles_of(const std::vector<cplx>& pts) {
    std::vector<double> out;
    for (cplx p : pts) {
        double a = std::arg(p);
        if (a < 0) a += kTwoPi;
        out.push_back(a);
    }
    return out;
}

template <typename F>
std::function<double(double)> squared_modulus(F f) {
    return [f](double theta) {
        try {
            return std::norm(f(std::polar(1.0, theta)));
        } catch (const PoleHit&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
}

}  // namespace

SarasonTable sarason_scan(const SymbolExpr& u, const L2Symbol& v, const std::vector<double>& radii, int angles,
                          const SarasonThresholds& th) {
    if (!square_integrable_on_circle(u)) throw DomainError("|u|^2 is not integrable on the circle");
    return sarason_impl(squared_modulus([&u](cplx z) { return u(z); }),
                        squared_modulus([&v](cplx z) { return v(z); }), angles_of(all_boundary_points(u, v)), radii,
                        angles, th);
}

SarasonTable sarason_scan(const SymbolExpr& u, const SymbolExpr& v, const std::vector<double>& radii, int angles,
                          const SarasonThresholds& th) {
    return sarason_scan(u, L2Symbol(v), radii, angles, th);
}

double two_weighted_projection_norm(const L2Symbol& v, const SymbolExpr& u, int N, const WeightedOptions& opt) {
    const int M = resolve_output_degree(N, opt.output_degree);
    const int span = opt.domain == WeightedDomain::DiagramImage ? M + N : 2 * N + M;
    const std::size_t L = opt.grid ? opt.grid : quadrature_grid_size(2 * span);
    if (static_cast<std::size_t>(2 * span + 1) > L) throw DomainError("quadrature grid too small for the degrees");

    const auto vs = boundary_sample(v, L);
    const auto us = boundary_sample(u, L);
    std::vector<cplx> rho1(L), rho2(L), vmask(L);
    for (std::size_t j = 0; j < L; ++j) {
        const bool vok = finite(vs[j]) && std::abs(vs[j]) > 0.0;
        rho1[j] = vok ? 1.0 / std::norm(vs[j]) : 0.0;
        vmask[j] = vok ? 1.0 : 0.0;  // |v|^2 rho1 on the grid
        rho2[j] = finite(us[j]) ? std::norm(us[j]) : 0.0;
    }
    const auto r2 = dft(rho2);
    auto coef = [&](const std::vector<cplx>& X, long long n) {
        const auto Ls = static_cast<long long>(L);
        return X[static_cast<std::size_t>(((n % Ls) + Ls) % Ls)];
    };

    // G2(n, m) = rho2^(n - m), n, m = 0..M
    Eigen::MatrixXcd G2(M + 1, M + 1);
    for (int n = 0; n <= M; ++n) {
        for (int m = 0; m <= M; ++m) G2(n, m) = coef(r2, n - m);
    }

    Eigen::MatrixXcd G1;
    Eigen::MatrixXcd X;
    if (opt.domain == WeightedDomain::DiagramImage) {
        // Basis g_k = v z^k. Gram in L^2(rho1): (k, l) -> sum |v|^2 rho1 z^(l-k) / L.
        const auto w = dft(vmask);
        G1.resize(N + 1, N + 1);
        for (int k = 0; k <= N; ++k) {
            for (int l = 0; l <= N; ++l) G1(k, l) = coef(w, k - l);
        }
        // P g_k from a grid FFT of v.
        std::vector<cplx> vclean(vs.begin(), vs.end());
        for (auto& s : vclean) {
            if (!finite(s)) s = {};
        }
        const auto vh = dft(vclean);
        X.resize(M + 1, N + 1);
        for (int n = 0; n <= M; ++n) {
            for (int k = 0; k <= N; ++k) X(n, k) = coef(vh, n - k);
        }
    } else {
        // Basis z^k, k = -N..N; P keeps k >= 0.
        const auto r1 = dft(rho1);
        G1.resize(2 * N + 1, 2 * N + 1);
        for (int a = 0; a <= 2 * N; ++a) {
            for (int b = 0; b <= 2 * N; ++b) G1(a, b) = coef(r1, a - b);
        }
        X = Eigen::MatrixXcd::Zero(M + 1, 2 * N + 1);
        for (int k = 0; k <= std::min(N, M); ++k) X(k, N + k) = 1.0;
    }

    const Eigen::MatrixXcd S = inverse_sqrt_hermitian(0.5 * (G1 + G1.adjoint()), opt.gram_floor);
    Eigen::MatrixXcd Q = S * X.adjoint() * G2 * X * S;
    Q = 0.5 * (Q + Q.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Q, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw DomainError("weighted eigenproblem failed");
    return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

CarlesonEstimate carleson_constant(const SymbolExpr& u, const L2Symbol& v, int N, int M) {
    M = resolve_output_degree(N, M);
    const std::size_t L = quadrature_grid_size(2 * std::max(M, 1));
    Eigen::MatrixXcd S = projected_columns(v, N, M, L);
    const auto us = boundary_sample(u, L);
    const double inv_sqrt_L = 1.0 / std::sqrt(static_cast<double>(L));
    for (std::size_t j = 0; j < L; ++j) {
        const cplx w = finite(us[j]) ? us[j] * inv_sqrt_L : cplx{};
        S.row(static_cast<Eigen::Index>(j)) *= w;
    }
    CarlesonEstimate out;
    out.estimate = section_norm(S, 1e-10);
    out.value = out.estimate.value;
    out.range_space_form = v.co_analytic() && !v.minus().is_zero();
    return out;
}

double kernel_lower_bound(const SymbolExpr& u, const L2Symbol& v, const KernelGrid& grid) {
    if (!(grid.r_max > 0.0 && grid.r_max < 1.0)) throw DomainError("kernel grid radius must lie in (0, 1)");
    std::vector<double> radii;
    for (int i = 0; i <= grid.rings; ++i) radii.push_back(grid.r_max * i / std::max(grid.rings, 1));
    for (int j = 1; j < 64; ++j) {
        const double r = 1.0 - std::ldexp(1.0, -j);
        if (r >= grid.r_max) break;
        radii.push_back(r);
    }
    std::vector<double> thetas;
    for (int k = 0; k < grid.angles; ++k) thetas.push_back(kTwoPi * k / grid.angles);
    for (double a : angles_of(all_boundary_points(u, v))) thetas.push_back(a);

    double best = 0.0;
    for (double r : radii) {
        for (double t : thetas) {
            const cplx x = std::polar(r, t);
            const double val = std::abs(u(x) * v(x));
            if (std::isfinite(val)) best = std::max(best, val);
        }
    }
    return best;
}

namespace {

// Dyadic-shell boundedness test of q near t: sup over shells at chord distance
// (eps 2^-k-1, eps 2^-k], both sides, k = 0..15; bounded if sup does not grow.
bool locally_bounded(const std::function<cplx(cplx)>& q, cplx t, double eps) {
    std::vector<double> ks, logs;
    for (int k = 0; k < 16; ++k) {
        double sup = 0.0;
        for (int s = 0; s < 64; ++s) {
            const double d = eps * std::ldexp(1.0, -k - 1) * (1.0 + (s + 0.5) / 64.0);
            const double ang = 2.0 * std::asin(std::min(d / 2.0, 1.0));
            for (double sign : {1.0, -1.0}) {
                cplx val;
                try {
                    val = q(t * std::polar(1.0, sign * ang));
                } catch (const PoleHit&) {
                    return false;
                }
                if (!finite(val)) return false;
                sup = std::max(sup, std::abs(val));
            }
        }
        ks.push_back(k);
        logs.push_back(std::log2(std::max(sup, 1e-300)));
    }
    return fit_slope(ks, logs) <= 0.05;
}

}  // namespace

EpsilonChoice pick_epsilon(const SymbolExpr& u, const L2Symbol& v, double floor) {
    const auto E = detect_poles(u, SymbolPart::Analytic);
    const auto F = detect_poles(v);
    EpsilonChoice out;
    std::vector<cplx> all;
    for (const auto& p : E) all.push_back(p.location);
    for (const auto& p : F) {
        if (std::none_of(all.begin(), all.end(), [&](cplx q) { return same_point(q, p.location); })) {
            all.push_back(p.location);
        }
    }
    double eps = 0.1;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) eps = std::min(eps, 0.5 * std::abs(all[i] - all[j]));
    }
    if (all.empty()) {
        out.eps = eps;
        out.note = "no poles; conditions are vacuous";
        return out;
    }

    auto conditions_hold = [&](double e, std::string& why) {
        for (const auto& p : E) {
            const cplx t = p.location;
            const int k = p.order;
            auto vp = [&](cplx z) { return v.plus()(z) / std::pow(z - t, k); };
            auto vm = [&](cplx z) { return v.minus()(z) / std::pow(z - t, k); };
            auto uu = [&](cplx z) { return u(z) * std::pow(z - t, k); };
            if (!locally_bounded(vp, t, e)) return why = "v_plus/(z-t)^k unbounded at " + format_complex(t), false;
            if (!locally_bounded(vm, t, e)) return why = "v_minus/(z-t)^k unbounded at " + format_complex(t), false;
            if (!locally_bounded(uu, t, e)) return why = "u (z-t)^k unbounded at " + format_complex(t), false;
        }
        for (const auto& p : F) {
            const cplx s = p.location;
            const int n = p.order;
            auto uq = [&](cplx z) { return u(z) / std::pow(z - s, n); };
            auto vv = [&](cplx z) { return v(z) * std::pow(z - s, n); };
            if (!locally_bounded(uq, s, e)) return why = "u/(z-s)^n unbounded at " + format_complex(s), false;
            if (!locally_bounded(vv, s, e)) return why = "v (z-s)^n unbounded at " + format_complex(s), false;
        }
        return true;
    };

    std::string why;
    while (eps >= floor) {
        if (conditions_hold(eps, why)) {
            out.eps = eps;
            return out;
        }
        eps *= 0.5;
        ++out.halvings;
    }
    out.eps = eps * 2.0;
    out.flagged = true;
    out.note = "no valid epsilon above " + format_number(floor) + ": " + why;
    return out;
}

EnergyParts energy_decomposition(const SymbolExpr& u, const L2Symbol& v, const FourierSeries& f, double eps,
                                 std::size_t grid) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    const auto E = detect_poles(u, SymbolPart::Analytic);
    const auto F = detect_poles(v);
    const auto fs = samples_from_fourier(riesz_project(f), grid);
    const auto vs = boundary_sample(v, grid);
    std::vector<cplx> prod(grid);
    for (std::size_t j = 0; j < grid; ++j) prod[j] = finite(vs[j]) ? vs[j] * fs[j] : cplx{};
    const auto g = riesz_project_samples(prod);
    const auto us = boundary_sample(u, grid);

    EnergyParts out;
    const double w = 1.0 / static_cast<double>(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        const cplx val = us[j] * g[j];
        if (!finite(val)) continue;
        const double e = std::norm(val) * w;
        const cplx zeta = grid_point(j, grid);
        out.total += e;
        auto near = [&](const std::vector<PoleRecord>& ps) {
            return std::any_of(ps.begin(), ps.end(), [&](const PoleRecord& p) { return std::abs(zeta - p.location) < eps; });
        };
        if (near(F)) out.near_v_poles += e;
        else if (near(E)) out.near_u_poles += e;
        else out.outside += e;
    }
    return out;
}

}  // namespace tpb
