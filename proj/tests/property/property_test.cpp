#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support/corpus.hpp"
#include "tpb/analyzer.hpp"
#include "tpb/hardy.hpp"
#include "tpb/pathology.hpp"

using namespace tpb;
using tpb::testing::dense_norm;
using tpb::testing::Gen;

namespace {

/// Analytic polynomial symbol of degree <= d with small random coefficients.
SymbolExpr random_polynomial(Gen& gen, int d) {
    SymbolExpr e;
    for (int k = 0; k <= d; ++k) e = e + gen.gaussian() * SymbolExpr::z_power(k);
    return e;
}

/// Product of boundary factors (1 - conj(t) z)^a with a in [lo, hi].
SymbolExpr random_boundary_product(Gen& gen, int factors, double lo, double hi) {
    SymbolExpr e = SymbolExpr::constant(1.0);
    for (int k = 0; k < factors; ++k) e = e * SymbolExpr::linear(std::conj(gen.unit_point()), gen.uniform(lo, hi));
    return e;
}

}  // namespace

TEST_CASE("projection is idempotent and orthogonal") {
    Gen gen(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = gen.integer(0, 64);
        const auto f = gen.trig_polynomial(d, d);
        const auto p = riesz_project(f);
        const auto pp = riesz_project(p);
        for (int n = -d; n <= d; ++n) CHECK(p[n] == pp[n]);
        const double lhs = p.norm_squared() + (f - p).norm_squared();
        CHECK(std::abs(lhs - f.norm_squared()) <= 1e-10 * f.norm_squared());
    }
}

TEST_CASE("discrete Parseval on random symbols") {
    Gen gen(102);
    for (int trial = 0; trial < 20; ++trial) {
        const SymbolExpr g = random_polynomial(gen, gen.integer(0, 6)) * random_boundary_product(gen, 2, -0.25, 1.5);
        const std::size_t L = 4096;
        const auto s = boundary_sample(g, L);
        double quad = 0.0;
        for (cplx c : s) {
            if (std::isfinite(std::abs(c))) quad += std::norm(c);
        }
        quad /= double(L);
        // All L coefficients of the sampled function recover the sample energy exactly.
        const auto c = fourier_from_samples(s, -int(L / 2), int(L / 2) - 1);
        CHECK(std::abs(c.norm_squared() - quad) <= 1e-10 * quad);
    }
}

TEST_CASE("Parseval at degree 1024 for mildly singular symbols") {
    Gen gen(103);
    for (int trial = 0; trial < 10; ++trial) {
        const SymbolExpr g = random_polynomial(gen, 3) * random_boundary_product(gen, 2, -0.25, 1.0);
        const auto c = fourier_coefficients(g, 1024);
        const std::size_t L = 1 << 16;
        const auto s = boundary_sample(g, L);
        double quad = 0.0;
        for (cplx x : s) {
            if (std::isfinite(std::abs(x))) quad += std::norm(x);
        }
        quad /= double(L);
        CHECK(std::abs(c.norm_squared() - quad) <= 0.01 * quad);
    }
}

TEST_CASE("kernel reproduction on random polynomials") {
    Gen gen(104);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = gen.trig_polynomial(0, gen.integer(0, 32));
        for (int k = 0; k < 5; ++k) {
            const auto r = reproducing_eval(f, gen.disk_point(0.9));
            CHECK(std::abs(r.direct - r.via_kernel) <= 1e-8);
        }
    }
}

TEST_CASE("section norm matches the dense oracle on random product sections") {
    Gen gen(105);
    for (int trial = 0; trial < 12; ++trial) {
        const SymbolExpr u = random_polynomial(gen, 2) * random_boundary_product(gen, 1, -1.0, 1.0);
        const L2Symbol v(random_polynomial(gen, 2) * random_boundary_product(gen, 1, -0.3, 1.0),
                         SymbolExpr::z_power(1) * random_polynomial(gen, 1));
        const int N = gen.integer(4, 48);
        const auto A = product_section(u, v, N, 2 * N);
        const double oracle = dense_norm(A.matrix);
        const auto est = section_norm(A);
        CHECK(est.converged);
        CHECK(std::abs(est.value - oracle) <= 1e-8 * oracle);
    }
}

TEST_CASE("section norms are monotone in N and M on random pairs") {
    Gen gen(106);
    for (int trial = 0; trial < 6; ++trial) {
        const SymbolExpr u = random_boundary_product(gen, 1, -1.0, 0.5);
        const L2Symbol v(random_polynomial(gen, 2));
        double prev = 0.0;
        for (int N = 4; N <= 64; N *= 2) {
            const double n = dense_norm(product_section(u, v, N, 2 * N).matrix);
            CHECK(n >= prev * (1.0 - 1e-12));
            prev = n;
        }
        prev = 0.0;
        for (int M = 16; M <= 128; M *= 2) {
            const double n = dense_norm(product_section(u, v, 16, M).matrix);
            CHECK(n >= prev * (1.0 - 1e-12));
            prev = n;
        }
    }
}

TEST_CASE("kernel lower bound stays below the section norm on random bounded pairs") {
    Gen gen(107);
    for (int trial = 0; trial < 8; ++trial) {
        const SymbolExpr u = random_polynomial(gen, 3);
        const L2Symbol v(random_polynomial(gen, 3), SymbolExpr::z_power(1) * random_polynomial(gen, 2));
        const double k = kernel_lower_bound(u, v);
        const double s = section_norm(product_section(u, v, 64)).value;
        CHECK(k <= s + 0.05);
    }
}

TEST_CASE("toeplitz sections of real trigonometric symbols are Hermitian") {
    Gen gen(108);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = gen.integer(1, 10);
        FourierSeries g(-12, 12);
        for (int n = 0; n <= d; ++n) {
            const cplx c = n == 0 ? cplx(gen.normal()) : gen.gaussian();
            g.at(n) = c;
            g.at(-n) = std::conj(c);
        }
        const auto T = toeplitz_section(g, 12, 12).matrix;
        CHECK((T - T.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("weighted projection norm scales with the square root of the output weight") {
    Gen gen(109);
    for (int trial = 0; trial < 5; ++trial) {
        const SymbolExpr u = random_polynomial(gen, 2);
        const L2Symbol v(SymbolExpr::constant(1.0) + 0.3 * SymbolExpr::z_power(1));
        const cplx c = gen.gaussian();
        const double a = two_weighted_projection_norm(v, u, 16);
        const double b = two_weighted_projection_norm(v, c * u, 16);
        CHECK(std::abs(b - std::abs(c) * a) <= 1e-8 * b);
    }
}

TEST_CASE("energy parts partition the total on random inputs") {
    Gen gen(110);
    for (int trial = 0; trial < 6; ++trial) {
        const SymbolExpr u = random_boundary_product(gen, 2, -0.4, 0.5);
        const L2Symbol v(random_boundary_product(gen, 2, -0.3, 1.0));
        const auto f = gen.trig_polynomial(0, 16);
        const auto p = energy_decomposition(u, v, f, gen.uniform(0.01, 0.2), 8192);
        CHECK(std::abs(p.outside + p.near_u_poles + p.near_v_poles - p.total) <= 1e-10 * p.total);
    }
}

TEST_CASE("pole-order constructions across truncations") {
    for (int zeros : {6, 8, 10}) {
        for (int n : {1, 2}) {
            const SymbolExpr f = pole_order_function(dyadic_zeros(zeros), n);
            CHECK(oscillation_scan(f, 1.0, n).verdict == ScanVerdict::Bounded);
            CHECK(oscillation_scan(f, 1.0, n - 1).verdict != ScanVerdict::Bounded);
        }
    }
}

TEST_CASE("pole orders of random fractional powers") {
    Gen gen(111);
    for (int trial = 0; trial < 10; ++trial) {
        // Keep the fractional part away from 0 so the one-lower scan has a visible slope.
        const double alpha = gen.integer(0, 1) + gen.uniform(0.2, 1.0);
        const SymbolExpr f = SymbolExpr::linear(1.0, -alpha);
        const auto poles = detect_poles(f);
        REQUIRE(poles.size() == 1);
        const int order = poles[0].order;
        CHECK(order == int(std::ceil(alpha)));
        CHECK(oscillation_scan(f, 1.0, order).verdict == ScanVerdict::Bounded);
        CHECK(oscillation_scan(f, 1.0, order - 1).verdict == ScanVerdict::MonotoneBlowup);
    }
}
