#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support/corpus.hpp"
#include "tpb/fourier.hpp"

using namespace tpb;
using tpb::testing::Gen;

TEST_CASE("riesz projection on coefficients") {
    FourierSeries s(-1, std::vector<cplx>{1.0, 2.0, 3.0});
    const auto p = riesz_project(s);
    CHECK(p[-1] == cplx{});
    CHECK(p[0] == cplx(2.0));
    CHECK(p[1] == cplx(3.0));

    FourierSeries analytic(0, std::vector<cplx>{1.0, 2.0});
    const auto pa = riesz_project(analytic);
    CHECK(pa[0] == analytic[0]);
    CHECK(pa[1] == analytic[1]);

    FourierSeries neg(-3, std::vector<cplx>{1.0, 2.0, 3.0});
    CHECK(riesz_project(neg).norm_squared() == 0.0);
}

TEST_CASE("dft matches direct summation") {
    Gen gen(7);
    const std::size_t L = 64;
    std::vector<cplx> x(L);
    for (auto& v : x) v = gen.gaussian();
    const auto X = dft(x);
    for (std::size_t k = 0; k < L; ++k) {
        cplx acc{};
        for (std::size_t j = 0; j < L; ++j) acc += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k) / L);
        CHECK(std::abs(X[k] - acc / double(L)) < 1e-13);
    }
    const auto back = inverse_dft(X);
    for (std::size_t j = 0; j < L; ++j) CHECK(std::abs(back[j] - x[j]) < 1e-13);
}

TEST_CASE("quadrature grid size") {
    CHECK(quadrature_grid_size(1) == 8192);
    CHECK(quadrature_grid_size(1024) == 8192);
    CHECK(quadrature_grid_size(1025) == 16384);
}

TEST_CASE("samples and coefficients are inverse on trigonometric polynomials") {
    Gen gen(8);
    const auto s = gen.trig_polynomial(10, 12);
    const auto samples = samples_from_fourier(s, 64);
    const auto back = fourier_from_samples(samples, -10, 12);
    for (int n = -10; n <= 12; ++n) CHECK(std::abs(back[n] - s[n]) < 1e-13);
}

TEST_CASE("riesz projection in the sample domain") {
    Gen gen(9);
    const auto s = gen.trig_polynomial(8, 8);
    const auto proj = riesz_project_samples(samples_from_fourier(s, 64));
    const auto coeffs = fourier_from_samples(proj, -8, 8);
    for (int n = -8; n < 0; ++n) CHECK(std::abs(coeffs[n]) < 1e-13);
    for (int n = 0; n <= 8; ++n) CHECK(std::abs(coeffs[n] - s[n]) < 1e-13);
}

TEST_CASE("coefficients of elementary symbols") {
    const auto z = fourier_coefficients(parse_symbol("z"), 4);
    for (int n = -4; n <= 4; ++n) CHECK(std::abs(z[n] - (n == 1 ? 1.0 : 0.0)) < 1e-14);

    const auto cz = fourier_coefficients(L2Symbol(parse_symbol("0"), parse_symbol("z")), 4);
    for (int n = -4; n <= 4; ++n) CHECK(std::abs(cz[n] - (n == -1 ? 1.0 : 0.0)) < 1e-14);

    // Plain quadrature with the pole point dropped converges like L^(-2/3) here.
    const SymbolExpr third = parse_symbol("(1-z)^-0.3333333333333333");
    CHECK(std::abs(fourier_coefficients(third, 8)[1] - 1.0 / 3.0) < 5e-3);
    CHECK(std::abs(fourier_coefficients(third, 8, std::size_t{1} << 20)[1] - 1.0 / 3.0) < 2e-4);
}

TEST_CASE("quadrature converges to the binomial series") {
    const double a = -1.0 / 3.0;
    const auto oracle = tpb::testing::binomial_series(a, 16);
    const SymbolExpr f = SymbolExpr::linear(1.0, a);
    double prev = 1.0;
    for (std::size_t L : {8192u, 32768u, 131072u}) {
        const auto c = fourier_coefficients(f, 16, L);
        double err = 0.0;
        for (int n = 0; n <= 16; ++n) err = std::max(err, std::abs(c[n] - oracle[n]));
        for (int n = -16; n < 0; ++n) err = std::max(err, std::abs(c[n]));
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("coefficients agree with a naive quadrature") {
    const SymbolExpr f = parse_symbol("(1+z)^0.5 * blaschke(0.3-0.2i) + 2*z^3");
    const auto c = fourier_coefficients(f, 6, 8192);
    for (int n = -6; n <= 6; ++n) {
        CHECK(std::abs(c[n] - tpb::testing::naive_coefficient([&](cplx z) {
                  try {
                      return f(z);
                  } catch (const PoleHit&) {
                      return cplx(NAN, NAN);
                  }
              }, n, 8192)) < 1e-12);
    }
}

TEST_CASE("non-integrable symbols are rejected") {
    CHECK_THROWS_AS(fourier_coefficients(parse_symbol("(1-z)^-0.5"), 4), DomainError);
    CHECK_THROWS_AS(fourier_coefficients(parse_symbol("(1-z)^-1"), 4), DomainError);
    CHECK(square_integrable_on_circle(parse_symbol("(1-z)^-0.49")));
    CHECK_FALSE(square_integrable_on_circle(parse_symbol("(1-z)^-0.5")));
}

TEST_CASE("conjugation symmetry for the co-analytic part") {
    Gen gen(10);
    for (int trial = 0; trial < 10; ++trial) {
        SymbolExpr minus = SymbolExpr::z_power(1) * parse_symbol(gen.symbol_text(-0.2));
        if (!minus.h2_claimed()) continue;
        const auto fm = fourier_coefficients(minus, 12);
        const auto fv = fourier_coefficients(L2Symbol(SymbolExpr{}, minus), 12);
        for (int n = 1; n <= 12; ++n) CHECK(std::abs(fv[-n] - std::conj(fm[n])) < 1e-12);
        for (int n = 0; n <= 12; ++n) CHECK(fv[n] == cplx{});
    }
}
