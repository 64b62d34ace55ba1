#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support/corpus.hpp"
#include "tpb/hardy.hpp"
#include "tpb/symbol.hpp"

using namespace tpb;
using tpb::testing::Gen;

TEST_CASE("evaluation at interior points") {
    CHECK(eval_symbol(parse_symbol("z"), 0.5) == cplx(0.5));
    CHECK(std::abs(eval_symbol(parse_symbol("(1-z)^-1"), 0.0) - 1.0) < 1e-15);
    // (|a|/a)(a - z)/(1 - conj(a) z) at z = 0 is |a|.
    CHECK(std::abs(eval_symbol(parse_symbol("blaschke(0.5)"), 0.0) - 0.5) < 1e-15);
    const cplx a{0.3, -0.4};
    const SymbolExpr b = SymbolExpr::blaschke({a});
    CHECK(std::abs(b(0.0) - std::abs(a)) < 1e-15);
    CHECK(std::abs(b(a)) < 1e-15);
}

TEST_CASE("principal branch for real powers") {
    const SymbolExpr f = parse_symbol("(1-z)^0.5");
    const cplx z{0.2, 0.7};
    CHECK(std::abs(f(z) - std::sqrt(1.0 - z)) < 1e-14);
    CHECK(std::abs(f(-1.0) - std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("evaluation at a pole signals a pole hit") {
    const SymbolExpr f = parse_symbol("(1-z)^-1");
    CHECK_THROWS_AS(f(1.0), PoleHit);
    try {
        f(1.0);
    } catch (const PoleHit& e) {
        CHECK(std::abs(e.location() - 1.0) < 1e-15);
    }
    CHECK_NOTHROW(parse_symbol("(1-z)^2")(1.0));
}

TEST_CASE("boundary samples") {
    const auto ones = boundary_sample(parse_symbol("1"), 8);
    REQUIRE(ones.size() == 8);
    for (cplx c : ones) CHECK(c == cplx(1.0));

    const auto zs = boundary_sample(parse_symbol("z"), 8);
    CHECK(std::abs(zs[0] - 1.0) < 1e-15);
    CHECK(std::abs(zs[2] - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(zs[4] + 1.0) < 1e-15);
    CHECK(std::abs(zs[6] - cplx(0, -1)) < 1e-15);

    const auto p = boundary_sample(parse_symbol("(1-z)^-0.33"), 8);
    CHECK_FALSE(std::isfinite(std::abs(p[0])));
    for (std::size_t j = 1; j < 8; ++j) CHECK(std::isfinite(std::abs(p[j])));

    CHECK_THROWS_AS(boundary_sample(parse_symbol("z"), 4), DomainError);
    CHECK_THROWS_AS(boundary_sample(parse_symbol("z"), 12), DomainError);
}

TEST_CASE("pole detection") {
    auto poles = detect_poles(parse_symbol("(1-z)^-0.33"));
    REQUIRE(poles.size() == 1);
    CHECK(std::abs(poles[0].location - 1.0) < 1e-15);
    CHECK(poles[0].order == 1);

    poles = detect_poles(parse_symbol("(1-z)^-1 * (1+z)^-2"));
    REQUIRE(poles.size() == 2);
    for (const auto& p : poles) {
        if (std::abs(p.location - 1.0) < 1e-12) CHECK(p.order == 1);
        else {
            CHECK(std::abs(p.location + 1.0) < 1e-12);
            CHECK(p.order == 2);
        }
    }

    CHECK(detect_poles(parse_symbol("1")).empty());
    CHECK(detect_poles(parse_symbol("(1-z)^1.5")).empty());
    // Order is ceil(-alpha).
    CHECK(detect_poles(parse_symbol("(1-z)^-1.2"))[0].order == 2);
    CHECK(detect_poles(parse_symbol("(1-z)^-2"))[0].order == 2);
}

TEST_CASE("pole detection tags the part") {
    const L2Symbol v(parse_symbol("(1+z)^-0.25"), parse_symbol("z*(1-z)^-0.25"));
    const auto poles = detect_poles(v);
    REQUIRE(poles.size() == 2);
    int analytic = 0, co = 0;
    for (const auto& p : poles) {
        CHECK(std::abs(std::abs(p.location) - 1.0) < 1e-12);
        if (p.part == SymbolPart::Analytic) {
            ++analytic;
            CHECK(std::abs(p.location + 1.0) < 1e-12);
        } else {
            ++co;
            CHECK(std::abs(p.location - 1.0) < 1e-12);
        }
    }
    CHECK(analytic == 1);
    CHECK(co == 1);
}

TEST_CASE("pole order matches arc behaviour for fractional powers") {
    Gen gen(11);
    for (int trial = 0; trial < 10; ++trial) {
        const double alpha = gen.uniform(0.05, 0.49);
        const cplx t = gen.unit_point();
        const SymbolExpr f = SymbolExpr::linear(std::conj(t), -alpha);
        double prev_f = 0.0, prev_g = 0.0;
        for (int k = 2; k <= 30; k += 4) {
            const double d = std::ldexp(1.0, -k);
            const cplx z = t * std::polar(1.0, d);
            const double mf = std::abs(f(z));
            const double mg = std::abs((z - t) * f(z));
            if (k > 2) {
                CHECK(mf > prev_f);
                CHECK(mg < prev_g);
            }
            prev_f = mf;
            prev_g = mg;
        }
        CHECK(prev_g < 1e-4);
    }
}

TEST_CASE("Blaschke products are unimodular on the circle") {
    Gen gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> zeros;
        const int n = gen.integer(1, 8);
        for (int k = 0; k < n; ++k) zeros.push_back(gen.disk_point(0.99));
        const auto s = boundary_sample(SymbolExpr::blaschke(zeros), 256);
        for (cplx c : s) CHECK(std::abs(std::abs(c) - 1.0) < 1e-10);
    }
}

TEST_CASE("Blaschke zeros must lie in the open disk") {
    CHECK_THROWS_AS(SymbolExpr::blaschke({cplx(1.0, 0.0)}), DomainError);
    CHECK_THROWS_AS(SymbolExpr::blaschke({cplx(0.0, 1.5)}), DomainError);
}

TEST_CASE("real exponents only on boundary-rooted linear factors") {
    CHECK_NOTHROW(SymbolExpr::linear(cplx(0, 1), 0.3));
    CHECK_THROWS_AS(SymbolExpr::linear(0.5, 0.3), DomainError);
    CHECK_THROWS_AS(SymbolExpr::z_power(1).pow(0.5), DomainError);
}

TEST_CASE("analyticity and H2 claims") {
    CHECK(parse_symbol("(1-z)^-0.4").h2_claimed());
    CHECK_FALSE(parse_symbol("(1-z)^-0.5").h2_claimed());
    CHECK_FALSE(parse_symbol("(1-z)^-1").h2_claimed());
    CHECK(parse_symbol("(1-z)^-1").analytic_in_disk());
    CHECK_FALSE(parse_symbol("(1-2*z)^-1").analytic_in_disk());
    CHECK(parse_symbol("(1-2*z)").analytic_in_disk());
    CHECK_FALSE(parse_symbol("blaschke(0.5)^-1").analytic_in_disk());
}

TEST_CASE("L2 symbol validation and boundary value") {
    CHECK_THROWS_AS(L2Symbol(parse_symbol("1"), parse_symbol("1+z")), DomainError);
    CHECK_THROWS_AS(L2Symbol(parse_symbol("(1-z)^-1"), SymbolExpr{}), DomainError);
    const L2Symbol v(parse_symbol("2+z"), parse_symbol("3*z^2"));
    const cplx z = std::polar(1.0, 0.7);
    CHECK(std::abs(v(z) - (2.0 + z + 3.0 * std::conj(z * z))) < 1e-14);
    CHECK_FALSE(v.co_analytic());
    CHECK_FALSE(v.analytic());
    CHECK(L2Symbol(parse_symbol("1"), parse_symbol("z")).co_analytic());
}

TEST_CASE("closed-form Taylor coefficients match the binomial series") {
    const auto c = taylor_coefficients(parse_symbol("(1-z)^-0.3333333333333333"), 40);
    const auto oracle = tpb::testing::binomial_series(-1.0 / 3.0, 40);
    CHECK(std::abs(c[1] - 1.0 / 3.0) < 1e-15);
    for (int n = 0; n <= 40; ++n) CHECK(std::abs(c[n] - oracle[n]) < 1e-14);

    const auto geo = taylor_coefficients(parse_symbol("(1-z)^-1"), 20);
    for (cplx x : geo) CHECK(std::abs(x - 1.0) < 1e-15);

    CHECK_THROWS_AS(taylor_coefficients(parse_symbol("(1-2*z)^-1"), 4), DomainError);
}

TEST_CASE("Taylor coefficients reproduce values inside the disk") {
    Gen gen(3);
    for (int trial = 0; trial < 25; ++trial) {
        const SymbolExpr e = parse_symbol(gen.symbol_text());
        if (!e.analytic_in_disk()) continue;
        const auto c = taylor_coefficients(e, 400);
        const cplx x = gen.disk_point(0.5);
        CHECK(std::abs(polynomial_value(c, x) - e(x)) <= 1e-9 * (1.0 + std::abs(e(x))));
    }
}

TEST_CASE("Fourier series basics") {
    FourierSeries s(-1, std::vector<cplx>{1.0, 2.0, 3.0});
    CHECK(s.min_index() == -1);
    CHECK(s.max_index() == 1);
    CHECK(s[5] == cplx{});
    CHECK(s.norm_squared() == doctest::Approx(14.0));
    CHECK_THROWS_AS(s.at(4), DomainError);
    const auto w = s.window(0, 3);
    CHECK(w[0] == cplx(2.0));
    CHECK(w[-1] == cplx{});
    CHECK(w[3] == cplx{});
}
