#include "doctest.h"

#include <cmath>

#include "support/corpus.hpp"
#include "tpb/symbol.hpp"

using namespace tpb;
using tpb::testing::Gen;

TEST_CASE("parse simple products") {
    const SymbolExpr zz = parse_symbol("z^2");
    REQUIRE(zz.terms().size() == 1);
    REQUIRE(zz.terms()[0].factors.size() == 1);
    CHECK(zz.terms()[0].factors[0].kind == FactorKind::Z);
    CHECK(zz.terms()[0].factors[0].exponent == 2.0);

    const SymbolExpr p = parse_symbol("(1-z)^-1");
    REQUIRE(p.terms().size() == 1);
    REQUIRE(p.terms()[0].factors.size() == 1);
    const Factor& f = p.terms()[0].factors[0];
    CHECK(f.kind == FactorKind::Linear);
    CHECK(std::abs(f.root() - 1.0) < 1e-15);
    CHECK(f.exponent == -1.0);

    const SymbolExpr q = parse_symbol("(1-z)^-0.25 * blaschke(0.5)");
    REQUIRE(q.terms().size() == 1);
    CHECK(q.terms()[0].factors.size() == 2);
}

TEST_CASE("complex literals and signs") {
    CHECK(std::abs(parse_symbol("0.6+0.8i")(0.3) - cplx(0.6, 0.8)) < 1e-15);
    CHECK(std::abs(parse_symbol("-1+2i")(0.0) - cplx(-1, 2)) < 1e-15);
    CHECK(std::abs(parse_symbol("i")(0.0) - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(parse_symbol("2.5i*z")(2.0) - cplx(0, 5)) < 1e-15);
    CHECK(std::abs(parse_symbol("-z")(0.5) + 0.5) < 1e-15);
    CHECK(std::abs(parse_symbol("1 - -z")(0.5) - 1.5) < 1e-15);
    CHECK(std::abs(parse_symbol("1e-1*z")(1.0) - 0.1) < 1e-15);
}

TEST_CASE("sums collect like terms") {
    const SymbolExpr e = parse_symbol("z + z - 2*z");
    CHECK(e.is_zero());
    const SymbolExpr prod = parse_symbol("(1-z)*(1+z)");
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms()[0].factors.size() == 2);
    CHECK(parse_symbol("1 - z^2").terms().size() == 2);
    CHECK(std::abs(parse_symbol("(1-z)*(1+z)")(0.5) - 0.75) < 1e-15);
}

TEST_CASE("syntax errors report a position") {
    auto position_of = [](std::string_view text) -> long {
        try {
            parse_symbol(text);
        } catch (const SymbolError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("(1-z") == 4);
    CHECK(position_of("1 + ") == 4);
    CHECK(position_of("z ^ ") == 4);
    CHECK(position_of("1 $ z") == 2);
    CHECK(position_of("") == 0);
    CHECK(position_of("w") == 0);
    CHECK(position_of("z)") == 1);
}

TEST_CASE("domain errors surface as symbol errors") {
    CHECK_THROWS_AS(parse_symbol("blaschke(1)"), SymbolError);
    CHECK_THROWS_AS(parse_symbol("blaschke(0.5, 0.6+0.8i)"), SymbolError);
    CHECK_THROWS_AS(parse_symbol("(1-2*z)^0.5"), SymbolError);
    CHECK_THROWS_AS(parse_symbol("z^0.5"), SymbolError);
    CHECK_THROWS_AS(parse_symbol("(1+z+z^2)^-1"), SymbolError);
    try {
        parse_symbol("1 + (1-2*z)^0.5");
    } catch (const SymbolError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("canonical printer round-trips") {
    for (const char* text : {"1", "z^2", "(1-z)^-1", "(1-z)^-0.25 * blaschke(0.5)", "2+z", "(1-z)^0.25-1",
                             "0.6+0.8i", "blaschke(0.5, -0.25+0.1i)^2 * (1+z)^-2"}) {
        const SymbolExpr e = parse_symbol(text);
        const std::string printed = to_string(e);
        const SymbolExpr back = parse_symbol(printed);
        CHECK_MESSAGE(to_string(back) == printed, text);
    }
}

TEST_CASE("round-trip on random symbols evaluates identically") {
    Gen gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string text = gen.symbol_text();
        const SymbolExpr e = parse_symbol(text);
        const SymbolExpr back = parse_symbol(to_string(e));
        for (int k = 0; k < 16; ++k) {
            const cplx x = gen.disk_point(0.95);
            const cplx a = e(x);
            const cplx b = back(x);
            CHECK_MESSAGE(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)), text);
        }
    }
}

TEST_CASE("number formatting is shortest round-trip") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.25) == "-0.25");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_complex(cplx(0.6, -0.8)) == "0.6-0.8i");
}
