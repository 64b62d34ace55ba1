#pragma once

// Shared symbol pairs and random generators for the test binaries.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "tpb/analyzer.hpp"
#include "tpb/fourier.hpp"
#include "tpb/symbol.hpp"

namespace tpb::testing {

struct CorpusPair {
    std::string name;
    std::string u;
    std::string v_plus;
    std::string v_minus;
    bool bounded = true;
    bool admissible = true;
    /// v is outer up to conjugation and a constant, so the range-space form applies.
    bool outer_v = true;
    /// Section norms stabilize within the 1% rule by degree 256. The co-analytic
    /// cancelling pair converges too slowly (about 1.3% per doubling up to 512).
    bool settles = true;

    SymbolExpr u_expr() const { return parse_symbol(u); }
    L2Symbol v_symbol() const {
        return L2Symbol(parse_symbol(v_plus), v_minus.empty() ? SymbolExpr{} : parse_symbol(v_minus));
    }
};

inline const std::vector<CorpusPair>& corpus() {
    static const std::vector<CorpusPair> pairs = {
        {"identity", "1", "1", "", true, true, true},
        {"shift", "z", "1", "", true, true, true},
        {"cancelling simple pole", "(1-z)^-1", "1-z", "", true, true, true},
        {"cancelling double pole", "(1+z)^-2", "(1+z)^2", "", true, true, true},
        {"cancelling quarter power", "(1-z)^-0.25", "(1-z)^0.25", "", true, true, true},
        {"polynomial multiplier", "2+z", "1", "", true, true, true},
        {"co-analytic cancelling", "(1-z)^-0.25", "1", "(1-z)^0.25-1", true, true, true, false},
        {"uncancelled simple pole", "(1-z)^-1", "1", "", false, true, true},
        {"uncancelled quarter powers", "(1-z)^-0.25", "(1-z)^-0.25", "", false, false, true},
    };
    return pairs;
}

inline std::vector<CorpusPair> bounded_corpus() {
    std::vector<CorpusPair> out;
    for (const auto& p : corpus()) {
        if (p.bounded) out.push_back(p);
    }
    return out;
}

/// Deterministic generator wrapper; every test seeds its own instance.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
    cplx gaussian() { return {normal(), normal()}; }
    bool coin() { return integer(0, 1) == 1; }

    /// Point in the closed disk of radius r_max, uniform in area.
    cplx disk_point(double r_max) {
        const double r = r_max * std::sqrt(uniform(0.0, 1.0));
        return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
    }

    cplx unit_point() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

    /// Trigonometric polynomial with indices in [-lo_deg, hi_deg] and Gaussian coefficients.
    FourierSeries trig_polynomial(int lo_deg, int hi_deg) {
        FourierSeries s(-lo_deg, hi_deg);
        for (int n = -lo_deg; n <= hi_deg; ++n) s.at(n) = gaussian();
        return s;
    }

    Eigen::VectorXcd vector(int size) {
        Eigen::VectorXcd v(size);
        for (int i = 0; i < size; ++i) v[i] = gaussian();
        return v;
    }

    Eigen::MatrixXcd matrix(int rows, int cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) m(i, j) = gaussian();
        }
        return m;
    }

    /// Random DSL text: a sum of 1-3 terms, each a coefficient times up to three
    /// factors drawn from z^k, boundary linear factors with real exponents in
    /// [min_exponent, 2], interior linear factors and Blaschke products.
    std::string symbol_text(double min_exponent = -0.45) {
        std::string out;
        const int terms = integer(1, 3);
        for (int t = 0; t < terms; ++t) {
            if (t > 0) out += " + ";
            out += "(" + number(uniform(-2.0, 2.0)) + (coin() ? "+" : "-") + number(uniform(0.0, 2.0)) + "i)";
            const int factors = integer(0, 3);
            for (int f = 0; f < factors; ++f) {
                out += "*";
                switch (integer(0, 3)) {
                    case 0:
                        out += "z^" + std::to_string(integer(0, 4));
                        break;
                    case 1: {
                        const cplx t0 = unit_point();
                        out += "(1-(" + complex_text(std::conj(t0)) + ")*z)^" + number(uniform(min_exponent, 2.0));
                        break;
                    }
                    case 2: {
                        const cplx a = disk_point(0.9);
                        out += "(1-(" + complex_text(a) + ")*z)^" + std::to_string(integer(-2, 3));
                        break;
                    }
                    default: {
                        out += "blaschke(" + complex_text(disk_point(0.9));
                        if (coin()) out += "," + complex_text(disk_point(0.9));
                        out += ")";
                        break;
                    }
                }
            }
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    static std::string number(double x) { return format_number(x); }
    static std::string complex_text(cplx c) {
        return format_number(c.real()) + (c.imag() < 0 ? "-" : "+") + format_number(std::abs(c.imag())) + "i";
    }

    std::mt19937_64 rng_;
};

/// Largest singular value by dense SVD.
inline double dense_norm(const Eigen::MatrixXcd& A) {
    if (A.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
    return svd.singularValues()(0);
}

/// Generalized binomial coefficients of (1 - z)^a: c_n = prod_{k<n} (k - a)/(k + 1).
inline std::vector<double> binomial_series(double a, int degree) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    c[0] = 1.0;
    for (int n = 1; n <= degree; ++n) c[n] = c[n - 1] * (n - 1 - a) / n;
    return c;
}

/// Fourier coefficient by direct summation over the L-th roots of unity (no FFT).
template <typename F>
cplx naive_coefficient(F f, int n, int L) {
    cplx acc{};
    for (int j = 0; j < L; ++j) {
        const double th = 2.0 * std::numbers::pi * j / L;
        const cplx val = f(std::polar(1.0, th));
        if (std::isfinite(std::abs(val))) acc += val * std::polar(1.0, -n * th);
    }
    return acc / static_cast<double>(L);
}

}  // namespace tpb::testing
