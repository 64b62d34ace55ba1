#pragma once

// Structured symbols: finite sums of products of elementary factors that can
// be evaluated on the closed disk and inspected for boundary singularities.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpb/error.hpp"

namespace tpb {

using cplx = std::complex<double>;

/// Tolerance used to decide that a linear factor's root lies on the unit circle.
inline constexpr double kUnitCircleTol = 1e-12;

enum class FactorKind { Z, Linear, Blaschke };

/// One elementary factor raised to `exponent`.
///
/// - `Z`:        z^exponent, integer exponent.
/// - `Linear`:   (1 - slope*z)^exponent; root at 1/slope. Real exponents are
///               allowed only when |slope| == 1 and use the principal branch,
///               which puts the cut on the ray from the root away from 0.
/// - `Blaschke`: prod_k b_{a_k}(z)^exponent with
///               b_a(z) = (|a|/a)(a - z)/(1 - conj(a) z) and b_0(z) = z.
struct Factor {
    FactorKind kind = FactorKind::Z;
    cplx slope{};
    std::vector<cplx> zeros;
    double exponent = 1.0;

    bool integral_exponent() const noexcept;
    /// Linear factor whose root is on the unit circle.
    bool on_boundary() const noexcept;
    /// Root of a linear factor (1/slope).
    cplx root() const noexcept { return 1.0 / slope; }

    cplx eval(cplx z) const;
};

struct Term {
    cplx coefficient{1.0, 0.0};
    std::vector<Factor> factors;

    cplx eval(cplx z) const;
    /// Net exponent of the boundary factor rooted at `t` (0 if absent).
    double exponent_at(cplx t) const noexcept;
    /// Value of the term with the factor rooted at `t` removed, evaluated at `t`.
    cplx cofactor_at(cplx t) const;
};

/// Leading behaviour of an expression at a boundary point t along the circle:
/// expr(z) ~ coefficient * (z - t)^exponent.
struct LocalBehaviour {
    double exponent = 0.0;
    cplx coefficient{};
    /// Terms sharing the minimal exponent cancel at leading order, so the
    /// true vanishing order is higher than `exponent` and unknown.
    bool cancelled = false;
};

class SymbolExpr {
public:
    /// The zero function.
    SymbolExpr() = default;

    static SymbolExpr constant(cplx c);
    static SymbolExpr z_power(int k);
    /// (1 - slope*z)^exponent.
    static SymbolExpr linear(cplx slope, double exponent = 1.0);
    static SymbolExpr blaschke(std::vector<cplx> zeros, int exponent = 1);

    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// Principal-branch value; throws PoleHit at a singular point.
    cplx operator()(cplx z) const;

    /// Integer powers expand; other powers require a single-term expression.
    SymbolExpr pow(double p) const;

    SymbolExpr operator-() const;
    friend SymbolExpr operator+(const SymbolExpr& a, const SymbolExpr& b);
    friend SymbolExpr operator-(const SymbolExpr& a, const SymbolExpr& b);
    friend SymbolExpr operator*(const SymbolExpr& a, const SymbolExpr& b);
    friend SymbolExpr operator*(cplx c, const SymbolExpr& a);

    /// Distinct boundary points carried by any linear factor (any sign of exponent).
    std::vector<cplx> boundary_points() const;
    /// Boundary points where some term has a negative net exponent.
    std::vector<cplx> boundary_singularities() const;

    /// Holomorphic on the open disk: no negative powers of z, of Blaschke
    /// factors, or of linear factors rooted inside the disk.
    bool analytic_in_disk() const noexcept;
    /// Analytic in the disk and every boundary exponent > -1/2 (so in H^2).
    bool h2_claimed() const noexcept;

    /// Minimal net exponent at t across terms, and the leading coefficient.
    LocalBehaviour behaviour_at(cplx t) const;

private:
    explicit SymbolExpr(std::vector<Term> terms);
    void normalize();

    std::vector<Term> terms_;
};

/// v = plus + conj(minus) on the circle, with plus, minus analytic in H^2 and minus(0) = 0.
class L2Symbol {
public:
    L2Symbol() = default;
    explicit L2Symbol(SymbolExpr plus, SymbolExpr minus = {});

    const SymbolExpr& plus() const noexcept { return plus_; }
    const SymbolExpr& minus() const noexcept { return minus_; }

    /// Boundary value plus(z) + conj(minus(z)); also the harmonic extension inside the disk.
    cplx operator()(cplx z) const;

    bool co_analytic() const noexcept { return plus_.is_constant(); }
    bool analytic() const noexcept { return minus_.is_zero(); }

private:
    SymbolExpr plus_;
    SymbolExpr minus_;
};

enum class SymbolPart { Analytic, CoAnalytic };

struct PoleRecord {
    cplx location;
    int order = 1;
    SymbolPart part = SymbolPart::Analytic;
};

/// Parse the symbol DSL:
///   symbol  := term (("+"|"-") term)*
///   term    := ["-"] factor ("*" factor)*
///   factor  := atom ("^" number)?
///   atom    := complex | "z" | "(" symbol ")" | "blaschke(" complex ("," complex)* ")"
///   complex := float | float ("+"|"-") float "i"
SymbolExpr parse_symbol(std::string_view text);

/// Canonical text; parse_symbol(to_string(e)) reproduces e.
std::string to_string(const SymbolExpr& e);

/// Shortest decimal that round-trips the double.
std::string format_number(double x);
std::string format_complex(cplx c);

cplx eval_symbol(const SymbolExpr& e, cplx z);

/// Values at the grid_size-th roots of unity; samples at singular points are NaN.
std::vector<cplx> boundary_sample(const SymbolExpr& e, std::size_t grid_size);
std::vector<cplx> boundary_sample(const L2Symbol& v, std::size_t grid_size);

std::vector<PoleRecord> detect_poles(const SymbolExpr& e, SymbolPart part = SymbolPart::Analytic);
std::vector<PoleRecord> detect_poles(const L2Symbol& v);

/// Taylor coefficients c_0..c_degree from the closed-form factor expansions.
/// Throws DomainError unless the expression is analytic in the open disk.
std::vector<cplx> taylor_coefficients(const SymbolExpr& e, int degree);

bool same_point(cplx a, cplx b) noexcept;

}  // namespace tpb
