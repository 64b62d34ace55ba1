#pragma once

// Boundedness of T_u T_v: admissibility of the symbol pair, the five
// equivalent finite-section estimates, and the combined verdict.

#include <optional>
#include <string>
#include <vector>

#include "tpb/hardy.hpp"
#include "tpb/linalg.hpp"
#include "tpb/symbol.hpp"
#include "tpb/trend.hpp"

namespace tpb {

// ---------------------------------------------------------------- admissibility

enum class ClauseStatus { Holds, Fails, NotApplicable };

std::string_view to_string(ClauseStatus s) noexcept;

struct ClauseResult {
    ClauseStatus status = ClauseStatus::Holds;
    /// "a", "b", "c", "d1" or "d2".
    std::string clause;
    std::optional<cplx> pole;
    int order = 0;
    /// Power i of (z - t) in clause d2; -1 when not applicable.
    int power = -1;
    std::string note;
    /// A boundary limit had to be estimated radially because the leading
    /// terms cancelled symbolically.
    bool radial_fallback = false;
};

struct AdmissibilityReport {
    ClauseResult a, b, c, d;
    std::vector<PoleRecord> u_poles;
    std::vector<PoleRecord> v_poles;
    bool overall = false;
};

AdmissibilityReport check_admissible(const SymbolExpr& u, const L2Symbol& v);

// ---------------------------------------------------------------- estimators

/// Section of f -> Pi_M(u P(v f)) on polynomials of degree <= N; M < 0 means 2N.
SectionOperator product_section(const SymbolExpr& u, const L2Symbol& v, int N, int M = -1);

struct RefinementRow {
    std::size_t grid = 0;
    double value = 0.0;
};

struct RefinementTable {
    std::vector<RefinementRow> rows;
    Trend trend = Trend::Inconclusive;
};

std::vector<std::size_t> default_grid_schedule();

/// max |u v| over each grid (pole grid points excluded).
RefinementTable ess_sup_product(const SymbolExpr& u, const L2Symbol& v, const std::vector<std::size_t>& grids,
                                const TrendThresholds& th = {});

struct SarasonRow {
    double radius = 0.0;
    double value = 0.0;
    double angle = 0.0;
};

struct SarasonTable {
    std::vector<SarasonRow> rows;
    /// -d log(max) / d log(1 - r), fitted on the inner half of the radii.
    double growth_exponent = 0.0;
    Trend trend = Trend::Inconclusive;
};

struct SarasonThresholds {
    double finite_exponent = 0.05;
    double growth_exponent = 0.2;
};

/// Per-radius max over angles of P_w(|u|^2) P_w(|v|^2), w = r e^{i theta}. The
/// angle grid is uniform with `angles` points plus the arguments of every boundary
/// point of either symbol.
SarasonTable sarason_scan(const SymbolExpr& u, const L2Symbol& v, const std::vector<double>& radii, int angles,
                          const SarasonThresholds& th = {});
SarasonTable sarason_scan(const SymbolExpr& u, const SymbolExpr& v, const std::vector<double>& radii, int angles,
                          const SarasonThresholds& th = {});

enum class WeightedDomain {
    /// v times analytic polynomials of degree <= N: the image of H^2 under
    /// multiplication by v, where the diagram with T_u T_v commutes.
    DiagramImage,
    /// All trigonometric polynomials of degree <= N.
    TrigPolynomials,
};

struct WeightedOptions {
    WeightedDomain domain = WeightedDomain::DiagramImage;
    /// Output truncation; < 0 means 2N.
    int output_degree = -1;
    /// Quadrature grid; 0 picks one from the degrees.
    std::size_t grid = 0;
    double gram_floor = 1e-12;
};

/// Norm of the Riesz projection L^2(1/|v|^2) -> L^2(|u|^2) on the chosen domain,
/// sqrt(lambda_max(G1^{-1/2} X^H G2 X G1^{-1/2})) with quadrature Gram matrices G1, G2.
double two_weighted_projection_norm(const L2Symbol& v, const SymbolExpr& u, int N, const WeightedOptions& opt = {});

struct CarlesonEstimate {
    double value = 0.0;
    /// v = conj(outer) + const, so the quantity is the embedding constant of the
    /// range space of T_conj(outer) into L^2(|u|^2).
    bool range_space_form = false;
    NormEstimate estimate;
};

/// sup over degree-<=N polynomials f with ||f|| = 1 of the grid quadrature of
/// |u|^2 |Pi_M P(v f)|^2, evaluated pointwise on the circle.
CarlesonEstimate carleson_constant(const SymbolExpr& u, const L2Symbol& v, int N, int M = -1);

struct KernelGrid {
    double r_max = 0.99;
    int rings = 32;
    int angles = 256;
};

/// max over a polar disk grid of |u(x) (v_plus(x) + conj(v_minus(x)))|.
double kernel_lower_bound(const SymbolExpr& u, const L2Symbol& v, const KernelGrid& grid = {});

struct EpsilonChoice {
    double eps = 0.1;
    int halvings = 0;
    /// No epsilon above the floor satisfied the local boundedness conditions.
    bool flagged = false;
    std::string note;
};

/// Largest eps = eps0 / 2^k separating the poles and satisfying the local
/// boundedness conditions on dyadic shells around each pole.
EpsilonChoice pick_epsilon(const SymbolExpr& u, const L2Symbol& v, double floor = 1e-4);

struct EnergyParts {
    double outside = 0.0;
    double near_v_poles = 0.0;
    double near_u_poles = 0.0;
    double total = 0.0;
};

/// Grid quadrature of |u P(v f)|^2 split over the circle minus the eps-balls, the
/// balls around poles of v, and the balls around poles of u (a point in both
/// kinds of ball counts toward v).
EnergyParts energy_decomposition(const SymbolExpr& u, const L2Symbol& v, const FourierSeries& f, double eps,
                                 std::size_t grid = 16384);

// ---------------------------------------------------------------- full analysis

struct AnalysisConfig {
    int max_degree = 256;
    int output_degree_factor = 2;
    std::vector<std::size_t> grids = default_grid_schedule();
    std::vector<double> radii = default_radii();
    int angles = 64;
    TrendThresholds thresholds;
    SarasonThresholds sarason_thresholds;
    KernelGrid kernel;
    double norm_tol = 1e-10;
    int threads = 1;

    static std::vector<double> default_radii();
    /// Throws ConfigError.
    void validate() const;
    /// 32, 64, ..., max_degree.
    std::vector<int> degrees() const;
};

struct NormRow {
    int N = 0;
    int M = 0;
    NormEstimate section;
    double kernel_lower_bound = 0.0;
    std::optional<double> riesz2w;
    std::optional<double> carleson;
};

enum class Verdict { Bounded, Unbounded, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct BoundednessReport {
    std::optional<AdmissibilityReport> admissibility;
    std::vector<NormRow> norm_table;
    Trend norm_trend = Trend::Inconclusive;
    std::optional<double> riesz2w_norm;
    int riesz2w_degree = 0;
    RefinementTable ess_sup;
    std::optional<SarasonTable> sarason;
    std::string sarason_note;
    std::optional<CarlesonEstimate> carleson;
    int carleson_degree = 0;
    double kernel_lower_bound = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::string rationale;
    /// Failures of individual estimators, "<estimator>: <message>".
    std::vector<std::string> errors;
};

BoundednessReport analyze(const SymbolExpr& u, const L2Symbol& v, const AnalysisConfig& config = {});

}  // namespace tpb
