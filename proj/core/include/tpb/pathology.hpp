#pragma once

// Boundary pathologies: prescribed pole orders from Blaschke quotients,
// oscillation near a pole, and step functions with infinitely many poles.

#include <functional>
#include <optional>
#include <vector>

#include "tpb/symbol.hpp"
#include "tpb/trend.hpp"

namespace tpb {

/// ((1 - c theta(z)) / (1 - z))^n with theta the finite Blaschke product over
/// `zeros` and c = conj(theta(1)).
SymbolExpr pole_order_function(const std::vector<cplx>& zeros, int n);

/// 1 - 2^-k for k = 1..count.
std::vector<cplx> dyadic_zeros(int count);

enum class ScanVerdict { Bounded, MonotoneBlowup, Oscillatory, Inconclusive };

std::string_view to_string(ScanVerdict v) noexcept;

struct ArcSample {
    int arc = 0;
    /// Chord distance |z - zeta|.
    double distance = 0.0;
    /// Half-width (in chord distance) of the witness subarc around the sample.
    double half_width = 0.0;
    double value = 0.0;
};

struct ArcStats {
    int arc = 0;
    double outer = 0.0;  // arc spans chord distances (inner, outer]
    double inner = 0.0;
    double sup = 0.0;
    double inf = 0.0;
    bool resolvable = true;
};

struct ArcScanResult {
    cplx zeta;
    int exponent = 0;
    std::vector<ArcStats> arcs;
    /// Least-squares slope of log2(sup) against the arc index.
    double sup_slope = 0.0;
    /// Interleaved witnesses: small[k] is farther from zeta than large[k], and
    /// large[k] is farther than small[k + 1].
    std::vector<ArcSample> small;
    std::vector<ArcSample> large;
    ScanVerdict verdict = ScanVerdict::Inconclusive;
    bool too_few_arcs = false;

    std::size_t interleaved_pairs() const noexcept { return std::min(small.size(), large.size()); }
};

struct ScanOptions {
    double eps = 1.0;
    int arcs = 12;
    int samples_per_arc = 64;
    /// sup_slope at or below this is bounded.
    double bounded_slope = 0.1;
    /// A sample is small when below this fraction of its arc's sup...
    double small_fraction = 0.1;
    /// ...and large when at least this fraction.
    double large_fraction = 0.5;
    /// Interleaved pairs needed to call a growing scan oscillatory.
    int min_pairs = 3;
};

/// Scans |(z - zeta)^n f(z)| on dyadic arcs approaching zeta from the
/// positive-argument side; arc k spans chord distances (eps 2^-k-1, eps 2^-k].
ArcScanResult oscillation_scan(const std::function<cplx(cplx)>& f, cplx zeta, int n, const ScanOptions& opt = {});
ArcScanResult oscillation_scan(const SymbolExpr& f, cplx zeta, int n, const ScanOptions& opt = {});

struct StepArc {
    int k = 0;
    /// Angle of the arc center x_k, with |x_k - 1| = 1/k.
    double center_angle = 0.0;
    /// Normalized arc length m(X_k).
    double measure = 0.0;
    /// Value c_k of the function on X_k.
    double value = 0.0;
};

struct StepFunctionSpec {
    std::vector<StepArc> arcs;
    /// sum c_k^2 m_k = sum_{k=3}^K 1/k^2.
    double norm_squared = 0.0;

    /// |c_k (x_k - 1)^n| = k!/k^n for each arc.
    std::vector<double> growth(int n) const;
    /// f(e^{i theta}): c_k on X_k, zero elsewhere.
    double value_at(double theta) const;
};

/// Step function with c_k = k!, m_k = 1/((k!)^2 k^2) for k = 3..K. Throws
/// DomainError with the largest feasible K when an arc is too short to be
/// represented in double precision or the arcs would overlap.
StepFunctionSpec infinite_pole_step_function(int K);
int max_feasible_step_K();

struct HpRow {
    std::size_t grid = 0;
    /// (1/L) sum |f|^p over grid points off the poles.
    double integral = 0.0;
    /// integral^(1/p).
    double norm = 0.0;
};

struct HpTable {
    double p = 2.0;
    std::vector<HpRow> rows;
    /// Finite means convergent.
    Trend trend = Trend::Inconclusive;
};

std::vector<std::size_t> default_hp_grids();

HpTable hp_norm_estimate(const SymbolExpr& f, double p, const std::vector<std::size_t>& grids = default_hp_grids(),
                         const TrendThresholds& th = {});

}  // namespace tpb
