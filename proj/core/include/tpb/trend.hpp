#pragma once

#include <span>
#include <string_view>

namespace tpb {

enum class Trend { Finite, Growth, Inconclusive };

std::string_view to_string(Trend t) noexcept;

struct TrendThresholds {
    /// Relative change across the last refinement below which a sequence has stabilized.
    double stabilization = 0.01;
    /// Ratio increase per refinement at or above which a sequence is growing.
    double growth = 0.25;
};

/// Classifies a refinement sequence from its last step. Fewer than two finite
/// values, or a last step between the two thresholds, is inconclusive.
Trend classify_trend(std::span<const double> values, const TrendThresholds& th = {});

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace tpb
