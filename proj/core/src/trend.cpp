#include "tpb/trend.hpp"

#include <cmath>
#include <stdexcept>

namespace tpb {

std::string_view to_string(Trend t) noexcept {
    switch (t) {
        case Trend::Finite: return "finite";
        case Trend::Growth: return "growth";
        case Trend::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Trend classify_trend(std::span<const double> values, const TrendThresholds& th) {
    if (values.size() < 2) return Trend::Inconclusive;
    const double prev = values[values.size() - 2];
    const double last = values.back();
    if (!std::isfinite(prev) || !std::isfinite(last)) {
        return std::isinf(last) ? Trend::Growth : Trend::Inconclusive;
    }
    if (prev == 0.0) return last == 0.0 ? Trend::Finite : Trend::Inconclusive;
    const double ratio = last / prev;
    if (std::abs(ratio - 1.0) < th.stabilization) return Trend::Finite;
    if (ratio >= 1.0 + th.growth) return Trend::Growth;
    return Trend::Inconclusive;
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope needs two or more points");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i];
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_slope needs distinct abscissae");
    return sxy / sxx;
}

}  // namespace tpb
