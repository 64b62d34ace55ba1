#include <bit>
#include <cmath>
#include <future>
#include <sstream>

#include "tpb/analyzer.hpp"

namespace tpb {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Bounded: return "bounded";
        case Verdict::Unbounded: return "unbounded";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::vector<double> AnalysisConfig::default_radii() {
    std::vector<double> r;
    for (int j = 1; j <= 12; ++j) r.push_back(1.0 - std::ldexp(1.0, -j));
    return r;
}

void AnalysisConfig::validate() const {
    if (max_degree < 32 || !std::has_single_bit(static_cast<unsigned>(max_degree))) {
        throw ConfigError("max_degree must be a power of two >= 32");
    }
    if (output_degree_factor < 1) throw ConfigError("output_degree_factor must be >= 1");
    if (grids.size() < 2) throw ConfigError("grid schedule needs at least two sizes");
    for (std::size_t i = 0; i < grids.size(); ++i) {
        if (grids[i] < 8 || !std::has_single_bit(grids[i])) throw ConfigError("grid sizes must be powers of two >= 8");
        if (i > 0 && grids[i] <= grids[i - 1]) throw ConfigError("grid sizes must be increasing");
    }
    if (radii.empty()) throw ConfigError("radii must not be empty");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw ConfigError("radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw ConfigError("radii must be strictly increasing");
    }
    if (angles < 1) throw ConfigError("angles must be positive");
    if (!(thresholds.stabilization > 0.0) || !(thresholds.growth > 0.0)) {
        throw ConfigError("trend thresholds must be positive");
    }
    if (!(norm_tol > 0.0)) throw ConfigError("norm_tol must be positive");
    if (!(kernel.r_max > 0.0 && kernel.r_max < 1.0)) throw ConfigError("kernel r_max must lie in (0, 1)");
    if (threads < 1) throw ConfigError("threads must be >= 1");
}

std::vector<int> AnalysisConfig::degrees() const {
    std::vector<int> out;
    for (int n = 32; n <= max_degree; n *= 2) out.push_back(n);
    return out;
}

namespace {

template <typename T>
struct Outcome {
    std::optional<T> value;
    std::string error;
};

template <typename F>
auto guarded(F f) -> Outcome<decltype(f())> {
    Outcome<decltype(f())> out;
    try {
        out.value = f();
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

BoundednessReport analyze(const SymbolExpr& u, const L2Symbol& v, const AnalysisConfig& config) {
    config.validate();
    BoundednessReport rep;
    const auto degrees = config.degrees();
    const int factor = config.output_degree_factor;
    const auto policy = config.threads > 1 ? std::launch::async : std::launch::deferred;

    auto sections = std::async(policy, [&] {
        return guarded([&] {
            std::vector<NormEstimate> out;
            for (int N : degrees) out.push_back(section_norm(product_section(u, v, N, factor * N), config.norm_tol));
            return out;
        });
    });
    auto weighted = std::async(policy, [&] {
        return guarded([&] {
            std::vector<double> out;
            for (int N : degrees) {
                WeightedOptions opt;
                opt.output_degree = factor * N;
                out.push_back(two_weighted_projection_norm(v, u, N, opt));
            }
            return out;
        });
    });
    auto carleson = std::async(policy, [&] {
        return guarded([&] {
            std::vector<CarlesonEstimate> out;
            for (int N : degrees) out.push_back(carleson_constant(u, v, N, factor * N));
            return out;
        });
    });
    auto ess = std::async(policy, [&] { return guarded([&] { return ess_sup_product(u, v, config.grids, config.thresholds); }); });
    auto sarason = std::async(policy, [&] {
        return guarded([&]() -> std::optional<SarasonTable> {
            if (!u.h2_claimed()) return std::nullopt;
            return sarason_scan(u, v, config.radii, config.angles, config.sarason_thresholds);
        });
    });
    auto kernel = std::async(policy, [&] { return guarded([&] { return kernel_lower_bound(u, v, config.kernel); }); });

    auto adm = guarded([&] { return check_admissible(u, v); });
    if (adm.value) rep.admissibility = *adm.value;
    else rep.errors.push_back("admissibility: " + adm.error);

    auto sec = sections.get();
    auto wgt = weighted.get();
    auto car = carleson.get();
    auto es = ess.get();
    auto sar = sarason.get();
    auto ker = kernel.get();

    if (!sec.value) rep.errors.push_back("section_norm: " + sec.error);
    if (!wgt.value) rep.errors.push_back("riesz2w_norm: " + wgt.error);
    if (!car.value) rep.errors.push_back("carleson_estimate: " + car.error);
    if (!es.value) rep.errors.push_back("ess_sup: " + es.error);
    if (!sar.value) rep.errors.push_back("sarason: " + sar.error);
    if (!ker.value) rep.errors.push_back("kernel_lower_bound: " + ker.error);

    rep.kernel_lower_bound = ker.value.value_or(0.0);
    if (sec.value) {
        std::vector<double> norms;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            NormRow row;
            row.N = degrees[i];
            row.M = factor * degrees[i];
            row.section = (*sec.value)[i];
            row.kernel_lower_bound = rep.kernel_lower_bound;
            if (wgt.value) row.riesz2w = (*wgt.value)[i];
            if (car.value) row.carleson = (*car.value)[i].value;
            rep.norm_table.push_back(row);
            norms.push_back(row.section.value);
        }
        rep.norm_trend = classify_trend(norms, config.thresholds);
    }
    if (wgt.value && !wgt.value->empty()) {
        rep.riesz2w_norm = wgt.value->back();
        rep.riesz2w_degree = degrees.back();
    }
    if (car.value && !car.value->empty()) {
        rep.carleson = car.value->back();
        rep.carleson_degree = degrees.back();
    }
    if (es.value) rep.ess_sup = *es.value;
    if (sar.value) {
        rep.sarason = *sar.value;
        if (!rep.sarason) rep.sarason_note = "u is not an H^2 symbol; the Poisson extension of |u|^2 diverges";
    }

    const bool ess_ok = es.value.has_value();
    const Trend ess_trend = rep.ess_sup.trend;
    std::ostringstream why;
    if (ess_ok && sec.value && ess_trend == Trend::Finite && rep.norm_trend == Trend::Finite) {
        rep.verdict = Verdict::Bounded;
        why << "ess sup of |uv| stabilizes and section norms stop growing";
    } else if (ess_ok && sec.value && ess_trend == Trend::Growth && rep.norm_trend == Trend::Growth) {
        rep.verdict = Verdict::Unbounded;
        why << "ess sup of |uv| and section norms both grow under refinement";
    } else {
        rep.verdict = Verdict::Inconclusive;
        why << "ess sup trend " << to_string(ess_trend) << ", section norm trend " << to_string(rep.norm_trend);
    }
    if (rep.admissibility && !rep.admissibility->overall) {
        why << "; the pair is not admissible, so boundedness of uv need not decide boundedness of the product";
    }
    rep.rationale = why.str();
    return rep;
}

}  // namespace tpb
