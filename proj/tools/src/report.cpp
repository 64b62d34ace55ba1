#include <cmath>
#include <sstream>

#include "tpb/version.hpp"
#include "tpb_cli/cli.hpp"

namespace tpb::cli {

using nlohmann::json;

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json complex_json(cplx z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

std::string part_name(SymbolPart p) { return p == SymbolPart::Analytic ? "analytic" : "co-analytic"; }

json poles_json(const std::vector<PoleRecord>& poles) {
    json arr = json::array();
    for (const auto& p : poles) {
        arr.push_back({{"location", complex_json(p.location)}, {"order", p.order}, {"part", part_name(p.part)}});
    }
    return arr;
}

json clause_json(const ClauseResult& c) {
    json j{{"status", std::string(to_string(c.status))}, {"clause", c.clause}, {"note", c.note}};
    j["witness"] = c.pole ? json{{"pole", complex_json(*c.pole)}, {"order", c.order}, {"power", c.power}} : json(nullptr);
    j["radial_fallback"] = c.radial_fallback;
    return j;
}

std::string csv_number(double x) { return std::isfinite(x) ? format_number(x) : std::string(); }

std::string csv_optional(const std::optional<double>& x) { return x ? csv_number(*x) : std::string(); }

}  // namespace

json admissibility_json(const AdmissibilityReport& rep) {
    return json{{"overall", rep.overall},
                {"condition_a", clause_json(rep.a)},
                {"condition_b", clause_json(rep.b)},
                {"condition_c", clause_json(rep.c)},
                {"condition_d", clause_json(rep.d)},
                {"u_poles", poles_json(rep.u_poles)},
                {"v_poles", poles_json(rep.v_poles)}};
}

json config_json(const AnalysisConfig& c) {
    json grids = json::array();
    for (auto g : c.grids) grids.push_back(g);
    json radii = json::array();
    for (double r : c.radii) radii.push_back(r);
    return json{{"max_degree", c.max_degree},
                {"output_degree_factor", c.output_degree_factor},
                {"grids", grids},
                {"radii", radii},
                {"angles", c.angles},
                {"stabilization_threshold", c.thresholds.stabilization},
                {"growth_threshold", c.thresholds.growth},
                {"kernel_r_max", c.kernel.r_max},
                {"norm_tol", c.norm_tol}};
}

json report_json(const BoundednessReport& rep, const AnalysisConfig& config, const PairText& inputs) {
    json j;
    j["inputs"] = {{"u", inputs.u}, {"v_plus", inputs.v_plus}, {"v_minus", inputs.v_minus}};
    j["admissibility"] = rep.admissibility ? admissibility_json(*rep.admissibility) : json(nullptr);

    json rows = json::array();
    for (const auto& r : rep.norm_table) {
        rows.push_back({{"N", r.N},
                        {"M", r.M},
                        {"section_norm", number(r.section.value)},
                        {"converged", r.section.converged},
                        {"iterations", r.section.iterations},
                        {"kernel_lower_bound", number(r.kernel_lower_bound)},
                        {"riesz2w_norm", r.riesz2w ? number(*r.riesz2w) : json(nullptr)},
                        {"carleson_estimate", r.carleson ? number(*r.carleson) : json(nullptr)}});
    }
    j["norm_table"] = {{"rows", rows}, {"trend", std::string(to_string(rep.norm_trend))}};

    j["riesz2w_norm"] = rep.riesz2w_norm ? json{{"N", rep.riesz2w_degree}, {"value", number(*rep.riesz2w_norm)}}
                                         : json(nullptr);

    json ess = json::array();
    for (const auto& r : rep.ess_sup.rows) ess.push_back({{"grid", r.grid}, {"value", number(r.value)}});
    j["ess_sup"] = {{"rows", ess}, {"trend", std::string(to_string(rep.ess_sup.trend))}};

    if (rep.sarason) {
        json srows = json::array();
        for (const auto& r : rep.sarason->rows) {
            srows.push_back({{"radius", r.radius}, {"value", number(r.value)}, {"angle", number(r.angle)}});
        }
        j["sarason_table"] = {{"rows", srows},
                              {"growth_exponent", number(rep.sarason->growth_exponent)},
                              {"trend", std::string(to_string(rep.sarason->trend))}};
    } else {
        j["sarason_table"] = {{"rows", json::array()}, {"growth_exponent", nullptr}, {"trend", "not-applicable"},
                              {"note", rep.sarason_note}};
    }

    j["carleson_estimate"] = rep.carleson ? json{{"N", rep.carleson_degree},
                                                 {"value", number(rep.carleson->value)},
                                                 {"range_space_form", rep.carleson->range_space_form}}
                                          : json(nullptr);
    j["kernel_lower_bound"] = number(rep.kernel_lower_bound);
    j["verdict"] = std::string(to_string(rep.verdict));
    j["rationale"] = rep.rationale;
    j["errors"] = rep.errors;
    j["config"] = config_json(config);

    json versions{{"tpb", version()}};
    for (const auto& [name, ver] : dependency_versions()) versions[name] = ver;
    j["versions"] = versions;
    return j;
}

std::string norm_table_csv(const BoundednessReport& rep) {
    std::ostringstream os;
    os << kNormTableHeader << '\n';
    for (const auto& r : rep.norm_table) {
        os << r.N << ',' << r.M << ',' << csv_number(r.section.value) << ',' << csv_number(r.kernel_lower_bound) << ','
           << csv_optional(r.riesz2w) << ',' << csv_optional(r.carleson) << '\n';
    }
    return os.str();
}

std::string scan_csv(const ArcScanResult& scan) {
    std::ostringstream os;
    os << "arc,inner_distance,outer_distance,sup,inf,resolvable,sup_slope,interleaved_pairs,verdict\n";
    for (const auto& a : scan.arcs) {
        os << a.arc << ',' << csv_number(a.inner) << ',' << csv_number(a.outer) << ',' << csv_number(a.sup) << ','
           << csv_number(a.inf) << ',' << (a.resolvable ? 1 : 0) << ',' << csv_number(scan.sup_slope) << ','
           << scan.interleaved_pairs() << ',' << to_string(scan.verdict) << '\n';
    }
    return os.str();
}

std::string step_function_csv(const StepFunctionSpec& spec, int n) {
    std::ostringstream os;
    os << "k,center_angle,measure,value,growth,norm_squared\n";
    const auto g = spec.growth(n);
    for (std::size_t i = 0; i < spec.arcs.size(); ++i) {
        const auto& a = spec.arcs[i];
        os << a.k << ',' << csv_number(a.center_angle) << ',' << csv_number(a.measure) << ',' << csv_number(a.value)
           << ',' << csv_number(g[i]) << ',' << csv_number(spec.norm_squared) << '\n';
    }
    return os.str();
}

std::string hp_csv(const HpTable& table) {
    std::ostringstream os;
    os << "grid,p,integral,norm,trend\n";
    for (const auto& r : table.rows) {
        os << r.grid << ',' << csv_number(table.p) << ',' << csv_number(r.integral) << ',' << csv_number(r.norm) << ','
           << to_string(table.trend) << '\n';
    }
    return os.str();
}

}  // namespace tpb::cli
