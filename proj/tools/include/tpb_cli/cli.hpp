#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "tpb/analyzer.hpp"
#include "tpb/pathology.hpp"

namespace tpb::cli {

enum ExitCode : int {
    kOk = 0,
    kPredicateFalse = 1,
    kParseError = 2,
    kConfigError = 3,
};

inline constexpr std::string_view kNormTableHeader = "N,M,section_norm,kernel_lower_bound,riesz2w_norm,carleson_estimate";

struct PairText {
    std::string u;
    std::string v_plus;
    std::string v_minus;
};

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

nlohmann::json admissibility_json(const AdmissibilityReport& rep);
nlohmann::json config_json(const AnalysisConfig& config);
nlohmann::json report_json(const BoundednessReport& rep, const AnalysisConfig& config, const PairText& inputs);
std::string norm_table_csv(const BoundednessReport& rep);

std::string scan_csv(const ArcScanResult& scan);
std::string step_function_csv(const StepFunctionSpec& spec, int n);
std::string hp_csv(const HpTable& table);

/// "1", "-0.5", "0.6+0.8i", "i" ...; throws SymbolError.
cplx parse_complex(std::string_view text);

}  // namespace tpb::cli
