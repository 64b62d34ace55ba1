#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tpb/version.hpp"
#include "tpb_cli/cli.hpp"

namespace tpb::cli {

namespace {

struct PairOptions {
    std::string u;
    std::string v_plus;
    std::string v_minus;
};

void add_pair_options(CLI::App* cmd, PairOptions& p) {
    cmd->add_option("--u", p.u, "analytic symbol u")->required();
    cmd->add_option("--v-plus", p.v_plus, "analytic part of v")->required();
    cmd->add_option("--v-minus", p.v_minus, "v_minus, entering v as conj(v_minus); must vanish at 0");
}

// Parses u and v; prints the error and returns nullopt on failure.
std::optional<std::pair<SymbolExpr, L2Symbol>> parse_pair(const PairOptions& p, std::ostream& err) {
    auto one = [&](const std::string& name, const std::string& text) -> std::optional<SymbolExpr> {
        try {
            return parse_symbol(text);
        } catch (const SymbolError& e) {
            err << "error: cannot parse " << name << " \"" << text << "\": " << e.what() << '\n';
            return std::nullopt;
        }
    };
    auto u = one("--u", p.u);
    auto vp = one("--v-plus", p.v_plus);
    std::optional<SymbolExpr> vm = SymbolExpr{};
    if (!p.v_minus.empty()) vm = one("--v-minus", p.v_minus);
    if (!u || !vp || !vm) return std::nullopt;
    try {
        return std::make_pair(*u, L2Symbol(*vp, *vm));
    } catch (const DomainError& e) {
        err << "error: invalid symbol pair: " << e.what() << '\n';
        return std::nullopt;
    }
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

int emit_table(const std::string& path, const std::string& csv, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << csv;
        return kOk;
    }
    return write_file(path, csv, err) ? kOk : kConfigError;
}

std::vector<double> parse_radii(const std::string& text) {
    std::vector<double> r;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("radius \"" + item + "\" is not a number");
        }
        if (used != item.size()) throw ConfigError("radius \"" + item + "\" is not a number");
        r.push_back(x);
    }
    return r;
}

}  // namespace

cplx parse_complex(std::string_view text) {
    const SymbolExpr e = parse_symbol(text);
    if (!e.is_constant()) throw SymbolError("expected a complex constant", 0);
    return e.is_zero() ? cplx{} : e(0.0);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundedness analysis for products of Toeplitz operators on H^2", "tpb"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    // analyze
    PairOptions analyze_pair;
    int max_degree = 256;
    std::string radii_text, report_path, table_path;
    std::optional<int> threads;
    auto* analyze_cmd = app.add_subcommand("analyze", "run every boundedness estimate and write a report");
    add_pair_options(analyze_cmd, analyze_pair);
    analyze_cmd->add_option("--max-degree", max_degree, "largest section degree (power of two >= 32)");
    analyze_cmd->add_option("--radii", radii_text, "comma-separated Sarason radii, increasing in (0, 1)");
    analyze_cmd->add_option("--report", report_path, "JSON report path (default: stdout)");
    analyze_cmd->add_option("--table", table_path, "CSV norm table path");
    analyze_cmd->add_option("--threads", threads, "worker threads (default: TP_THREADS or 1)");

    // admissible
    PairOptions adm_pair;
    auto* adm_cmd = app.add_subcommand("admissible", "check the admissible-pair conditions; exit 1 when they fail");
    add_pair_options(adm_cmd, adm_pair);

    // pathology
    auto* path_cmd = app.add_subcommand("pathology", "boundary pathology constructions and scans");
    path_cmd->require_subcommand(1);
    std::string path_table;
    path_cmd->add_option("--table", path_table, "CSV output path (default: stdout)");

    int po_count = 8, po_n = 1, po_arcs = 12;
    auto* po_cmd = path_cmd->add_subcommand("pole-order", "Blaschke quotient with a pole of prescribed order at 1");
    po_cmd->add_option("--zeros", po_count, "number of zeros 1 - 2^-k");
    po_cmd->add_option("--n", po_n, "pole order");
    po_cmd->add_option("--arcs", po_arcs, "dyadic arcs per scan");

    std::string osc_f, osc_zeta = "1";
    int osc_n = 0, osc_arcs = 12;
    double osc_eps = 1.0;
    auto* osc_cmd = path_cmd->add_subcommand("oscillation", "dyadic arc scan of |(z - zeta)^n f| near zeta");
    osc_cmd->add_option("--f", osc_f, "symbol")->required();
    osc_cmd->add_option("--zeta", osc_zeta, "unimodular scan point");
    osc_cmd->add_option("--n", osc_n, "exponent n");
    osc_cmd->add_option("--eps", osc_eps, "outer chord distance of the first arc");
    osc_cmd->add_option("--arcs", osc_arcs, "number of dyadic arcs");

    int step_K = 6, step_n = 3;
    auto* step_cmd = path_cmd->add_subcommand("step-function", "step function with poles at x_k, k = 3..K");
    step_cmd->add_option("--K", step_K, "last arc index (>= 4)");
    step_cmd->add_option("--n", step_n, "exponent for the growth column k!/k^n");

    std::string hp_f;
    double hp_p = 2.0;
    auto* hp_cmd = path_cmd->add_subcommand("hp-norm", "grid estimate of the H^p quasi-norm under refinement");
    hp_cmd->add_option("--f", hp_f, "symbol")->required();
    hp_cmd->add_option("--p", hp_p, "exponent p > 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kConfigError;
    }

    if (*analyze_cmd) {
        AnalysisConfig config;
        try {
            config.max_degree = max_degree;
            if (!radii_text.empty()) config.radii = parse_radii(radii_text);
            if (threads) {
                config.threads = *threads;
            } else if (const char* env = std::getenv("TP_THREADS")) {
                try {
                    config.threads = std::stoi(env);
                } catch (const std::exception&) {
                    throw ConfigError("TP_THREADS is not an integer");
                }
            }
            config.validate();
        } catch (const ConfigError& e) {
            err << "error: invalid configuration: " << e.what() << '\n';
            return kConfigError;
        }
        auto pair = parse_pair(analyze_pair, err);
        if (!pair) return kParseError;

        const BoundednessReport rep = analyze(pair->first, pair->second, config);
        const PairText text{analyze_pair.u, analyze_pair.v_plus, analyze_pair.v_minus};
        const std::string js = report_json(rep, config, text).dump(2) + "\n";

        std::ostringstream summary;
        summary << "verdict: " << to_string(rep.verdict);
        if (!rep.ess_sup.rows.empty()) summary << " (ess sup |uv| " << format_number(rep.ess_sup.rows.back().value);
        if (!rep.norm_table.empty()) {
            summary << ", section norm " << format_number(rep.norm_table.back().section.value) << " at N="
                    << rep.norm_table.back().N;
        }
        if (!rep.ess_sup.rows.empty()) summary << ")";
        if (rep.admissibility) summary << (rep.admissibility->overall ? "; admissible" : "; not admissible");

        if (!table_path.empty() && !write_file(table_path, norm_table_csv(rep), err)) return kConfigError;
        if (report_path.empty()) {
            err << summary.str() << '\n';
            out << js;
        } else {
            if (!write_file(report_path, js, err)) return kConfigError;
            out << summary.str() << '\n';
        }
        return kOk;
    }

    if (*adm_cmd) {
        auto pair = parse_pair(adm_pair, err);
        if (!pair) return kParseError;
        const auto rep = check_admissible(pair->first, pair->second);
        out << admissibility_json(rep).dump(2) << '\n';
        return rep.overall ? kOk : kPredicateFalse;
    }

    try {
        if (*po_cmd) {
            if (po_count < 0 || po_n < 1 || po_arcs < 4) throw ConfigError("need --zeros >= 0, --n >= 1, --arcs >= 4");
            const auto f = pole_order_function(dyadic_zeros(po_count), po_n);
            std::ostringstream os;
            os << "exponent,sup_slope,interleaved_pairs,verdict\n";
            ScanOptions opt;
            opt.arcs = po_arcs;
            for (int i = 0; i <= po_n; ++i) {
                const auto s = oscillation_scan(f, 1.0, i, opt);
                os << i << ',' << format_number(s.sup_slope) << ',' << s.interleaved_pairs() << ',' << to_string(s.verdict)
                   << '\n';
            }
            return emit_table(path_table, os.str(), out, err);
        }
        if (*osc_cmd) {
            SymbolExpr f;
            cplx zeta;
            try {
                f = parse_symbol(osc_f);
                zeta = parse_complex(osc_zeta);
            } catch (const SymbolError& e) {
                err << "error: " << e.what() << '\n';
                return kParseError;
            }
            if (osc_n < 0 || osc_arcs < 1 || !(osc_eps > 0.0)) throw ConfigError("need --n >= 0, --arcs >= 1, --eps > 0");
            ScanOptions opt;
            opt.eps = osc_eps;
            opt.arcs = osc_arcs;
            return emit_table(path_table, scan_csv(oscillation_scan(f, zeta, osc_n, opt)), out, err);
        }
        if (*step_cmd) {
            if (step_n < 0) throw ConfigError("need --n >= 0");
            return emit_table(path_table, step_function_csv(infinite_pole_step_function(step_K), step_n), out, err);
        }
        if (*hp_cmd) {
            SymbolExpr f;
            try {
                f = parse_symbol(hp_f);
            } catch (const SymbolError& e) {
                err << "error: " << e.what() << '\n';
                return kParseError;
            }
            return emit_table(path_table, hp_csv(hp_norm_estimate(f, hp_p)), out, err);
        }
    } catch (const ConfigError& e) {
        err << "error: invalid parameters: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "error: invalid parameters: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace tpb::cli
