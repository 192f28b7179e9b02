#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nselab/dns.hpp"

namespace nselab {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double x);

struct ReportRow {
    double t = 0.0;
    std::optional<double> linf_momentum;
    std::optional<double> linf_divergence;
    std::optional<double> linf_h_equation;
    std::optional<double> linf_lemma3;
    std::optional<double> energy;
    std::optional<double> max_velocity;
};

struct MetricCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    std::string comparison = "<=";  // value vs threshold
    bool pass = false;
};

MetricCheck check_le(std::string name, double value, double threshold);
MetricCheck check_ge(std::string name, double value, double threshold);

struct RunReport {
    std::string experiment;
    nlohmann::json config_echo;
    std::vector<ReportRow> rows;
    std::vector<DnsDiagnosticsRow> dns_diagnostics;
    std::vector<MetricCheck> checks;
    nlohmann::json extra;  // per-experiment detail
    bool passed = true;
    double duration_seconds = 0.0;
};

/// Folds a check into the report's pass flag.
void add_check(RunReport& report, MetricCheck check);

std::string render_report_csv(const std::vector<ReportRow>& rows);
std::string render_dns_csv(const std::vector<DnsDiagnosticsRow>& rows);
nlohmann::json report_json(const RunReport& report);

struct WrittenFiles {
    std::string csv_path;
    std::string json_path;
    std::optional<std::string> dns_csv_path;
};

/// Writes report.csv and report.json (plus dns_diagnostics.csv when present)
/// into out_dir, creating it if needed.
WrittenFiles write_report(const RunReport& report, const std::string& out_dir);

}  // namespace nselab
