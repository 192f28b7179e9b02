#include "nselab/reporting.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nselab {

std::string format_double(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

MetricCheck check_le(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, "<=", value <= threshold};
}

MetricCheck check_ge(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, ">=", value >= threshold};
}

void add_check(RunReport& report, MetricCheck check) {
    report.passed = report.passed && check.pass;
    report.checks.push_back(std::move(check));
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string render_report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "t,linf_momentum,linf_divergence,linf_h_equation,linf_lemma3,energy,max_velocity\n";
    for (const auto& r : rows)
        os << format_double(r.t) << ',' << cell(r.linf_momentum) << ',' << cell(r.linf_divergence)
           << ',' << cell(r.linf_h_equation) << ',' << cell(r.linf_lemma3) << ',' << cell(r.energy)
           << ',' << cell(r.max_velocity) << '\n';
    return os.str();
}

std::string render_dns_csv(const std::vector<DnsDiagnosticsRow>& rows) {
    std::ostringstream os;
    os << "t,energy,max_velocity,div_linf\n";
    for (const auto& r : rows)
        os << format_double(r.t) << ',' << format_double(r.energy) << ','
           << format_double(r.max_velocity) << ',' << format_double(r.div_linf) << '\n';
    return os.str();
}

nlohmann::json report_json(const RunReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"threshold", c.threshold},
                          {"comparison", c.comparison},
                          {"pass", c.pass}});

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row{{"t", r.t}};
        auto set = [&](const char* key, const std::optional<double>& v) {
            if (v) row[key] = *v;
        };
        set("linf_momentum", r.linf_momentum);
        set("linf_divergence", r.linf_divergence);
        set("linf_h_equation", r.linf_h_equation);
        set("linf_lemma3", r.linf_lemma3);
        set("energy", r.energy);
        set("max_velocity", r.max_velocity);
        rows.push_back(std::move(row));
    }

    nlohmann::json out{{"experiment", report.experiment},
                       {"config", report.config_echo},
                       {"passed", report.passed},
                       {"checks", std::move(checks)},
                       {"rows", std::move(rows)},
                       {"duration_seconds", report.duration_seconds}};
    if (!report.extra.is_null()) out["detail"] = report.extra;
    return out;
}

WrittenFiles write_report(const RunReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("write_report: cannot create " + out_dir);

    WrittenFiles files;
    files.csv_path = (fs::path(out_dir) / "report.csv").string();
    files.json_path = (fs::path(out_dir) / "report.json").string();

    auto dump = [](const std::string& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("write_report: cannot open " + path);
        out << text;
        if (!out) throw std::runtime_error("write_report: write failed for " + path);
    };

    dump(files.csv_path, render_report_csv(report.rows));
    dump(files.json_path, report_json(report).dump(2) + "\n");
    if (!report.dns_diagnostics.empty()) {
        files.dns_csv_path = (fs::path(out_dir) / "dns_diagnostics.csv").string();
        dump(*files.dns_csv_path, render_dns_csv(report.dns_diagnostics));
    }
    return files;
}

}  // namespace nselab
