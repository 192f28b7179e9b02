#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "nselab/config.hpp"
#include "nselab/experiments.hpp"
#include "nselab/reporting.hpp"
#include "nselab/snapshot.hpp"
#include "test_helpers.hpp"

using namespace nselab;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("nselab_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_text(const TempDir& dir, const std::string& name, const std::string& text) {
    const std::string path = dir.file(name);
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("NSEF snapshots round-trip bit for bit") {
    TempDir dir;
    const Grid3 g(16);
    const VecField3 u = testing::random_vec_field(g, 77);
    const std::string path = dir.file("field.nsef");
    write_nsef(path, u);
    const VecField3 back = read_nsef(path);
    CHECK(back.grid().n == 16);
    for (int c = 0; c < 3; ++c)
        for (std::size_t q = 0; q < u[c].values.size(); ++q)
            CHECK(back[c].values[q] == u[c].values[q]);
}

TEST_CASE("NSEF rejects corrupt input") {
    TempDir dir;
    SUBCASE("bad magic") {
        const std::string path = write_text(dir, "bad.nsef", "XXXX garbage");
        CHECK_THROWS_AS(read_nsef(path), std::runtime_error);
    }
    SUBCASE("truncated payload") {
        const Grid3 g(8);
        const std::string path = dir.file("trunc.nsef");
        write_nsef(path, VecField3(g));
        std::filesystem::resize_file(path, 100);
        CHECK_THROWS_AS(read_nsef(path), std::runtime_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(read_nsef(dir.file("absent.nsef")), std::runtime_error);
    }
}

TEST_CASE("format_double survives parse round trips") {
    for (double x : {0.0, 1.0, -0.1, 1e-300, 3.141592653589793, 118.43525281306196, 1.0 / 3.0}) {
        const std::string text = format_double(x);
        CHECK(std::stod(text) == x);
    }
}

TEST_CASE("config file parsing") {
    TempDir dir;
    SUBCASE("minimal file applies defaults") {
        const std::string path = write_text(dir, "min.cfg",
                                            "experiment = verify\n"
                                            "family = trig-triple\n");
        const ExperimentConfig cfg = load_config(path);
        CHECK(cfg.experiment == ExperimentKind::verify);
        CHECK(cfg.grid_n == 32);
        CHECK(cfg.nu == 0.01);
        CHECK(cfg.profile == "zero");
        CHECK(cfg.times == std::vector<double>{0.0, 0.1, 0.25, 0.5});
    }
    SUBCASE("unknown keys are rejected with their line number") {
        const std::string path = write_text(dir, "bad.cfg",
                                            "experiment = verify\n"
                                            "famly = trig-triple\n");
        try {
            load_config(path);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("line 2") != std::string::npos);
            CHECK(msg.find("famly") != std::string::npos);
        }
    }
    SUBCASE("sections select per-experiment values") {
        const std::string path = write_text(dir, "sec.cfg",
                                            "experiment = blowup\n"
                                            "nu = 0.02\n"
                                            "[blowup]\n"
                                            "c = 2.0\n"
                                            "a = 0.75\n"
                                            "times = 0.1,0.5\n"
                                            "[verify]\n"
                                            "grid = 16\n");
        const ExperimentConfig cfg = load_config(path);
        CHECK(cfg.nu == 0.02);
        CHECK(cfg.c == 2.0);
        CHECK(cfg.a == 0.75);
        CHECK(cfg.grid_n == 32);  // [verify] section does not leak
    }
    SUBCASE("command-line overrides win over the file") {
        const std::string path = write_text(dir, "ovr.cfg",
                                            "experiment = verify\n"
                                            "nu = 0.01\n");
        const ConfigFile file = parse_config_file(path);
        const ExperimentConfig cfg =
            build_config(ExperimentKind::verify, &file, {{"nu", "0.02", 0}});
        CHECK(cfg.nu == 0.02);
    }
    SUBCASE("incommensurate parameters with grid mode are a config error") {
        const std::string path = write_text(dir, "inc.cfg",
                                            "experiment = verify\n"
                                            "family = plane-wave\n"
                                            "b = 1,1,-2\n"
                                            "alpha = 0.3678794411714423,0.3678794411714423,"
                                            "0.3678794411714423\n"
                                            "mode = grid\n");
        CHECK_THROWS_AS(load_config(path), ConfigError);
    }
    SUBCASE("auto mode falls back to pointwise for incommensurate parameters") {
        const std::string path = write_text(dir, "auto.cfg",
                                            "experiment = verify\n"
                                            "family = plane-wave\n"
                                            "b = 1,1,-2\n"
                                            "alpha = 0.3678794411714423,0.3678794411714423,"
                                            "0.3678794411714423\n");
        CHECK(load_config(path).mode == "pointwise");
    }
    SUBCASE("sample times at or past the blow-up time are rejected") {
        const std::string path = write_text(dir, "late.cfg",
                                            "experiment = blowup\n"
                                            "c = 1.0\n"
                                            "a = 0.5\n"
                                            "times = 0.4,0.5\n");
        CHECK_THROWS_AS(load_config(path), ConfigError);
    }
    SUBCASE("missing experiment key") {
        const std::string path = write_text(dir, "noexp.cfg", "family = trig-triple\n");
        CHECK_THROWS_AS(load_config(path), ConfigError);
    }
    SUBCASE("invalid family parameters are caught at load time") {
        const std::string path = write_text(dir, "badfam.cfg",
                                            "experiment = verify\n"
                                            "family = plane-wave\n"
                                            "b = 1,1,1\n");
        CHECK_THROWS_AS(load_config(path), ConfigError);
    }
}

TEST_CASE("reports are deterministic and consistent") {
    TempDir dir;
    ConfigFile none;
    ExperimentConfig cfg = build_config(
        ExperimentKind::verify, nullptr,
        {{"grid", "16", 0}, {"times", "0,0.1", 0}, {"out-dir", dir.file("out"), 0}});

    const RunReport first = run(cfg);
    const RunReport second = run(cfg);
    CHECK(render_report_csv(first.rows) == render_report_csv(second.rows));
    CHECK(first.passed);
    CHECK(exit_status(first) == 0);

    const WrittenFiles files = write_report(first, cfg.out_dir);
    CHECK(std::filesystem::exists(files.csv_path));
    CHECK(std::filesystem::exists(files.json_path));

    std::ifstream in(files.json_path);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["experiment"] == "verify");
    bool all = true;
    for (const auto& c : j["checks"]) all = all && c["pass"].get<bool>();
    CHECK(j["passed"].get<bool>() == all);

    // byte-identical CSV on re-run
    const WrittenFiles files2 = write_report(second, cfg.out_dir);
    std::ifstream a(files.csv_path, std::ios::binary), b(files2.csv_path, std::ios::binary);
    const std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    const std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
}

TEST_CASE("csv layout puts absent metrics in empty cells") {
    std::vector<ReportRow> rows(1);
    rows[0].t = 0.5;
    rows[0].linf_momentum = 1e-9;
    const std::string csv = render_report_csv(rows);
    CHECK(csv ==
          "t,linf_momentum,linf_divergence,linf_h_equation,linf_lemma3,energy,max_velocity\n"
          "0.5,1e-09,,,,,\n");
}

TEST_CASE("a failed tolerance flips the exit status") {
    RunReport rep;
    add_check(rep, check_le("demo", 1.0, 0.5));
    CHECK_FALSE(rep.passed);
    CHECK(exit_status(rep) == 1);
}

TEST_CASE("taylor experiment dumps one snapshot per coefficient") {
    TempDir dir;
    ExperimentConfig cfg = build_config(ExperimentKind::taylor, nullptr,
                                        {{"grid", "16", 0},
                                         {"order", "2", 0},
                                         {"t-eval", "0.01", 0},
                                         {"snapshot", "true", 0},
                                         {"out-dir", dir.file("taylor"), 0}});
    const RunReport rep = run(cfg);
    CHECK(rep.passed);
    for (int n = 0; n <= 2; ++n) {
        const std::string path =
            dir.file("taylor/psi_00" + std::to_string(n) + ".nsef");
        CHECK(std::filesystem::exists(path));
    }
}

TEST_CASE("dns-compare writes the diagnostics csv") {
    TempDir dir;
    ExperimentConfig cfg = build_config(ExperimentKind::dns_compare, nullptr,
                                        {{"grid", "16", 0},
                                         {"dt", "0.005", 0},
                                         {"t-end", "0.02", 0},
                                         {"times", "0,0.01,0.02", 0},
                                         {"out-dir", dir.file("dns"), 0}});
    const RunReport rep = run(cfg);
    CHECK(rep.passed);
    const WrittenFiles files = write_report(rep, cfg.out_dir);
    REQUIRE(files.dns_csv_path.has_value());
    std::ifstream in(*files.dns_csv_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,energy,max_velocity,div_linf");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("polynomial profile is constructible from configuration") {
    ExperimentConfig cfg = build_config(ExperimentKind::verify, nullptr,
                                        {{"grid", "16", 0},
                                         {"profile", "polynomial", 0},
                                         {"poly", "0.5,-0.25", 0},
                                         {"times", "0,0.2", 0}});
    const RunReport rep = run(cfg);
    CHECK(rep.passed);
}

TEST_CASE("unwritable output directories are reported") {
    RunReport rep;
    CHECK_THROWS_AS(write_report(rep, "/dev/null/reports"), std::runtime_error);
}

TEST_CASE("experiment snapshots are written when requested") {
    TempDir dir;
    ExperimentConfig cfg = build_config(ExperimentKind::verify, nullptr,
                                        {{"grid", "16", 0},
                                         {"times", "0", 0},
                                         {"snapshot", "true", 0},
                                         {"out-dir", dir.file("snap"), 0}});
    const RunReport rep = run(cfg);
    CHECK(rep.passed);
    const VecField3 u = read_nsef(dir.file("snap/velocity_000.nsef"));
    CHECK(u.grid().n == 16);
}
