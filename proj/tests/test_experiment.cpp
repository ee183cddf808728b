#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noma/experiment.hpp"
#include "noma/output.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;
using namespace noma;

namespace {

ExperimentSpec parse_text(const std::string& text, const ExperimentOverrides& ov = {}) {
    std::istringstream in(text);
    return parse_experiment(in, ov);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("noma_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("empty config yields the reference defaults") {
    const ExperimentSpec spec = parse_text("");
    REQUIRE(spec.base.num_users == 3);
    REQUIRE(spec.base.num_subcarriers == 2);
    REQUIRE(spec.base.weak_order == 1);
    REQUIRE(spec.base.strong_order == 2);
    REQUIRE(spec.base.weak_power == 0.8);
    REQUIRE(spec.base.strong_power == 0.2);
    REQUIRE(spec.base.weak_rate == 0.01);
    REQUIRE(spec.base.strong_rate == 0.01);
    REQUIRE(spec.base.disk_radius == 2.0);
    REQUIRE(spec.base.path_loss_exp == 2.0);
    REQUIRE(spec.base.chebyshev_order == 15);
    REQUIRE_THAT(spec.base.freq_factor, WithinRel(5.6914336571434505e-4, 1e-12));
    REQUIRE(spec.curves.size() == 4);  // analytic defaults only
    REQUIRE_FALSE(spec.wants_monte_carlo());
}

TEST_CASE("parser rejects unknown and malformed inputs by name") {
    REQUIRE_THROWS_WITH(parse_text("bogus = 1\n"), ContainsSubstring("bogus"));
    REQUIRE_THROWS_WITH(parse_text("M = three\n"), ContainsSubstring("M"));
    REQUIRE_THROWS_WITH(parse_text("a_m = 0.5\na_n = 0.5\n"),
                        ContainsSubstring("a_m > a_n"));
    REQUIRE_THROWS_WITH(parse_text("a_m = 0.9\na_n = 0.2\n"),
                        ContainsSubstring("a_m + a_n"));
    REQUIRE_THROWS_WITH(parse_text("eta = 1e-3\ncarrier_hz = 1e9\n"),
                        ContainsSubstring("mutually exclusive"));
    REQUIRE_THROWS_WITH(parse_text("scheme = PD\nK = 2\n"), ContainsSubstring("K"));
    REQUIRE_THROWS_WITH(parse_text("curves = m_exact, nonsense\n"),
                        ContainsSubstring("nonsense"));
    REQUIRE_THROWS_WITH(parse_text("M = 3\nM = 4\n"), ContainsSubstring("duplicate"));
    REQUIRE_THROWS_WITH(parse_text("snr_step_db = 0\n"), ContainsSubstring("snr_step_db"));
    REQUIRE_THROWS_AS(parse_text("preset = fig9\n"), ConfigError);
}

TEST_CASE("power-domain scheme defaults its subcarrier count") {
    const ExperimentSpec spec = parse_text("scheme = PD\n");
    REQUIRE(spec.base.scheme == Scheme::pd);
    REQUIRE(spec.base.num_subcarriers == 1);
}

TEST_CASE("residual interference accepts dB or linear") {
    REQUIRE_THAT(parse_text("omega_I_db = -30\n").base.ri_mean_power, WithinRel(1e-3, 1e-12));
    REQUIRE_THAT(parse_text("omega_I = 0.005\n").base.ri_mean_power, WithinRel(5e-3, 1e-15));
    REQUIRE_THROWS_WITH(parse_text("omega_I = 1e-3\nomega_I_db = -30\n"),
                        ContainsSubstring("mutually exclusive"));
}

TEST_CASE("monte carlo curves demand a sane trial count") {
    REQUIRE_THROWS_WITH(parse_text("curves = m_mc\ntrials = 100\n"),
                        ContainsSubstring("trials"));
    REQUIRE_NOTHROW(parse_text("curves = m_exact\ntrials = 100\n"));
}

TEST_CASE("presets build the figure curve families") {
    ExperimentSpec fig1 = parse_text("preset = fig1\n");
    REQUIRE(fig1.name == "fig1");
    REQUIRE(fig1.configs.size() == 3);
    REQUIRE(fig1.curves.size() == 13);
    int mc = 0;
    for (const auto& c : fig1.curves) mc += c.method == Method::monte_carlo;
    REQUIRE(mc == 5);  // m, n_psic, two ipSIC variants, oma

    const ExperimentSpec fig2 = parse_text("", {"fig2", {}, {}, {}, {}});
    REQUIRE(fig2.curves.size() == 20);
    bool has_pd = false, has_k3 = false;
    for (const auto& c : fig2.curves) {
        has_pd |= c.label_quantity.rfind("pd_", 0) == 0;
        has_k3 |= c.label_quantity.rfind("k3_", 0) == 0;
    }
    REQUIRE(has_pd);
    REQUIRE(has_k3);

    const ExperimentSpec fig3 = parse_text("preset = fig3\n");
    REQUIRE(fig3.curves.size() == 18);
    REQUIRE_FALSE(fig3.notes.empty());

    const ExperimentSpec fig4 = parse_text("preset = fig4\n");
    REQUIRE(fig4.curves.size() == 12);
    for (const auto& c : fig4.curves) REQUIRE(c.quantity == Quantity::throughput);
}

TEST_CASE("flag overrides win over file values") {
    ExperimentOverrides ov;
    ov.trials = 5000;
    ov.seed = 9;
    ov.svg = true;
    const ExperimentSpec spec = parse_text("trials = 1000000\nseed = 1\n", ov);
    REQUIRE(spec.trials == 5000);
    REQUIRE(spec.seed == 9);
    REQUIRE(spec.svg);
}

TEST_CASE("sweep evaluates analytic and monte carlo curves consistently") {
    ExperimentSpec spec = parse_text(
        "curves = m_exact, n_exact, m_mc, n_mc, throughput, throughput_mc\n"
        "snr_start_db = 10\nsnr_stop_db = 30\nsnr_step_db = 10\n"
        "trials = 50000\nseed = 3\n");
    const auto curves = run_sweep(spec);
    REQUIRE(curves.size() == 6);
    for (const auto& c : curves) {
        REQUIRE(c.snr_grid_db.size() == 3);
        REQUIRE(c.values.size() == 3);
    }
    // analytic and MC curves share the quantity and differ in the method tag
    REQUIRE(curves[0].quantity == curves[2].quantity);
    REQUIRE(curves[0].method == "exact");
    REQUIRE(curves[2].method == "mc");
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(std::abs(curves[0].values[i] - curves[2].values[i]) < 0.02);
        REQUIRE(std::abs(curves[4].values[i] - curves[5].values[i]) < 0.01);
    }
}

TEST_CASE("csv output round-trips at nine significant digits") {
    TempDir dir;
    ExperimentSpec spec = parse_text(
        "curves = m_exact, n_exact\nsnr_start_db = 0\nsnr_stop_db = 20\nsnr_step_db = 10\n");
    spec.out_dir = dir.path.string();
    spec.name = "roundtrip";
    const auto curves = run_sweep(spec);
    const OutputPaths paths = write_outputs(curves, spec);
    const CsvData data = read_csv(paths.csv);
    REQUIRE(data.labels.size() == 2);
    REQUIRE(data.labels[0] == "m_exact");
    REQUIRE(data.snr_db.size() == 3);
    char expected[32], parsed[32];
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < 3; ++i) {
            std::snprintf(expected, sizeof(expected), "%.9g", curves[c].values[i]);
            std::snprintf(parsed, sizeof(parsed), "%.9g", data.columns[c][i]);
            REQUIRE(std::string(expected) == parsed);
        }
}

TEST_CASE("preset csv column count matches the curve family") {
    TempDir dir;
    ExperimentOverrides ov;
    ov.preset = "fig1";
    ov.trials = std::uint64_t(2000);
    ExperimentSpec spec = parse_text("snr_start_db = 20\nsnr_stop_db = 30\nsnr_step_db = 5\n", ov);
    spec.out_dir = dir.path.string();
    const auto curves = run_sweep(spec);
    const OutputPaths paths = write_outputs(curves, spec);
    const CsvData data = read_csv(paths.csv);
    REQUIRE(data.labels.size() == 13);
    for (std::size_t c = 0; c < data.labels.size(); ++c) {
        // asymptotic curves are unclamped leading-order terms and may exceed
        // one at low SNR; probabilities must stay in [0, 1]
        const bool probability =
            data.labels[c].find("_asymptotic") == std::string::npos;
        for (double v : data.columns[c]) {
            REQUIRE(std::isfinite(v));
            REQUIRE(v >= 0.0);
            if (probability) REQUIRE(v <= 1.0);
        }
    }
}

TEST_CASE("reruns and worker counts leave the csv byte-identical") {
    TempDir dir;
    auto produce = [&](const char* workers) {
        setenv("NOMA_OUTAGE_WORKERS", workers, 1);
        ExperimentSpec spec = parse_text(
            "curves = m_exact, m_mc, n_mc\nsnr_start_db = 10\nsnr_stop_db = 20\n"
            "snr_step_db = 5\ntrials = 20000\nseed = 12\n");
        spec.out_dir = dir.path.string();
        spec.name = std::string("det_") + workers;
        const auto curves = run_sweep(spec);
        const OutputPaths paths = write_outputs(curves, spec);
        unsetenv("NOMA_OUTAGE_WORKERS");
        return slurp(paths.csv);
    };
    const std::string one = produce("1");
    const std::string four = produce("4");
    // file stems differ; compare from the header row onward
    const auto body = [](const std::string& s) { return s.substr(s.find("snr_db")); };
    REQUIRE(body(one) == body(four));
    REQUIRE(one == produce("1"));
}

TEST_CASE("svg chart is emitted on request") {
    TempDir dir;
    ExperimentSpec spec = parse_text("curves = m_exact\nsvg = true\n");
    spec.out_dir = dir.path.string();
    spec.name = "chart";
    const auto curves = run_sweep(spec);
    const OutputPaths paths = write_outputs(curves, spec);
    REQUIRE_FALSE(paths.svg.empty());
    const std::string svg = slurp(paths.svg);
    REQUIRE(svg.rfind("<svg", 0) == 0);
    REQUIRE_THAT(svg, ContainsSubstring("polyline"));
    REQUIRE_THAT(svg, ContainsSubstring("m_exact"));
}

TEST_CASE("closed-form region warning lands in the notes") {
    // strong user's SIC threshold below the weak user's decoding threshold
    ExperimentSpec spec = parse_text(
        "R_m = 1.9\nR_n = 0.01\ncurves = n_exact\n"
        "snr_start_db = 10\nsnr_stop_db = 20\nsnr_step_db = 10\n");
    run_sweep(spec);
    REQUIRE_FALSE(spec.notes.empty());
    REQUIRE_THAT(spec.notes.front(), ContainsSubstring("beta < tau"));
}
