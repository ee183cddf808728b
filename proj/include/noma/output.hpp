#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noma/curve.hpp"
#include "noma/experiment.hpp"

namespace noma {

struct OutputPaths {
    std::string csv;
    std::string svg;  // empty unless requested
};

namespace detail {

inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace detail

/// Writes the sweep as one CSV: `# key: value` metadata lines, a
/// `snr_db,<label>,...` header, one row per grid point, 9 significant digits.
/// All values must be finite.
inline std::string write_csv(const std::vector<OutageCurve>& curves, const ExperimentSpec& spec) {
    if (curves.empty()) throw std::invalid_argument("write_csv: empty curve set");
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(spec.out_dir, ec);
    const std::string path = (fs::path(spec.out_dir) / (spec.name + ".csv")).string();
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical across platforms
    if (!out) throw ConfigError("cannot write output file '" + path + "'");

    out << "# noma-outage sweep\n";
    if (!spec.preset.empty()) out << "# preset: " << spec.preset << "\n";
    out << "# seed: " << spec.seed << "\n";
    out << "# trials: " << spec.trials << "\n";
    for (const auto& note : spec.notes) out << "# note: " << note << "\n";

    out << "snr_db";
    for (const auto& c : curves) out << "," << c.label();
    out << "\n";
    const std::size_t points = curves.front().snr_grid_db.size();
    for (const auto& c : curves)
        if (c.values.size() != points || c.snr_grid_db.size() != points)
            throw std::invalid_argument("write_csv: curves disagree on grid size");
    for (std::size_t i = 0; i < points; ++i) {
        out << detail::format_value(curves.front().snr_grid_db[i]);
        for (const auto& c : curves) {
            if (!std::isfinite(c.values[i]))
                throw std::invalid_argument("write_csv: non-finite value in curve " + c.label());
            out << "," << detail::format_value(c.values[i]);
        }
        out << "\n";
    }
    if (!out) throw ConfigError("write failed for '" + path + "'");
    return path;
}

struct CsvData {
    std::vector<std::string> labels;           // excluding snr_db
    std::vector<double> snr_db;
    std::vector<std::vector<double>> columns;  // one per label
};

/// Reads a file produced by write_csv (metadata lines skipped).
inline CsvData read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open '" + path + "'");
    CsvData data;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            if (cells.empty() || cells[0] != "snr_db")
                throw std::runtime_error("read_csv: missing snr_db header in '" + path + "'");
            data.labels.assign(cells.begin() + 1, cells.end());
            data.columns.resize(data.labels.size());
            header_seen = true;
            continue;
        }
        if (cells.size() != data.labels.size() + 1)
            throw std::runtime_error("read_csv: ragged row in '" + path + "'");
        data.snr_db.push_back(std::stod(cells[0]));
        for (std::size_t i = 0; i < data.labels.size(); ++i)
            data.columns[i].push_back(std::stod(cells[i + 1]));
    }
    return data;
}

/// Quick-look SVG chart of all curves: log y-axis for outage sweeps,
/// linear for throughput. Convenience output; the CSV is canonical.
inline std::string write_svg(const std::vector<OutageCurve>& curves, const ExperimentSpec& spec) {
    namespace fs = std::filesystem;
    const std::string path = (fs::path(spec.out_dir) / (spec.name + ".svg")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file '" + path + "'");

    bool log_y = true;
    for (const auto& c : curves)
        if (c.quantity.find("throughput") != std::string::npos) log_y = false;

    const double width = 720, height = 480, ml = 70, mr = 170, mt = 30, mb = 50;
    const double x_lo = curves.front().snr_grid_db.front();
    const double x_hi = curves.front().snr_grid_db.back();
    double y_lo = 1e300, y_hi = -1e300;
    for (const auto& c : curves)
        for (double v : c.values) {
            if (log_y && v <= 0.0) continue;
            const double y = log_y ? std::log10(v) : v;
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    if (y_lo > y_hi) { y_lo = 0.0; y_hi = 1.0; }
    if (log_y) {
        // probability axis: clip at 1, ignore the deep MC-zero tail
        y_lo = std::max(y_lo, -12.0);
        y_hi = std::min(y_hi, 0.0);
        if (y_lo > y_hi) y_lo = y_hi - 1.0;
    }
    if (y_hi == y_lo) y_hi = y_lo + 1.0;

    auto sx = [&](double v) { return ml + (v - x_lo) / std::max(x_hi - x_lo, 1e-12) * (width - ml - mr); };
    auto sy = [&](double v) { return height - mb - (v - y_lo) / (y_hi - y_lo) * (height - mt - mb); };

    static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    for (double x = x_lo; x <= x_hi + 1e-9; x += std::max((x_hi - x_lo) / 9.0, 1e-9)) {
        out << "<text x=\"" << sx(x) << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\">" << detail::format_value(x) << "</text>\n";
    }
    const int y_ticks = log_y ? int(y_hi - y_lo) + 1 : 6;
    for (int i = 0; i <= y_ticks; ++i) {
        const double yv = y_lo + (y_hi - y_lo) * i / y_ticks;
        std::ostringstream lab;
        if (log_y) lab << "1e" << int(std::round(yv));
        else lab << detail::format_value(yv);
        out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(yv) + 4
            << "\" text-anchor=\"end\">" << lab.str() << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">transmit SNR (dB)</text>\n";
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& c = curves[ci];
        const char* color = kColors[ci % 10];
        const bool dashed = c.method != "exact";
        out << "<polyline fill=\"none\" stroke=\"" << color << "\""
            << (dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
        for (std::size_t i = 0; i < c.values.size(); ++i) {
            double v = c.values[i];
            if (log_y) {
                if (v <= 0.0) continue;
                v = std::clamp(std::log10(v), y_lo, y_hi);
            }
            out << sx(c.snr_grid_db[i]) << "," << sy(v) << " ";
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - mr + 8 << "\" y=\"" << mt + 14 * double(ci)
            << "\" fill=\"" << color << "\">" << c.label() << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw ConfigError("write failed for '" + path + "'");
    return path;
}

/// Writes the canonical CSV and, when requested, the SVG chart.
inline OutputPaths write_outputs(const std::vector<OutageCurve>& curves,
                                 const ExperimentSpec& spec) {
    OutputPaths paths;
    paths.csv = write_csv(curves, spec);
    if (spec.svg) paths.svg = write_svg(curves, spec);
    return paths;
}

}  // namespace noma
