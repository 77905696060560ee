#include "gnch/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gnch/errors.hpp"

namespace gnch {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void ensure_dir(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) fail(ErrorCode::CONFIG_INVALID, "cannot create directory '" + path + "'");
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::CONFIG_INVALID, "cannot write file '" + path + "'");
    return out;
}
}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
        if (row.size() != header.size())
            fail(ErrorCode::MISMATCH, "CSV row width does not match header in " + path);
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
}

void write_run_csv(const std::string& path, const Trajectory& traj) {
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.records.size());
    for (const DiagRecord& r : traj.records)
        rows.push_back({r.t, r.E_s, r.X_s, r.mass, r.h1_min, r.h2_min, r.q1_min, r.q2_min,
                        static_cast<double>(r.solver_iters)});
    write_csv(path, {"t", "E_s", "X_s", "mass", "h1_min", "h2_min", "q1_min", "q2_min",
                     "solver_iters"},
              rows);
}

void append_report_line(const std::string& out_dir, const ExperimentConfig& cfg,
                        const ExperimentOutcome& outcome) {
    nlohmann::json j;
    j["experiment"] = outcome.experiment;
    j["pass"] = outcome.pass;

    nlohmann::json echo = nlohmann::json::object();
    for (const auto& [k, v] : cfg.echo) echo[k] = v;
    j["config"] = echo;

    nlohmann::json verdicts = nlohmann::json::array();
    for (const Verdict& v : outcome.verdicts) {
        verdicts.push_back({{"name", v.name},
                            {"measured", v.measured},
                            {"threshold", v.threshold},
                            {"relation", v.relation},
                            {"pass", v.pass}});
    }
    j["verdicts"] = verdicts;

    nlohmann::json meas = nlohmann::json::object();
    for (const auto& [k, v] : outcome.measurements) meas[k] = v;
    j["measurements"] = meas;

    std::ofstream out(out_dir + "/report.jsonl", std::ios::app);
    if (!out) fail(ErrorCode::CONFIG_INVALID, "cannot append to " + out_dir + "/report.jsonl");
    out << j.dump() << "\n";
}

void write_schema_doc(const std::string& out_dir) {
    std::ofstream out = open_out(out_dir + "/SCHEMA.md");
    out << R"(# Output file schemas

All floating-point values are printed with 17 significant digits, so
reading them back reproduces the binary values exactly.

## `<experiment>_runN.csv` (time series of one simulation)

| column | meaning |
| --- | --- |
| `t` | sample time |
| `E_s` | energy functional at Sobolev index `run.s` (self-referenced) |
| `X_s` | product norm: interface H^s, velocity H^s, and scaled-derivative block |
| `mass` | grid mean of the interface displacement (conserved) |
| `h1_min` | minimum upper-layer depth over the grid |
| `h2_min` | minimum lower-layer depth over the grid |
| `q1_min` | minimum of the first ellipticity weight |
| `q2_min` | minimum of the second ellipticity weight |
| `solver_iters` | largest elliptic solve iteration count in the step |

## `dispersion_phase.csv`

| column | meaning |
| --- | --- |
| `t` | sample time |
| `phase` | unwrapped phase of the tracked Fourier mode of the interface |

## `expansion_residuals.csv`

| column | meaning |
| --- | --- |
| `eps` | nonlinearity parameter of the evaluation |
| `residual_q` | H^s defect of the dispersive operator against its expansion |
| `residual_r` | H^s defect of the quadratic operator against its expansion |

## `energy_rates.csv`

| column | meaning |
| --- | --- |
| `eps` | nonlinearity parameter of the run |
| `rate_abs` | fitted slope of log E_s over t |
| `rate_per_eps` | the same slope divided by eps |

## `twin_divergence.csv`

| column | meaning |
| --- | --- |
| `t` | sample time |
| `diff1` | X^s distance to the run perturbed by the base amplitude |
| `diff2` | X^s distance to the run perturbed by twice the base amplitude |

## `model_comparison.csv`

| column | meaning |
| --- | --- |
| `mu` | shallowness parameter of the sweep point |
| `eps` | nonlinearity parameter (sqrt(mu) when slaved) |
| `xs_error` | X^s distance between the two models at the final time |

## `time_order.csv`

| column | meaning |
| --- | --- |
| `dt` | requested step of the run |
| `xs_diff_next` | X^s distance to the run with half this step |

## `operator_checks.csv`

| column | meaning |
| --- | --- |
| `sample` | index of the random state |
| `symmetry_defect` | bilinear-form asymmetry, normalized by the L2 norms |
| `coercivity_slack` | quadratic form minus its guaranteed lower bound |
| `continuity_slack` | upper bound minus the bilinear form (nonnegative when tight) |
| `roundtrip_err` | sup-norm error of invert-after-apply |
| `equivalence_ratio` | energy over X^s norm for the sample |

## `report.jsonl`

One JSON object per experiment run: the echoed configuration, named
measurements, thresholds, and per-check verdicts with pass flags.
)";
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<PlotSeries>& series, bool log_x, bool log_y) {
    const double W = 720, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;

    auto tx = [&](double x) { return log_x ? std::log10(std::max(x, 1e-300)) : x; };
    auto ty = [&](double y) { return log_y ? std::log10(std::max(y, 1e-300)) : y; };

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, tx(s.x[i]));
            xmax = std::max(xmax, tx(s.x[i]));
            ymin = std::min(ymin, ty(s.y[i]));
            ymax = std::max(ymax, ty(s.y[i]));
        }
    if (xmin > xmax) {
        xmin = 0;
        xmax = 1;
    }
    if (ymin > ymax) {
        ymin = 0;
        ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto px = [&](double x) { return ml + (tx(x) - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (ty(y) - ymin) / (ymax - ymin) * (H - mt - mb); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << title << "</text>\n";
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr << "\" height=\""
        << H - mt - mb << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // Corner labels of the data range.
    auto axis_label = [&](double v, bool is_log) {
        return format_double(is_log ? std::pow(10.0, v) : v);
    };
    out << "<text x=\"" << ml << "\" y=\"" << H - mb + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << axis_label(xmin, log_x)
        << "</text>\n";
    out << "<text x=\"" << W - mr << "\" y=\"" << H - mb + 18
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << axis_label(xmax, log_x) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << H - mb
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << axis_label(ymin, log_y) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 10
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << axis_label(ymax, log_y) << "</text>\n";

    int ci = 0;
    for (const auto& s : series) {
        const char* color = colors[ci % 5];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << W - mr - 8 << "\" y=\"" << mt + 16 + 16 * ci
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << color << "\">" << s.label << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
}

}  // namespace gnch
