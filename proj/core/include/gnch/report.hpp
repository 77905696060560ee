#ifndef GNCH_REPORT_HPP
#define GNCH_REPORT_HPP

#include <string>
#include <vector>

#include "gnch/config.hpp"
#include "gnch/diagnostics.hpp"
#include "gnch/experiments.hpp"
#include "gnch/integrator.hpp"

namespace gnch {

// All floats serialized at 17 significant digits so files round-trip
// bit-exactly through text.
std::string format_double(double x);

// Generic CSV: header row then one line per row; rows must match the
// header width.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Diagnostics rows of one run in the documented column order.
void write_run_csv(const std::string& path, const Trajectory& traj);

// Appends one JSON line per experiment to <out_dir>/report.jsonl with the
// echoed config, measurements, thresholds and verdicts.
void append_report_line(const std::string& out_dir, const ExperimentConfig& cfg,
                        const ExperimentOutcome& outcome);

// Writes the column documentation for every CSV this tool emits.
void write_schema_doc(const std::string& out_dir);

// Minimal self-contained line plot (log or linear axes).
struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<PlotSeries>& series, bool log_x = false,
                    bool log_y = false);

void ensure_dir(const std::string& path);

}  // namespace gnch

#endif
