#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sskm/instance.hpp"
#include "sskm/pipeline.hpp"

namespace sskm {

// Points file: one point per line, whitespace-separated coordinates, optional
// trailing "w=<real>" weight token (default 1). Blank lines and lines
// starting with '#' are skipped.
Instance parse_points_file(const std::string& path,
                           MetricMode mode = MetricMode::Euclidean);

// Matrix file: first line n, then n lines of n reals.
Instance parse_matrix_file(const std::string& path);

Instance parse_input(const std::string& path, const std::string& format,
                     MetricMode mode = MetricMode::Euclidean);

// Report serialization per the published schema. Timings are omitted when
// include_timings is false so that two runs with the same seed produce
// byte-identical output.
nlohmann::json report_to_json(const PipelineReport& report,
                              bool include_timings = true);
PipelineReport report_from_json(const nlohmann::json& j);

// One JSON object per sampler round.
void write_trace_jsonl(std::ostream& os, const SamplerTrace& trace);

}  // namespace sskm
