#include "sskm/io.hpp"

#include <fstream>
#include <sstream>

namespace sskm {

namespace {

[[noreturn]] void parse_error(const std::string& path, int line,
                              const std::string& what) {
    throw ValidationError(path + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    return in;
}

}  // namespace

Instance parse_points_file(const std::string& path, MetricMode mode) {
    std::ifstream in = open_or_throw(path);
    std::vector<double> coords;
    std::vector<double> weights;
    int dim = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> row;
        double weight = 1.0;
        std::string tok;
        while (ls >> tok) {
            if (tok.rfind("w=", 0) == 0) {
                try {
                    std::size_t pos = 0;
                    weight = std::stod(tok.substr(2), &pos);
                    if (pos != tok.size() - 2) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    parse_error(path, line_no, "bad weight token '" + tok + "'");
                }
                if (ls >> tok)
                    parse_error(path, line_no, "weight must be the last token");
                break;
            }
            try {
                std::size_t pos = 0;
                row.push_back(std::stod(tok, &pos));
                if (pos != tok.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                parse_error(path, line_no, "bad coordinate '" + tok + "'");
            }
        }
        if (row.empty()) parse_error(path, line_no, "no coordinates on line");
        if (dim < 0) dim = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != dim)
            parse_error(path, line_no, "inconsistent dimension");
        coords.insert(coords.end(), row.begin(), row.end());
        weights.push_back(weight);
    }
    if (coords.empty()) throw ValidationError(path + ": no points");
    return Instance::from_points(std::move(coords), dim, std::move(weights), mode);
}

Instance parse_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    int line_no = 0;
    int n = 0;
    if (!std::getline(in, line)) throw ValidationError(path + ": empty file");
    ++line_no;
    try {
        n = std::stoi(line);
    } catch (const std::exception&) {
        parse_error(path, line_no, "expected point count");
    }
    if (n < 1) parse_error(path, line_no, "point count must be >= 1");

    std::vector<double> matrix;
    matrix.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            parse_error(path, line_no + 1, "missing matrix row");
        ++line_no;
        std::istringstream ls(line);
        double v;
        int count = 0;
        while (ls >> v) {
            matrix.push_back(v);
            ++count;
        }
        if (count != n)
            parse_error(path, line_no, "expected " + std::to_string(n) + " values");
    }
    return Instance::from_matrix(std::move(matrix), n, {});
}

Instance parse_input(const std::string& path, const std::string& format,
                     MetricMode mode) {
    if (format == "points") return parse_points_file(path, mode);
    if (format == "matrix") return parse_matrix_file(path);
    throw ValidationError("unknown input format: " + format);
}

nlohmann::json report_to_json(const PipelineReport& report,
                              bool include_timings) {
    nlohmann::json j;
    j["k"] = report.k;
    j["mode"] = report.mode;
    j["seed"] = report.seed;
    j["alpha"] = report.alpha;
    j["beta"] = report.beta;
    j["k_prime"] = report.k_prime;
    j["final_centers"] = report.final_config.centers;
    j["final_cost"] = report.final_cost;
    j["c_sigma"] = report.c_sigma;
    j["rounds"] = report.rounds;
    j["image_size"] = report.image_size;
    if (include_timings) {
        j["stage_timings_ms"] = {
            {"sampling", report.timings.sampling_ms},
            {"contraction", report.timings.contraction_ms},
            {"blackbox", report.timings.blackbox_ms},
        };
    }
    return j;
}

PipelineReport report_from_json(const nlohmann::json& j) {
    PipelineReport r;
    r.k = j.at("k").get<int>();
    r.mode = j.at("mode").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.alpha = j.at("alpha").get<double>();
    r.beta = j.at("beta").get<double>();
    r.k_prime = j.at("k_prime").get<int>();
    r.final_config = Configuration(j.at("final_centers").get<std::vector<int>>());
    r.final_cost = j.at("final_cost").get<double>();
    r.c_sigma = j.at("c_sigma").get<double>();
    r.rounds = j.at("rounds").get<int>();
    r.image_size = j.at("image_size").get<int>();
    if (j.contains("stage_timings_ms")) {
        const auto& t = j.at("stage_timings_ms");
        r.timings.sampling_ms = t.at("sampling").get<double>();
        r.timings.contraction_ms = t.at("contraction").get<double>();
        r.timings.blackbox_ms = t.at("blackbox").get<double>();
    }
    return r;
}

void write_trace_jsonl(std::ostream& os, const SamplerTrace& trace) {
    for (const RoundRecord& rec : trace.rounds) {
        nlohmann::json j;
        j["round"] = rec.round;
        j["sample_indices"] = rec.sample;
        j["nu"] = rec.nu;
        j["carved_count"] = rec.carved_count;
        j["carved_weight"] = rec.carved_weight;
        j["surviving_count"] = rec.surviving_count;
        j["surviving_weight"] = rec.surviving_weight;
        os << j.dump() << "\n";
    }
}

}  // namespace sskm
