#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sskm/bench.hpp"
#include "sskm/io.hpp"

namespace {

int run(const sskm::RunConfig& base, int repeat, const std::string& out_path,
        const std::string& trace_path, const std::string& csv_path,
        bool stable_report) {
    using nlohmann::json;

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw sskm::ValidationError("cannot open csv output: " + csv_path);
        csv << "seed,n,k,mode,final_cost,oracle_cost,ratio,time_ms\n";
    }

    json reports = json::array();
    for (int r = 0; r < repeat; ++r) {
        sskm::RunConfig config = base;
        config.seed = base.seed + static_cast<std::uint64_t>(r);
        const sskm::Instance inst = sskm::build_instance(config);
        const sskm::BenchResult result = sskm::run_bench(inst, config);

        json j = sskm::report_to_json(result.report, !stable_report);
        j["time_ms"] = stable_report ? 0.0 : result.time_ms;
        if (result.oracle_cost) {
            j["oracle_cost"] = *result.oracle_cost;
            j["ratio"] = *result.oracle_cost > 0.0
                             ? result.report.final_cost / *result.oracle_cost
                             : (result.report.final_cost == 0.0 ? 1.0 : -1.0);
        }
        if (config.mode == "kmeans-init") {
            j["lloyd_iterations"] = result.lloyd_iterations;
            j["kmeans_init_cost"] = result.kmeans_init_cost;
            j["kmeans_final_cost"] = result.kmeans_final_cost;
            j["baseline_random_init_cost"] = result.random_init_final_cost;
            j["baseline_farthest_init_cost"] = result.farthest_init_final_cost;
        }
        reports.push_back(j);

        if (csv.is_open()) {
            csv << config.seed << ',' << inst.n() << ',' << config.k << ','
                << config.mode << ',' << result.report.final_cost << ',';
            if (result.oracle_cost) csv << *result.oracle_cost;
            csv << ',';
            if (result.oracle_cost && *result.oracle_cost > 0.0)
                csv << result.report.final_cost / *result.oracle_cost;
            csv << ',' << result.time_ms << '\n';
        }

        if (!trace_path.empty() && config.mode == "kmedian") {
            std::ofstream ts(trace_path, r == 0 ? std::ios::trunc : std::ios::app);
            sskm::write_trace_jsonl(ts, result.report.trace);
        }
    }

    const json out = repeat == 1 ? reports[0] : reports;
    if (out_path.empty()) {
        std::cout << out.dump(2) << std::endl;
    } else {
        std::ofstream os(out_path);
        if (!os) throw sskm::ValidationError("cannot open output: " + out_path);
        os << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Successive-sampling approximate k-median"};

    sskm::RunConfig config;
    std::string metric = "euclidean";
    std::string gen_kind;
    sskm::GeneratorSpec gen;
    std::string out_path, trace_path, csv_path;
    int repeat = 1;
    bool stable_report = false;

    app.add_option("--input", config.input_path, "Input file path");
    app.add_option("--format", config.format, "Input format: points | matrix");
    app.add_option("--generate", gen_kind,
                   "Generator: gaussian-mixture | uniform-box | path | counterexample-5pt");
    app.add_option("--k", config.k, "Number of centers")->required();
    app.add_option("--mode", config.mode, "kmedian | kmeans-init");
    app.add_option("--metric", metric,
                   "euclidean | squared-euclidean | explicit-matrix");
    app.add_option("--alpha", config.alpha, "Sampler oversampling factor");
    app.add_option("--beta", config.beta, "Sampler carve fraction");
    app.add_option("--seed", config.seed, "PRNG seed");
    app.add_option("--solver", config.solver, "local-search | brute-force");
    app.add_option("--out", out_path, "Write the JSON report here (default stdout)");
    app.add_option("--trace", trace_path, "Write sampler trace JSON-lines here");
    app.add_option("--csv", csv_path, "Write per-seed CSV sweep results here");
    app.add_option("--repeat", repeat, "Number of consecutive seeds to run");
    app.add_flag("--stable-report", stable_report,
                 "Omit timing fields so reports are byte-identical per seed");

    app.add_option("--gen-n", gen.n, "Generator: point count (uniform-box, path)");
    app.add_option("--gen-dim", gen.dim, "Generator: dimension");
    app.add_option("--gen-box", gen.box, "Generator: box side length");
    app.add_option("--gen-clusters", gen.gm.clusters, "gaussian-mixture: cluster count");
    app.add_option("--gen-per-cluster", gen.gm.points_per_cluster,
                   "gaussian-mixture: points per cluster");
    app.add_option("--gen-sigma", gen.gm.sigma, "gaussian-mixture: spread");
    app.add_option("--gen-D", gen.D, "counterexample-5pt: red point offset");

    CLI11_PARSE(app, argc, argv);

    try {
        config.metric = sskm::parse_metric_mode(metric);
        if (!gen_kind.empty()) {
            gen.kind = gen_kind;
            gen.gm.dim = gen.dim;
            gen.gm.box = gen.box;
            config.generator = gen;
        }
        if (repeat < 1) throw sskm::ValidationError("--repeat must be >= 1");
        return run(config, repeat, out_path, trace_path, csv_path, stable_report);
    } catch (const sskm::InfeasibleKError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sskm::OracleTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
