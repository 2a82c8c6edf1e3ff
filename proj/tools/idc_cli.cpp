#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idc/affinity.hpp"
#include "idc/core.hpp"
#include "idc/dbscan.hpp"
#include "idc/error.hpp"
#include "idc/idc.hpp"
#include "idc/io.hpp"
#include "idc/log.hpp"
#include "idc/metrics.hpp"
#include "idc/rng.hpp"
#include "idc/spectral.hpp"
#include "idc/synth.hpp"

namespace {

using nlohmann::json;

idc::LaplacianKind parse_laplacian(const std::string& name) {
    if (name == "unnorm") return idc::LaplacianKind::Unnormalized;
    if (name == "sym") return idc::LaplacianKind::SymmetricNormalized;
    idc::fail(idc::ErrorCode::InvalidArgument, "laplacian must be unnorm or sym, got " + name);
}

idc::AffinityKind parse_affinity(const std::string& name) {
    if (name == "cosine") return idc::AffinityKind::CosinePlusOne;
    if (name == "gaussian") return idc::AffinityKind::GaussianKernel;
    idc::fail(idc::ErrorCode::InvalidArgument, "affinity must be cosine or gaussian, got " + name);
}

idc::DistanceMetric parse_metric(const std::string& name) {
    if (name == "euclidean") return idc::DistanceMetric::Euclidean;
    if (name == "cosine") return idc::DistanceMetric::CosineDistance;
    idc::fail(idc::ErrorCode::InvalidArgument, "metric must be euclidean or cosine, got " + name);
}

idc::NoiseHandling parse_noise_handling(const std::string& name) {
    if (name == "singletons") return idc::NoiseHandling::Singletons;
    if (name == "one_cluster") return idc::NoiseHandling::OneCluster;
    idc::fail(idc::ErrorCode::InvalidArgument,
              "noise_ami must be singletons or one_cluster, got " + name);
}

idc::AffinityMatrix build_affinity(const idc::Matrix& features, idc::AffinityKind kind,
                                   double gamma, bool gaussian_squared) {
    if (kind == idc::AffinityKind::CosinePlusOne) return idc::cosine_affinity(features);
    return idc::gaussian_affinity(features, gamma, gaussian_squared);
}

idc::SizeSpec parse_size_spec(const json& j, const std::string& what) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 1) idc::fail(idc::ErrorCode::InvalidArgument, what + " must be >= 1");
        return static_cast<std::size_t>(v);
    }
    if (j.is_object() && j.contains("mean") && j.contains("std"))
        return idc::GaussianSpec{j["mean"].get<double>(), j["std"].get<double>()};
    idc::fail(idc::ErrorCode::InvalidArgument, what + " must be an integer or {mean, std}");
}

idc::CountSpec parse_count_spec(const json& j, const std::string& what) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0) idc::fail(idc::ErrorCode::InvalidArgument, what + " must be >= 0");
        return static_cast<std::size_t>(v);
    }
    if (j.is_object() && j.contains("mean") && j.contains("std"))
        return idc::GaussianSpec{j["mean"].get<double>(), j["std"].get<double>()};
    idc::fail(idc::ErrorCode::InvalidArgument, what + " must be an integer or {mean, std}");
}

idc::SynthConfig parse_synth_config(const json& j) {
    idc::SynthConfig cfg;
    cfg.dim = j.value("dim", std::size_t{2});
    cfg.n_inlier_clusters = j.value("n_inlier_clusters", 1);
    if (j.contains("cluster_size")) cfg.cluster_sizes = parse_size_spec(j["cluster_size"], "cluster_size");
    if (j.contains("n_outliers")) cfg.n_outliers = parse_count_spec(j["n_outliers"], "n_outliers");
    cfg.inlier_std = j.value("inlier_std", 1.0);
    cfg.seed = j.value("seed", std::uint64_t{0});
    return cfg;
}

std::string fmt_metric(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// ---- bench -----------------------------------------------------------

struct BenchConfig {
    std::vector<std::size_t> dims{64, 256, 512};
    int trials = 20;
    std::vector<std::string> methods{"idc", "sc_n", "sc_n1", "dbscan_grid"};
    idc::SynthConfig synth;
    idc::AffinityKind affinity = idc::AffinityKind::CosinePlusOne;
    double gamma = 1.0;
    bool gaussian_squared = false;
    idc::LaplacianKind laplacian = idc::LaplacianKind::SymmetricNormalized;
    int k_min = 3;
    int k_max = 10;
    std::vector<double> dbscan_eps{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::vector<int> dbscan_min_samples{3, 5, 10};
    idc::DistanceMetric dbscan_metric = idc::DistanceMetric::CosineDistance;
    idc::NoiseHandling noise_ami = idc::NoiseHandling::OneCluster;
    std::uint64_t seed = 0;
};

BenchConfig parse_bench_config(const json& j) {
    BenchConfig cfg;
    if (j.contains("dims")) cfg.dims = j["dims"].get<std::vector<std::size_t>>();
    cfg.trials = j.value("trials", 20);
    if (j.contains("methods")) cfg.methods = j["methods"].get<std::vector<std::string>>();

    cfg.synth.n_inlier_clusters = j.value("n_inlier_clusters", 5);
    cfg.synth.cluster_sizes = std::size_t{30};
    if (j.contains("cluster_size")) cfg.synth.cluster_sizes = parse_size_spec(j["cluster_size"], "cluster_size");
    cfg.synth.n_outliers = std::size_t{150};
    if (j.contains("n_outliers")) cfg.synth.n_outliers = parse_count_spec(j["n_outliers"], "n_outliers");
    cfg.synth.inlier_std = j.value("inlier_std", 1.0);

    cfg.affinity = parse_affinity(j.value("affinity", std::string("cosine")));
    cfg.gamma = j.value("gamma", 1.0);
    cfg.gaussian_squared = j.value("gaussian_squared", false);
    cfg.laplacian = parse_laplacian(j.value("laplacian", std::string("sym")));
    cfg.k_min = j.value("k_min", 3);
    cfg.k_max = j.value("k_max", 10);

    if (j.contains("dbscan")) {
        const json& db = j["dbscan"];
        if (db.contains("eps")) cfg.dbscan_eps = db["eps"].get<std::vector<double>>();
        if (db.contains("min_samples"))
            cfg.dbscan_min_samples = db["min_samples"].get<std::vector<int>>();
        cfg.dbscan_metric = parse_metric(db.value("metric", std::string("cosine")));
        cfg.noise_ami = parse_noise_handling(db.value("noise_ami", std::string("one_cluster")));
    }
    cfg.seed = j.value("seed", std::uint64_t{0});

    if (cfg.dims.empty()) idc::fail(idc::ErrorCode::InvalidArgument, "dims must be nonempty");
    if (cfg.trials < 1) idc::fail(idc::ErrorCode::InvalidArgument, "trials must be >= 1");
    if (cfg.methods.empty()) idc::fail(idc::ErrorCode::InvalidArgument, "methods must be nonempty");
    const std::set<std::string> known{"idc", "sc_n", "sc_n1", "dbscan_grid"};
    for (const std::string& mth : cfg.methods) {
        if (!known.contains(mth))
            idc::fail(idc::ErrorCode::InvalidArgument, "unknown method " + mth);
    }
    return cfg;
}

struct BenchRow {
    std::size_t dim = 0;
    int trial = 0;
    std::string method;
    double ami = 0.0;
    double ari = 0.0;
    double f1 = 0.0;
    double est_k = 0.0;
    double wall_ms = -1.0;
};

/// The sparsest cluster is taken as the outlier cluster when a method has
/// no outlier notion of its own (fixed-K spectral runs).
std::vector<bool> sparsest_cluster_flags(const idc::AffinityMatrix& w, const idc::Partition& p) {
    idc::ClusterStats stats = idc::cluster_stats(w, p);
    std::vector<bool> flags(p.labels.size(), false);
    for (std::size_t i = 0; i < flags.size(); ++i)
        flags[i] = p.labels[i] == stats.outlier_index;
    return flags;
}

std::vector<BenchRow> run_bench_task(const BenchConfig& cfg, std::size_t dim_idx, int trial,
                                     bool timings) {
    idc::SynthConfig synth = cfg.synth;
    synth.dim = cfg.dims[dim_idx];
    synth.seed = idc::rng::derive_seed(idc::rng::derive_seed(cfg.seed, dim_idx),
                                       static_cast<std::uint64_t>(trial));
    idc::LabeledDataset data = idc::generate(synth);

    std::vector<bool> truth_outlier(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) truth_outlier[i] = data.labels[i] == 0;

    idc::AffinityMatrix w;
    bool need_affinity = false;
    for (const std::string& mth : cfg.methods) need_affinity |= mth != "dbscan_grid";
    if (need_affinity)
        w = build_affinity(data.features, cfg.affinity, cfg.gamma, cfg.gaussian_squared);

    std::vector<BenchRow> rows;
    for (const std::string& mth : cfg.methods) {
        BenchRow row;
        row.dim = synth.dim;
        row.trial = trial;
        row.method = mth;
        auto start = std::chrono::steady_clock::now();

        if (mth == "idc") {
            idc::IdcResult result = idc::estimate(w, cfg.k_min, cfg.k_max, cfg.laplacian, synth.seed);
            row.ami = idc::adjusted_mutual_info(data.labels, result.partition.labels);
            row.ari = idc::adjusted_rand_index(data.labels, result.partition.labels);
            row.f1 = idc::outlier_f1(truth_outlier, idc::outlier_labels(result));
            row.est_k = result.chosen_k;
        } else if (mth == "sc_n" || mth == "sc_n1") {
            int k = data.n_inlier_clusters + (mth == "sc_n1" ? 1 : 0);
            idc::Partition p = idc::spectral_cluster(w, k, cfg.laplacian, synth.seed);
            row.ami = idc::adjusted_mutual_info(data.labels, p.labels);
            row.ari = idc::adjusted_rand_index(data.labels, p.labels);
            row.f1 = idc::outlier_f1(truth_outlier, sparsest_cluster_flags(w, p));
            row.est_k = k;
        } else {
            idc::GridSearchResult gs =
                idc::grid_search(data.features, data.labels, cfg.dbscan_eps,
                                 cfg.dbscan_min_samples, cfg.dbscan_metric, cfg.noise_ami);
            std::vector<int> pred = idc::labels_for_metrics(gs.best_result, cfg.noise_ami);
            row.ami = gs.best_ami;
            row.ari = idc::adjusted_rand_index(data.labels, pred);
            row.f1 = idc::outlier_f1(truth_outlier, gs.best_result.noise);
            row.est_k = gs.best_result.n_clusters;
        }

        if (timings) {
            auto end = std::chrono::steady_clock::now();
            row.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bench_csv(const BenchConfig& cfg, std::vector<BenchRow> rows, bool timings) {
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.dim, a.trial, a.method) < std::tie(b.dim, b.trial, b.method);
    });

    std::ostringstream out;
    out << "schema,dim,trial,method,ami,ari,f1,est_k,wall_ms\n";
    auto emit = [&](const BenchRow& row, const std::string& trial_field, bool int_est_k) {
        out << "1," << row.dim << "," << trial_field << "," << row.method << ","
            << fmt_metric(row.ami) << "," << fmt_metric(row.ari) << "," << fmt_metric(row.f1)
            << ",";
        if (int_est_k)
            out << static_cast<long long>(row.est_k);
        else
            out << fmt_metric(row.est_k);
        out << ",";
        if (timings && row.wall_ms >= 0.0) out << fmt_metric(row.wall_ms);
        out << "\n";
    };
    for (const BenchRow& row : rows) emit(row, std::to_string(row.trial), true);

    std::vector<std::string> methods_sorted = cfg.methods;
    std::sort(methods_sorted.begin(), methods_sorted.end());
    std::vector<std::size_t> dims_sorted = cfg.dims;
    std::sort(dims_sorted.begin(), dims_sorted.end());
    for (std::size_t dim : dims_sorted) {
        for (const std::string& mth : methods_sorted) {
            BenchRow mean;
            mean.dim = dim;
            mean.method = mth;
            std::size_t count = 0;
            for (const BenchRow& row : rows) {
                if (row.dim != dim || row.method != mth) continue;
                mean.ami += row.ami;
                mean.ari += row.ari;
                mean.f1 += row.f1;
                mean.est_k += row.est_k;
                if (row.wall_ms >= 0.0) mean.wall_ms = std::max(mean.wall_ms, 0.0) + row.wall_ms;
                count += 1;
            }
            double inv = 1.0 / static_cast<double>(count);
            mean.ami *= inv;
            mean.ari *= inv;
            mean.f1 *= inv;
            mean.est_k *= inv;
            if (mean.wall_ms >= 0.0) mean.wall_ms *= inv;
            emit(mean, "mean", false);
        }
    }
    return out.str();
}

int cmd_bench(const std::string& config_path, const std::string& output_path, int jobs,
              bool timings, bool seed_given, std::uint64_t seed_override) {
    json j = config_path.empty() ? json::object() : idc::read_json_file(config_path);
    BenchConfig cfg = parse_bench_config(j);
    if (seed_given) cfg.seed = seed_override;
    if (jobs < 1) idc::fail(idc::ErrorCode::InvalidArgument, "--jobs must be >= 1");

    struct Task {
        std::size_t dim_idx;
        int trial;
    };
    std::vector<Task> tasks;
    for (std::size_t d = 0; d < cfg.dims.size(); ++d)
        for (int t = 0; t < cfg.trials; ++t) tasks.push_back({d, t});

    std::vector<std::vector<BenchRow>> per_task(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            try {
                per_task[t] = run_bench_task(cfg, tasks[t].dim_idx, tasks[t].trial, timings);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    int n_threads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    idc::log::info("bench: " + std::to_string(tasks.size()) + " tasks on " +
                   std::to_string(n_threads) + " threads");
    std::vector<std::thread> threads;
    for (int i = 0; i < n_threads; ++i) threads.emplace_back(worker);
    for (std::thread& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::vector<BenchRow> rows;
    for (std::vector<BenchRow>& chunk : per_task)
        rows.insert(rows.end(), chunk.begin(), chunk.end());
    idc::write_text_file(output_path, bench_csv(cfg, std::move(rows), timings));
    return 0;
}

// ---- other commands --------------------------------------------------

int cmd_gen(const std::string& config_path, const std::string& output_path, bool seed_given,
            std::uint64_t seed_override) {
    json j = config_path.empty() ? json::object() : idc::read_json_file(config_path);
    idc::SynthConfig cfg = parse_synth_config(j);
    if (seed_given) cfg.seed = seed_override;

    idc::LabeledDataset data = idc::generate(cfg);
    idc::write_dataset(output_path, data);

    std::vector<std::size_t> sizes(static_cast<std::size_t>(cfg.n_inlier_clusters), 0);
    std::size_t n_out = 0;
    for (int l : data.labels) {
        if (l == 0)
            n_out += 1;
        else
            sizes[static_cast<std::size_t>(l - 1)] += 1;
    }
    json echo;
    echo["seed"] = cfg.seed;
    echo["sizes"] = sizes;
    echo["n_outliers"] = n_out;
    std::cout << echo.dump() << "\n";
    return 0;
}

idc::AffinityMatrix load_affinity_input(const std::string& input_path,
                                        const std::string& matrix_path,
                                        const std::string& affinity_name, double gamma,
                                        bool gaussian_squared) {
    if (!matrix_path.empty()) return idc::read_affinity(matrix_path);
    if (input_path.empty())
        idc::fail(idc::ErrorCode::InvalidArgument, "need --input dataset or --matrix affinity");
    idc::LabeledDataset data = idc::read_dataset(input_path);
    return build_affinity(data.features, parse_affinity(affinity_name), gamma, gaussian_squared);
}

int cmd_affinity(const std::string& input_path, const std::string& output_path,
                 const std::string& affinity_name, double gamma, bool gaussian_squared) {
    idc::LabeledDataset data = idc::read_dataset(input_path);
    idc::AffinityMatrix w =
        build_affinity(data.features, parse_affinity(affinity_name), gamma, gaussian_squared);
    idc::write_affinity(output_path, w);
    return 0;
}

int cmd_cluster(const std::string& input_path, const std::string& matrix_path, int k,
                const std::string& laplacian_name, std::uint64_t seed,
                const std::string& affinity_name, double gamma, bool gaussian_squared,
                const std::string& output_path) {
    idc::AffinityMatrix w =
        load_affinity_input(input_path, matrix_path, affinity_name, gamma, gaussian_squared);
    idc::Partition p = idc::spectral_cluster(w, k, parse_laplacian(laplacian_name), seed);
    std::string text = idc::partition_to_json(p).dump(2) + "\n";
    if (output_path.empty())
        std::cout << text;
    else
        idc::write_text_file(output_path, text);
    return 0;
}

int cmd_estimate(const std::string& input_path, const std::string& matrix_path, int k_min,
                 int k_max, const std::string& laplacian_name, std::uint64_t seed,
                 const std::string& affinity_name, double gamma, bool gaussian_squared,
                 const std::string& output_path) {
    idc::AffinityMatrix w =
        load_affinity_input(input_path, matrix_path, affinity_name, gamma, gaussian_squared);
    idc::IdcResult result =
        idc::estimate(w, k_min, k_max, parse_laplacian(laplacian_name), seed);
    idc::write_text_file(output_path, idc::idc_result_to_json(result).dump(2) + "\n");
    std::cout << result.chosen_k << "\n";
    return 0;
}

int cmd_metrics(const std::string& truth_path, const std::string& pred_path,
                const std::string& output_path) {
    idc::LabelFile truth = idc::read_labels(truth_path);
    idc::LabelFile pred = idc::read_labels(pred_path);
    if (truth.labels.size() != pred.labels.size())
        idc::fail(idc::ErrorCode::LengthMismatch,
                  std::to_string(truth.labels.size()) + " truth vs " +
                      std::to_string(pred.labels.size()) + " predicted labels");

    json report;
    report["ari"] = idc::adjusted_rand_index(truth.labels, pred.labels);
    report["ami"] = idc::adjusted_mutual_info(truth.labels, pred.labels);
    if (truth.has_outlier_info && pred.has_outlier_info)
        report["outlier_f1"] = idc::outlier_f1(truth.outlier, pred.outlier);

    std::set<int> truth_classes;
    for (int l : truth.labels) {
        if (l > 0) truth_classes.insert(l);
    }
    std::set<int> pred_classes(pred.labels.begin(), pred.labels.end());
    int true_k = static_cast<int>(truth_classes.size());
    int est_k = static_cast<int>(pred_classes.size());
    if (true_k >= 1 && est_k >= 1) {
        report["count_error_plain"] =
            idc::cluster_count_error(true_k, est_k, idc::CountErrorMode::Plain);
        report["count_error_idc"] =
            idc::cluster_count_error(true_k, est_k, idc::CountErrorMode::IdcTarget);
    }

    std::string text = report.dump(2) + "\n";
    if (output_path.empty())
        std::cout << text;
    else
        idc::write_text_file(output_path, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral clustering with outlier-cluster detection and cluster-count "
                 "estimation, plus the synthetic comparison harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string input_path;
    std::string matrix_path;
    std::string output_path;
    std::string truth_path;
    std::string pred_path;
    std::string laplacian_name = "sym";
    std::string affinity_name = "cosine";
    double gamma = 1.0;
    bool gaussian_squared = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int k = 2;
    int k_min = 3;
    int k_max = 10;
    int jobs = 1;
    bool timings = false;

    std::function<int()> run;

    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic labeled dataset");
    gen->add_option("--config", config_path, "Generator config JSON");
    gen->add_option("--output", output_path, "Dataset CSV path")->required();
    gen->add_option("--seed", seed, "Override the config seed")->each([&](const std::string&) {
        seed_given = true;
    });
    gen->callback([&] { run = [&] { return cmd_gen(config_path, output_path, seed_given, seed); }; });

    CLI::App* aff = app.add_subcommand("affinity", "Build an affinity matrix from a dataset");
    aff->add_option("--input", input_path, "Dataset CSV")->required();
    aff->add_option("--output", output_path, "Affinity CSV path")->required();
    aff->add_option("--affinity", affinity_name, "cosine or gaussian");
    aff->add_option("--gamma", gamma, "Gaussian kernel width");
    aff->add_flag("--gaussian-squared", gaussian_squared,
                  "Use the conventional squared-norm Gaussian exponent");
    aff->callback([&] {
        run = [&] {
            return cmd_affinity(input_path, output_path, affinity_name, gamma, gaussian_squared);
        };
    });

    CLI::App* clu = app.add_subcommand("cluster", "Spectral clustering at a fixed cluster count");
    clu->add_option("--input", input_path, "Dataset CSV");
    clu->add_option("--matrix", matrix_path, "Affinity CSV (skips affinity construction)");
    clu->add_option("-k,--k", k, "Cluster count")->required();
    clu->add_option("--laplacian", laplacian_name, "unnorm or sym");
    clu->add_option("--affinity", affinity_name, "cosine or gaussian");
    clu->add_option("--gamma", gamma, "Gaussian kernel width");
    clu->add_flag("--gaussian-squared", gaussian_squared,
                  "Use the conventional squared-norm Gaussian exponent");
    clu->add_option("--seed", seed, "k-means seed");
    clu->add_option("--output", output_path, "Partition JSON path (default: stdout)");
    clu->callback([&] {
        run = [&] {
            return cmd_cluster(input_path, matrix_path, k, laplacian_name, seed, affinity_name,
                               gamma, gaussian_squared, output_path);
        };
    });

    CLI::App* est = app.add_subcommand(
        "estimate", "Estimate the cluster count by sweeping K and score each K's partition");
    est->add_option("--input", input_path, "Dataset CSV");
    est->add_option("--matrix", matrix_path, "Affinity CSV (skips affinity construction)");
    est->add_option("--kmin", k_min, "Smallest K to try");
    est->add_option("--kmax", k_max, "Largest K to try");
    est->add_option("--laplacian", laplacian_name, "unnorm or sym");
    est->add_option("--affinity", affinity_name, "cosine or gaussian");
    est->add_option("--gamma", gamma, "Gaussian kernel width");
    est->add_flag("--gaussian-squared", gaussian_squared,
                  "Use the conventional squared-norm Gaussian exponent");
    est->add_option("--seed", seed, "k-means seed");
    est->add_option("--output", output_path, "Result JSON path")->required();
    est->callback([&] {
        run = [&] {
            return cmd_estimate(input_path, matrix_path, k_min, k_max, laplacian_name, seed,
                                affinity_name, gamma, gaussian_squared, output_path);
        };
    });

    CLI::App* bench = app.add_subcommand(
        "bench", "Dimension sweep comparing clustering methods on synthetic data");
    bench->add_option("--config", config_path, "Sweep config JSON (defaults match the standard run)");
    bench->add_option("--output", output_path, "CSV path")->required();
    bench->add_option("--jobs", jobs, "Concurrent trials");
    bench->add_option("--seed", seed, "Override the config seed")->each([&](const std::string&) {
        seed_given = true;
    });
    bench->add_flag("--timings", timings,
                    "Fill the wall_ms column (off by default so reruns are byte-identical)");
    bench->callback([&] {
        run = [&] { return cmd_bench(config_path, output_path, jobs, timings, seed_given, seed); };
    });

    CLI::App* met = app.add_subcommand("metrics", "Score predicted labels against ground truth");
    met->add_option("--truth", truth_path, "Ground-truth label file")->required();
    met->add_option("--pred", pred_path, "Predicted label file")->required();
    met->add_option("--output", output_path, "Report JSON path (default: stdout)");
    met->callback([&] { run = [&] { return cmd_metrics(truth_path, pred_path, output_path); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const idc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case idc::ErrorCode::IoFailure: return 3;
            case idc::ErrorCode::AllDegenerate: return 4;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
