// momo: command-line front end for runs, batch sweeps, reference sets and reports.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "momo/engine.hpp"
#include "momo/harness.hpp"
#include "momo/problems.hpp"

namespace fs = std::filesystem;

namespace {

void print_metrics(const momo::MetricsReport& r) {
    std::cout << "igd,igdx,cr,psp\n"
              << momo::format_double(r.igd) << ',' << momo::format_double(r.igdx) << ','
              << momo::format_double(r.cr) << ',' << momo::format_double(r.psp) << '\n';
    if (r.psp_floor_hit) {
        std::cerr << "note: IGDX below floor, PSP uses the floor value\n";
    }
}

std::optional<fs::path> as_override(const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<fs::path>(s);
}

int cmd_run(const std::string& problem, std::uint64_t seed, const std::string& config_path, const fs::path& out,
            const std::string& refsets) {
    const auto& spec = momo::find_problem(problem);
    momo::RunConfig cfg = config_path.empty() ? momo::RunConfig{} : momo::RunConfig::load(config_path);
    cfg.seed = seed;
    const auto record = momo::run(spec, cfg);
    const auto dir = momo::resolve_refset_dir(as_override(refsets));
    if (momo::ReferenceSet::exists(dir, spec.name)) {
        const auto ref = momo::load_reference(dir, spec);
        momo::emit_plot_data(record, ref, out);
        const auto m = momo::score_archive(record.archive, spec, ref);
        momo::write_metrics_csv(out / "metrics.csv", {{spec.name, seed, m}});
        print_metrics(m);
    } else {
        momo::emit_run_data(record, out);
        std::cerr << "note: no reference set for " << spec.name << " in " << dir << ", metrics skipped\n";
    }
    std::ofstream cfg_out(out / "config.txt", std::ios::binary);
    cfg.write(cfg_out);
    return 0;
}

int cmd_bench(const std::string& plan_path, const fs::path& out, std::size_t jobs, const std::string& refsets,
              bool quiet) {
    momo::ExperimentPlan plan = plan_path.empty() ? momo::ExperimentPlan{} : momo::ExperimentPlan::load(plan_path);
    plan.output_dir = out;
    plan.refset_dir = momo::resolve_refset_dir(as_override(refsets));
    plan.validate();
    const std::size_t total = plan.problem_names().size() * plan.seed_list().size();
    std::size_t done = 0;
    const auto start = std::chrono::steady_clock::now();
    auto progress = [&](const std::string& name, std::uint64_t seed) {
        ++done;
        if (!quiet) {
            std::cerr << '[' << done << '/' << total << "] " << name << " seed " << seed << '\n';
        }
    };
    const auto result = momo::run_experiment(plan, jobs, progress);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "problem,metric,mean,std\n";
    for (const auto& row : result.summary) {
        std::cout << row.problem << ',' << momo::to_string(row.metric) << ',' << momo::format_double(row.mean) << ','
                  << momo::format_double(row.std) << '\n';
    }
    std::cerr << result.records.size() << " runs in " << secs << " s\n";
    for (const auto& f : result.failures) {
        std::cerr << "failed: " << f.problem << " seed " << f.seed << ": " << f.message << '\n';
    }
    return result.failures.empty() ? 0 : 2;
}

int cmd_refset(const std::string& problem, const fs::path& out) {
    fs::create_directories(out);
    auto emit = [&](const momo::ProblemSpec& spec) {
        const auto ref = momo::generate_reference(spec);
        ref.write(out, spec.name);
        std::cout << spec.name << ": " << ref.ps.size() << " points\n";
    };
    if (problem == "all") {
        for (const auto& spec : momo::list_problems()) {
            emit(spec);
        }
    } else {
        emit(momo::find_problem(problem));
    }
    return 0;
}

int cmd_score(const fs::path& archive_path, const std::string& problem, const std::string& refsets) {
    const auto& spec = momo::find_problem(problem);
    const auto archive = momo::Archive::read_csv(archive_path);
    const auto ref = momo::load_reference(momo::resolve_refset_dir(as_override(refsets)), spec);
    print_metrics(momo::score_archive(archive, spec, ref));
    return 0;
}

int cmd_report(const fs::path& in, const std::string& baseline_dir, double alpha) {
    const auto records = momo::read_metrics_csv(in / "metrics.csv");
    const auto rows = momo::summarize(records);
    momo::write_summary_csv(in / "summary.csv", rows);
    std::cout << "problem,metric,mean,std,n\n";
    for (const auto& row : rows) {
        std::cout << row.problem << ',' << momo::to_string(row.metric) << ',' << momo::format_double(row.mean)
                  << ',' << momo::format_double(row.std) << ',' << row.values.size() << '\n';
    }
    if (baseline_dir.empty()) {
        return 0;
    }

    // Each <alg>.csv in the baseline directory is compared against this run set.
    std::map<std::string, std::vector<momo::MetricRecord>> datasets;
    for (const auto& entry : fs::directory_iterator(baseline_dir)) {
        if (entry.path().extension() == ".csv") {
            datasets[entry.path().stem().string()] = momo::read_metrics_csv(entry.path());
        }
    }
    if (datasets.empty()) {
        throw std::runtime_error("no <algorithm>.csv files in " + baseline_dir);
    }
    const std::string self = "MOMO";
    datasets[self] = records;

    std::ofstream out(in / "wtl.csv", std::ios::binary);
    out << "metric,algorithm,wins,ties,losses\n";
    std::cout << "\nmetric,algorithm,W/T/L\n";
    for (auto metric : {momo::Metric::igdx, momo::Metric::psp, momo::Metric::igd}) {
        std::map<std::string, momo::SeedValues> values;
        for (const auto& [name, recs] : datasets) {
            values[name] = momo::seed_values(recs, metric);
        }
        const auto table = momo::wtl_table(values, self, alpha, momo::metric_sense(metric));
        for (const auto& [name, c] : table) {
            if (name == self) {
                continue;
            }
            out << momo::to_string(metric) << ',' << name << ',' << c.wins << ',' << c.ties << ',' << c.losses << '\n';
            std::cout << momo::to_string(metric) << ',' << name << ',' << c.wins << '/' << c.ties << '/' << c.losses
                      << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MOMO steady-state multi-modal multi-objective optimizer"};
    app.require_subcommand(1);
    std::string refsets;
    app.add_option("--refsets", refsets, "Reference-set directory (overrides MOMO_REFSET_DIR)");

    std::string problem;
    std::uint64_t seed = 1;
    std::string config_path, out_dir, plan_path, archive_path, in_dir, baseline_dir;
    std::size_t jobs = 1;
    double alpha = 0.05;
    bool quiet = false;

    auto* run = app.add_subcommand("run", "Run one problem with one seed");
    run->add_option("--problem", problem)->required();
    run->add_option("--seed", seed)->required();
    run->add_option("--config", config_path)->check(CLI::ExistingFile);
    run->add_option("--out", out_dir)->required();

    auto* bench = app.add_subcommand("bench", "Run a batch plan (default: all problems, seeds 1-31)");
    bench->add_option("--plan", plan_path)->check(CLI::ExistingFile);
    bench->add_option("--out", out_dir)->required();
    bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    bench->add_flag("--quiet", quiet);

    auto* refset = app.add_subcommand("refset", "Generate reference PS/PF files");
    refset->add_option("--problem", problem)->required();
    refset->add_option("--out", out_dir)->required();

    auto* score = app.add_subcommand("score", "Score an archive CSV");
    score->add_option("--archive", archive_path)->required()->check(CLI::ExistingFile);
    score->add_option("--problem", problem)->required();

    auto* report = app.add_subcommand("report", "Summarize a bench directory, optionally against peer CSVs");
    report->add_option("--in", in_dir)->required()->check(CLI::ExistingDirectory);
    report->add_option("--baseline", baseline_dir)->check(CLI::ExistingDirectory);
    report->add_option("--alpha", alpha)->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            return cmd_run(problem, seed, config_path, out_dir, refsets);
        }
        if (*bench) {
            return cmd_bench(plan_path, out_dir, jobs, refsets, quiet);
        }
        if (*refset) {
            return cmd_refset(problem, out_dir);
        }
        if (*score) {
            return cmd_score(archive_path, problem, refsets);
        }
        if (*report) {
            return cmd_report(in_dir, baseline_dir, alpha);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "momo: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "momo: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
