#include "momo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#ifndef MOMO_SOURCE_DATA_DIR
#define MOMO_SOURCE_DATA_DIR "data"
#endif

namespace momo {

namespace fs = std::filesystem;

std::filesystem::path resolve_refset_dir(const std::optional<std::filesystem::path>& override_dir) {
    if (override_dir && !override_dir->empty()) {
        return *override_dir;
    }
    if (const char* env = std::getenv("MOMO_REFSET_DIR"); env && *env) {
        return env;
    }
    return fs::path(MOMO_SOURCE_DATA_DIR) / "refsets";
}

ReferenceSet load_reference(const std::filesystem::path& dir, const ProblemSpec& problem) {
    for (const auto& name : {ps_file_name(problem.name), pf_file_name(problem.name)}) {
        if (!fs::exists(dir / name)) {
            throw std::runtime_error("missing reference file " + (dir / name).string());
        }
    }
    auto ref = ReferenceSet::read(dir, problem.name);
    for (const auto& x : ref.ps) {
        if (x.size() != problem.dimensions) {
            throw std::runtime_error("reference PS for " + problem.name + " has wrong dimension");
        }
    }
    for (const auto& f : ref.pf) {
        if (f.size() != problem.objectives) {
            throw std::runtime_error("reference PF for " + problem.name + " has wrong dimension");
        }
    }
    return ref;
}

// ---------------------------------------------------------------- plan

std::vector<std::string> ExperimentPlan::problem_names() const {
    std::vector<std::string> names;
    if (problems.empty() || (problems.size() == 1 && problems.front() == "all")) {
        for (const auto& p : list_problems()) {
            names.push_back(p.name);
        }
        return names;
    }
    for (const auto& p : problems) {
        names.push_back(find_problem(p).name);
    }
    return names;
}

std::vector<std::uint64_t> ExperimentPlan::seed_list() const {
    if (!seeds.empty()) {
        return seeds;
    }
    std::vector<std::uint64_t> s(kDefaultSeedCount);
    std::iota(s.begin(), s.end(), std::uint64_t{1});
    return s;
}

void ExperimentPlan::validate() const {
    config.validate();
    const auto names = problem_names();
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
        throw std::invalid_argument("plan: duplicate problem");
    }
    const auto s = seed_list();
    if (std::set<std::uint64_t>(s.begin(), s.end()).size() != s.size()) {
        throw std::invalid_argument("plan: seeds must be distinct");
    }
}

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& value) {
    std::vector<std::uint64_t> seeds;
    for (const auto& raw : split(value, ',')) {
        const auto part = trim(raw);
        if (part.empty()) {
            continue;
        }
        const auto dash = part.find('-');
        if (dash == std::string::npos) {
            seeds.push_back(parse_uint(part));
            continue;
        }
        const auto lo = parse_uint(trim(part.substr(0, dash)));
        const auto hi = parse_uint(trim(part.substr(dash + 1)));
        if (hi < lo) {
            throw std::invalid_argument("plan: bad seed range " + part);
        }
        for (auto s = lo; s <= hi; ++s) {
            seeds.push_back(s);
        }
    }
    if (seeds.empty()) {
        throw std::invalid_argument("plan: empty seed list");
    }
    return seeds;
}

}  // namespace

ExperimentPlan ExperimentPlan::parse(std::istream& in) {
    ExperimentPlan plan;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto text = trim(line);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("plan line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(text.substr(0, eq));
        const auto value = trim(text.substr(eq + 1));
        if (key == "problems") {
            plan.problems.clear();
            for (const auto& raw : split(value, ',')) {
                if (auto name = trim(raw); !name.empty()) {
                    plan.problems.push_back(name);
                }
            }
        } else if (key == "seeds") {
            plan.seeds = parse_seeds(value);
        } else if (key == "seed") {
            throw std::invalid_argument("plan line " + std::to_string(line_no) + ": use `seeds` in a plan");
        } else if (!plan.config.apply(key, value)) {
            throw std::invalid_argument("plan line " + std::to_string(line_no) + ": unknown key " + key);
        }
    }
    plan.validate();
    return plan;
}

ExperimentPlan ExperimentPlan::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read plan " + path.string());
    }
    return parse(in);
}

// ---------------------------------------------------------------- metrics files

void write_metrics_csv(const std::filesystem::path& path, const std::vector<MetricRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "problem,seed,igd,igdx,cr,psp\n";
    for (const auto& r : records) {
        out << r.problem << ',' << r.seed << ',' << format_double(r.metrics.igd) << ','
            << format_double(r.metrics.igdx) << ',' << format_double(r.metrics.cr) << ','
            << format_double(r.metrics.psp) << '\n';
    }
}

std::vector<MetricRecord> read_metrics_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(path.string() + ": empty file");
    }
    const auto header = split(trim(line), ',');
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) {
        col[trim(header[i])] = i;
    }
    for (const char* need : {"problem", "seed", "igd", "igdx", "psp"}) {
        if (!col.contains(need)) {
            throw std::runtime_error(path.string() + ": missing column " + need);
        }
    }
    std::vector<MetricRecord> records;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(trim(line), ',');
        if (cells.size() != header.size()) {
            throw std::runtime_error(path.string() + ": wrong column count");
        }
        MetricRecord r;
        r.problem = trim(cells[col["problem"]]);
        r.seed = parse_uint(trim(cells[col["seed"]]));
        r.metrics.igd = parse_double(trim(cells[col["igd"]]));
        r.metrics.igdx = parse_double(trim(cells[col["igdx"]]));
        r.metrics.psp = parse_double(trim(cells[col["psp"]]));
        if (col.contains("cr")) {
            r.metrics.cr = parse_double(trim(cells[col["cr"]]));
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::igd: return "igd";
        case Metric::igdx: return "igdx";
        case Metric::cr: return "cr";
        case Metric::psp: return "psp";
    }
    return "?";
}

Metric parse_metric(std::string_view name) {
    for (auto m : {Metric::igd, Metric::igdx, Metric::cr, Metric::psp}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown metric " + std::string(name));
}

double metric_value(const MetricsReport& r, Metric m) {
    switch (m) {
        case Metric::igd: return r.igd;
        case Metric::igdx: return r.igdx;
        case Metric::cr: return r.cr;
        case Metric::psp: return r.psp;
    }
    return 0.0;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) {
        throw std::invalid_argument("mean of empty sample");
    }
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) {
        return 0.0;
    }
    const double m = mean_of(v);
    double ss = 0.0;
    for (double x : v) {
        ss += (x - m) * (x - m);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::vector<SummaryRow> summarize(const std::vector<MetricRecord>& records) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const MetricRecord*>> by_problem;
    for (const auto& r : records) {
        if (!by_problem.contains(r.problem)) {
            order.push_back(r.problem);
        }
        by_problem[r.problem].push_back(&r);
    }
    std::vector<SummaryRow> rows;
    for (const auto& name : order) {
        for (auto metric : {Metric::igd, Metric::igdx, Metric::psp}) {
            SummaryRow row;
            row.problem = name;
            row.metric = metric;
            for (const auto* r : by_problem[name]) {
                row.values.push_back(metric_value(r->metrics, metric));
            }
            row.mean = mean_of(row.values);
            row.std = sample_std(row.values);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "problem,metric,mean,std\n";
    for (const auto& r : rows) {
        out << r.problem << ',' << to_string(r.metric) << ',' << format_double(r.mean) << ','
            << format_double(r.std) << '\n';
    }
}

// ---------------------------------------------------------------- runs

MetricsReport score_archive(const Archive& archive, const ProblemSpec& problem, const ReferenceSet& refset) {
    if (archive.empty()) {
        throw std::invalid_argument("score: empty archive");
    }
    const auto x = archive.decisions();
    const auto f = archive.objectives();
    if (x.front().size() != problem.dimensions || f.front().size() != problem.objectives) {
        throw std::invalid_argument("score: archive does not match " + problem.name);
    }
    return score(f, x, refset.pf, refset.ps, problem.bounds);
}

void emit_run_data(const RunRecord& record, const std::filesystem::path& dir) {
    fs::create_directories(dir);
    record.archive.write_csv(dir / "archive.csv");
    write_k_history(dir / "k_history.csv", record.k_history);
    for (const auto& snap : record.snapshots) {
        write_population(dir / snapshot_file_name(snap.fraction), snap.population);
    }
}

void emit_plot_data(const RunRecord& record, const ReferenceSet& refset, const std::filesystem::path& dir) {
    emit_run_data(record, dir);
    write_matrix_csv(dir / "reference_ps.csv", refset.ps);
    write_matrix_csv(dir / "reference_pf.csv", refset.pf);
}

ExperimentResult run_experiment(const ExperimentPlan& plan, std::size_t jobs,
                                const std::function<void(const std::string&, std::uint64_t)>& on_done) {
    plan.validate();
    const auto names = plan.problem_names();
    const auto seeds = plan.seed_list();
    const fs::path ref_dir = plan.refset_dir.empty() ? resolve_refset_dir() : plan.refset_dir;

    std::vector<const ProblemSpec*> specs;
    std::vector<ReferenceSet> refs;
    for (const auto& name : names) {
        specs.push_back(&find_problem(name));
        refs.push_back(load_reference(ref_dir, *specs.back()));
    }

    fs::create_directories(plan.output_dir);
    {
        std::ofstream out(plan.output_dir / "config.txt", std::ios::binary);
        plan.config.write(out);
    }

    struct Task {
        std::size_t problem;
        std::uint64_t seed;
        std::optional<MetricsReport> metrics;
        std::string error;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < names.size(); ++p) {
        for (auto s : seeds) {
            tasks.push_back({p, s, std::nullopt, {}});
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex callback_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            Task& t = tasks[i];
            const ProblemSpec& spec = *specs[t.problem];
            try {
                RunConfig cfg = plan.config;
                cfg.seed = t.seed;
                const RunRecord record = run(spec, cfg);
                emit_run_data(record, plan.output_dir / "runs" / spec.name / ("seed_" + std::to_string(t.seed)));
                t.metrics = score_archive(record.archive, spec, refs[t.problem]);
            } catch (const std::exception& e) {
                t.error = e.what();
            }
            if (on_done) {
                std::lock_guard lock(callback_mutex);
                on_done(spec.name, t.seed);
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(tasks.size(), 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }

    ExperimentResult result;
    for (const auto& t : tasks) {
        if (t.metrics) {
            result.records.push_back({names[t.problem], t.seed, *t.metrics});
        } else {
            result.failures.push_back({names[t.problem], t.seed, t.error});
        }
    }
    result.summary = summarize(result.records);
    write_metrics_csv(plan.output_dir / "metrics.csv", result.records);
    write_summary_csv(plan.output_dir / "summary.csv", result.summary);
    if (!result.failures.empty()) {
        std::ofstream out(plan.output_dir / "failures.csv", std::ios::binary);
        out << "problem,seed,message\n";
        for (const auto& f : result.failures) {
            std::string msg = f.message;
            std::replace(msg.begin(), msg.end(), ',', ';');
            std::replace(msg.begin(), msg.end(), '\n', ' ');
            out << f.problem << ',' << f.seed << ',' << msg << '\n';
        }
    }
    return result;
}

// ---------------------------------------------------------------- statistics

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::better: return "better";
        case Verdict::equivalent: return "equivalent";
        case Verdict::worse: return "worse";
    }
    return "?";
}

Sense metric_sense(Metric m) {
    return (m == Metric::igd || m == Metric::igdx) ? Sense::minimize : Sense::maximize;
}

namespace {

// Midranks of the pooled sample, doubled so they are integers.
std::vector<std::size_t> doubled_midranks(const std::vector<double>& pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<std::size_t> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) {
            ++j;
        }
        // ranks i+1..j+1 averaged, doubled: (i+1)+(j+1)
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = i + j + 2;
        }
        i = j + 1;
    }
    return ranks;
}

// P(W <= w) and P(W >= w) for the sum of n doubled ranks drawn without
// replacement from `ranks`.
std::pair<double, double> exact_tails(const std::vector<std::size_t>& ranks, std::size_t n, std::size_t w) {
    const std::size_t total = std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
    std::vector<std::vector<double>> count(n + 1, std::vector<double>(total + 1, 0.0));
    count[0][0] = 1.0;
    for (std::size_t r : ranks) {
        for (std::size_t j = n; j >= 1; --j) {
            for (std::size_t s = total; s >= r; --s) {
                count[j][s] += count[j - 1][s - r];
            }
        }
    }
    double all = 0.0, lo = 0.0, hi = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
        all += count[n][s];
        if (s <= w) {
            lo += count[n][s];
        }
        if (s >= w) {
            hi += count[n][s];
        }
    }
    return {lo / all, hi / all};
}

}  // namespace

RankSumResult rank_sum_test(const std::vector<double>& sample_a, const std::vector<double>& sample_b, double alpha,
                            Sense sense) {
    if (sample_a.size() < 2 || sample_b.size() < 2) {
        throw std::invalid_argument("rank-sum test: each sample needs at least 2 values");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("rank-sum test: alpha must be in (0,1)");
    }
    for (const auto* s : {&sample_a, &sample_b}) {
        for (double v : *s) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("rank-sum test: non-finite value");
            }
        }
    }
    const std::size_t n = sample_a.size();
    const std::size_t m = sample_b.size();
    const std::size_t big_n = n + m;
    std::vector<double> pooled(sample_a);
    pooled.insert(pooled.end(), sample_b.begin(), sample_b.end());
    const auto ranks = doubled_midranks(pooled);

    const std::size_t w2 = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
    const std::size_t total2 = big_n * (big_n + 1);
    RankSumResult r;
    r.mean_rank_a = static_cast<double>(w2) / 2.0 / static_cast<double>(n);
    r.mean_rank_b = static_cast<double>(total2 - w2) / 2.0 / static_cast<double>(m);

    const bool all_equal = std::all_of(pooled.begin(), pooled.end(), [&](double v) { return v == pooled.front(); });
    if (all_equal) {
        r.p_value = 1.0;
        r.exact = big_n <= kExactRankSumLimit;
        r.verdict = Verdict::equivalent;
        return r;
    }

    if (big_n <= kExactRankSumLimit) {
        const auto [lo, hi] = exact_tails(ranks, n, w2);
        r.p_value = std::min(1.0, 2.0 * std::min(lo, hi));
        r.exact = true;
    } else {
        std::map<double, std::size_t> ties;
        for (double v : pooled) {
            ++ties[v];
        }
        double tie_sum = 0.0;
        for (const auto& [v, t] : ties) {
            const double td = static_cast<double>(t);
            tie_sum += td * td * td - td;
        }
        const double nd = static_cast<double>(n);
        const double md = static_cast<double>(m);
        const double bn = static_cast<double>(big_n);
        const double mu = nd * (bn + 1.0) / 2.0;
        const double var = nd * md / 12.0 * ((bn + 1.0) - tie_sum / (bn * (bn - 1.0)));
        const double w = static_cast<double>(w2) / 2.0;
        r.p_value = var > 0.0 ? std::min(1.0, std::erfc(std::abs(w - mu) / std::sqrt(2.0 * var))) : 1.0;
        r.exact = false;
    }

    if (r.p_value < alpha && r.mean_rank_a != r.mean_rank_b) {
        const bool a_lower = r.mean_rank_a < r.mean_rank_b;
        r.verdict = (a_lower == (sense == Sense::minimize)) ? Verdict::better : Verdict::worse;
    }
    return r;
}

Verdict wilcoxon_rank_sum(const std::vector<double>& sample_a, const std::vector<double>& sample_b, double alpha,
                          Sense sense) {
    return rank_sum_test(sample_a, sample_b, alpha, sense).verdict;
}

std::map<std::string, WtlCounts> wtl_table(const std::map<std::string, SeedValues>& algorithms,
                                           const std::string& baseline, double alpha, Sense sense) {
    const auto base_it = algorithms.find(baseline);
    if (base_it == algorithms.end()) {
        throw std::invalid_argument("wtl_table: unknown baseline " + baseline);
    }
    const SeedValues& base = base_it->second;
    std::map<std::string, WtlCounts> table;
    for (const auto& [name, data] : algorithms) {
        if (data.size() != base.size()) {
            throw std::invalid_argument("wtl_table: " + name + " covers different problems than " + baseline);
        }
        WtlCounts counts;
        for (const auto& [problem, values] : data) {
            const auto b = base.find(problem);
            if (b == base.end()) {
                throw std::invalid_argument("wtl_table: problem " + problem + " missing from " + baseline);
            }
            std::vector<double> va, vb;
            for (const auto& [seed, v] : values) {
                if (!b->second.contains(seed)) {
                    throw std::invalid_argument("wtl_table: seeds of " + name + " on " + problem + " are misaligned");
                }
                va.push_back(v);
            }
            if (b->second.size() != values.size()) {
                throw std::invalid_argument("wtl_table: seeds of " + name + " on " + problem + " are misaligned");
            }
            for (const auto& [seed, v] : b->second) {
                vb.push_back(v);
            }
            switch (wilcoxon_rank_sum(va, vb, alpha, sense)) {
                case Verdict::better: ++counts.wins; break;
                case Verdict::equivalent: ++counts.ties; break;
                case Verdict::worse: ++counts.losses; break;
            }
        }
        table[name] = counts;
    }
    return table;
}

SeedValues seed_values(const std::vector<MetricRecord>& records, Metric metric) {
    SeedValues out;
    for (const auto& r : records) {
        if (!out[r.problem].emplace(r.seed, metric_value(r.metrics, metric)).second) {
            throw std::invalid_argument("duplicate record for " + r.problem + " seed " + std::to_string(r.seed));
        }
    }
    return out;
}

}  // namespace momo
