#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace momo {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Box constraints, lower[i] < upper[i].
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const { return lower.size(); }
    bool contains(const DecisionVector& x) const;
    void validate() const;
};

struct Solution {
    DecisionVector x;
    ObjectiveVector f;
    std::size_t eval_index = 0;  // 1-based
    std::optional<std::size_t> rank;
    std::optional<std::size_t> cluster_id;

    friend bool operator==(const Solution&, const Solution&) = default;
};

using Population = std::vector<Solution>;

/// Append-only log of every evaluated solution, in evaluation order.
class Archive {
  public:
    void append(const Solution& s) { entries_.push_back(s); }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Solution& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Solution>& entries() const { return entries_; }

    std::vector<DecisionVector> decisions() const;
    std::vector<ObjectiveVector> objectives() const;

    /// CSV with header `eval_index,x_1..x_D,f_1..f_M`.
    void write_csv(std::ostream& out) const;
    void write_csv(const std::filesystem::path& path) const;
    static Archive read_csv(std::istream& in);
    static Archive read_csv(const std::filesystem::path& path);

    friend bool operator==(const Archive&, const Archive&) = default;

  private:
    std::vector<Solution> entries_;
};

struct RunConfig {
    std::size_t population_size = 50;
    std::size_t nfe_max = 1000;
    double pc = 1.0;
    double eta_c = 20.0;
    std::optional<double> pm;  // unset means 1/D
    double eta_m = 20.0;
    std::uint64_t seed = 1;
    std::vector<double> snapshot_fractions{0.25, 0.5, 0.75, 1.0};

    double mutation_probability(std::size_t dimensions) const {
        return pm ? *pm : 1.0 / static_cast<double>(dimensions);
    }

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;

    /// Plain-text `key = value` format, one pair per line, '#' comments.
    /// Keys: population_size, nfe_max, pc, eta_c, pm, eta_m, seed,
    /// snapshot_fractions (comma separated). Unknown keys are rejected.
    static RunConfig parse(std::istream& in);
    static RunConfig load(const std::filesystem::path& path);
    void write(std::ostream& out) const;

    /// Applies one key/value pair; returns false for unknown keys.
    bool apply(const std::string& key, const std::string& value);
};

/// Instantaneous optimal cluster counts and their stabilized running mean.
class ClusterTracker {
  public:
    /// Appends k_star (>= 2) and recomputes k_bar = ceil(mean(history)).
    void update(std::size_t k_star);

    const std::vector<std::size_t>& history() const { return history_; }
    /// 0 until the first update.
    std::size_t k_bar() const { return k_bar_; }

  private:
    std::vector<std::size_t> history_;
    std::size_t sum_ = 0;
    std::size_t k_bar_ = 0;
};

ClusterTracker update_tracker(ClusterTracker tracker, std::size_t k_star);

// Shared text helpers.
std::string format_double(double v);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);
double parse_double(const std::string& s);
std::uint64_t parse_uint(const std::string& s);

}  // namespace momo
