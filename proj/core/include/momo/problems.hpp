#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momo/core.hpp"

namespace momo {

enum class FrontGeometry { convex, concave, linear };

std::string_view to_string(FrontGeometry g);

/// One equivalent Pareto subset, parameterized by t over a union of intervals.
/// Open ends are sampled half a step inside the interval because the endpoint
/// itself is not Pareto-optimal for some problems.
struct ParetoSubset {
    std::vector<std::pair<double, double>> intervals;
    bool open_lo = false;
    bool open_hi = false;
    std::function<DecisionVector(double)> point;
};

struct ProblemSpec {
    std::string name;
    std::size_t dimensions = 0;   // D
    std::size_t objectives = 0;   // M
    Bounds bounds;
    std::size_t pss_count = 0;
    FrontGeometry geometry = FrontGeometry::convex;
    std::size_t reference_size = 1000;
    std::string provenance;

    std::function<ObjectiveVector(const DecisionVector&)> function;
    std::vector<ParetoSubset> subsets;
    /// Parametric Pareto front, s in [0,1].
    std::function<ObjectiveVector(double)> front;
};

struct ReferenceSet {
    std::vector<DecisionVector> ps;
    std::vector<ObjectiveVector> pf;
    std::vector<std::size_t> ps_subset;  // subset index of each PS point

    /// `ps_<name>.csv` / `pf_<name>.csv`, no header, full double precision.
    void write(const std::filesystem::path& dir, std::string_view problem) const;
    static ReferenceSet read(const std::filesystem::path& dir, std::string_view problem);
    static bool exists(const std::filesystem::path& dir, std::string_view problem);
};

/// Checks length and bounds, then evaluates. Throws std::out_of_range for
/// points outside the box and std::invalid_argument for length mismatch.
ObjectiveVector evaluate(const ProblemSpec& problem, const DecisionVector& x);

/// PS: reference_size points split across the subsets (shares differ by at
/// most one), evenly spaced in each subset's parameter. PF: reference_size
/// points evenly spaced in arc length along the parametric front.
ReferenceSet generate_reference(const ProblemSpec& problem);

/// All 21 benchmark problems, in table order.
const std::vector<ProblemSpec>& list_problems();

/// Case-insensitive lookup; throws std::invalid_argument for unknown names.
const ProblemSpec& find_problem(std::string_view name);

/// Reference-set file names for a problem.
std::string ps_file_name(std::string_view problem);
std::string pf_file_name(std::string_view problem);

/// Reads a headerless numeric CSV.
std::vector<std::vector<double>> read_matrix_csv(const std::filesystem::path& path);
void write_matrix_csv(const std::filesystem::path& path, const std::vector<std::vector<double>>& rows);

}  // namespace momo
