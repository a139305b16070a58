#include "momo/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace momo {

namespace {

using std::numbers::pi;

// ---------------------------------------------------------------------------
// Shared pieces
// ---------------------------------------------------------------------------

ObjectiveVector sqrt_front(double s) { return {s, 1.0 - std::sqrt(s)}; }
ObjectiveVector quadratic_front(double s) { return {s, 1.0 - s * s}; }
ObjectiveVector circle_front(double s) { return {s, std::sqrt(std::max(0.0, 1.0 - s * s))}; }
ObjectiveVector linear_front(double s) { return {s, 1.0 - s}; }
ObjectiveVector quarter_circle_front(double s) { return {std::cos(0.5 * pi * s), std::sin(0.5 * pi * s)}; }

ParetoSubset subset(double lo, double hi, std::function<DecisionVector(double)> point, bool open_lo = false,
                    bool open_hi = false) {
    return ParetoSubset{{{lo, hi}}, open_lo, open_hi, std::move(point)};
}

// MMF1/5/6 share the sinusoidal Pareto curve x2 = sin(6*pi*|x1-2| + pi).
double mmf_wave(double t) { return std::sin(6.0 * pi * t + pi); }

// MMF2/3 multimodal distance term.
double mmf_bump(double y) { return 4.0 * y * y - 2.0 * std::cos(20.0 * y * pi / std::sqrt(2.0)) + 2.0; }

// ---------------------------------------------------------------------------
// MMF suite (CEC 2019 multimodal multiobjective benchmark)
// ---------------------------------------------------------------------------

ProblemSpec mmf1() {
    ProblemSpec p;
    p.name = "MMF1";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{1.0, -1.0}, {3.0, 1.0}};
    p.pss_count = 2;
    p.geometry = FrontGeometry::convex;
    p.provenance = "MMF suite, MMF1; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double t = std::fabs(x[0] - 2.0);
        const double d = x[1] - mmf_wave(t);
        return {t, 1.0 - std::sqrt(t) + 2.0 * d * d};
    };
    p.subsets = {subset(0.0, 1.0, [](double t) -> DecisionVector { return {2.0 - t, mmf_wave(t)}; }),
                 subset(0.0, 1.0, [](double t) -> DecisionVector { return {2.0 + t, mmf_wave(t)}; })};
    p.front = sqrt_front;
    return p;
}

ProblemSpec mmf2() {
    ProblemSpec p;
    p.name = "MMF2";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{0.0, 0.0}, {1.0, 2.0}};
    p.pss_count = 2;
    p.geometry = FrontGeometry::convex;
    p.provenance = "MMF suite, MMF2; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double y = x[1] <= 1.0 ? x[1] - std::sqrt(x[0]) : x[1] - 1.0 - std::sqrt(x[0]);
        return {x[0], 1.0 - std::sqrt(x[0]) + 2.0 * mmf_bump(y)};
    };
    p.subsets = {subset(0.0, 1.0, [](double t) -> DecisionVector { return {t, std::sqrt(t)}; }),
                 subset(0.0, 1.0, [](double t) -> DecisionVector { return {t, 1.0 + std::sqrt(t)}; }, true)};
    p.front = sqrt_front;
    return p;
}

ProblemSpec mmf3() {
    ProblemSpec p;
    p.name = "MMF3";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{0.0, 0.0}, {1.0, 1.5}};
    p.pss_count = 2;
    p.geometry = FrontGeometry::convex;
    p.provenance = "MMF suite, MMF3; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const bool lower_branch = x[1] <= 0.5 || (x[1] < 1.0 && x[0] > 0.25);
        const double y = lower_branch ? x[1] - std::sqrt(x[0]) : x[1] - 0.5 - std::sqrt(x[0]);
        return {x[0], 1.0 - std::sqrt(x[0]) + 2.0 * mmf_bump(y)};
    };
    p.subsets = {subset(0.0, 1.0, [](double t) -> DecisionVector { return {t, std::sqrt(t)}; }, false, true),
                 subset(0.0, 1.0, [](double t) -> DecisionVector { return {t, 0.5 + std::sqrt(t)}; }, true)};
    p.front = sqrt_front;
    return p;
}

ProblemSpec mmf4() {
    ProblemSpec p;
    p.name = "MMF4";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{-1.0, 0.0}, {1.0, 2.0}};
    p.pss_count = 4;
    p.geometry = FrontGeometry::concave;
    p.provenance = "MMF suite, MMF4; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double y = x[1] < 1.0 ? x[1] : x[1] - 1.0;
        const double d = y - std::sin(pi * std::fabs(x[0]));
        return {std::fabs(x[0]), 1.0 - x[0] * x[0] + 2.0 * d * d};
    };
    auto curve = [](double sign, double shift) {
        return [sign, shift](double t) -> DecisionVector { return {sign * t, shift + std::sin(pi * t)}; };
    };
    p.subsets = {subset(0.0, 1.0, curve(-1.0, 0.0)), subset(0.0, 1.0, curve(1.0, 0.0)),
                 subset(0.0, 1.0, curve(-1.0, 1.0)), subset(0.0, 1.0, curve(1.0, 1.0))};
    p.front = quadratic_front;
    return p;
}

ProblemSpec mmf5() {
    ProblemSpec p;
    p.name = "MMF5";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{1.0, -1.0}, {3.0, 3.0}};
    p.pss_count = 4;
    p.geometry = FrontGeometry::convex;
    p.provenance = "MMF suite, MMF5; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double t = std::fabs(x[0] - 2.0);
        const double y = x[1] <= 1.0 ? x[1] : x[1] - 2.0;
        const double d = y - mmf_wave(t);
        return {t, 1.0 - std::sqrt(t) + 2.0 * d * d};
    };
    auto curve = [](double sign, double shift) {
        return [sign, shift](double t) -> DecisionVector { return {2.0 + sign * t, shift + mmf_wave(t)}; };
    };
    p.subsets = {subset(0.0, 1.0, curve(-1.0, 0.0)), subset(0.0, 1.0, curve(1.0, 0.0)),
                 subset(0.0, 1.0, curve(-1.0, 2.0)), subset(0.0, 1.0, curve(1.0, 2.0))};
    p.front = sqrt_front;
    return p;
}

ProblemSpec mmf6() {
    ProblemSpec p;
    p.name = "MMF6";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{1.0, -1.0}, {3.0, 2.0}};
    p.pss_count = 4;
    p.geometry = FrontGeometry::convex;
    p.provenance = "MMF suite, MMF6; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double t = std::fabs(x[0] - 2.0);
        const double y = x[1] <= 1.0 ? x[1] : x[1] - 1.0;
        const double d = y - mmf_wave(t);
        return {t, 1.0 - std::sqrt(t) + 2.0 * d * d};
    };
    auto curve = [](double sign, double shift) {
        return [sign, shift](double t) -> DecisionVector { return {2.0 + sign * t, shift + mmf_wave(t)}; };
    };
    // The shifted copy is optimal only where the wave is positive (x2 > 1).
    const std::vector<std::pair<double, double>> positive{{1.0 / 6.0, 1.0 / 3.0}, {0.5, 2.0 / 3.0}, {5.0 / 6.0, 1.0}};
    p.subsets = {subset(0.0, 1.0, curve(-1.0, 0.0)), subset(0.0, 1.0, curve(1.0, 0.0)),
                 ParetoSubset{positive, true, true, curve(-1.0, 1.0)},
                 ParetoSubset{positive, true, true, curve(1.0, 1.0)}};
    p.front = sqrt_front;
    return p;
}

double mmf7_curve(double t) {
    return (0.3 * t * t * std::cos(24.0 * pi * t + 4.0 * pi) + 0.6 * t) * std::sin(6.0 * pi * t + pi);
}

ProblemSpec mmf7() {
    ProblemSpec p;
    p.name = "MMF7";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{1.0, -1.0}, {3.0, 1.0}};
    p.pss_count = 2;
    p.geometry = FrontGeometry::convex;
    p.provenance = "MMF suite, MMF7; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double t = std::fabs(x[0] - 2.0);
        const double d = x[1] - mmf7_curve(t);
        return {t, 1.0 - std::sqrt(t) + d * d};
    };
    p.subsets = {subset(0.0, 1.0, [](double t) -> DecisionVector { return {2.0 - t, mmf7_curve(t)}; }),
                 subset(0.0, 1.0, [](double t) -> DecisionVector { return {2.0 + t, mmf7_curve(t)}; })};
    p.front = sqrt_front;
    return p;
}

ProblemSpec mmf8() {
    ProblemSpec p;
    p.name = "MMF8";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{-pi, 0.0}, {pi, 9.0}};
    p.pss_count = 4;
    p.geometry = FrontGeometry::concave;
    p.provenance = "MMF suite, MMF8; CEC 2019 MMO benchmark definition";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        const double a = std::fabs(x[0]);
        const double y = x[1] <= 4.0 ? x[1] : x[1] - 4.0;
        const double s = std::sin(a);
        const double d = y - s - a;
        return {s, std::sqrt(std::max(0.0, 1.0 - s * s)) + 2.0 * d * d};
    };
    auto curve = [](double sign, double shift) {
        return [sign, shift](double t) -> DecisionVector { return {sign * t, shift + std::sin(t) + t}; };
    };
    p.subsets = {subset(0.0, pi, curve(-1.0, 0.0)), subset(0.0, pi, curve(1.0, 0.0)),
                 subset(0.0, pi, curve(-1.0, 4.0), true), subset(0.0, pi, curve(1.0, 4.0), true)};
    p.front = circle_front;
    return p;
}

// ---------------------------------------------------------------------------
// SYM-PART, a = 1, b = 10, c = 8 (CEC 2019 parameterization)
// ---------------------------------------------------------------------------

constexpr double kSymA = 1.0;
constexpr double kSymB = 10.0;
constexpr double kSymC = 8.0;
const double kSymRotation = pi / 4.0;

ObjectiveVector sym_part_tiles(double x1, double x2) {
    const double c1 = kSymA + kSymC / 2.0;
    const double c2 = kSymC + 2.0 * kSymA;
    const double b1 = kSymB / 2.0;
    const double b2 = kSymB;
    auto sign = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
    // Tile index in {-1, 0, 1}.
    auto tile = [&](double v, double offset, double width) {
        const double raw = sign(v) * std::ceil((std::fabs(v) - offset) / width);
        return sign(raw) * std::min(std::fabs(raw), 1.0);
    };
    const double t1 = tile(x1, c1, c2);
    const double t2 = tile(x2, b1, b2);
    const double p1 = x1 - t1 * c2;
    const double p2 = x2 - t2 * b2;
    return {(p1 + kSymA) * (p1 + kSymA) + p2 * p2, (p1 - kSymA) * (p1 - kSymA) + p2 * p2};
}

ObjectiveVector sym_part_front(double s) {
    const double q = -kSymA + 2.0 * kSymA * s;
    return {(q + kSymA) * (q + kSymA), (q - kSymA) * (q - kSymA)};
}

std::vector<ParetoSubset> sym_part_subsets(double angle) {
    std::vector<ParetoSubset> out;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (int row = -1; row <= 1; ++row) {
        for (int col = -1; col <= 1; ++col) {
            const double cx = row * (kSymC + 2.0 * kSymA);
            const double cy = col * kSymB;
            out.push_back(subset(-kSymA, kSymA, [=](double t) -> DecisionVector {
                const double u = cx + t;
                const double v = cy;
                return {c * u - s * v, s * u + c * v};
            }));
        }
    }
    return out;
}

ProblemSpec sym_part_simple() {
    ProblemSpec p;
    p.name = "SYM-PART-Simple";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{-20.0, -20.0}, {20.0, 20.0}};
    p.pss_count = 9;
    p.geometry = FrontGeometry::convex;
    p.reference_size = 999;
    p.provenance = "SYM-PART simple, a=1 b=10 c=8, CEC 2019 tiling";
    p.function = [](const DecisionVector& x) { return sym_part_tiles(x[0], x[1]); };
    p.subsets = sym_part_subsets(0.0);
    p.front = sym_part_front;
    return p;
}

ProblemSpec sym_part_rotated() {
    ProblemSpec p;
    p.name = "SYM-PART-Rotated";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{-20.0, -20.0}, {20.0, 20.0}};
    p.pss_count = 9;
    p.geometry = FrontGeometry::convex;
    p.reference_size = 999;
    p.provenance = "SYM-PART rotated, omega=pi/4, CEC 2019 tiling";
    p.function = [](const DecisionVector& x) {
        const double c = std::cos(kSymRotation);
        const double s = std::sin(kSymRotation);
        return sym_part_tiles(c * x[0] + s * x[1], -s * x[0] + c * x[1]);
    };
    p.subsets = sym_part_subsets(kSymRotation);
    p.front = sym_part_front;
    return p;
}

// ---------------------------------------------------------------------------
// Omni-test, D = 2
// ---------------------------------------------------------------------------

ProblemSpec omni_test() {
    ProblemSpec p;
    p.name = "Omni-test";
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{0.0, 0.0}, {6.0, 6.0}};
    p.pss_count = 9;
    p.geometry = FrontGeometry::convex;
    p.reference_size = 999;
    p.provenance = "Omni-test, D=2; cross-checked with pymoo 0.6.2";
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        double f1 = 0.0;
        double f2 = 0.0;
        for (double v : x) {
            f1 += std::sin(pi * v);
            f2 += std::cos(pi * v);
        }
        return {f1, f2};
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double base1 = 2.0 * i + 1.0;
            const double base2 = 2.0 * j + 1.0;
            p.subsets.push_back(
                subset(0.0, 0.5, [=](double t) -> DecisionVector { return {base1 + t, base2 + t}; }));
        }
    }
    p.front = [](double s) -> ObjectiveVector {
        const double theta = pi + 0.5 * pi * s;
        return {2.0 * std::sin(theta), 2.0 * std::cos(theta)};
    };
    return p;
}

// ---------------------------------------------------------------------------
// MMMOP-style problems, A variants, all variables in [0,1].
// Position variable x1; multimodal distance terms cos^2(c*pi*(x - shift(x1)))
// place c optima at (j + 0.5)/c + shift(x1).
// ---------------------------------------------------------------------------

double wells(double v, double c) {
    const double w = std::cos(c * pi * v);
    return w * w;
}

ObjectiveVector linear_objectives(double x1, double g) { return {x1 * (1.0 + g), (1.0 - x1) * (1.0 + g)}; }

ObjectiveVector concave_objectives(double x1, double g) {
    return {(1.0 + g) * std::cos(0.5 * pi * x1), (1.0 + g) * std::sin(0.5 * pi * x1)};
}

ProblemSpec mmmop_base(std::string name, std::size_t d, std::size_t pss, FrontGeometry geometry) {
    ProblemSpec p;
    p.name = std::move(name);
    p.dimensions = d;
    p.objectives = 2;
    p.bounds = {std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
    p.pss_count = pss;
    p.geometry = geometry;
    p.front = geometry == FrontGeometry::linear ? linear_front : quarter_circle_front;
    p.provenance = "MMMOP suite, A variant; structure reconstructed to match D/M/PSS/PF geometry";
    return p;
}

ProblemSpec mmmop1a() {
    ProblemSpec p = mmmop_base("MMMOP1A", 3, 5, FrontGeometry::linear);
    p.function = [](const DecisionVector& x) {
        const double u = x[2] - 0.5;
        return linear_objectives(x[0], wells(x[1], 5.0) + u * u);
    };
    for (int j = 0; j < 5; ++j) {
        const double v = (j + 0.5) / 5.0;
        p.subsets.push_back(subset(0.0, 1.0, [v](double t) -> DecisionVector { return {t, v, 0.5}; }));
    }
    return p;
}

ProblemSpec mmmop2a() {
    ProblemSpec p = mmmop_base("MMMOP2A", 3, 6, FrontGeometry::concave);
    p.reference_size = 1002;
    p.function = [](const DecisionVector& x) {
        return concave_objectives(x[0], wells(x[1], 3.0) + wells(x[2], 2.0));
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double v = (i + 0.5) / 3.0;
            const double w = (j + 0.5) / 2.0;
            p.subsets.push_back(subset(0.0, 1.0, [v, w](double t) -> DecisionVector { return {t, v, w}; }));
        }
    }
    return p;
}

ProblemSpec mmmop_shifted(std::string name, std::size_t pss, double c, std::function<double(double)> shift,
                          std::size_t reference_size = 1000) {
    ProblemSpec p = mmmop_base(std::move(name), 2, pss, FrontGeometry::concave);
    p.reference_size = reference_size;
    p.function = [c, shift](const DecisionVector& x) {
        return concave_objectives(x[0], wells(x[1] - shift(x[0]), c));
    };
    for (std::size_t j = 0; j < pss; ++j) {
        const double v = (static_cast<double>(j) + 0.5) / c;
        p.subsets.push_back(
            subset(0.0, 1.0, [v, shift](double t) -> DecisionVector { return {t, v + shift(t)}; }));
    }
    return p;
}

ProblemSpec mmmop3a() {
    return mmmop_shifted("MMMOP3A", 3, 3.0, [](double) { return 0.0; }, 999);
}

ProblemSpec mmmop4a() {
    return mmmop_shifted("MMMOP4A", 4, 4.0, [](double t) { return 0.1 * std::sin(pi * t); });
}

ProblemSpec mmmop5a() {
    return mmmop_shifted("MMMOP5A", 4, 4.0, [](double t) { return 0.2 * (t - 0.5); });
}

ProblemSpec mmmop6a() {
    return mmmop_shifted("MMMOP6A", 2, 2.0, [](double t) { return 0.15 * std::sin(2.0 * pi * t); });
}

// ---------------------------------------------------------------------------
// IDMP, M = 2: two PS segments, the second behind a steeper
// distance function (imbalance factor alpha).
// ---------------------------------------------------------------------------

constexpr double kIdmpAlpha = 100.0;

ProblemSpec idmp(std::string name, std::function<double(double)> distance) {
    ProblemSpec p;
    p.name = std::move(name);
    p.dimensions = 2;
    p.objectives = 2;
    p.bounds = {{-1.0, -1.0}, {1.0, 1.0}};
    p.pss_count = 2;
    p.geometry = FrontGeometry::linear;
    p.provenance = "IDMP-M2; structure reconstructed, alpha=100";
    p.function = [distance](const DecisionVector& x) -> ObjectiveVector {
        const double g1 = distance(x[1] + 0.5);
        const double g2 = kIdmpAlpha * distance(x[1] - 0.5);
        return {std::min(std::fabs(x[0] + 0.6) + g1, std::fabs(x[0] - 0.4) + g2),
                std::min(std::fabs(x[0] + 0.4) + g1, std::fabs(x[0] - 0.6) + g2)};
    };
    p.subsets = {subset(-0.6, -0.4, [](double t) -> DecisionVector { return {t, -0.5}; }),
                 subset(0.4, 0.6, [](double t) -> DecisionVector { return {t, 0.5}; })};
    p.front = [](double s) -> ObjectiveVector { return {0.2 * s, 0.2 * (1.0 - s)}; };
    return p;
}

std::vector<ProblemSpec> build_problems() {
    std::vector<ProblemSpec> out{
        mmf1(), mmf2(), mmf3(), mmf4(), mmf5(), mmf6(), mmf7(), mmf8(),
        sym_part_simple(), sym_part_rotated(), omni_test(),
        mmmop1a(), mmmop2a(), mmmop3a(), mmmop4a(), mmmop5a(), mmmop6a(),
        idmp("IDMP-M2-T1", [](double y) { return std::fabs(y); }),
        idmp("IDMP-M2-T2", [](double y) { return y * y; }),
        idmp("IDMP-M2-T3", [](double y) { return std::pow(std::fabs(y), 0.6); }),
        idmp("IDMP-M2-T4", [](double y) { return y * y + 1.0 - std::cos(20.0 * pi * y); }),
    };
    return out;
}

// Parameter values for n evenly spaced samples over the union of intervals.
std::vector<double> subset_parameters(const ParetoSubset& s, std::size_t n) {
    double total = 0.0;
    for (const auto& [lo, hi] : s.intervals) {
        total += hi - lo;
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double idx = static_cast<double>(i);
        const double count = static_cast<double>(n);
        double u = 0.0;
        if (n == 1) {
            u = 0.5 * total;
        } else if (s.open_lo && s.open_hi) {
            u = total * (idx + 0.5) / count;
        } else if (s.open_lo) {
            u = total * (idx + 0.5) / (count - 0.5);
        } else if (s.open_hi) {
            u = total * idx / (count - 0.5);
        } else {
            u = total * idx / (count - 1.0);
        }
        // Map the concatenated coordinate back onto the intervals.
        double t = s.intervals.back().second;
        for (const auto& [lo, hi] : s.intervals) {
            if (u <= hi - lo) {
                t = lo + u;
                break;
            }
            u -= hi - lo;
        }
        out.push_back(t);
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

std::string_view to_string(FrontGeometry g) {
    switch (g) {
        case FrontGeometry::convex:
            return "convex";
        case FrontGeometry::concave:
            return "concave";
        case FrontGeometry::linear:
            return "linear";
    }
    return "unknown";
}

ObjectiveVector evaluate(const ProblemSpec& problem, const DecisionVector& x) {
    if (x.size() != problem.dimensions) {
        throw std::invalid_argument(problem.name + ": expected " + std::to_string(problem.dimensions) +
                                    " variables, got " + std::to_string(x.size()));
    }
    if (!problem.bounds.contains(x)) {
        throw std::out_of_range(problem.name + ": decision vector outside the variable bounds");
    }
    ObjectiveVector f = problem.function(x);
    for (double v : f) {
        if (!std::isfinite(v)) {
            throw std::runtime_error(problem.name + ": non-finite objective value");
        }
    }
    return f;
}

ReferenceSet generate_reference(const ProblemSpec& problem) {
    ReferenceSet ref;
    const std::size_t total = problem.reference_size;
    const std::size_t k = problem.subsets.size();
    for (std::size_t s = 0; s < k; ++s) {
        const std::size_t share = total / k + (s < total % k ? 1 : 0);
        for (double t : subset_parameters(problem.subsets[s], share)) {
            DecisionVector x = problem.subsets[s].point(t);
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = std::clamp(x[i], problem.bounds.lower[i], problem.bounds.upper[i]);
            }
            ref.ps.push_back(std::move(x));
            ref.ps_subset.push_back(s);
        }
    }

    // Arc-length table of the front on a fine grid, then invert piecewise-linearly.
    constexpr std::size_t kGrid = 20000;
    std::vector<double> arc(kGrid + 1, 0.0);
    ObjectiveVector prev = problem.front(0.0);
    for (std::size_t i = 1; i <= kGrid; ++i) {
        ObjectiveVector cur = problem.front(static_cast<double>(i) / kGrid);
        double d = 0.0;
        for (std::size_t j = 0; j < cur.size(); ++j) {
            d += (cur[j] - prev[j]) * (cur[j] - prev[j]);
        }
        arc[i] = arc[i - 1] + std::sqrt(d);
        prev = std::move(cur);
    }
    const double length = arc.back();
    for (std::size_t i = 0; i < total; ++i) {
        const double target = total == 1 ? 0.5 * length : length * static_cast<double>(i) / (total - 1);
        auto it = std::lower_bound(arc.begin(), arc.end(), target);
        double s = 1.0;
        if (it == arc.begin()) {
            s = 0.0;
        } else if (it != arc.end()) {
            const auto hi = static_cast<std::size_t>(it - arc.begin());
            const double seg = arc[hi] - arc[hi - 1];
            const double frac = seg > 0.0 ? (target - arc[hi - 1]) / seg : 0.0;
            s = (static_cast<double>(hi - 1) + frac) / kGrid;
        }
        ref.pf.push_back(problem.front(std::clamp(s, 0.0, 1.0)));
    }
    return ref;
}

const std::vector<ProblemSpec>& list_problems() {
    static const std::vector<ProblemSpec> problems = build_problems();
    return problems;
}

const ProblemSpec& find_problem(std::string_view name) {
    const auto key = lower(name);
    for (const auto& p : list_problems()) {
        if (lower(p.name) == key) {
            return p;
        }
    }
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

std::string ps_file_name(std::string_view problem) { return "ps_" + std::string(problem) + ".csv"; }
std::string pf_file_name(std::string_view problem) { return "pf_" + std::string(problem) + ".csv"; }

std::vector<std::vector<double>> read_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) {
            row.push_back(parse_double(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_matrix_csv(const std::filesystem::path& path, const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_double(row[i]);
        }
        out << '\n';
    }
}

void ReferenceSet::write(const std::filesystem::path& dir, std::string_view problem) const {
    std::filesystem::create_directories(dir);
    write_matrix_csv(dir / ps_file_name(problem), ps);
    write_matrix_csv(dir / pf_file_name(problem), pf);
}

ReferenceSet ReferenceSet::read(const std::filesystem::path& dir, std::string_view problem) {
    ReferenceSet ref;
    ref.ps = read_matrix_csv(dir / ps_file_name(problem));
    ref.pf = read_matrix_csv(dir / pf_file_name(problem));
    if (ref.ps.size() != ref.pf.size()) {
        throw std::runtime_error("reference set for " + std::string(problem) + ": PS and PF sizes differ");
    }
    return ref;
}

bool ReferenceSet::exists(const std::filesystem::path& dir, std::string_view problem) {
    return std::filesystem::exists(dir / ps_file_name(problem)) && std::filesystem::exists(dir / pf_file_name(problem));
}

}  // namespace momo
