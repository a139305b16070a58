#include "momo/ranking.hpp"

#include <algorithm>
#include <stdexcept>

namespace momo {

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

std::size_t RankAssignment::front_count() const {
    if (ranks.empty()) {
        return 0;
    }
    return *std::max_element(ranks.begin(), ranks.end()) + 1;
}

std::vector<std::vector<std::size_t>> RankAssignment::fronts() const {
    std::vector<std::vector<std::size_t>> out(front_count());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        out[ranks[i]].push_back(i);
    }
    return out;
}

RankAssignment non_dominated_sort(std::span<const ObjectiveVector> points) {
    if (points.empty()) {
        throw std::invalid_argument("non_dominated_sort: empty input");
    }
    const std::size_t n = points.size();
    const std::size_t m = points.front().size();
    for (const auto& p : points) {
        if (p.size() != m) {
            throw std::invalid_argument("non_dominated_sort: inconsistent objective count");
        }
    }

    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> domination_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    RankAssignment result;
    result.ranks.assign(n, 0);
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            current.push_back(i);
        }
    }
    std::size_t rank = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            result.ranks[i] = rank;
            for (std::size_t j : dominated[i]) {
                if (--domination_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        current = std::move(next);
        ++rank;
    }
    return result;
}

}  // namespace momo
