#include "momo/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "momo/ranking.hpp"
#include "momo/variation.hpp"

namespace momo {

namespace {

Solution evaluate_into(const ProblemSpec& problem, DecisionVector x, Archive& archive) {
    Solution s;
    s.eval_index = archive.size() + 1;
    try {
        s.f = evaluate(problem, x);
    } catch (const std::exception& e) {
        throw std::runtime_error("evaluation " + std::to_string(s.eval_index) + " on " + problem.name +
                                 " failed: " + e.what());
    }
    s.x = std::move(x);
    archive.append(s);
    return s;
}

// Random pick among items[first..last) of equal key.
std::size_t pick(const std::vector<std::size_t>& candidates, RandomStream& rng) {
    return candidates.size() == 1 ? candidates.front() : candidates[rng.uniform_index(candidates.size())];
}

void take_snapshots(const RunConfig& config, std::vector<bool>& taken, std::size_t generation,
                    const Archive& archive, const Population& population, RunRecord& record) {
    for (std::size_t i = 0; i < config.snapshot_fractions.size(); ++i) {
        const double fraction = config.snapshot_fractions[i];
        if (taken[i] || static_cast<double>(archive.size()) < fraction * static_cast<double>(config.nfe_max)) {
            continue;
        }
        taken[i] = true;
        record.snapshots.push_back({fraction, generation, archive.size(), population});
    }
}

}  // namespace

Population initialize(const ProblemSpec& problem, const RunConfig& config, RandomStream& rng, Archive& archive) {
    const auto& b = problem.bounds;
    Population population;
    population.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        DecisionVector x(problem.dimensions);
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = std::min(b.lower[j] + (b.upper[j] - b.lower[j]) * rng.uniform(), b.upper[j]);
        }
        population.push_back(evaluate_into(problem, std::move(x), archive));
    }
    return population;
}

Partition rank_and_cluster(Population& members, std::size_t k, RandomStream& rng) {
    std::vector<ObjectiveVector> f;
    std::vector<DecisionVector> x;
    f.reserve(members.size());
    x.reserve(members.size());
    for (const auto& s : members) {
        f.push_back(s.f);
        x.push_back(s.x);
    }
    const auto ranks = non_dominated_sort(f);
    Partition partition = kmeans(normalize_points(x), std::min(k, members.size()), rng);
    for (std::size_t i = 0; i < members.size(); ++i) {
        members[i].rank = ranks.ranks[i];
        members[i].cluster_id = partition.assignment[i];
    }
    return partition;
}

ParentSelection select_parents(const Population& population, std::size_t k_bar, RandomStream& rng) {
    if (k_bar < 2) {
        throw std::invalid_argument("select_parents: need at least 2 clusters");
    }
    std::vector<std::size_t> sizes(k_bar, 0);
    for (const auto& s : population) {
        if (!s.cluster_id || !s.rank || *s.cluster_id >= k_bar) {
            throw std::invalid_argument("select_parents: population is not ranked and clustered");
        }
        ++sizes[*s.cluster_id];
    }

    // Non-empty clusters grouped by size, smallest first.
    auto smallest_among = [&](const std::vector<std::size_t>& excluded) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> ids;
        for (std::size_t c = 0; c < k_bar; ++c) {
            if (sizes[c] == 0 || std::find(excluded.begin(), excluded.end(), c) != excluded.end()) {
                continue;
            }
            if (sizes[c] < best) {
                best = sizes[c];
                ids.clear();
            }
            if (sizes[c] == best) {
                ids.push_back(c);
            }
        }
        return ids;
    };
    const auto first_group = smallest_among({});
    if (first_group.empty()) {
        throw std::invalid_argument("select_parents: no non-empty clusters");
    }
    const std::size_t first_cluster = pick(first_group, rng);
    const auto second_group = smallest_among({first_cluster});
    if (second_group.empty()) {
        throw std::invalid_argument("select_parents: fewer than two non-empty clusters");
    }
    const std::size_t second_cluster = pick(second_group, rng);

    auto best_member = [&](std::size_t cluster) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (*population[i].cluster_id != cluster) {
                continue;
            }
            if (*population[i].rank < best) {
                best = *population[i].rank;
                ids.clear();
            }
            if (*population[i].rank == best) {
                ids.push_back(i);
            }
        }
        return pick(ids, rng);
    };
    ParentSelection choice;
    choice.first_cluster = first_cluster;
    choice.second_cluster = second_cluster;
    choice.first = best_member(first_cluster);
    choice.second = best_member(second_cluster);
    return choice;
}

SurvivorSelection environmental_selection(std::vector<Solution> candidates, std::size_t population_size,
                                          std::size_t k_bar, RandomStream& rng) {
    if (candidates.size() != population_size + 1) {
        throw std::invalid_argument("environmental_selection: expected N+1 candidates");
    }
    if (k_bar < 1) {
        throw std::invalid_argument("environmental_selection: k_bar must be positive");
    }
    SurvivorSelection result;
    result.partition = rank_and_cluster(candidates, k_bar, rng);
    for (const auto& s : candidates) {
        result.ranks.push_back(*s.rank);
    }

    const auto sizes = result.partition.sizes();
    const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
    std::vector<std::size_t> largest_ids;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (sizes[c] == largest) {
            largest_ids.push_back(c);
        }
    }
    const std::size_t cluster = pick(largest_ids, rng);

    std::size_t worst = 0;
    std::vector<std::size_t> worst_ids;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (*candidates[i].cluster_id != cluster) {
            continue;
        }
        if (*candidates[i].rank > worst || worst_ids.empty()) {
            if (*candidates[i].rank > worst) {
                worst_ids.clear();
            }
            worst = std::max(worst, *candidates[i].rank);
        }
        if (*candidates[i].rank == worst) {
            worst_ids.push_back(i);
        }
    }
    result.removed = pick(worst_ids, rng);
    result.removed_cluster = cluster;
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(result.removed));
    result.population = std::move(candidates);
    return result;
}

RunRecord run(const ProblemSpec& problem, const RunConfig& config, RunObserver* observer) {
    config.validate();
    RandomStream rng(config.seed);
    RunRecord record;
    const double pm = config.mutation_probability(problem.dimensions);

    Population population = initialize(problem, config, rng, record.archive);
    std::vector<bool> taken(config.snapshot_fractions.size(), false);
    take_snapshots(config, taken, 0, record.archive, population, record);

    ClusterTracker tracker;
    std::size_t generation = 0;
    while (record.archive.size() < config.nfe_max) {
        ++generation;

        std::vector<DecisionVector> x;
        x.reserve(population.size());
        for (const auto& s : population) {
            x.push_back(s.x);
        }
        const std::size_t k_star = optimal_k(normalize_points(x), rng);
        tracker.update(k_star);
        const std::size_t k_bar = std::min(tracker.k_bar(), population.size());

        rank_and_cluster(population, k_bar, rng);
        const ParentSelection parents = select_parents(population, k_bar, rng);
        if (observer) {
            observer->on_parent_selection(population, parents);
        }

        auto offspring = sbx_crossover(population[parents.first].x, population[parents.second].x, config.pc,
                                       config.eta_c, problem.bounds, rng);
        DecisionVector child = polynomial_mutation(offspring.first, pm, config.eta_m, problem.bounds, rng);
        Solution evaluated = evaluate_into(problem, std::move(child), record.archive);

        std::vector<Solution> candidates = std::move(population);
        candidates.push_back(std::move(evaluated));
        SurvivorSelection survivors =
            environmental_selection(candidates, config.population_size, tracker.k_bar(), rng);
        if (observer) {
            observer->on_survivor_selection(candidates, survivors);
        }
        population = std::move(survivors.population);

        const GenerationRecord gen{generation, record.archive.size(), k_star, tracker.k_bar()};
        record.k_history.push_back(gen);
        if (observer) {
            observer->on_generation(gen);
        }
        take_snapshots(config, taken, generation, record.archive, population, record);
    }
    record.final_population = std::move(population);
    return record;
}

void write_k_history(const std::filesystem::path& path, const std::vector<GenerationRecord>& history) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "generation,k_star,k_bar\n";
    for (const auto& g : history) {
        out << g.generation << ',' << g.k_star << ',' << g.k_bar << '\n';
    }
}

void write_population(const std::filesystem::path& path, const Population& population) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    const std::size_t d = population.empty() ? 0 : population.front().x.size();
    const std::size_t m = population.empty() ? 0 : population.front().f.size();
    out << "eval_index";
    for (std::size_t i = 1; i <= d; ++i) {
        out << ",x_" << i;
    }
    for (std::size_t i = 1; i <= m; ++i) {
        out << ",f_" << i;
    }
    out << ",rank,cluster\n";
    for (const auto& s : population) {
        out << s.eval_index;
        for (double v : s.x) {
            out << ',' << format_double(v);
        }
        for (double v : s.f) {
            out << ',' << format_double(v);
        }
        out << ',' << (s.rank ? std::to_string(*s.rank) : "-1");
        out << ',' << (s.cluster_id ? std::to_string(*s.cluster_id) : "-1") << '\n';
    }
}

std::filesystem::path snapshot_file_name(double fraction) {
    return "snapshot_" + format_double(fraction) + ".csv";
}

}  // namespace momo
