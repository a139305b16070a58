#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "momo/engine.hpp"
#include "momo/ranking.hpp"
#include "invariants.hpp"

using namespace momo;

namespace {

RunConfig small_config(std::uint64_t seed = 1) {
    RunConfig c;
    c.population_size = 20;
    c.nfe_max = 200;
    c.seed = seed;
    return c;
}

Solution member(DecisionVector x, ObjectiveVector f, std::size_t rank, std::size_t cluster) {
    Solution s;
    s.x = std::move(x);
    s.f = std::move(f);
    s.rank = rank;
    s.cluster_id = cluster;
    return s;
}

// Population with the given cluster sizes; every member has rank 0 unless
// overridden afterwards.
Population with_cluster_sizes(const std::vector<std::size_t>& sizes) {
    Population pop;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            pop.push_back(member({static_cast<double>(c), 0.0}, {0.0, 0.0}, 0, c));
        }
    }
    return pop;
}

// Candidates in three well-separated decision-space blobs of the given sizes.
// Objectives lie on the line f1 + f2 = 1, so all are mutually non-dominated.
std::vector<Solution> blob_candidates(const std::vector<std::size_t>& sizes, RandomStream& r) {
    const double centres[3][2] = {{0.0, 0.0}, {10.0, 0.0}, {0.0, 10.0}};
    std::vector<Solution> out;
    std::size_t index = 1;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            Solution s;
            s.x = {centres[c][0] + 0.01 * r.normal(), centres[c][1] + 0.01 * r.normal()};
            const double t = r.uniform();
            s.f = {t, 1.0 - t};
            s.eval_index = index++;
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

TEST(Initialize, WithinBoundsAndArchived) {
    const auto& p = find_problem("MMF4");
    RandomStream r(1);
    Archive archive;
    RunConfig c;
    const auto pop = initialize(p, c, r, archive);
    ASSERT_EQ(pop.size(), 50u);
    ASSERT_EQ(archive.size(), 50u);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        EXPECT_TRUE(p.bounds.contains(pop[i].x));
        EXPECT_EQ(pop[i].eval_index, i + 1);
        EXPECT_EQ(archive[i], pop[i]);
    }
}

TEST(Initialize, UniformOverBox) {
    const auto& p = find_problem("MMMOP3A");
    RandomStream r(2);
    Archive archive;
    RunConfig c;
    c.population_size = 10000;
    c.nfe_max = 10000;
    const auto pop = initialize(p, c, r, archive);
    for (std::size_t d = 0; d < 2; ++d) {
        double sum = 0.0;
        for (const auto& s : pop) {
            sum += s.x[d];
        }
        EXPECT_NEAR(sum / 10000.0, 0.5, 0.01);
    }
}

TEST(Initialize, SameSeedSamePopulation) {
    const auto& p = find_problem("MMF1");
    RandomStream a(3), b(3);
    Archive aa, ab;
    EXPECT_EQ(initialize(p, RunConfig{}, a, aa), initialize(p, RunConfig{}, b, ab));
}

TEST(SelectParents, SmallestTwoClusters) {
    RandomStream r(1);
    const auto pop = with_cluster_sizes({3, 5, 10});
    for (int i = 0; i < 50; ++i) {
        const auto choice = select_parents(pop, 3, r);
        EXPECT_EQ(std::set<std::size_t>({choice.first_cluster, choice.second_cluster}), (std::set<std::size_t>{0, 1}));
        EXPECT_EQ(*pop[choice.first].cluster_id, choice.first_cluster);
        EXPECT_EQ(*pop[choice.second].cluster_id, choice.second_cluster);
    }
}

TEST(SelectParents, EqualSizesPickDistinctClustersAtRandom) {
    RandomStream r(2);
    const auto pop = with_cluster_sizes({4, 4, 4});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (int i = 0; i < 200; ++i) {
        const auto choice = select_parents(pop, 3, r);
        ASSERT_NE(choice.first_cluster, choice.second_cluster);
        seen.insert({choice.first_cluster, choice.second_cluster});
    }
    EXPECT_EQ(seen.size(), 6u);
}

TEST(SelectParents, BestRankInCluster) {
    RandomStream r(3);
    auto pop = with_cluster_sizes({3, 6});
    pop[0].rank = 0;
    pop[1].rank = 0;
    pop[2].rank = 2;
    std::set<std::size_t> chosen;
    for (int i = 0; i < 100; ++i) {
        const auto choice = select_parents(pop, 2, r);
        const auto from_small = choice.first_cluster == 0 ? choice.first : choice.second;
        ASSERT_NE(from_small, 2u);
        chosen.insert(from_small);
    }
    EXPECT_EQ(chosen, (std::set<std::size_t>{0, 1}));
}

TEST(SelectParents, RejectsUnlabelledPopulation) {
    RandomStream r(4);
    Population pop(4);
    EXPECT_THROW(select_parents(pop, 2, r), std::invalid_argument);
}

TEST(EnvironmentalSelection, RemovesWorstOfLargestCluster) {
    RandomStream r(1);
    auto candidates = blob_candidates({10, 10, 31}, r);
    // A dominance chain inside the 31-member blob: ranks 1..4.
    const std::size_t worst = 10 + 10 + 7;
    for (std::size_t j = 1; j <= 4; ++j) {
        const double v = 100.0 + static_cast<double>(j);
        candidates[worst - 4 + j].f = {v, v};
    }
    const auto original = candidates;
    const auto result = environmental_selection(candidates, 50, 3, r);
    EXPECT_EQ(result.removed, worst);
    EXPECT_EQ(result.ranks[worst], 4u);
    ASSERT_EQ(result.population.size(), 50u);
    for (const auto& s : result.population) {
        EXPECT_NE(s.eval_index, original[worst].eval_index);
    }
}

TEST(EnvironmentalSelection, NonDominatedTieIsRandomWithinLargestCluster) {
    RandomStream r(2);
    std::set<std::size_t> removed;
    for (int i = 0; i < 100; ++i) {
        const auto candidates = blob_candidates({10, 10, 31}, r);
        const auto result = environmental_selection(candidates, 50, 3, r);
        ASSERT_GE(result.removed, 20u);
        removed.insert(result.removed);
    }
    EXPECT_GT(removed.size(), 10u);
}

TEST(EnvironmentalSelection, WorstChildIsDropped) {
    RandomStream r(3);
    auto candidates = blob_candidates({10, 10, 31}, r);
    candidates.back().f = {5.0, 5.0};
    std::vector<Solution> parents(candidates.begin(), candidates.end() - 1);
    const auto result = environmental_selection(candidates, 50, 3, r);
    ASSERT_EQ(result.population.size(), parents.size());
    for (std::size_t i = 0; i < parents.size(); ++i) {
        EXPECT_EQ(result.population[i].x, parents[i].x);
        EXPECT_EQ(result.population[i].f, parents[i].f);
    }
}

TEST(EnvironmentalSelection, RequiresNPlusOne) {
    RandomStream r(4);
    const auto candidates = blob_candidates({5, 5}, r);
    EXPECT_THROW(environmental_selection(candidates, 10, 2, r), std::invalid_argument);
}

TEST(Run, DefaultBudget) {
    const auto record = run(find_problem("MMF1"), RunConfig{});
    EXPECT_EQ(record.archive.size(), 1000u);
    EXPECT_EQ(record.k_history.size(), 950u);
    EXPECT_EQ(record.final_population.size(), 50u);
    for (std::size_t i = 0; i < record.archive.size(); ++i) {
        ASSERT_EQ(record.archive[i].eval_index, i + 1);
    }
    for (std::size_t g = 0; g < record.k_history.size(); ++g) {
        const auto& h = record.k_history[g];
        ASSERT_EQ(h.generation, g + 1);
        ASSERT_EQ(h.nfe, 51 + g);
        ASSERT_GE(h.k_star, 2u);
    }
}

TEST(Run, BudgetExhaustedByInitialization) {
    RunConfig c = small_config(5);
    c.nfe_max = c.population_size;
    const auto record = run(find_problem("MMF2"), c);
    EXPECT_TRUE(record.k_history.empty());
    RandomStream r(5);
    Archive archive;
    EXPECT_EQ(record.final_population, initialize(find_problem("MMF2"), c, r, archive));
    EXPECT_EQ(record.archive, archive);
}

TEST(Run, Deterministic) {
    const auto& p = find_problem("SYM-PART-Rotated");
    EXPECT_EQ(run(p, small_config(3)), run(p, small_config(3)));
    EXPECT_NE(run(p, small_config(3)).archive, run(p, small_config(4)).archive);
}

TEST(Run, SnapshotsAtBudgetFractions) {
    const auto record = run(find_problem("SYM-PART-Simple"), RunConfig{});
    ASSERT_EQ(record.snapshots.size(), 4u);
    const double fractions[] = {0.25, 0.5, 0.75, 1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& s = record.snapshots[i];
        EXPECT_EQ(s.fraction, fractions[i]);
        EXPECT_EQ(s.nfe, static_cast<std::size_t>(fractions[i] * 1000));
        EXPECT_EQ(s.population.size(), 50u);
        const auto k_bar = record.k_history[s.generation - 1].k_bar;
        for (const auto& m : s.population) {
            ASSERT_TRUE(m.cluster_id.has_value());
            EXPECT_LT(*m.cluster_id, k_bar);
        }
    }
    EXPECT_EQ(record.snapshots.back().population, record.final_population);
}

TEST(Run, InstrumentedInvariants) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        invariants::Recorder rec;
        const auto record = run(find_problem("Omni-test"), small_config(seed), &rec);
        EXPECT_TRUE(rec.violations.empty()) << (rec.violations.empty() ? "" : rec.violations.front());
        EXPECT_EQ(rec.generations, 180u);
        EXPECT_EQ(record.archive.size(), 200u);
    }
}

TEST(Run, ChildrenStayInBounds) {
    const auto& p = find_problem("MMF8");
    const auto record = run(p, small_config(9));
    for (const auto& s : record.archive.entries()) {
        ASSERT_TRUE(p.bounds.contains(s.x));
    }
}

TEST(Run, EvaluationFailureIsReported) {
    ProblemSpec p = find_problem("MMF1");
    p.function = [](const DecisionVector& x) -> ObjectiveVector {
        return {x[0] > 2.9 ? std::nan("") : x[0], x[1]};
    };
    EXPECT_THROW(run(p, RunConfig{}), std::runtime_error);
}

TEST(Run, InvalidConfigRejected) {
    RunConfig c;
    c.pc = 2.0;
    EXPECT_THROW(run(find_problem("MMF1"), c), std::invalid_argument);
}

TEST(Output, FilesAndNames) {
    EXPECT_EQ(snapshot_file_name(0.25), "snapshot_0.25.csv");
    EXPECT_EQ(snapshot_file_name(1.0), "snapshot_1.csv");
    const auto dir = std::filesystem::temp_directory_path() / "momo_engine_out";
    std::filesystem::create_directories(dir);
    const auto record = run(find_problem("MMF3"), small_config(2));
    write_k_history(dir / "k.csv", record.k_history);
    write_population(dir / "pop.csv", record.final_population);
    std::ifstream k(dir / "k.csv");
    std::string line;
    std::getline(k, line);
    EXPECT_EQ(line, "generation,k_star,k_bar");
    std::size_t rows = 0;
    while (std::getline(k, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, record.k_history.size());
    std::ifstream pop(dir / "pop.csv");
    std::getline(pop, line);
    EXPECT_EQ(line, "eval_index,x_1,x_2,f_1,f_2,rank,cluster");
    std::filesystem::remove_all(dir);
}
