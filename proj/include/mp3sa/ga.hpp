#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mp3sa/matrix.hpp"
#include "mp3sa/svm.hpp"

namespace mp3sa {

struct GaConfig {
    std::size_t population = 200;  // even, >= 2
    std::size_t target_count = 4;
    int stagnation_limit = 5;
    double mutation_rate = 0.01;   // per gene
    double crossover_rate = 0.9;
    std::size_t elitism = 1;
    std::size_t tournament = 2;
    int max_generations = 100;
    int folds = 10;
    std::uint64_t seed = 42;
    bool parallel = true;
};

/// Sorted, duplicate-free feature indices.
using Subset = std::vector<int>;
using FitnessFn = std::function<double(const Subset&)>;

struct GaResult {
    Subset best;
    double best_fitness = 0.0;
    /// Best fitness seen so far, one entry per generation starting with the
    /// initial population.
    std::vector<double> trace;
    int generations = 0;
    bool stagnated = false;  // false: stopped at max_generations
    std::size_t evaluations = 0;  // distinct subsets scored
};

/// Throws kInvalidArgument for an odd or < 2 population, a target count of
/// zero or above feature_count, or a non-positive stagnation limit.
void validate(const GaConfig& config, std::size_t feature_count);

/// Fitness of each individual, in order; serial reference.
std::vector<double> evaluate_population_serial(std::span<const Subset> population, const FitnessFn& fitness);
/// Same values, individuals scored in parallel (OpenMP). `fitness` must be
/// safe to call concurrently.
std::vector<double> evaluate_population(std::span<const Subset> population, const FitnessFn& fitness);

/// Generic engine: fixed-size subsets, tournament selection, two-point
/// crossover on the sorted index lists, per-gene mutation, duplicate repair
/// by resampling unused indices, elitism. Stops once the best fitness has
/// not improved for stagnation_limit consecutive generations.
GaResult ga_run(std::size_t feature_count, const GaConfig& config, const FitnessFn& fitness);

struct GaSelection {
    std::vector<std::string> names;
    GaResult result;
};

/// Feature-subset search with k-fold cross-validated accuracy as fitness.
GaSelection ga_select(const Matrix& x, std::span<const int> labels, int class_count,
                      std::span<const std::string> names, const GaConfig& config, const SvmOptions& svm);

}  // namespace mp3sa
