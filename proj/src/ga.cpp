#include "mp3sa/ga.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mp3sa/cv.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/rng.hpp"

namespace mp3sa {

namespace {

Subset random_subset(Rng& rng, std::size_t feature_count, std::size_t size) {
    std::vector<int> pool(feature_count);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < size; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(feature_count - i));
        std::swap(pool[i], pool[j]);
    }
    Subset s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    return s;
}

// Replaces repeated genes with random unused indices, then sorts.
void repair(Subset& s, Rng& rng, std::size_t feature_count) {
    std::vector<bool> used(feature_count, false);
    std::vector<std::size_t> repeats;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto flag = used[static_cast<std::size_t>(s[i])];
        if (flag) {
            repeats.push_back(i);
        }
        flag = true;
    }
    for (std::size_t i : repeats) {
        std::vector<int> unused;
        for (std::size_t f = 0; f < feature_count; ++f) {
            if (!used[f]) {
                unused.push_back(static_cast<int>(f));
            }
        }
        const int pick = unused[static_cast<std::size_t>(rng.below(unused.size()))];
        s[i] = pick;
        used[static_cast<std::size_t>(pick)] = true;
    }
    std::sort(s.begin(), s.end());
}

std::size_t tournament(Rng& rng, std::span<const double> fitness, std::size_t size) {
    auto best = static_cast<std::size_t>(rng.below(fitness.size()));
    for (std::size_t t = 1; t < size; ++t) {
        const auto c = static_cast<std::size_t>(rng.below(fitness.size()));
        if (fitness[c] > fitness[best] || (fitness[c] == fitness[best] && c < best)) {
            best = c;
        }
    }
    return best;
}

}  // namespace

void validate(const GaConfig& config, std::size_t feature_count) {
    if (config.population < 2 || config.population % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "GA population must be even and at least 2");
    }
    if (config.target_count == 0 || config.target_count > feature_count) {
        throw Error(ErrorCode::kInvalidArgument, "GA target count must be in 1.." + std::to_string(feature_count));
    }
    if (config.stagnation_limit < 1) {
        throw Error(ErrorCode::kInvalidArgument, "GA stagnation limit must be positive");
    }
    if (config.elitism >= config.population) {
        throw Error(ErrorCode::kInvalidArgument, "GA elitism must be below the population size");
    }
    if (config.tournament < 1) {
        throw Error(ErrorCode::kInvalidArgument, "GA tournament size must be positive");
    }
    if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0) ||
        !(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "GA rates must lie in [0, 1]");
    }
}

std::vector<double> evaluate_population_serial(std::span<const Subset> population, const FitnessFn& fitness) {
    std::vector<double> out(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
        out[i] = fitness(population[i]);
    }
    return out;
}

std::vector<double> evaluate_population(std::span<const Subset> population, const FitnessFn& fitness) {
    std::vector<double> out(population.size());
    const auto n = static_cast<std::ptrdiff_t>(population.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = fitness(population[static_cast<std::size_t>(i)]);
    }
    return out;
}

GaResult ga_run(std::size_t feature_count, const GaConfig& config, const FitnessFn& fitness) {
    validate(config, feature_count);
    Rng rng(config.seed);
    std::map<Subset, double> cache;

    auto score = [&](const std::vector<Subset>& population) {
        std::vector<Subset> fresh;
        for (const auto& s : population) {
            if (!cache.contains(s) && std::find(fresh.begin(), fresh.end(), s) == fresh.end()) {
                fresh.push_back(s);
            }
        }
        const auto values = config.parallel ? evaluate_population(fresh, fitness)
                                            : evaluate_population_serial(fresh, fitness);
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            cache.emplace(fresh[i], values[i]);
        }
        std::vector<double> out;
        out.reserve(population.size());
        for (const auto& s : population) {
            out.push_back(cache.at(s));
        }
        return out;
    };

    // Fitness descending, ties by subset order so ranking is deterministic.
    auto ranking = [](const std::vector<Subset>& population, const std::vector<double>& fit) {
        std::vector<std::size_t> order(population.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (fit[a] != fit[b]) {
                return fit[a] > fit[b];
            }
            return population[a] < population[b];
        });
        return order;
    };

    std::vector<Subset> population;
    population.reserve(config.population);
    for (std::size_t i = 0; i < config.population; ++i) {
        population.push_back(random_subset(rng, feature_count, config.target_count));
    }
    auto fit = score(population);

    GaResult result;
    {
        const auto order = ranking(population, fit);
        result.best = population[order[0]];
        result.best_fitness = fit[order[0]];
        result.trace.push_back(result.best_fitness);
    }

    int stagnant = 0;
    while (result.generations < config.max_generations) {
        const auto order = ranking(population, fit);
        std::vector<Subset> next;
        next.reserve(config.population);
        for (std::size_t e = 0; e < config.elitism; ++e) {
            next.push_back(population[order[e]]);
        }
        while (next.size() < config.population) {
            Subset a = population[tournament(rng, fit, config.tournament)];
            Subset b = population[tournament(rng, fit, config.tournament)];
            if (rng.uniform() < config.crossover_rate) {
                const std::size_t len = a.size();
                auto p = static_cast<std::size_t>(rng.below(len + 1));
                auto q = static_cast<std::size_t>(rng.below(len + 1));
                if (p > q) {
                    std::swap(p, q);
                }
                for (std::size_t i = p; i < q; ++i) {
                    std::swap(a[i], b[i]);
                }
            }
            for (Subset* child : {&a, &b}) {
                for (int& gene : *child) {
                    if (rng.uniform() < config.mutation_rate) {
                        gene = static_cast<int>(rng.below(feature_count));
                    }
                }
                repair(*child, rng, feature_count);
                if (next.size() < config.population) {
                    next.push_back(std::move(*child));
                }
            }
        }
        population = std::move(next);
        fit = score(population);
        ++result.generations;

        const auto ranked = ranking(population, fit);
        if (fit[ranked[0]] > result.best_fitness) {
            result.best = population[ranked[0]];
            result.best_fitness = fit[ranked[0]];
            stagnant = 0;
        } else {
            ++stagnant;
        }
        result.trace.push_back(result.best_fitness);
        if (stagnant >= config.stagnation_limit) {
            result.stagnated = true;
            break;
        }
    }
    result.evaluations = cache.size();
    return result;
}

GaSelection ga_select(const Matrix& x, std::span<const int> labels, int class_count,
                      std::span<const std::string> names, const GaConfig& config, const SvmOptions& svm) {
    if (names.size() != x.cols()) {
        throw Error(ErrorCode::kSchemaMismatch, "feature name count differs from column count");
    }
    validate(config, x.cols());
    CvOptions cv;
    cv.folds = config.folds;
    cv.seed = config.seed;
    cv.svm = svm;
    cv.svm.parallel_kernel = !config.parallel;
    const std::vector<int> label_copy(labels.begin(), labels.end());

    const FitnessFn fitness = [&](const Subset& subset) {
        const Matrix cols = x.select_cols(subset);
        return kfold_cv(cols, label_copy, class_count, cv).accuracy;
    };
    GaSelection out;
    out.result = ga_run(x.cols(), config, fitness);
    for (int idx : out.result.best) {
        out.names.push_back(names[static_cast<std::size_t>(idx)]);
    }
    return out;
}

}  // namespace mp3sa
