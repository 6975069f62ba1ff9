// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <span>
#include <vector>

#include "mp3sa/cv.hpp"
#include "mp3sa/extract.hpp"
#include "mp3sa/ga.hpp"
#include "mp3sa/kernel.hpp"
#include "mp3sa/rng.hpp"
#include "mp3sa/synth.hpp"

using namespace mp3sa;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols) {
    Rng rng(1);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
    }
    return m;
}

const std::vector<std::vector<std::uint8_t>>& corpus() {
    static const auto files = [] {
        std::vector<std::vector<std::uint8_t>> out;
        for (std::uint64_t i = 0; i < 64; ++i) {
            CoverSpec cs;
            cs.seed = Rng::derive(42, i);
            out.push_back(gain_series_stream(gen_cover_series(cs).values));
        }
        return out;
    }();
    return files;
}

struct GaData {
    Matrix x;
    std::vector<int> labels;
};

const GaData& ga_data() {
    static const GaData data = [] {
        Rng rng(3);
        GaData d{Matrix(200, 20), {}};
        for (std::size_t i = 0; i < 200; ++i) {
            const int cls = static_cast<int>(i % 2);
            for (std::size_t j = 0; j < 20; ++j) d.x(i, j) = rng.normal() + (j < 3 ? cls * 0.8 : 0.0);
            d.labels.push_back(cls);
        }
        return d;
    }();
    return data;
}

std::vector<Subset> population(std::size_t n) {
    Rng rng(9);
    std::vector<Subset> pop;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> all(20);
        for (int j = 0; j < 20; ++j) all[static_cast<std::size_t>(j)] = j;
        rng.shuffle(std::span<int>(all));
        Subset s(all.begin(), all.begin() + 4);
        std::sort(s.begin(), s.end());
        pop.push_back(s);
    }
    return pop;
}

double cv_fitness(const Subset& s) {
    const auto& d = ga_data();
    CvOptions opt;
    opt.folds = 5;
    opt.svm.parallel_kernel = false;
    return kfold_cv(d.x.select_cols(s), d.labels, 2, opt).accuracy;
}

void BM_KernelMatrixSerial(benchmark::State& state) {
    const auto x = random_matrix(static_cast<std::size_t>(state.range(0)), 52);
    const Kernel k{KernelType::kRbf, 1.0 / 52};
    for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix_serial(x, k));
}

void BM_KernelMatrixParallel(benchmark::State& state) {
    const auto x = random_matrix(static_cast<std::size_t>(state.range(0)), 52);
    const Kernel k{KernelType::kRbf, 1.0 / 52};
    for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix(x, k));
}

void BM_ExtractSerial(benchmark::State& state) {
    const ExtractOptions opt{Schema::kSi52};
    for (auto _ : state) benchmark::DoNotOptimize(extract_batch_serial(corpus(), opt));
}

void BM_ExtractParallel(benchmark::State& state) {
    const ExtractOptions opt{Schema::kSi52};
    for (auto _ : state) benchmark::DoNotOptimize(extract_batch(corpus(), opt));
}

void BM_GaEvaluateSerial(benchmark::State& state) {
    const auto pop = population(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_population_serial(pop, cv_fitness));
}

void BM_GaEvaluateParallel(benchmark::State& state) {
    const auto pop = population(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_population(pop, cv_fitness));
}

}  // namespace

BENCHMARK(BM_KernelMatrixSerial)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelMatrixParallel)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaEvaluateSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaEvaluateParallel)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
