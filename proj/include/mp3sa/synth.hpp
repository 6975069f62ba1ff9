#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mp3sa/calibration.hpp"
#include "mp3sa/header.hpp"

namespace mp3sa {

struct CoverSpec {
    std::size_t length = 4096;  // granules
    double cutoff = 0.05;       // cycles per granule, in (0, 0.5)
    double base = 140.0;
    double amplitude = 30.0;
    std::uint64_t seed = 42;
};

/// Smooth gain series: a Gaussian random walk, low-pass filtered
/// (windowed sinc), centred, scaled so its peak deviation equals
/// `amplitude`, offset by `base` and rounded. Throws kInvalidArgument for
/// length < 8, a cutoff outside (0, 0.5) or base +- amplitude leaving 1..255.
GainSeries gen_cover_series(const CoverSpec& spec);

/// Probabilities of noise values -2, -1, 0, +1, +2.
using NoiseDistribution = std::array<double, 5>;
inline constexpr NoiseDistribution kDefaultNoise = {0.1, 0.3, 0.2, 0.3, 0.1};

struct StegoSpec {
    double rate = 1.0;  // fraction of granules perturbed
    NoiseDistribution probabilities = kDefaultNoise;
    std::uint64_t seed = 43;
};

struct StegoResult {
    GainSeries series;
    std::vector<int> noise;        // drawn noise per granule, 0 where untouched
    std::size_t perturbed = 0;     // positions that drew noise
    std::size_t changed = 0;       // positions whose value differs from the cover
    std::size_t clamped = 0;       // results clipped to 0..255
};

/// y = x + n at round(rate * length) positions chosen uniformly without
/// replacement; n is drawn independently from the distribution. Throws
/// kInvalidArgument for a rate outside [0, 1] or an invalid distribution.
StegoResult embed_noise(const GainSeries& cover, const StegoSpec& spec);

/// Mono 48 kHz, 32 kbps stream carrying one gain per granule (an even
/// count) with empty main data; scanned back, its gain series equals
/// `gains`. Values must be integers in 0..255.
std::vector<std::uint8_t> gain_series_stream(std::span<const double> gains);

}  // namespace mp3sa
