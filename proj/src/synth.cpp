#include "mp3sa/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mp3sa/error.hpp"
#include "mp3sa/fixture.hpp"
#include "mp3sa/rng.hpp"

namespace mp3sa {

namespace {

constexpr int kTaps = 257;
// Half the Blackman main-lobe width, so the stopband starts near the cutoff.
constexpr double kTransitionHalfWidth = 0.011;

std::vector<double> lowpass_taps(double cutoff) {
    const double fc = std::max(cutoff - kTransitionHalfWidth, cutoff / 2.0);
    const int mid = kTaps / 2;
    std::vector<double> h(kTaps);
    double sum = 0.0;
    for (int n = 0; n < kTaps; ++n) {
        const int k = n - mid;
        const double sinc = k == 0 ? 2.0 * fc : std::sin(2.0 * std::numbers::pi * fc * k) / (std::numbers::pi * k);
        const double phase = 2.0 * std::numbers::pi * n / (kTaps - 1);
        const double window = 0.42 - 0.5 * std::cos(phase) + 0.08 * std::cos(2.0 * phase);
        h[static_cast<std::size_t>(n)] = sinc * window;
        sum += h[static_cast<std::size_t>(n)];
    }
    for (double& v : h) {
        v /= sum;
    }
    return h;
}

}  // namespace

GainSeries gen_cover_series(const CoverSpec& spec) {
    if (spec.length < 8) {
        throw Error(ErrorCode::kInvalidArgument, "cover length must be at least 8");
    }
    if (!(spec.cutoff > 0.0 && spec.cutoff < 0.5)) {
        throw Error(ErrorCode::kInvalidArgument, "cutoff must lie in (0, 0.5)");
    }
    if (!(spec.amplitude >= 0.0) || spec.base - spec.amplitude < 1.0 || spec.base + spec.amplitude > 255.0) {
        throw Error(ErrorCode::kInvalidArgument, "base +- amplitude must stay within 1..255");
    }

    const auto taps = lowpass_taps(spec.cutoff);
    const std::size_t padded = spec.length + taps.size() - 1;
    Rng rng(spec.seed);
    std::vector<double> walk(padded);
    double level = 0.0;
    for (double& v : walk) {
        level += rng.normal();
        v = level;
    }

    std::vector<double> smooth(spec.length, 0.0);
    for (std::size_t i = 0; i < spec.length; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < taps.size(); ++k) {
            acc += taps[k] * walk[i + k];
        }
        smooth[i] = acc;
    }
    const double centre = std::accumulate(smooth.begin(), smooth.end(), 0.0) / static_cast<double>(spec.length);
    double peak = 0.0;
    for (double& v : smooth) {
        v -= centre;
        peak = std::max(peak, std::abs(v));
    }

    GainSeries out;
    out.source = "synthetic cover";
    out.values.reserve(spec.length);
    for (double v : smooth) {
        const double unit = peak > 0.0 ? v / peak : 0.0;
        out.values.push_back(std::round(spec.base + spec.amplitude * unit));
    }
    return out;
}

StegoResult embed_noise(const GainSeries& cover, const StegoSpec& spec) {
    if (!(spec.rate >= 0.0 && spec.rate <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "embedding rate must lie in [0, 1]");
    }
    double total = 0.0;
    for (double p : spec.probabilities) {
        if (!(p >= 0.0)) {
            throw Error(ErrorCode::kInvalidArgument, "noise probabilities must be non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::kInvalidArgument, "noise probabilities must sum to 1");
    }

    const std::size_t n = cover.values.size();
    const auto count = static_cast<std::size_t>(std::llround(spec.rate * static_cast<double>(n)));
    Rng rng(spec.seed);
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(positions[i], positions[j]);
    }
    positions.resize(count);
    std::sort(positions.begin(), positions.end());

    StegoResult out;
    out.series = cover;
    out.series.source = "synthetic stego";
    out.noise.assign(n, 0);
    out.perturbed = count;
    for (std::size_t pos : positions) {
        const double u = rng.uniform();
        double cumulative = 0.0;
        int value = 2;
        for (std::size_t k = 0; k < spec.probabilities.size(); ++k) {
            cumulative += spec.probabilities[k];
            if (u < cumulative) {
                value = static_cast<int>(k) - 2;
                break;
            }
        }
        out.noise[pos] = value;
        double y = cover.values[pos] + value;
        if (y < 0.0 || y > 255.0) {
            y = std::clamp(y, 0.0, 255.0);
            ++out.clamped;
        }
        out.series.values[pos] = y;
        if (y != cover.values[pos]) {
            ++out.changed;
        }
    }
    return out;
}

std::vector<std::uint8_t> gain_series_stream(std::span<const double> gains) {
    if (gains.size() % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "gain series length must be even (two granules per frame)");
    }
    FrameHeader header;
    header.bitrate_kbps = 32;
    header.sample_rate_hz = 48000;
    header.channel_mode = ChannelMode::kMono;

    std::vector<FixtureFrame> frames(gains.size() / 2);
    for (std::size_t f = 0; f < frames.size(); ++f) {
        frames[f].header = header;
        frames[f].side_info.channels = 1;
        for (std::size_t gr = 0; gr < 2; ++gr) {
            const double g = gains[2 * f + gr];
            if (g < 0.0 || g > 255.0 || g != std::floor(g)) {
                throw Error(ErrorCode::kOutOfRange, "gain " + std::to_string(g) + " is not an integer in 0..255");
            }
            frames[f].side_info.granule[gr][0].global_gain = static_cast<int>(g);
        }
    }
    return write_fixture(frames);
}

}  // namespace mp3sa
