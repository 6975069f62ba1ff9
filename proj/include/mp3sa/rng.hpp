#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace mp3sa {

/// Seeded generator whose derived draws do not depend on the standard
/// library's distribution implementations, so sequences are identical
/// across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Standard normal (Box-Muller).
    double normal();

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    /// Derives an independent stream for sub-task `index`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mp3sa
