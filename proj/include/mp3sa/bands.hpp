#pragma once

#include <array>

namespace mp3sa {

/// Long-block scalefactor band boundaries (23 edges, 22 bands).
const std::array<int, 23>& long_band_edges(int sample_rate_hz);
/// Short-block band boundaries within one window (14 edges, 13 bands).
const std::array<int, 14>& short_band_edges(int sample_rate_hz);

/// (slen1, slen2) for each scalefac_compress value.
inline constexpr std::array<int, 16> kSlen1 = {0, 0, 0, 0, 3, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4};
inline constexpr std::array<int, 16> kSlen2 = {0, 1, 2, 3, 0, 1, 2, 3, 1, 2, 3, 1, 2, 3, 2, 3};

/// Pre-emphasis added to long-block scalefactors when preflag is set.
inline constexpr std::array<int, 22> kPretab = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                                1, 1, 1, 1, 2, 2, 3, 3, 3, 2, 0};

inline constexpr int kGranuleSize = 576;

}  // namespace mp3sa
