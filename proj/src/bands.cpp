#include "mp3sa/bands.hpp"

#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {
namespace {

constexpr std::array<int, 23> kLong44 = {0,  4,  8,  12, 16,  20,  24,  30,  36,  44,  52, 62,
                                         74, 90, 110, 134, 162, 196, 238, 288, 342, 418, 576};
constexpr std::array<int, 23> kLong48 = {0,  4,  8,  12, 16,  20,  24,  30,  36,  42,  50, 60,
                                         72, 88, 106, 128, 156, 190, 230, 276, 330, 384, 576};
constexpr std::array<int, 23> kLong32 = {0,  4,  8,   12,  16,  20,  24,  30,  36,  44,  54, 66,
                                         82, 102, 126, 156, 194, 240, 296, 364, 448, 550, 576};

constexpr std::array<int, 14> kShort44 = {0, 4, 8, 12, 16, 22, 30, 40, 52, 66, 84, 106, 136, 192};
constexpr std::array<int, 14> kShort48 = {0, 4, 8, 12, 16, 22, 28, 38, 50, 64, 80, 100, 126, 192};
constexpr std::array<int, 14> kShort32 = {0, 4, 8, 12, 16, 22, 30, 42, 58, 78, 104, 138, 180, 192};

}  // namespace

const std::array<int, 23>& long_band_edges(int sample_rate_hz) {
    switch (sample_rate_hz) {
        case 44100: return kLong44;
        case 48000: return kLong48;
        case 32000: return kLong32;
        default: break;
    }
    throw Error(ErrorCode::kOutOfRange, "sample rate " + std::to_string(sample_rate_hz));
}

const std::array<int, 14>& short_band_edges(int sample_rate_hz) {
    switch (sample_rate_hz) {
        case 44100: return kShort44;
        case 48000: return kShort48;
        case 32000: return kShort32;
        default: break;
    }
    throw Error(ErrorCode::kOutOfRange, "sample rate " + std::to_string(sample_rate_hz));
}

}  // namespace mp3sa
