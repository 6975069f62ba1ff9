#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mp3sa/bitreader.hpp"
#include "mp3sa/header.hpp"

namespace mp3sa {

/// Per-granule, per-channel side information.
struct GranuleChannel {
    int part2_3_length = 0;     // 12 bits
    int big_values = 0;         // 0..288
    int global_gain = 0;        // 8 bits
    int scalefac_compress = 0;  // 4 bits
    bool window_switching = false;
    int block_type = 0;  // 0 long, 1 start, 2 short, 3 end
    bool mixed_block_flag = false;
    std::array<int, 3> table_select{};
    std::array<int, 3> subblock_gain{};
    int region0_count = 0;  // 4 bits
    int region1_count = 0;  // 3 bits
    int preflag = 0;
    int scalefac_scale = 0;
    int count1table_select = 0;

    /// Region counts are not transmitted under window switching; the parser
    /// fills in the values the standard implies.
    bool regions_implied() const { return window_switching; }

    bool operator==(const GranuleChannel&) const = default;
};

/// The region0/region1 counts implied when window_switching is set.
int implied_region0_count(int block_type, bool mixed_block_flag);
inline int implied_region1_count(int block_type, bool mixed_block_flag) {
    return 20 - implied_region0_count(block_type, mixed_block_flag);
}

struct SideInfo {
    int main_data_begin = 0;  // 9 bits, bytes
    int private_bits = 0;     // 5 bits mono, 3 bits otherwise
    int channels = 1;
    std::array<std::array<int, 4>, 2> scfsi{};             // [channel][group]
    std::array<std::array<GranuleChannel, 2>, 2> granule{};  // [granule][channel]

    int scfsi_sum(int channel) const;

    bool operator==(const SideInfo&) const = default;
};

inline constexpr int kMonoSideInfoBits = 136;
inline constexpr int kStereoSideInfoBits = 256;

/// Consumes exactly 136 (mono) or 256 bits from the reader. Throws
/// kTruncated when too few bits remain and kInvalidField for big_values >
/// 288 or a window-switched granule with block_type 0.
SideInfo parse_side_info(BitReader& reader, ChannelMode mode);
SideInfo parse_side_info(std::span<const std::uint8_t> bytes, ChannelMode mode);

/// Emits the exact layout parse_side_info consumes. Fields that the layout
/// cannot carry (for instance region counts of a window-switched granule
/// that differ from the implied values) are rejected with kOutOfRange, so
/// parse(write(si)) == si for every accepted input.
std::vector<std::uint8_t> write_side_info(const SideInfo& si, ChannelMode mode);
void write_side_info(BitWriter& writer, const SideInfo& si, ChannelMode mode);

}  // namespace mp3sa
