#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mp3sa/bitreader.hpp"
#include "mp3sa/header.hpp"
#include "mp3sa/maindata.hpp"
#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

/// Content of one granule/channel's main data.
struct GranulePayload {
    ScaleFactors scalefactors;
    std::array<int, kGranuleSize> quantized{};
};

using FramePayload = std::array<std::array<GranulePayload, 2>, 2>;  // [granule][channel]

struct FixtureFrame {
    FrameHeader header;
    SideInfo side_info;
    /// Without a payload each granule is part2_3_length zero bits.
    std::optional<FramePayload> payload;
};

/// Writes scalefactors (skipping groups reused through scfsi), the
/// big_values pairs with each region's table, the count1 quadruples, then
/// 1-bit filler up to part2_3_length. Throws kBudgetOverflow when the
/// symbols need more bits and kOutOfRange for values the tables cannot
/// carry (including nonzero values past the count1 region's reach).
void encode_granule(BitWriter& writer, const GranuleChannel& gc, const GranulePayload& payload,
                    const std::array<int, 4>& scfsi, int granule_index, int sample_rate_hz);

/// Bits the scalefactors and Huffman symbols take, before filler.
int granule_bits(const GranuleChannel& gc, const GranulePayload& payload, const std::array<int, 4>& scfsi,
                 int granule_index, int sample_rate_hz);

/// Lays out a complete stream honouring each frame's main_data_begin: a
/// frame's main data starts main_data_begin bytes before its own payload
/// area. Throws kOutOfRange when main data would overlap the previous
/// frame's, reach before the stream start, or run past the frame's end.
/// CRC words, when flagged, are written as zeros.
std::vector<std::uint8_t> write_fixture(std::span<const FixtureFrame> frames);

}  // namespace mp3sa
