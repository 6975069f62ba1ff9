#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mp3sa/header.hpp"
#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

struct FrameLocator {
    std::size_t byte_offset = 0;
    FrameHeader header;
};

/// Every offset where a valid MPEG-1 Layer III header begins and the whole
/// frame fits in the input. After a valid frame the scan continues at the
/// frame's end; after an invalid candidate it advances one byte.
std::vector<FrameLocator> scan_frames(std::span<const std::uint8_t> bytes);

struct ParsedFrame {
    FrameLocator locator;
    SideInfo side_info;
};

struct ParsedStream {
    std::vector<ParsedFrame> frames;
    /// Located frames dropped because their side info was invalid.
    std::size_t rejected_frames = 0;
};

/// scan_frames followed by side-info parsing of every located frame.
ParsedStream parse_stream(std::span<const std::uint8_t> bytes);

/// A frame's main data, gathered across the bit reservoir. `bytes` begins at
/// the first main-data byte of the frame and runs to the end of the frame's
/// own payload; only the first `required_bits` carry granule data.
struct MainDataSlice {
    std::size_t frame_index = 0;
    std::vector<std::uint8_t> bytes;
    std::size_t required_bits = 0;  // sum of part2_3_length
    bool complete = false;

    std::size_t bit_length() const { return bytes.size() * 8; }
};

/// Frames must be in stream order. A slice is incomplete when
/// main_data_begin reaches further back than the payload history or the
/// granule data would run past the end of the frame.
std::vector<MainDataSlice> assemble_main_data(std::span<const ParsedFrame> frames,
                                              std::span<const std::uint8_t> bytes);

}  // namespace mp3sa
