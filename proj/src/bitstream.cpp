#include "mp3sa/bitstream.hpp"

#include "mp3sa/error.hpp"

namespace mp3sa {

std::vector<FrameLocator> scan_frames(std::span<const std::uint8_t> bytes) {
    std::vector<FrameLocator> out;
    std::size_t pos = 0;
    while (pos + 4 <= bytes.size()) {
        if (bytes[pos] != 0xFF || (bytes[pos + 1] & 0xE0) != 0xE0) {
            ++pos;
            continue;
        }
        try {
            const FrameHeader header = parse_header(bytes.subspan(pos, 4));
            const auto length = static_cast<std::size_t>(header.frame_length_bytes());
            if (pos + length <= bytes.size()) {
                out.push_back({pos, header});
                pos += length;
                continue;
            }
        } catch (const Error&) {
        }
        ++pos;
    }
    return out;
}

ParsedStream parse_stream(std::span<const std::uint8_t> bytes) {
    ParsedStream stream;
    for (const auto& loc : scan_frames(bytes)) {
        const auto& h = loc.header;
        const auto si_bytes = bytes.subspan(loc.byte_offset + static_cast<std::size_t>(h.side_info_offset()),
                                            static_cast<std::size_t>(h.side_info_bytes()));
        try {
            stream.frames.push_back({loc, parse_side_info(si_bytes, h.channel_mode)});
        } catch (const Error&) {
            ++stream.rejected_frames;
        }
    }
    return stream;
}

namespace {

// main_data_begin is a 9-bit byte count.
constexpr std::size_t kMaxReservoirBytes = 511;

}  // namespace

std::vector<MainDataSlice> assemble_main_data(std::span<const ParsedFrame> frames,
                                              std::span<const std::uint8_t> bytes) {
    std::vector<MainDataSlice> slices;
    slices.reserve(frames.size());
    std::vector<std::uint8_t> pool;

    for (std::size_t i = 0; i < frames.size(); ++i) {
        const auto& frame = frames[i];
        const auto& h = frame.locator.header;
        const auto& si = frame.side_info;
        const std::size_t payload_begin =
            frame.locator.byte_offset + static_cast<std::size_t>(h.side_info_offset() + h.side_info_bytes());
        const std::size_t payload_end = frame.locator.byte_offset + static_cast<std::size_t>(h.frame_length_bytes());
        if (payload_end > bytes.size() || payload_begin > payload_end) {
            throw Error(ErrorCode::kTruncated, "frame extends past input");
        }
        const auto payload = bytes.subspan(payload_begin, payload_end - payload_begin);

        MainDataSlice slice;
        slice.frame_index = i;
        for (int gr = 0; gr < 2; ++gr) {
            for (int ch = 0; ch < si.channels; ++ch) {
                slice.required_bits += static_cast<std::size_t>(
                    si.granule[static_cast<std::size_t>(gr)][static_cast<std::size_t>(ch)].part2_3_length);
            }
        }

        const auto back = static_cast<std::size_t>(si.main_data_begin);
        if (back <= pool.size()) {
            slice.bytes.assign(pool.end() - static_cast<std::ptrdiff_t>(back), pool.end());
            slice.bytes.insert(slice.bytes.end(), payload.begin(), payload.end());
            slice.complete = slice.required_bits <= slice.bit_length();
            if (!slice.complete) {
                slice.bytes.clear();
            }
        }
        slices.push_back(std::move(slice));
        pool.insert(pool.end(), payload.begin(), payload.end());
        if (pool.size() > kMaxReservoirBytes) {
            pool.erase(pool.begin(), pool.end() - static_cast<std::ptrdiff_t>(kMaxReservoirBytes));
        }
    }
    return slices;
}

}  // namespace mp3sa
