#include "mp3sa/header.hpp"

#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {

std::string_view to_string(ChannelMode mode) {
    switch (mode) {
        case ChannelMode::kStereo: return "stereo";
        case ChannelMode::kJointStereo: return "joint_stereo";
        case ChannelMode::kDual: return "dual";
        case ChannelMode::kMono: return "mono";
    }
    return "unknown";
}

int FrameHeader::frame_length_bytes() const {
    return 144 * bitrate_kbps * 1000 / sample_rate_hz + padding;
}

int bitrate_index(int kbps) {
    for (int i = 1; i < 15; ++i) {
        if (kBitrateKbps[static_cast<std::size_t>(i)] == kbps) {
            return i;
        }
    }
    throw Error(ErrorCode::kOutOfRange, "no Layer III bitrate of " + std::to_string(kbps) + " kbps");
}

int sample_rate_index(int hz) {
    for (int i = 0; i < 3; ++i) {
        if (kSampleRateHz[static_cast<std::size_t>(i)] == hz) {
            return i;
        }
    }
    throw Error(ErrorCode::kOutOfRange, "no MPEG-1 sample rate of " + std::to_string(hz) + " Hz");
}

FrameHeader parse_header(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4) {
        throw Error(ErrorCode::kTruncated, "header needs 4 bytes");
    }
    const std::uint32_t word = (std::uint32_t{bytes[0]} << 24) | (std::uint32_t{bytes[1]} << 16) |
                               (std::uint32_t{bytes[2]} << 8) | std::uint32_t{bytes[3]};
    if ((word >> 21) != 0x7FF) {
        throw Error(ErrorCode::kSyncMismatch, "no frame sync");
    }
    const auto version = (word >> 19) & 3u;
    if (version != 3) {
        throw Error(ErrorCode::kUnsupportedVersion,
                    version == 1 ? "reserved version bits" : "only MPEG-1 is supported");
    }
    const auto layer = (word >> 17) & 3u;
    if (layer != 1) {
        throw Error(ErrorCode::kUnsupportedLayer,
                    layer == 0 ? "reserved layer bits" : "Layer " + std::to_string(4 - layer));
    }
    const auto br_index = (word >> 12) & 15u;
    if (br_index == 0 || br_index == 15) {
        throw Error(ErrorCode::kForbiddenBitrate,
                    br_index == 0 ? "free format" : "bitrate index 15");
    }
    const auto sr_index = (word >> 10) & 3u;
    if (sr_index == 3) {
        throw Error(ErrorCode::kForbiddenSampleRate, "sample-rate index 3");
    }

    FrameHeader h;
    h.crc_present = ((word >> 16) & 1u) == 0;
    h.bitrate_kbps = kBitrateKbps[br_index];
    h.sample_rate_hz = kSampleRateHz[sr_index];
    h.padding = static_cast<int>((word >> 9) & 1u);
    h.private_bit = ((word >> 8) & 1u) != 0;
    h.channel_mode = static_cast<ChannelMode>((word >> 6) & 3u);
    h.mode_extension = static_cast<int>((word >> 4) & 3u);
    h.copyright = ((word >> 3) & 1u) != 0;
    h.original = ((word >> 2) & 1u) != 0;
    h.emphasis = static_cast<int>(word & 3u);
    return h;
}

std::array<std::uint8_t, 4> write_header(const FrameHeader& h) {
    if (h.padding < 0 || h.padding > 1 || h.mode_extension < 0 || h.mode_extension > 3 ||
        h.emphasis < 0 || h.emphasis > 3) {
        throw Error(ErrorCode::kOutOfRange, "header field out of range");
    }
    std::uint32_t word = 0x7FFu << 21;
    word |= 3u << 19;
    word |= 1u << 17;
    word |= (h.crc_present ? 0u : 1u) << 16;
    word |= static_cast<std::uint32_t>(bitrate_index(h.bitrate_kbps)) << 12;
    word |= static_cast<std::uint32_t>(sample_rate_index(h.sample_rate_hz)) << 10;
    word |= static_cast<std::uint32_t>(h.padding) << 9;
    word |= (h.private_bit ? 1u : 0u) << 8;
    word |= static_cast<std::uint32_t>(h.channel_mode) << 6;
    word |= static_cast<std::uint32_t>(h.mode_extension) << 4;
    word |= (h.copyright ? 1u : 0u) << 3;
    word |= (h.original ? 1u : 0u) << 2;
    word |= static_cast<std::uint32_t>(h.emphasis);
    return {static_cast<std::uint8_t>(word >> 24), static_cast<std::uint8_t>(word >> 16),
            static_cast<std::uint8_t>(word >> 8), static_cast<std::uint8_t>(word)};
}

}  // namespace mp3sa
