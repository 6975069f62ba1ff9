#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace mp3sa {

enum class ChannelMode : std::uint8_t { kStereo = 0, kJointStereo = 1, kDual = 2, kMono = 3 };

std::string_view to_string(ChannelMode mode);

inline int channel_count(ChannelMode mode) { return mode == ChannelMode::kMono ? 1 : 2; }

/// Decoded MPEG-1 Layer III frame header. Only MPEG-1 Layer III is ever
/// represented; other versions and layers are rejected at parse time.
struct FrameHeader {
    bool crc_present = false;
    int bitrate_kbps = 128;
    int sample_rate_hz = 44100;
    int padding = 0;
    bool private_bit = false;
    ChannelMode channel_mode = ChannelMode::kStereo;
    int mode_extension = 0;
    bool copyright = false;
    bool original = false;
    int emphasis = 0;

    int channels() const { return channel_count(channel_mode); }
    /// floor(144 * bitrate / sample_rate) + padding.
    int frame_length_bytes() const;
    /// 17 bytes for mono, 32 otherwise.
    int side_info_bytes() const { return channels() == 1 ? 17 : 32; }
    /// Offset of the side info from the frame start (header plus optional CRC).
    int side_info_offset() const { return crc_present ? 6 : 4; }
    /// Bytes following the side info up to the end of the frame.
    int main_data_capacity() const {
        return frame_length_bytes() - side_info_offset() - side_info_bytes();
    }

    bool operator==(const FrameHeader&) const = default;
};

/// Layer III bitrates (kbps) indexed by the 4-bit bitrate index; 0 is free
/// format and 15 is forbidden, both unsupported.
inline constexpr std::array<int, 16> kBitrateKbps = {0,   32,  40,  48,  56,  64,  80,  96,
                                                     112, 128, 160, 192, 224, 256, 320, 0};
inline constexpr std::array<int, 4> kSampleRateHz = {44100, 48000, 32000, 0};

/// Decodes a 4-byte header. Throws Error with kSyncMismatch,
/// kUnsupportedVersion, kUnsupportedLayer, kForbiddenBitrate or
/// kForbiddenSampleRate; kTruncated when fewer than four bytes are given.
FrameHeader parse_header(std::span<const std::uint8_t> bytes);

/// Inverse of parse_header. Throws kOutOfRange for values with no encoding.
std::array<std::uint8_t, 4> write_header(const FrameHeader& header);

int bitrate_index(int kbps);
int sample_rate_index(int hz);

}  // namespace mp3sa
