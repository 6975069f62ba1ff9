#include <gtest/gtest.h>

#include <array>

#include "mp3sa/error.hpp"
#include "mp3sa/header.hpp"
#include "../support/oracles.hpp"

using namespace mp3sa;

namespace {

ErrorCode parse_error(std::array<std::uint8_t, 4> b) {
    try {
        parse_header(b);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::kFormat;
}

}  // namespace

TEST(Header, Parses128kbps44100) {
    const std::array<std::uint8_t, 4> b = {0xFF, 0xFB, 0x90, 0x64};
    const auto h = parse_header(b);
    EXPECT_FALSE(h.crc_present);
    EXPECT_EQ(h.bitrate_kbps, 128);
    EXPECT_EQ(h.sample_rate_hz, 44100);
    EXPECT_EQ(h.padding, 0);
    EXPECT_EQ(h.channel_mode, ChannelMode::kJointStereo);
    EXPECT_EQ(h.frame_length_bytes(), 417);
    EXPECT_EQ(h.side_info_bytes(), 32);
}

TEST(Header, PaddedFrameLength) {
    const std::array<std::uint8_t, 4> b = {0xFF, 0xFB, 0x92, 0x64};
    EXPECT_EQ(parse_header(b).frame_length_bytes(), 418);
}

TEST(Header, MonoSideInfoSize) {
    const std::array<std::uint8_t, 4> b = {0xFF, 0xFB, 0x90, 0xC4};
    const auto h = parse_header(b);
    EXPECT_EQ(h.channels(), 1);
    EXPECT_EQ(h.side_info_bytes(), 17);
}

TEST(Header, Rejections) {
    EXPECT_EQ(parse_error({0xFE, 0xFB, 0x90, 0x64}), ErrorCode::kSyncMismatch);
    EXPECT_EQ(parse_error({0xFF, 0x7B, 0x90, 0x64}), ErrorCode::kSyncMismatch);
    EXPECT_EQ(parse_error({0xFF, 0xF3, 0x90, 0x64}), ErrorCode::kUnsupportedVersion);
    EXPECT_EQ(parse_error({0xFF, 0xFD, 0x90, 0x64}), ErrorCode::kUnsupportedLayer);
    EXPECT_EQ(parse_error({0xFF, 0xFB, 0x00, 0x64}), ErrorCode::kForbiddenBitrate);
    EXPECT_EQ(parse_error({0xFF, 0xFB, 0xF0, 0x64}), ErrorCode::kForbiddenBitrate);
    EXPECT_EQ(parse_error({0xFF, 0xFB, 0x9C, 0x64}), ErrorCode::kForbiddenSampleRate);
    const std::array<std::uint8_t, 3> short_input = {0xFF, 0xFB, 0x90};
    EXPECT_THROW(parse_header(short_input), Error);
}

// Every 32-bit pattern with a valid-looking sync agrees with the bit-string
// oracle, and write_header inverts parse_header.
TEST(Header, AgreesWithBruteForceDecoder) {
    for (std::uint32_t b1 = 0xE0; b1 <= 0xFF; ++b1) {
        for (std::uint32_t b2 = 0; b2 <= 0xFF; ++b2) {
            for (std::uint32_t b3 : {0x00u, 0x44u, 0xC4u, 0xFFu, 0x2Du}) {
                const std::array<std::uint8_t, 4> b = {0xFF, static_cast<std::uint8_t>(b1),
                                                       static_cast<std::uint8_t>(b2), static_cast<std::uint8_t>(b3)};
                const auto expected = oracle::brute_header(b);
                bool ok = true;
                FrameHeader h;
                try {
                    h = parse_header(b);
                } catch (const Error&) {
                    ok = false;
                }
                ASSERT_EQ(ok, expected.valid) << std::hex << b1 << ' ' << b2;
                if (!ok) {
                    continue;
                }
                EXPECT_EQ(h.bitrate_kbps, expected.bitrate_kbps);
                EXPECT_EQ(h.sample_rate_hz, expected.sample_rate_hz);
                EXPECT_EQ(h.padding, expected.padding);
                EXPECT_EQ(h.crc_present, expected.crc);
                EXPECT_EQ(static_cast<int>(h.channel_mode), expected.mode);
                EXPECT_EQ(h.frame_length_bytes(), expected.frame_bytes);
                EXPECT_EQ(write_header(h), b);
            }
        }
    }
}
