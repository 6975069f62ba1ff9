#include <gtest/gtest.h>

#include "mp3sa/bitstream.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/fixture.hpp"
#include "../support/generators.hpp"

using namespace mp3sa;

namespace {

FrameHeader mono_header(int kbps = 128) {
    FrameHeader h;
    h.bitrate_kbps = kbps;
    h.sample_rate_hz = 44100;
    h.channel_mode = ChannelMode::kMono;
    return h;
}

FixtureFrame zero_frame(const FrameHeader& h) {
    FixtureFrame f;
    f.header = h;
    f.side_info.channels = h.channels();
    return f;
}

}  // namespace

TEST(Bitstream, OneZeroFrame) {
    const std::vector<FixtureFrame> frames = {zero_frame(mono_header())};
    const auto bytes = write_fixture(frames);
    EXPECT_EQ(bytes.size(), 417u);
    const auto stream = parse_stream(bytes);
    ASSERT_EQ(stream.frames.size(), 1u);
    EXPECT_EQ(stream.frames[0].side_info, frames[0].side_info);
}

TEST(Bitstream, SkipsJunkAndResyncs) {
    std::vector<FixtureFrame> frames(3, zero_frame(mono_header()));
    auto body = write_fixture(frames);
    std::vector<std::uint8_t> bytes = {0x00, 0xFF, 0xFB, 0xF2};  // junk, including a sync with a forbidden bitrate
    bytes.insert(bytes.end(), body.begin(), body.end());
    const auto located = scan_frames(bytes);
    ASSERT_EQ(located.size(), 3u);
    EXPECT_EQ(located[0].byte_offset, 4u);
    EXPECT_EQ(located[1].byte_offset, 4u + 417u);
}

TEST(Bitstream, TruncatedLastFrameIgnored) {
    std::vector<FixtureFrame> frames(2, zero_frame(mono_header()));
    auto bytes = write_fixture(frames);
    bytes.resize(bytes.size() - 10);
    EXPECT_EQ(scan_frames(bytes).size(), 1u);
    EXPECT_TRUE(scan_frames(std::vector<std::uint8_t>{}).empty());
}

TEST(Bitstream, InvalidSideInfoRejected) {
    std::vector<FixtureFrame> frames(2, zero_frame(mono_header()));
    auto bytes = write_fixture(frames);
    // Set big_values of the first granule to 511.
    bytes[4 + 3] |= 0x3F;
    bytes[4 + 4] |= 0xE0;
    const auto stream = parse_stream(bytes);
    EXPECT_EQ(stream.frames.size(), 1u);
    EXPECT_EQ(stream.rejected_frames, 1u);
}

TEST(Bitstream, RandomSideInfoSurvivesStreamRoundTrip) {
    Rng rng(5);
    std::vector<FixtureFrame> frames;
    for (int i = 0; i < 50; ++i) {
        FrameHeader h = mono_header(320);
        h.channel_mode = gen::channel_mode(rng);
        FixtureFrame f;
        f.header = h;
        f.side_info = gen::side_info(rng, h.channel_mode);
        f.side_info.main_data_begin = 0;
        for (auto& gr : f.side_info.granule) {
            for (auto& gc : gr) {
                gc.part2_3_length = 0;
            }
        }
        frames.push_back(f);
    }
    const auto stream = parse_stream(write_fixture(frames));
    ASSERT_EQ(stream.frames.size(), frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) {
        EXPECT_EQ(stream.frames[i].side_info, frames[i].side_info);
        EXPECT_EQ(stream.frames[i].locator.header, frames[i].header);
    }
}

// Frame 2 borrows 5 bytes of frame 1's payload area.
TEST(Bitstream, ReservoirSliceMatchesWrittenBits) {
    FrameHeader h = mono_header(32);  // 104-byte frames, 83 bytes of main data each
    std::vector<FixtureFrame> frames(3, zero_frame(h));
    frames[0].side_info.granule[0][0].part2_3_length = 8 * 20;
    frames[1].side_info.main_data_begin = 5;
    frames[1].side_info.granule[0][0].part2_3_length = 8 * 80;
    frames[1].side_info.granule[1][0].part2_3_length = 7;
    frames[2].side_info.main_data_begin = 0;
    const auto bytes = write_fixture(frames);
    const auto stream = parse_stream(bytes);
    ASSERT_EQ(stream.frames.size(), 3u);
    const auto slices = assemble_main_data(stream.frames, bytes);
    ASSERT_EQ(slices.size(), 3u);
    EXPECT_TRUE(slices[0].complete);
    EXPECT_TRUE(slices[1].complete);
    EXPECT_EQ(slices[1].required_bits, 8u * 80u + 7u);
    // The slice starts 5 bytes before frame 1's own payload.
    const std::size_t payload1 = 104 + 4 + 17;
    ASSERT_GE(slices[1].bytes.size(), 5u + 83u);
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_EQ(slices[1].bytes[k], bytes[payload1 - 5 + k]);
    }
    for (std::size_t k = 0; k < 83; ++k) {
        EXPECT_EQ(slices[1].bytes[5 + k], bytes[payload1 + k]);
    }
}

TEST(Bitstream, ReservoirReachingBeforeStreamIsIncomplete) {
    FrameHeader h = mono_header(32);
    std::vector<FixtureFrame> frames(2, zero_frame(h));
    auto bytes = write_fixture(frames);
    // Rewrite frame 0's main_data_begin to 100 bytes, which has no history.
    bytes[4] = static_cast<std::uint8_t>(100 >> 1);
    bytes[5] = static_cast<std::uint8_t>((bytes[5] & 0x7F) | ((100 & 1) << 7));
    const auto stream = parse_stream(bytes);
    const auto slices = assemble_main_data(stream.frames, bytes);
    EXPECT_FALSE(slices[0].complete);
    EXPECT_TRUE(slices[1].complete);
}

TEST(Bitstream, FixtureRejectsImpossibleReservoir) {
    FrameHeader h = mono_header(32);
    std::vector<FixtureFrame> frames(2, zero_frame(h));
    frames[0].side_info.main_data_begin = 1;  // before the stream start
    EXPECT_THROW(write_fixture(frames), Error);

    std::vector<FixtureFrame> overlap(2, zero_frame(h));
    overlap[0].side_info.granule[0][0].part2_3_length = 8 * 83;
    overlap[1].side_info.main_data_begin = 1;
    EXPECT_THROW(write_fixture(overlap), Error);

    std::vector<FixtureFrame> overflow(1, zero_frame(h));
    overflow[0].side_info.granule[0][0].part2_3_length = 8 * 84;
    EXPECT_THROW(write_fixture(overflow), Error);
}
