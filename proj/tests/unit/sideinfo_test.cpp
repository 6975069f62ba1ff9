#include <gtest/gtest.h>

#include "mp3sa/error.hpp"
#include "mp3sa/sideinfo.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace mp3sa;

TEST(SideInfo, SizesMatchLayout) {
    SideInfo mono;
    EXPECT_EQ(write_side_info(mono, ChannelMode::kMono).size(), 17u);
    SideInfo stereo;
    stereo.channels = 2;
    EXPECT_EQ(write_side_info(stereo, ChannelMode::kStereo).size(), 32u);
}

TEST(SideInfo, ZeroBytesParseToZero) {
    const std::vector<std::uint8_t> zeros(17, 0);
    const SideInfo si = parse_side_info(zeros, ChannelMode::kMono);
    SideInfo expected;
    EXPECT_EQ(si, expected);
}

// Hand-placed fields checked against the oracle's bit positions.
TEST(SideInfo, MonoFieldPositions) {
    SideInfo si;
    si.main_data_begin = 0x1A5;
    si.private_bits = 0x11;
    si.scfsi[0] = {1, 0, 1, 1};
    auto& g = si.granule[0][0];
    g.part2_3_length = 0xABC;
    g.big_values = 0x101;
    g.global_gain = 0xD2;
    g.scalefac_compress = 9;
    g.table_select = {17, 3, 31};
    g.region0_count = 11;
    g.region1_count = 5;
    g.preflag = 1;
    g.count1table_select = 1;
    const auto bytes = write_side_info(si, ChannelMode::kMono);
    const std::string b = oracle::bit_string(bytes);
    EXPECT_EQ(oracle::bits_value(b, 0, 9), 0x1A5u);
    EXPECT_EQ(oracle::bits_value(b, 9, 5), 0x11u);
    EXPECT_EQ(b.substr(14, 4), "1011");
    EXPECT_EQ(oracle::bits_value(b, 18, 12), 0xABCu);
    EXPECT_EQ(oracle::bits_value(b, 30, 9), 0x101u);
    EXPECT_EQ(oracle::bits_value(b, 39, 8), 0xD2u);
    EXPECT_EQ(oracle::bits_value(b, 47, 4), 9u);
    EXPECT_EQ(b[51], '0');
    EXPECT_EQ(oracle::bits_value(b, 52, 5), 17u);
    EXPECT_EQ(oracle::bits_value(b, 57, 5), 3u);
    EXPECT_EQ(oracle::bits_value(b, 62, 5), 31u);
    EXPECT_EQ(oracle::bits_value(b, 67, 4), 11u);
    EXPECT_EQ(oracle::bits_value(b, 71, 3), 5u);
    EXPECT_EQ(b.substr(74, 3), "101");
    EXPECT_EQ(parse_side_info(bytes, ChannelMode::kMono), si);
}

TEST(SideInfo, WindowSwitchingImpliesRegions) {
    SideInfo si;
    auto& g = si.granule[1][0];
    g.window_switching = true;
    g.block_type = 2;
    g.table_select = {5, 7, 0};
    g.subblock_gain = {1, 2, 3};
    g.region0_count = 8;
    g.region1_count = 12;
    const auto parsed = parse_side_info(write_side_info(si, ChannelMode::kMono), ChannelMode::kMono);
    EXPECT_EQ(parsed, si);
    EXPECT_EQ(implied_region0_count(2, true), 7);
    EXPECT_EQ(implied_region0_count(1, false), 7);
    EXPECT_EQ(implied_region0_count(3, false), 7);
}

TEST(SideInfo, WriterRejectsUnrepresentableFields) {
    SideInfo si;
    si.granule[0][0].window_switching = true;
    si.granule[0][0].block_type = 2;
    si.granule[0][0].region0_count = 5;  // not the implied 8
    EXPECT_THROW(write_side_info(si, ChannelMode::kMono), Error);

    SideInfo big;
    big.granule[0][0].big_values = 289;
    EXPECT_THROW(write_side_info(big, ChannelMode::kMono), Error);

    SideInfo mismatch;
    EXPECT_THROW(write_side_info(mismatch, ChannelMode::kStereo), Error);

    SideInfo ws0;
    ws0.granule[0][0].window_switching = true;  // block_type 0 is forbidden
    EXPECT_THROW(write_side_info(ws0, ChannelMode::kMono), Error);
}

TEST(SideInfo, ParserRejectsInvalidFields) {
    BitWriter w;
    w.write(0, 18);        // main_data_begin, private bits, scfsi
    w.write(0, 12);
    w.write(289, 9);       // big_values too large
    w.align();
    std::vector<std::uint8_t> bytes = w.take();
    bytes.resize(17, 0);
    try {
        parse_side_info(bytes, ChannelMode::kMono);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidField);
    }
    const std::vector<std::uint8_t> truncated(10, 0);
    EXPECT_THROW(parse_side_info(truncated, ChannelMode::kMono), Error);
}

TEST(SideInfo, RandomRoundTrip) {
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const auto mode = gen::channel_mode(rng);
        const auto si = gen::side_info(rng, mode);
        const auto bytes = write_side_info(si, mode);
        ASSERT_EQ(bytes.size(), channel_count(mode) == 1 ? 17u : 32u);
        ASSERT_EQ(parse_side_info(bytes, mode), si) << "trial " << i;
    }
}
