#include <gtest/gtest.h>

#include <cmath>

#include "mp3sa/bitstream.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/fixture.hpp"
#include "mp3sa/maindata.hpp"
#include "../support/generators.hpp"

using namespace mp3sa;

namespace {

// Band edges copied from the standard's tables for 44.1 kHz.
constexpr int kLong441[] = {0,  4,  8,  12, 16,  20,  24,  30,  36,  44,  52, 62,
                            74, 90, 110, 134, 162, 196, 238, 288, 342, 418, 576};
constexpr int kShort441[] = {0, 4, 8, 12, 16, 22, 30, 40, 52, 66, 84, 106, 136, 192};
constexpr int kPretabRef[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 3, 3, 3, 2, 0};

FrameHeader header(ChannelMode mode, int kbps = 320) {
    FrameHeader h;
    h.bitrate_kbps = kbps;
    h.sample_rate_hz = 44100;
    h.channel_mode = mode;
    return h;
}

// Random frames with decodable payloads, reservoir offsets included.
std::vector<FixtureFrame> random_frames(Rng& rng, int count) {
    std::vector<FixtureFrame> frames;
    int carried = 0;  // unused bytes of the previous frame
    for (int f = 0; f < count; ++f) {
        FixtureFrame fr;
        fr.header = header(rng.below(2) ? ChannelMode::kMono : ChannelMode::kJointStereo);
        fr.side_info = gen::side_info(rng, fr.header.channel_mode);
        FramePayload payload{};
        int total = 0;
        for (int gr = 0; gr < 2; ++gr) {
            for (int ch = 0; ch < fr.side_info.channels; ++ch) {
                auto& gc = fr.side_info.granule[static_cast<std::size_t>(gr)][static_cast<std::size_t>(ch)];
                auto& pl = payload[static_cast<std::size_t>(gr)][static_cast<std::size_t>(ch)];
                pl = gen::payload(rng, gc, 44100, 60);
                if (gr == 1 && !is_short_block(gc)) {
                    const auto& prev = payload[0][static_cast<std::size_t>(ch)].scalefactors.long_sf;
                    constexpr int edges[] = {0, 6, 11, 16, 21};
                    for (std::size_t g = 0; g < 4; ++g) {
                        if (fr.side_info.scfsi[static_cast<std::size_t>(ch)][g]) {
                            for (int b = edges[g]; b < edges[g + 1]; ++b) {
                                pl.scalefactors.long_sf[static_cast<std::size_t>(b)] = prev[static_cast<std::size_t>(b)];
                            }
                        }
                    }
                }
                const int need = granule_bits(gc, pl, fr.side_info.scfsi[static_cast<std::size_t>(ch)], gr, 44100);
                gc.part2_3_length = need + gen::pick(rng, 0, 20);
                total += gc.part2_3_length;
            }
        }
        fr.payload = payload;
        const int bytes = (total + 7) / 8;
        const int capacity = fr.header.main_data_capacity();
        fr.side_info.main_data_begin = std::min({carried, 511, std::max(0, capacity - bytes)});
        carried = capacity - (bytes - fr.side_info.main_data_begin);
        frames.push_back(fr);
    }
    return frames;
}

}  // namespace

TEST(MainData, BandTablesMatchStandard) {
    for (std::size_t i = 0; i < 23; ++i) {
        EXPECT_EQ(long_band_edges(44100)[i], kLong441[i]);
    }
    for (std::size_t i = 0; i < 14; ++i) {
        EXPECT_EQ(short_band_edges(44100)[i], kShort441[i]);
    }
    for (int sr : {44100, 48000, 32000}) {
        EXPECT_EQ(long_band_edges(sr)[22], 576);
        EXPECT_EQ(short_band_edges(sr)[13], 192);
    }
}

TEST(MainData, ScalefactorBitCounts) {
    GranuleChannel gc;
    gc.scalefac_compress = 15;  // slen 4, 3
    EXPECT_EQ(scalefactor_bits(gc, {0, 0, 0, 0}, 0), 11 * 4 + 10 * 3);
    EXPECT_EQ(scalefactor_bits(gc, {1, 0, 0, 1}, 1), 5 * 4 + 5 * 3);
    gc.window_switching = true;
    gc.block_type = 2;
    EXPECT_EQ(scalefactor_bits(gc, {1, 1, 1, 1}, 1), 18 * 4 + 18 * 3);
    gc.mixed_block_flag = true;
    EXPECT_EQ(scalefactor_bits(gc, {0, 0, 0, 0}, 0), 17 * 4 + 18 * 3);
}

TEST(MainData, RegionBoundaries) {
    GranuleChannel gc;
    gc.big_values = 288;
    gc.region0_count = 7;
    gc.region1_count = 7;
    EXPECT_EQ(region_boundaries(gc, 44100), (std::array<int, 2>{36, 162}));
    gc.big_values = 20;
    EXPECT_EQ(region_boundaries(gc, 44100), (std::array<int, 2>{36, 40}));
    gc.big_values = 288;
    gc.region0_count = 15;
    gc.region1_count = 7;  // sum past the last band clamps to 576
    EXPECT_EQ(region_boundaries(gc, 44100)[1], 576);
    gc.window_switching = true;
    gc.block_type = 2;
    EXPECT_EQ(region_boundaries(gc, 44100), (std::array<int, 2>{36, 576}));
}

TEST(MainData, FixtureRoundTripRecoversSpectrum) {
    Rng rng(314);
    for (int trial = 0; trial < 30; ++trial) {
        const auto frames = random_frames(rng, 6);
        const auto bytes = write_fixture(frames);
        const auto stream = parse_stream(bytes);
        ASSERT_EQ(stream.frames.size(), frames.size());
        const auto slices = assemble_main_data(stream.frames, bytes);
        for (std::size_t f = 0; f < frames.size(); ++f) {
            ASSERT_EQ(stream.frames[f].side_info, frames[f].side_info);
            ASSERT_TRUE(slices[f].complete) << "frame " << f;
            const auto spec = decode_frame(slices[f], stream.frames[f].side_info, 44100);
            for (std::size_t gr = 0; gr < 2; ++gr) {
                for (std::size_t ch = 0; ch < static_cast<std::size_t>(spec.channels); ++ch) {
                    const auto& expected = (*frames[f].payload)[gr][ch];
                    ASSERT_EQ(spec.granule[gr][ch].quantized, expected.quantized)
                        << "trial " << trial << " frame " << f << " gr " << gr << " ch " << ch;
                    auto sf = spec.scalefactors[gr][ch];
                    sf.part2_bits = 0;
                    ASSERT_EQ(sf, expected.scalefactors);
                }
            }
        }
    }
}

TEST(MainData, DequantizeLongBlockMatchesFormula) {
    GranuleChannel gc;
    gc.global_gain = 190;
    gc.preflag = 1;
    gc.scalefac_scale = 0;
    GranuleSpectrum spec;
    ScaleFactors sf;
    for (std::size_t b = 0; b < 21; ++b) {
        sf.long_sf[b] = static_cast<int>(b % 4);
    }
    for (std::size_t k = 0; k < 576; ++k) {
        spec.quantized[k] = static_cast<int>(k % 7) - 3;
    }
    dequantize(spec, gc, sf, 44100);
    for (int b = 0; b < 22; ++b) {
        const int scale = (b < 21 ? b % 4 : 0) + kPretabRef[b];
        for (int k = kLong441[b]; k < kLong441[b + 1]; ++k) {
            const double q = std::abs(static_cast<int>(k % 7) - 3);
            const double expected = std::pow(q, 4.0 / 3.0) * std::pow(2.0, 0.25 * (190 - 210) - 0.5 * scale);
            ASSERT_NEAR(spec.magnitudes[static_cast<std::size_t>(k)], expected, 1e-12 * (1 + expected)) << k;
        }
    }
}

TEST(MainData, DequantizeShortBlockWindowLayout) {
    GranuleChannel gc;
    gc.window_switching = true;
    gc.block_type = 2;
    gc.global_gain = 210;
    gc.scalefac_scale = 1;
    gc.subblock_gain = {0, 1, 2};
    GranuleSpectrum spec;
    spec.quantized.fill(1);
    ScaleFactors sf;
    sf.short_sf[4] = {1, 0, 3};
    dequantize(spec, gc, sf, 44100);
    // Band 4 spans 16..22 in each window; window w starts at 3*16 + 6w.
    EXPECT_DOUBLE_EQ(spec.magnitudes[48], std::pow(2.0, -1.0));
    EXPECT_DOUBLE_EQ(spec.magnitudes[54], std::pow(2.0, -2.0));
    EXPECT_DOUBLE_EQ(spec.magnitudes[60], std::pow(2.0, -4.0 - 3.0));
}

TEST(MainData, BudgetOverflowDetected) {
    GranuleChannel gc;
    gc.big_values = 10;
    gc.table_select = {15, 15, 15};
    GranulePayload p;
    for (std::size_t k = 0; k < 20; ++k) {
        p.quantized[k] = 7;
    }
    gc.part2_3_length = granule_bits(gc, p, {0, 0, 0, 0}, 0, 44100) - 1;
    BitWriter w;
    try {
        encode_granule(w, gc, p, {0, 0, 0, 0}, 0, 44100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kBudgetOverflow);
    }
    // A value too large for count1 is refused as well.
    GranulePayload bad;
    bad.quantized[100] = 2;
    gc.part2_3_length = 4000;
    EXPECT_THROW(encode_granule(w, gc, bad, {0, 0, 0, 0}, 0, 44100), Error);
}

TEST(MainData, MalformedBigValuesMakeFrameUndecodable) {
    GranuleChannel gc;
    gc.big_values = 100;
    gc.table_select = {1, 1, 1};
    gc.part2_3_length = 20;  // far too few bits for 100 pairs
    const std::vector<std::uint8_t> bytes(8, 0x00);
    BitReader r(bytes);
    EXPECT_THROW(decode_spectrum(gc, r, 0, 44100), Error);
}
