#include <gtest/gtest.h>

#include <algorithm>

#include "mp3sa/signature.hpp"

using namespace mp3sa;

namespace {

// A stream that trips no rule: nonzero, varying, long blocks, no scfsi.
std::vector<SideInfo> neutral_stream() {
    std::vector<SideInfo> frames(5);
    for (std::size_t f = 0; f < frames.size(); ++f) {
        for (std::size_t gr = 0; gr < 2; ++gr) {
            auto& g = frames[f].granule[gr][0];
            g.global_gain = 150 + static_cast<int>(f);
            g.part2_3_length = 500;
            g.big_values = 100;
            g.region0_count = 10;
            g.region1_count = 4;
        }
    }
    return frames;
}

bool fired(const std::vector<SideInfo>& frames, const std::string& rule) {
    const auto hints = first_frame_signature(frames);
    return std::any_of(hints.begin(), hints.end(), [&](const EncoderHint& h) { return h.rule == rule; });
}

bool names_encoder(const std::vector<SideInfo>& frames, const std::string& encoder) {
    const auto hints = first_frame_signature(frames);
    return std::any_of(hints.begin(), hints.end(), [&](const EncoderHint& h) { return h.encoder == encoder; });
}

}  // namespace

TEST(Signature, NeutralStreamHasNoHints) {
    EXPECT_TRUE(first_frame_signature(neutral_stream()).empty());
    EXPECT_TRUE(first_frame_signature(std::vector<SideInfo>{}).empty());
}

TEST(Signature, LameAllZeroFirstFrame) {
    auto f = neutral_stream();
    f[0] = SideInfo{};
    EXPECT_TRUE(names_encoder(f, "lame"));
    EXPECT_TRUE(fired(f, "lame.first_frame_zero"));
    f[0].granule[1][0].big_values = 1;
    EXPECT_FALSE(fired(f, "lame.first_frame_zero"));
}

TEST(Signature, XingScfsi) {
    auto f = neutral_stream();
    f[0].scfsi[0][2] = 1;
    EXPECT_TRUE(names_encoder(f, "xing"));
    f[1].scfsi[0][2] = 1;
    f[0].scfsi[0][2] = 0;
    EXPECT_FALSE(names_encoder(f, "xing"));
}

TEST(Signature, GlobalGainPatterns) {
    auto f = neutral_stream();
    f[0].granule[0][0].global_gain = 210;
    EXPECT_TRUE(fired(f, "gogo.gain210_granule0"));
    EXPECT_FALSE(fired(f, "plugger.gain210_both_granules"));
    f[0].granule[1][0].global_gain = 210;
    EXPECT_TRUE(fired(f, "plugger.gain210_both_granules"));
}

TEST(Signature, RegionCountPatterns) {
    auto f = neutral_stream();
    f[0].granule[0][0].region0_count = 8;
    f[0].granule[1][0].region0_count = 7;
    EXPECT_TRUE(fired(f, "plugger.region0_8_7"));
    EXPECT_FALSE(fired(f, "8hz.region0_7_8"));
    std::swap(f[0].granule[0][0].region0_count, f[0].granule[1][0].region0_count);
    EXPECT_TRUE(fired(f, "8hz.region0_7_8"));
    EXPECT_FALSE(fired(f, "plugger.region0_8_7"));
}

TEST(Signature, BlockTypePatterns) {
    auto f = neutral_stream();
    auto set = [&](int b0, int b1) {
        for (std::size_t gr = 0; gr < 2; ++gr) {
            auto& g = f[0].granule[gr][0];
            g.window_switching = true;
            g.block_type = gr == 0 ? b0 : b1;
        }
    };
    set(3, 2);
    EXPECT_TRUE(fired(f, "plugger.block_end_short"));
    EXPECT_FALSE(fired(f, "8hz.block_start_end"));
    set(1, 3);
    EXPECT_TRUE(fired(f, "8hz.block_start_end"));
    EXPECT_FALSE(fired(f, "plugger.block_end_short"));
}

TEST(Signature, PartTwoThreeLengthPatterns) {
    auto f = neutral_stream();
    f[0].granule[0][0].part2_3_length = 0;
    EXPECT_TRUE(fired(f, "gogo.p23l_zero_granule0"));
    EXPECT_FALSE(fired(f, "lame_plugger.p23l_zero_both_granules"));
    f[0].granule[1][0].part2_3_length = 0;
    EXPECT_TRUE(fired(f, "lame_plugger.p23l_zero_both_granules"));
    EXPECT_TRUE(names_encoder(f, "plugger"));
}

TEST(Signature, ConstantFirstFourFrames) {
    auto f = neutral_stream();
    f[1] = f[0];
    f[2] = f[0];
    f[3] = f[0];
    EXPECT_TRUE(fired(f, "plugger.constant_first_four_frames"));
    f[3].granule[0][0].global_gain += 1;
    EXPECT_FALSE(fired(f, "plugger.constant_first_four_frames"));
    f.resize(3);
    f[1] = f[0];
    f[2] = f[0];
    EXPECT_FALSE(fired(f, "plugger.constant_first_four_frames"));
}

TEST(Signature, EveryRuleCovered) {
    EXPECT_EQ(signature_rules().size(), 11u);
}
