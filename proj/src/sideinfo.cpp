#include "mp3sa/sideinfo.hpp"

#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {

int implied_region0_count(int block_type, bool mixed_block_flag) {
    return (block_type == 2 && !mixed_block_flag) ? 8 : 7;
}

int SideInfo::scfsi_sum(int channel) const {
    const auto& flags = scfsi[static_cast<std::size_t>(channel)];
    return flags[0] + flags[1] + flags[2] + flags[3];
}

namespace {

int read_int(BitReader& r, int n) { return static_cast<int>(r.read(n)); }

GranuleChannel parse_granule(BitReader& r) {
    GranuleChannel g;
    g.part2_3_length = read_int(r, 12);
    g.big_values = read_int(r, 9);
    if (g.big_values > 288) {
        throw Error(ErrorCode::kInvalidField, "big_values " + std::to_string(g.big_values));
    }
    g.global_gain = read_int(r, 8);
    g.scalefac_compress = read_int(r, 4);
    g.window_switching = r.read_bit();
    if (g.window_switching) {
        g.block_type = read_int(r, 2);
        if (g.block_type == 0) {
            throw Error(ErrorCode::kInvalidField, "window switching with block_type 0");
        }
        g.mixed_block_flag = r.read_bit();
        g.table_select[0] = read_int(r, 5);
        g.table_select[1] = read_int(r, 5);
        for (auto& gain : g.subblock_gain) {
            gain = read_int(r, 3);
        }
        g.region0_count = implied_region0_count(g.block_type, g.mixed_block_flag);
        g.region1_count = implied_region1_count(g.block_type, g.mixed_block_flag);
    } else {
        for (auto& table : g.table_select) {
            table = read_int(r, 5);
        }
        g.region0_count = read_int(r, 4);
        g.region1_count = read_int(r, 3);
    }
    g.preflag = read_int(r, 1);
    g.scalefac_scale = read_int(r, 1);
    g.count1table_select = read_int(r, 1);
    return g;
}

void check(int value, int lo, int hi, const char* field) {
    if (value < lo || value > hi) {
        throw Error(ErrorCode::kOutOfRange, std::string(field) + " = " + std::to_string(value) +
                                                " outside " + std::to_string(lo) + ".." +
                                                std::to_string(hi));
    }
}

void write_granule(BitWriter& w, const GranuleChannel& g) {
    check(g.part2_3_length, 0, 4095, "part2_3_length");
    check(g.big_values, 0, 288, "big_values");
    check(g.global_gain, 0, 255, "global_gain");
    check(g.scalefac_compress, 0, 15, "scalefac_compress");
    check(g.preflag, 0, 1, "preflag");
    check(g.scalefac_scale, 0, 1, "scalefac_scale");
    check(g.count1table_select, 0, 1, "count1table_select");
    for (int t : g.table_select) {
        check(t, 0, 31, "table_select");
    }
    for (int s : g.subblock_gain) {
        check(s, 0, 7, "subblock_gain");
    }

    w.write(static_cast<std::uint32_t>(g.part2_3_length), 12);
    w.write(static_cast<std::uint32_t>(g.big_values), 9);
    w.write(static_cast<std::uint32_t>(g.global_gain), 8);
    w.write(static_cast<std::uint32_t>(g.scalefac_compress), 4);
    w.write_bit(g.window_switching);
    if (g.window_switching) {
        check(g.block_type, 1, 3, "block_type");
        check(g.table_select[2], 0, 0, "table_select[2] (window switching)");
        check(g.region0_count, implied_region0_count(g.block_type, g.mixed_block_flag),
              implied_region0_count(g.block_type, g.mixed_block_flag),
              "region0_count (window switching)");
        check(g.region1_count, implied_region1_count(g.block_type, g.mixed_block_flag),
              implied_region1_count(g.block_type, g.mixed_block_flag),
              "region1_count (window switching)");
        w.write(static_cast<std::uint32_t>(g.block_type), 2);
        w.write_bit(g.mixed_block_flag);
        w.write(static_cast<std::uint32_t>(g.table_select[0]), 5);
        w.write(static_cast<std::uint32_t>(g.table_select[1]), 5);
        for (int s : g.subblock_gain) {
            w.write(static_cast<std::uint32_t>(s), 3);
        }
    } else {
        check(g.block_type, 0, 0, "block_type (no window switching)");
        check(g.mixed_block_flag ? 1 : 0, 0, 0, "mixed_block_flag (no window switching)");
        for (int s : g.subblock_gain) {
            check(s, 0, 0, "subblock_gain (no window switching)");
        }
        check(g.region0_count, 0, 15, "region0_count");
        check(g.region1_count, 0, 7, "region1_count");
        for (int t : g.table_select) {
            w.write(static_cast<std::uint32_t>(t), 5);
        }
        w.write(static_cast<std::uint32_t>(g.region0_count), 4);
        w.write(static_cast<std::uint32_t>(g.region1_count), 3);
    }
    w.write(static_cast<std::uint32_t>(g.preflag), 1);
    w.write(static_cast<std::uint32_t>(g.scalefac_scale), 1);
    w.write(static_cast<std::uint32_t>(g.count1table_select), 1);
}

}  // namespace

SideInfo parse_side_info(BitReader& r, ChannelMode mode) {
    const int channels = channel_count(mode);
    const std::size_t needed = channels == 1 ? kMonoSideInfoBits : kStereoSideInfoBits;
    if (r.remaining() < needed) {
        throw Error(ErrorCode::kTruncated, "side info needs " + std::to_string(needed / 8) +
                                               " bytes, " + std::to_string(r.remaining() / 8) +
                                               " available");
    }
    SideInfo si;
    si.channels = channels;
    si.main_data_begin = read_int(r, 9);
    si.private_bits = read_int(r, channels == 1 ? 5 : 3);
    for (int ch = 0; ch < channels; ++ch) {
        for (auto& flag : si.scfsi[static_cast<std::size_t>(ch)]) {
            flag = read_int(r, 1);
        }
    }
    for (std::size_t gr = 0; gr < 2; ++gr) {
        for (std::size_t ch = 0; ch < static_cast<std::size_t>(channels); ++ch) {
            si.granule[gr][ch] = parse_granule(r);
        }
    }
    return si;
}

SideInfo parse_side_info(std::span<const std::uint8_t> bytes, ChannelMode mode) {
    BitReader reader(bytes);
    return parse_side_info(reader, mode);
}

void write_side_info(BitWriter& w, const SideInfo& si, ChannelMode mode) {
    const int channels = channel_count(mode);
    if (si.channels != channels) {
        throw Error(ErrorCode::kOutOfRange, "side info has " + std::to_string(si.channels) +
                                                " channels, mode needs " +
                                                std::to_string(channels));
    }
    check(si.main_data_begin, 0, 511, "main_data_begin");
    check(si.private_bits, 0, channels == 1 ? 31 : 7, "private_bits");
    w.write(static_cast<std::uint32_t>(si.main_data_begin), 9);
    w.write(static_cast<std::uint32_t>(si.private_bits), channels == 1 ? 5 : 3);
    for (std::size_t ch = 0; ch < 2; ++ch) {
        for (int flag : si.scfsi[ch]) {
            if (ch < static_cast<std::size_t>(channels)) {
                check(flag, 0, 1, "scfsi");
                w.write(static_cast<std::uint32_t>(flag), 1);
            } else {
                check(flag, 0, 0, "scfsi of absent channel");
            }
        }
    }
    for (std::size_t gr = 0; gr < 2; ++gr) {
        for (std::size_t ch = 0; ch < 2; ++ch) {
            if (ch < static_cast<std::size_t>(channels)) {
                write_granule(w, si.granule[gr][ch]);
            } else if (!(si.granule[gr][ch] == GranuleChannel{})) {
                throw Error(ErrorCode::kOutOfRange, "granule data for absent channel");
            }
        }
    }
}

std::vector<std::uint8_t> write_side_info(const SideInfo& si, ChannelMode mode) {
    BitWriter writer;
    write_side_info(writer, si, mode);
    return writer.take();
}

}  // namespace mp3sa
