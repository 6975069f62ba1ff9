#include "mp3sa/fixture.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mp3sa/error.hpp"
#include "mp3sa/huffman.hpp"

namespace mp3sa {

namespace {

constexpr std::array<int, 5> kScfsiGroupEdges = {0, 6, 11, 16, 21};

void write_scalefactors(BitWriter& w, const GranuleChannel& gc, const ScaleFactors& sf,
                        const std::array<int, 4>& scfsi, int granule_index) {
    const int slen1 = kSlen1[static_cast<std::size_t>(gc.scalefac_compress)];
    const int slen2 = kSlen2[static_cast<std::size_t>(gc.scalefac_compress)];
    auto put = [&](int value, int slen) {
        if (value < 0 || value >= (1 << slen)) {
            throw Error(ErrorCode::kOutOfRange, "scalefactor " + std::to_string(value) + " does not fit " +
                                                    std::to_string(slen) + " bits");
        }
        w.write(static_cast<std::uint32_t>(value), slen);
    };
    if (is_short_block(gc)) {
        int first_short = 0;
        if (gc.mixed_block_flag) {
            for (std::size_t b = 0; b < 8; ++b) {
                put(sf.long_sf[b], slen1);
            }
            first_short = 3;
        }
        for (int b = first_short; b < 12; ++b) {
            for (int value : sf.short_sf[static_cast<std::size_t>(b)]) {
                put(value, b < 6 ? slen1 : slen2);
            }
        }
        return;
    }
    for (std::size_t group = 0; group < 4; ++group) {
        if (granule_index == 1 && scfsi[group] != 0) {
            continue;
        }
        for (int b = kScfsiGroupEdges[group]; b < kScfsiGroupEdges[group + 1]; ++b) {
            put(sf.long_sf[static_cast<std::size_t>(b)], group < 2 ? slen1 : slen2);
        }
    }
}

BitWriter encode_symbols(const GranuleChannel& gc, const GranulePayload& payload, const std::array<int, 4>& scfsi,
                         int granule_index, int sample_rate_hz) {
    BitWriter w;
    write_scalefactors(w, gc, payload.scalefactors, scfsi, granule_index);

    const auto& q = payload.quantized;
    const int big_end = 2 * gc.big_values;
    const auto [r1, r2] = region_boundaries(gc, sample_rate_hz);
    for (int i = 0; i < big_end; i += 2) {
        const int region = i < r1 ? 0 : (i < r2 ? 1 : 2);
        huffman::encode_pair(w, gc.table_select[static_cast<std::size_t>(region)],
                             q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i + 1)]);
    }

    int last = kGranuleSize - 1;
    while (last >= big_end && q[static_cast<std::size_t>(last)] == 0) {
        --last;
    }
    int i = big_end;
    for (; i <= last; i += 4) {
        if (i + 4 > kGranuleSize) {
            throw Error(ErrorCode::kOutOfRange, "nonzero value beyond the last count1 quadruple");
        }
        huffman::Quad quad{};
        for (std::size_t k = 0; k < 4; ++k) {
            const int v = q[static_cast<std::size_t>(i) + k];
            if (std::abs(v) > 1) {
                throw Error(ErrorCode::kOutOfRange, "count1 value " + std::to_string(v) + " at " +
                                                        std::to_string(i + static_cast<int>(k)));
            }
            quad[k] = v;
        }
        huffman::encode_quad(w, gc.count1table_select, quad);
    }
    return w;
}

}  // namespace

int granule_bits(const GranuleChannel& gc, const GranulePayload& payload, const std::array<int, 4>& scfsi,
                 int granule_index, int sample_rate_hz) {
    return static_cast<int>(encode_symbols(gc, payload, scfsi, granule_index, sample_rate_hz).size_bits());
}

void encode_granule(BitWriter& writer, const GranuleChannel& gc, const GranulePayload& payload,
                    const std::array<int, 4>& scfsi, int granule_index, int sample_rate_hz) {
    BitWriter w = encode_symbols(gc, payload, scfsi, granule_index, sample_rate_hz);
    const auto used = w.size_bits();
    if (used > static_cast<std::size_t>(gc.part2_3_length)) {
        throw Error(ErrorCode::kBudgetOverflow, "granule needs " + std::to_string(used) + " bits, part2_3_length is " +
                                                    std::to_string(gc.part2_3_length));
    }
    // 1-bits decode as all-zero quadruples in both count1 tables.
    for (auto k = used; k < static_cast<std::size_t>(gc.part2_3_length); ++k) {
        w.write_bit(true);
    }
    writer.append(w.bytes(), w.size_bits());
}

std::vector<std::uint8_t> write_fixture(std::span<const FixtureFrame> frames) {
    // Main data of every frame, as bits.
    std::vector<BitWriter> main(frames.size());
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto& fr = frames[f];
        const auto& si = fr.side_info;
        if (si.channels != fr.header.channels()) {
            throw Error(ErrorCode::kOutOfRange, "frame " + std::to_string(f) + ": side info channel count differs from header");
        }
        for (int gr = 0; gr < 2; ++gr) {
            for (int ch = 0; ch < si.channels; ++ch) {
                const auto& gc = si.granule[static_cast<std::size_t>(gr)][static_cast<std::size_t>(ch)];
                if (fr.payload) {
                    encode_granule(main[f], gc,
                                   (*fr.payload)[static_cast<std::size_t>(gr)][static_cast<std::size_t>(ch)],
                                   si.scfsi[static_cast<std::size_t>(ch)], gr, fr.header.sample_rate_hz);
                } else {
                    for (int k = 0; k < gc.part2_3_length; ++k) {
                        main[f].write_bit(false);
                    }
                }
            }
        }
    }

    // Payload areas concatenated, then main data placed into them.
    std::vector<std::size_t> area_start(frames.size());
    std::size_t total = 0;
    for (std::size_t f = 0; f < frames.size(); ++f) {
        area_start[f] = total;
        const int capacity = frames[f].header.main_data_capacity();
        if (capacity < 0) {
            throw Error(ErrorCode::kOutOfRange, "frame " + std::to_string(f) + " too short for its side info");
        }
        total += static_cast<std::size_t>(capacity);
    }
    std::vector<std::uint8_t> payload(total, 0);
    std::size_t previous_end = 0;
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto begin = static_cast<std::size_t>(frames[f].side_info.main_data_begin);
        const auto tag = "frame " + std::to_string(f) + ": ";
        if (begin > area_start[f]) {
            throw Error(ErrorCode::kOutOfRange, tag + "main_data_begin reaches before the stream start");
        }
        const std::size_t start = area_start[f] - begin;
        if (start < previous_end) {
            throw Error(ErrorCode::kOutOfRange, tag + "main data overlaps the previous frame's");
        }
        const auto& bytes = main[f].bytes();
        const std::size_t end = start + bytes.size();
        const std::size_t area_end = area_start[f] + static_cast<std::size_t>(frames[f].header.main_data_capacity());
        if (end > area_end) {
            throw Error(ErrorCode::kOutOfRange, tag + "main data runs past the end of the frame");
        }
        std::copy(bytes.begin(), bytes.end(), payload.begin() + static_cast<std::ptrdiff_t>(start));
        previous_end = end;
    }

    std::vector<std::uint8_t> out;
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto& fr = frames[f];
        const auto header = write_header(fr.header);
        out.insert(out.end(), header.begin(), header.end());
        if (fr.header.crc_present) {
            out.push_back(0);
            out.push_back(0);
        }
        const auto si = write_side_info(fr.side_info, fr.header.channel_mode);
        out.insert(out.end(), si.begin(), si.end());
        const auto first = payload.begin() + static_cast<std::ptrdiff_t>(area_start[f]);
        out.insert(out.end(), first, first + fr.header.main_data_capacity());
    }
    return out;
}

}  // namespace mp3sa
