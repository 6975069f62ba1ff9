#include "mp3sa/maindata.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mp3sa/error.hpp"
#include "mp3sa/huffman.hpp"

namespace mp3sa {
namespace {

constexpr std::array<int, 5> kScfsiGroupEdges = {0, 6, 11, 16, 21};

}  // namespace

ScaleFactors decode_scalefactors(const GranuleChannel& gc, BitReader& reader,
                                 const std::array<int, 4>& scfsi, int granule_index,
                                 const ScaleFactors* previous) {
    ScaleFactors sf;
    const int slen1 = kSlen1[static_cast<std::size_t>(gc.scalefac_compress)];
    const int slen2 = kSlen2[static_cast<std::size_t>(gc.scalefac_compress)];
    const std::size_t start = reader.position();

    if (is_short_block(gc)) {
        int first_short = 0;
        if (gc.mixed_block_flag) {
            for (std::size_t b = 0; b < 8; ++b) {
                sf.long_sf[b] = static_cast<int>(reader.read(slen1));
            }
            first_short = 3;
        }
        for (int b = first_short; b < 12; ++b) {
            const int slen = b < 6 ? slen1 : slen2;
            for (auto& value : sf.short_sf[static_cast<std::size_t>(b)]) {
                value = static_cast<int>(reader.read(slen));
            }
        }
    } else {
        for (std::size_t group = 0; group < 4; ++group) {
            const int slen = group < 2 ? slen1 : slen2;
            const bool reuse = granule_index == 1 && scfsi[group] != 0;
            if (reuse && previous == nullptr) {
                throw Error(ErrorCode::kInvalidArgument, "scfsi reuse without granule 0 scalefactors");
            }
            for (int b = kScfsiGroupEdges[group]; b < kScfsiGroupEdges[group + 1]; ++b) {
                const auto band = static_cast<std::size_t>(b);
                sf.long_sf[band] = reuse ? previous->long_sf[band] : static_cast<int>(reader.read(slen));
            }
        }
    }
    sf.part2_bits = static_cast<int>(reader.position() - start);
    return sf;
}

int scalefactor_bits(const GranuleChannel& gc, const std::array<int, 4>& scfsi, int granule_index) {
    const int slen1 = kSlen1[static_cast<std::size_t>(gc.scalefac_compress)];
    const int slen2 = kSlen2[static_cast<std::size_t>(gc.scalefac_compress)];
    if (is_short_block(gc)) {
        return gc.mixed_block_flag ? 8 * slen1 + 9 * slen1 + 18 * slen2 : 18 * slen1 + 18 * slen2;
    }
    int bits = 0;
    for (std::size_t group = 0; group < 4; ++group) {
        if (granule_index == 1 && scfsi[group] != 0) {
            continue;
        }
        bits += (kScfsiGroupEdges[group + 1] - kScfsiGroupEdges[group]) * (group < 2 ? slen1 : slen2);
    }
    return bits;
}

std::array<int, 2> region_boundaries(const GranuleChannel& gc, int sample_rate_hz) {
    const int end = 2 * gc.big_values;
    int r1 = 0;
    int r2 = 0;
    if (gc.window_switching) {
        r1 = 36;
        r2 = kGranuleSize;
    } else {
        const auto& edges = long_band_edges(sample_rate_hz);
        r1 = edges[static_cast<std::size_t>(std::min(gc.region0_count + 1, 22))];
        r2 = edges[static_cast<std::size_t>(std::min(gc.region0_count + gc.region1_count + 2, 22))];
    }
    return {std::min(r1, end), std::min(r2, end)};
}

GranuleSpectrum decode_spectrum(const GranuleChannel& gc, BitReader& reader, int part2_bits,
                                int sample_rate_hz) {
    const int budget = gc.part2_3_length - part2_bits;
    if (budget < 0) {
        throw Error(ErrorCode::kMalformedCodeword, "scalefactors exceed part2_3_length");
    }
    const std::size_t end = reader.position() + static_cast<std::size_t>(budget);
    if (end > reader.size_bits()) {
        throw Error(ErrorCode::kTruncated, "granule runs past main data");
    }

    GranuleSpectrum spec;
    const int big_end = 2 * gc.big_values;
    const auto [r1, r2] = region_boundaries(gc, sample_rate_hz);
    int i = 0;
    for (; i < big_end; i += 2) {
        const int region = i < r1 ? 0 : (i < r2 ? 1 : 2);
        const auto pair = huffman::decode_pair(reader, gc.table_select[static_cast<std::size_t>(region)]);
        if (reader.position() > end) {
            throw Error(ErrorCode::kMalformedCodeword, "big_values overrun the bit budget");
        }
        spec.quantized[static_cast<std::size_t>(i)] = pair.x;
        spec.quantized[static_cast<std::size_t>(i + 1)] = pair.y;
    }

    while (i + 4 <= kGranuleSize && reader.position() < end) {
        const std::size_t before = reader.position();
        huffman::Quad quad{};
        try {
            quad = huffman::decode_quad(reader, gc.count1table_select);
        } catch (const Error&) {
            reader.seek(before);
            break;
        }
        if (reader.position() > end) {
            reader.seek(before);
            break;
        }
        std::copy(quad.begin(), quad.end(), spec.quantized.begin() + i);
        i += 4;
    }

    spec.regions = {big_end, i, i};
    reader.seek(end);
    return spec;
}

void dequantize(GranuleSpectrum& spectrum, const GranuleChannel& gc, const ScaleFactors& sf,
                int sample_rate_hz) {
    const double multiplier = gc.scalefac_scale ? 1.0 : 0.5;
    const double gain = 0.25 * (gc.global_gain - 210);
    auto set = [&](int index, double exponent) {
        const auto k = static_cast<std::size_t>(index);
        const int q = spectrum.quantized[k];
        spectrum.magnitudes[k] =
            q == 0 ? 0.0 : std::pow(static_cast<double>(std::abs(q)), 4.0 / 3.0) * std::exp2(exponent);
    };

    const auto& long_edges = long_band_edges(sample_rate_hz);
    auto long_band = [&](std::size_t b) {
        const int scale = (b < 21 ? sf.long_sf[b] : 0) + (gc.preflag ? kPretab[b] : 0);
        for (int k = long_edges[b]; k < long_edges[b + 1]; ++k) {
            set(k, gain - multiplier * scale);
        }
    };

    if (!is_short_block(gc)) {
        for (std::size_t b = 0; b < 22; ++b) {
            long_band(b);
        }
        return;
    }

    const auto& short_edges = short_band_edges(sample_rate_hz);
    std::size_t first_short = 0;
    if (gc.mixed_block_flag) {
        for (std::size_t b = 0; b < 8; ++b) {
            long_band(b);
        }
        first_short = 3;
    }
    for (std::size_t b = first_short; b < 13; ++b) {
        const int width = short_edges[b + 1] - short_edges[b];
        for (std::size_t w = 0; w < 3; ++w) {
            const int scale = b < 12 ? sf.short_sf[b][w] : 0;
            const double exponent = gain - 2.0 * gc.subblock_gain[w] - multiplier * scale;
            const int base = 3 * short_edges[b] + static_cast<int>(w) * width;
            for (int k = 0; k < width; ++k) {
                set(base + k, exponent);
            }
        }
    }
}

FrameSpectrum decode_frame(const MainDataSlice& slice, const SideInfo& si, int sample_rate_hz) {
    if (!slice.complete) {
        throw Error(ErrorCode::kTruncated, "main data of frame " + std::to_string(slice.frame_index) +
                                               " is incomplete");
    }
    FrameSpectrum out;
    out.channels = si.channels;
    BitReader reader(slice.bytes);
    std::size_t start = 0;
    for (std::size_t gr = 0; gr < 2; ++gr) {
        for (std::size_t ch = 0; ch < static_cast<std::size_t>(si.channels); ++ch) {
            const auto& gc = si.granule[gr][ch];
            reader.seek(start);
            const ScaleFactors* previous = gr == 1 ? &out.scalefactors[0][ch] : nullptr;
            out.scalefactors[gr][ch] =
                decode_scalefactors(gc, reader, si.scfsi[ch], static_cast<int>(gr), previous);
            auto& spectrum = out.granule[gr][ch];
            spectrum = decode_spectrum(gc, reader, out.scalefactors[gr][ch].part2_bits, sample_rate_hz);
            dequantize(spectrum, gc, out.scalefactors[gr][ch], sample_rate_hz);
            start += static_cast<std::size_t>(gc.part2_3_length);
        }
    }
    return out;
}

}  // namespace mp3sa
