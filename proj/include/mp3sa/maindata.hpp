#pragma once

#include <array>
#include <cstddef>

#include "mp3sa/bands.hpp"
#include "mp3sa/bitreader.hpp"
#include "mp3sa/bitstream.hpp"
#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

struct ScaleFactors {
    std::array<int, 21> long_sf{};                  // bands 0..20
    std::array<std::array<int, 3>, 12> short_sf{};  // [band][window]
    int part2_bits = 0;

    bool operator==(const ScaleFactors&) const = default;
};

/// Short-block granule (block_type 2 under window switching).
inline bool is_short_block(const GranuleChannel& gc) {
    return gc.window_switching && gc.block_type == 2;
}

/// Decodes the scalefactors of one granule/channel. For granule 1 of a
/// long-block granule, groups whose scfsi flag is set are copied from
/// `previous` and consume no bits; scfsi is ignored for short blocks.
ScaleFactors decode_scalefactors(const GranuleChannel& gc, BitReader& reader,
                                 const std::array<int, 4>& scfsi, int granule_index,
                                 const ScaleFactors* previous);

/// Bits decode_scalefactors would consume.
int scalefactor_bits(const GranuleChannel& gc, const std::array<int, 4>& scfsi, int granule_index);

struct SpectrumRegions {
    int big_values_end = 0;
    int count1_end = 0;
    int rzero_start = 0;
};

struct GranuleSpectrum {
    std::array<int, kGranuleSize> quantized{};
    std::array<double, kGranuleSize> magnitudes{};
    SpectrumRegions regions;
};

/// Start of region1 and region2 for a granule (clamped to 2 * big_values).
std::array<int, 2> region_boundaries(const GranuleChannel& gc, int sample_rate_hz);

/// Decodes the Huffman part of a granule. The reader must sit just after the
/// scalefactors; the budget is part2_3_length - part2_bits bits. A count1
/// quadruple that would overrun the budget is discarded. Throws
/// kMalformedCodeword on an undecodable big_values region.
GranuleSpectrum decode_spectrum(const GranuleChannel& gc, BitReader& reader, int part2_bits,
                                int sample_rate_hz);

/// magnitudes[i] = |q|^(4/3) * 2^((global_gain - 210) / 4) * band_scale(i),
/// band_scale covering scalefac_scale, scalefactors, preflag and subblock_gain.
void dequantize(GranuleSpectrum& spectrum, const GranuleChannel& gc, const ScaleFactors& sf,
                int sample_rate_hz);

struct FrameSpectrum {
    std::array<std::array<GranuleSpectrum, 2>, 2> granule{};  // [granule][channel]
    std::array<std::array<ScaleFactors, 2>, 2> scalefactors{};
    int channels = 1;
};

/// Decodes and dequantizes every granule/channel of a complete slice.
/// Throws on any malformed granule, which makes the whole frame undecodable.
FrameSpectrum decode_frame(const MainDataSlice& slice, const SideInfo& si, int sample_rate_hz);

}  // namespace mp3sa
