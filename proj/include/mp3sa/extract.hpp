#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mp3sa/calibration.hpp"
#include "mp3sa/features.hpp"
#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

/// Everything feature extraction needs from one stream.
struct StreamAnalysis {
    std::vector<SideInfo> side_info;
    /// One entry per decodable frame (and channel, under the policy).
    std::vector<SubbandSums> mdct_sums;
    std::size_t rejected_frames = 0;     // invalid side info
    std::size_t incomplete_frames = 0;   // reservoir history missing
    std::size_t undecodable_frames = 0;  // malformed Huffman data
};

StreamAnalysis analyze_stream(std::span<const std::uint8_t> bytes, ChannelPolicy policy, bool decode_mdct);

struct ExtractOptions {
    Schema schema = Schema::kSi52;
    ChannelPolicy policy = ChannelPolicy::kPooled;
    std::vector<std::string> si_features;  // PROPOSED7 only
};

/// Column names extract_features produces for these options.
std::vector<std::string> feature_names(const ExtractOptions& options);

FeatureVector extract_features(const StreamAnalysis& analysis, const ExtractOptions& options);
FeatureVector extract_features(std::span<const std::uint8_t> bytes, const ExtractOptions& options);

struct ExtractResult {
    std::optional<FeatureVector> features;
    std::string error;
};

/// Reference implementation: files one after another.
std::vector<ExtractResult> extract_batch_serial(std::span<const std::vector<std::uint8_t>> files,
                                                const ExtractOptions& options);
/// Files in parallel (OpenMP); results in input order, identical to the
/// serial version.
std::vector<ExtractResult> extract_batch(std::span<const std::vector<std::uint8_t>> files,
                                         const ExtractOptions& options);

}  // namespace mp3sa
