#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mp3sa/bands.hpp"
#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

enum class Schema { kSi52, kMdct64, kStego3, kProposed7 };

std::string_view to_string(Schema schema);
Schema schema_from_string(std::string_view name);
std::size_t schema_length(Schema schema);

/// How stereo channels enter a series: all channels concatenated, or
/// channel 0 only.
enum class ChannelPolicy { kPooled, kChannel0 };

std::string_view to_string(ChannelPolicy policy);
ChannelPolicy channel_policy_from_string(std::string_view name);

struct FeatureVector {
    Schema schema = Schema::kSi52;
    std::vector<std::string> names;
    std::vector<double> values;
};

/// Canonical, stable column names. PROPOSED7 names depend on the selected
/// SI features and come from proposed7_names.
const std::vector<std::string>& si52_names();
const std::vector<std::string>& mdct64_names();
const std::vector<std::string>& stego3_names();
std::vector<std::string> proposed7_names(std::span<const std::string> selected_si);

/// 13 side-info series x {mean, std, min, max}. main_data_begin drops the
/// first two frames; scfsi flags are summed per channel per frame;
/// part2_3_length is split by granule; the other nine fields pool both
/// granules. Needs at least 3 frames (kTooFewFrames otherwise).
FeatureVector si_feature_vector(std::span<const SideInfo> frames,
                                ChannelPolicy policy = ChannelPolicy::kPooled);

/// Coefficients 419..576 (1-based) of both granules of one channel of one
/// frame: 316 values split into 12 sub-bands of 20 then 4 of 19.
inline constexpr int kMdctFirstKept = 418;  // 0-based index of coefficient 419
inline constexpr int kMdctKeptPerGranule = kGranuleSize - kMdctFirstKept;
inline constexpr int kMdctSubbands = 16;

using Magnitudes = std::array<double, kGranuleSize>;
using SubbandSums = std::array<double, kMdctSubbands>;

/// Start offsets of the 16 sub-bands within the 316 kept values (17 edges).
const std::array<int, kMdctSubbands + 1>& mdct_subband_edges();

SubbandSums mdct_subband_sums(const Magnitudes& granule0, const Magnitudes& granule1);

/// One observation per decodable frame (and channel under the policy).
struct MdctObservation {
    Magnitudes granule0{};
    Magnitudes granule1{};
};

/// mean, std, min, max of each sub-band sum across observations.
FeatureVector mdct_feature_vector(std::span<const MdctObservation> observations);
FeatureVector mdct_feature_vector_from_sums(std::span<const SubbandSums> sums);

}  // namespace mp3sa
