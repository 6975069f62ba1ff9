#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mp3sa/features.hpp"
#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

/// Time-ordered global_gain values of one stream.
struct GainSeries {
    std::vector<double> values;
    std::string source;
    ChannelPolicy policy = ChannelPolicy::kPooled;
    /// Zero-gain granules left out of `values`.
    std::size_t dropped_zero = 0;
};

/// Granule order within a channel (frame 0 granule 0, frame 0 granule 1,
/// frame 1 granule 0, ...). Under the pooled policy each channel's sequence
/// is appended in channel order. Zero gains are dropped and counted.
/// Throws kTooFewFrames when fewer than two values remain.
GainSeries global_gain_series(std::span<const SideInfo> frames,
                              ChannelPolicy policy = ChannelPolicy::kPooled);

/// Two-tap calibration of a gain series x:
///   reference[m] = (x[m] + x[m+1]) / 2
///   c[m] = x[m] / reference[m]
///   g[m] = 2 (x[m] - x[m+1]) / (x[m] + x[m+1])
/// so g == 2 (c - 1) term by term.
struct CalibratedSeries {
    std::vector<double> c;
    std::vector<double> g;
};

/// Throws kInvalidArgument for fewer than two values or any value <= 0.
CalibratedSeries calibrated_series(std::span<const double> x);
inline CalibratedSeries calibrated_series(const GainSeries& x) { return calibrated_series(x.values); }

/// [std, skewness, kurtosis] of g (see mp3sa::moments for conventions).
/// Needs at least four gain values.
FeatureVector stego_feature_vector(std::span<const double> x);
inline FeatureVector stego_feature_vector(const GainSeries& x) { return stego_feature_vector(x.values); }

/// STEGO3 of the stream's gain series followed by four named SI52 values.
FeatureVector proposed7_vector(std::span<const SideInfo> frames, std::span<const std::string> selected_si,
                               ChannelPolicy policy = ChannelPolicy::kPooled);

/// Picks named columns out of a feature vector, in the requested order.
FeatureVector select_features(const FeatureVector& fv, std::span<const std::string> names, Schema schema);

}  // namespace mp3sa
