#include "mp3sa/signature.hpp"

namespace mp3sa {
namespace {

struct Rule {
    const char* id;
    std::vector<const char*> encoders;
    bool (*matches)(std::span<const SideInfo>);
};

const GranuleChannel& gr(const SideInfo& si, std::size_t granule) { return si.granule[granule][0]; }

bool all_zero(const SideInfo& si) {
    SideInfo zero;
    zero.channels = si.channels;
    return si == zero;
}

const std::vector<Rule>& rules() {
    static const std::vector<Rule> table = {
        {"lame.first_frame_zero", {"lame"},
         [](std::span<const SideInfo> f) { return all_zero(f[0]); }},
        {"plugger.gain210_both_granules", {"plugger"},
         [](std::span<const SideInfo> f) {
             return gr(f[0], 0).global_gain == 210 && gr(f[0], 1).global_gain == 210;
         }},
        {"gogo.gain210_granule0", {"gogo"},
         [](std::span<const SideInfo> f) { return gr(f[0], 0).global_gain == 210; }},
        {"xing.nonzero_scfsi", {"xing"},
         [](std::span<const SideInfo> f) {
             for (int ch = 0; ch < f[0].channels; ++ch) {
                 if (f[0].scfsi_sum(ch) > 0) {
                     return true;
                 }
             }
             return false;
         }},
        {"plugger.region0_8_7", {"plugger"},
         [](std::span<const SideInfo> f) {
             return gr(f[0], 0).region0_count == 8 && gr(f[0], 1).region0_count == 7;
         }},
        {"8hz.region0_7_8", {"8hz"},
         [](std::span<const SideInfo> f) {
             return gr(f[0], 0).region0_count == 7 && gr(f[0], 1).region0_count == 8;
         }},
        {"plugger.block_end_short", {"plugger"},
         [](std::span<const SideInfo> f) {
             return gr(f[0], 0).block_type == 3 && gr(f[0], 1).block_type == 2;
         }},
        {"8hz.block_start_end", {"8hz"},
         [](std::span<const SideInfo> f) {
             return gr(f[0], 0).block_type == 1 && gr(f[0], 1).block_type == 3;
         }},
        {"lame_plugger.p23l_zero_both_granules", {"lame", "plugger"},
         [](std::span<const SideInfo> f) {
             return gr(f[0], 0).part2_3_length == 0 && gr(f[0], 1).part2_3_length == 0;
         }},
        {"gogo.p23l_zero_granule0", {"gogo"},
         [](std::span<const SideInfo> f) { return gr(f[0], 0).part2_3_length == 0; }},
        {"plugger.constant_first_four_frames", {"plugger"},
         [](std::span<const SideInfo> f) {
             return f.size() >= 4 && f[1] == f[0] && f[2] == f[0] && f[3] == f[0];
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& signature_rules() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& r : rules()) {
            out.emplace_back(r.id);
        }
        return out;
    }();
    return ids;
}

std::vector<EncoderHint> first_frame_signature(std::span<const SideInfo> frames) {
    std::vector<EncoderHint> hints;
    if (frames.empty()) {
        return hints;
    }
    for (const auto& r : rules()) {
        if (r.matches(frames)) {
            for (const char* encoder : r.encoders) {
                hints.push_back({encoder, r.id});
            }
        }
    }
    return hints;
}

}  // namespace mp3sa
