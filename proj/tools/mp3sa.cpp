#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mp3sa/bitstream.hpp"
#include "mp3sa/cv.hpp"
#include "mp3sa/dataset.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/extract.hpp"
#include "mp3sa/ga.hpp"
#include "mp3sa/model.hpp"
#include "mp3sa/rng.hpp"
#include "mp3sa/signature.hpp"
#include "mp3sa/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace mp3sa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool has_wildcard(const std::string& s) { return s.find_first_of("*?[") != std::string::npos; }

bool glob_match(const char* pattern, const char* text) {
    while (*pattern) {
        if (*pattern == '*') {
            ++pattern;
            for (const char* t = text;; ++t) {
                if (glob_match(pattern, t)) return true;
                if (!*t) return false;
            }
        }
        if (!*text) return false;
        if (*pattern == '[') {
            const char* p = pattern + 1;
            const bool negate = *p == '!' || *p == '^';
            if (negate) ++p;
            bool hit = false;
            for (; *p && *p != ']'; ++p) {
                if (p[1] == '-' && p[2] && p[2] != ']') {
                    hit = hit || (*text >= *p && *text <= p[2]);
                    p += 2;
                } else {
                    hit = hit || *text == *p;
                }
            }
            if (!*p || hit == negate) return false;
            pattern = p + 1;
            ++text;
            continue;
        }
        if (*pattern != '?' && *pattern != *text) return false;
        ++pattern;
        ++text;
    }
    return !*text;
}

// Wildcards may appear in any path component; each pattern's matches are
// sorted.
std::vector<std::string> expand_pattern(const std::string& pattern) {
    const fs::path p(pattern);
    std::vector<fs::path> current = {p.is_absolute() ? p.root_path() : fs::path()};
    for (const auto& part : p.relative_path()) {
        const std::string piece = part.string();
        std::vector<fs::path> next;
        for (const auto& base : current) {
            if (!has_wildcard(piece)) {
                next.push_back(base / part);
                continue;
            }
            std::error_code ec;
            for (const auto& entry : fs::directory_iterator(base.empty() ? fs::path(".") : base, ec)) {
                const auto name = entry.path().filename().string();
                if (name[0] != '.' && glob_match(piece.c_str(), name.c_str())) {
                    next.push_back(base / name);
                }
            }
        }
        current = std::move(next);
    }
    std::vector<std::string> out;
    for (const auto& c : current) {
        std::error_code ec;
        if (fs::is_regular_file(c, ec)) out.push_back(c.string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> out;
    for (const auto& in : inputs) {
        if (!has_wildcard(in)) {
            out.push_back(in);
            continue;
        }
        auto hits = expand_pattern(in);
        if (hits.empty()) {
            out.push_back(in);
        }
        out.insert(out.end(), hits.begin(), hits.end());
    }
    return out;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error(ErrorCode::kIo, "cannot write " + path);
    }
}

void warn(const std::string& file, const std::string& message) {
    std::cerr << "mp3sa: " << (file.empty() ? "" : file + ": ") << message << '\n';
}

ordered_json header_json(const FrameHeader& h) {
    return {{"bitrate_kbps", h.bitrate_kbps}, {"sample_rate_hz", h.sample_rate_hz},
            {"channel_mode", std::string(to_string(h.channel_mode))},
            {"mode_extension", h.mode_extension}, {"padding", h.padding}, {"crc", h.crc_present},
            {"frame_bytes", h.frame_length_bytes()}};
}

ordered_json granule_json(const GranuleChannel& gc) {
    ordered_json j = {{"part2_3_length", gc.part2_3_length},
                      {"big_values", gc.big_values},
                      {"global_gain", gc.global_gain},
                      {"scalefac_compress", gc.scalefac_compress},
                      {"window_switching", gc.window_switching},
                      {"block_type", gc.block_type},
                      {"mixed_block_flag", gc.mixed_block_flag},
                      {"table_select", gc.table_select},
                      {"subblock_gain", gc.subblock_gain},
                      {"region0_count", gc.region0_count},
                      {"region1_count", gc.region1_count},
                      {"preflag", gc.preflag},
                      {"scalefac_scale", gc.scalefac_scale},
                      {"count1table_select", gc.count1table_select}};
    return j;
}

ordered_json side_info_json(const SideInfo& si) {
    ordered_json scfsi = ordered_json::array();
    ordered_json granules = ordered_json::array();
    for (int ch = 0; ch < si.channels; ++ch) {
        scfsi.push_back(si.scfsi[static_cast<std::size_t>(ch)]);
    }
    for (std::size_t gr = 0; gr < 2; ++gr) {
        ordered_json channels = ordered_json::array();
        for (int ch = 0; ch < si.channels; ++ch) {
            channels.push_back(granule_json(si.granule[gr][static_cast<std::size_t>(ch)]));
        }
        granules.push_back(channels);
    }
    return {{"main_data_begin", si.main_data_begin}, {"private_bits", si.private_bits},
            {"scfsi", scfsi}, {"granules", granules}};
}

int cmd_parse(const std::vector<std::string>& files, bool signatures) {
    int status = kExitOk;
    for (const auto& file : files) {
        try {
            const auto bytes = read_bytes(file);
            const auto stream = parse_stream(bytes);
            if (stream.frames.empty()) {
                throw Error(ErrorCode::kTooFewFrames, "no valid frames");
            }
            std::size_t index = 0;
            for (const auto& frame : stream.frames) {
                ordered_json line = {{"file", file},
                                     {"frame", index++},
                                     {"offset", frame.locator.byte_offset},
                                     {"header", header_json(frame.locator.header)},
                                     {"side_info", side_info_json(frame.side_info)}};
                std::cout << line.dump() << '\n';
            }
            if (signatures) {
                std::vector<SideInfo> si;
                for (const auto& f : stream.frames) si.push_back(f.side_info);
                ordered_json hints = ordered_json::array();
                for (const auto& h : first_frame_signature(si)) {
                    hints.push_back({{"encoder", h.encoder}, {"rule", h.rule}});
                }
                std::cout << ordered_json{{"file", file}, {"encoder_hints", hints}}.dump() << '\n';
            }
            if (stream.rejected_frames > 0) {
                warn(file, std::to_string(stream.rejected_frames) + " frame(s) with invalid side info skipped");
            }
        } catch (const Error& e) {
            warn(file, e.what());
            status = kExitData;
        }
    }
    return status;
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (!name.empty()) out.push_back(name);
        }
    }
    return out;
}

struct FeaturesArgs {
    std::vector<std::string> files;
    std::string set = "si";
    std::vector<std::string> si_features;
    std::string selection;
    std::string policy = "pooled";
    std::string label;
    std::string out;
};

int cmd_features(const FeaturesArgs& args) {
    ExtractOptions options;
    try {
        options.schema = schema_from_string(args.set);
        options.policy = channel_policy_from_string(args.policy);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (options.schema == Schema::kProposed7) {
        auto names = split_names(args.si_features);
        if (names.empty() && !args.selection.empty()) {
            names = load_selection(args.selection).selected;
        }
        if (names.empty()) {
            throw UsageError("--set proposed7 needs --si-features or --selection");
        }
        options.si_features = names;
    } else if (!args.si_features.empty() || !args.selection.empty()) {
        throw UsageError("--si-features and --selection apply to --set proposed7 only");
    }
    const auto names = feature_names(options);

    std::vector<std::vector<std::uint8_t>> blobs;
    std::vector<std::string> read_errors;
    for (const auto& file : args.files) {
        try {
            blobs.push_back(read_bytes(file));
            read_errors.emplace_back();
        } catch (const Error& e) {
            blobs.emplace_back();
            read_errors.emplace_back(e.what());
        }
    }
    const auto results = extract_batch(blobs, options);

    int status = kExitOk;
    std::vector<CsvRow> rows;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!read_errors[i].empty() || !results[i].features) {
            warn(args.files[i], read_errors[i].empty() ? results[i].error : read_errors[i]);
            status = kExitData;
            continue;
        }
        CsvRow row{args.files[i], results[i].features->values, std::nullopt};
        if (!args.label.empty()) row.label = args.label;
        rows.push_back(std::move(row));
    }
    std::ostringstream csv;
    write_feature_csv(csv, names, rows);
    write_text(args.out, csv.str());
    return status;
}

// Schema of a feature table, from its column families.
std::string infer_schema(const std::vector<std::string>& names, std::vector<std::string>& si_features) {
    bool si = false, stego = false, mdct = false;
    si_features.clear();
    for (const auto& n : names) {
        if (n.rfind("si.", 0) == 0) {
            si = true;
            si_features.push_back(n);
        } else if (n.rfind("stego.", 0) == 0) {
            stego = true;
        } else if (n.rfind("mdct.", 0) == 0) {
            mdct = true;
        } else {
            throw Error(ErrorCode::kSchemaMismatch, "unknown feature column '" + n + "'");
        }
    }
    if (static_cast<int>(si) + static_cast<int>(stego) + static_cast<int>(mdct) == 0) {
        throw Error(ErrorCode::kSchemaMismatch, "no feature columns");
    }
    if (mdct && (si || stego)) {
        throw Error(ErrorCode::kSchemaMismatch, "mdct columns cannot be mixed with other families");
    }
    if (si && stego) {
        if (si_features.size() != 4 || names.size() != 7) {
            throw Error(ErrorCode::kSchemaMismatch, "mixed stego/si columns must form a proposed7 set");
        }
        return "proposed7";
    }
    if (!si) si_features.clear();
    return si ? "si" : stego ? "stego" : "mdct";
}

// Keeps the named columns, in the given order.
Dataset restrict_columns(const Dataset& ds, const std::vector<std::string>& keep) {
    std::vector<int> cols;
    for (const auto& name : keep) {
        const auto it = std::find(ds.names.begin(), ds.names.end(), name);
        if (it == ds.names.end()) {
            throw Error(ErrorCode::kSchemaMismatch, "column '" + name + "' not in the feature table");
        }
        cols.push_back(static_cast<int>(it - ds.names.begin()));
    }
    Dataset out;
    out.files = ds.files;
    out.labels = ds.labels;
    out.names = keep;
    out.x = ds.x.select_cols(cols);
    return out;
}

Kernel parse_kernel(const std::string& type, double gamma) {
    try {
        return Kernel{kernel_type_from_string(type), gamma};
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

struct TrainArgs {
    std::string csv;
    std::string kernel = "linear";
    double c = 1.0;
    double gamma = 0.0;
    int folds = 10;
    std::uint64_t seed = 42;
    std::string selection;
    std::string out;
};

Dataset load_labelled(const std::string& path, const std::string& selection) {
    auto ds = read_feature_csv_file(path);
    if (!ds.labelled()) {
        throw Error(ErrorCode::kFormat, path + ": no label column");
    }
    if (!selection.empty()) {
        ds = restrict_columns(ds, load_selection(selection).selected);
    }
    return ds;
}

std::string report_text(const CvReport& r, const std::vector<std::string>& classes) {
    std::ostringstream o;
    char buf[128];
    o << "folds " << r.folds << "  seed " << r.seed << '\n';
    std::snprintf(buf, sizeof buf, "accuracy %.6f\nsensitivity %.6f\nspecificity %.6f\n", r.accuracy,
                  r.sensitivity, r.specificity);
    o << buf;
    o << "confusion (rows true, columns predicted)\n";
    std::size_t width = 6;
    for (const auto& c : classes) width = std::max(width, c.size() + 1);
    auto pad = [&](const std::string& s) { return s + std::string(width - std::min(width, s.size()), ' '); };
    o << pad("");
    for (const auto& c : classes) o << pad(c);
    o << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
        o << pad(classes[i]);
        for (int v : r.confusion[i]) o << pad(std::to_string(v));
        o << '\n';
    }
    for (const auto& w : r.warnings) o << "warning: " << w << '\n';
    return o.str();
}

int cmd_train(const TrainArgs& args) {
    if (args.folds < 2) {
        throw UsageError("--folds must be at least 2");
    }
    if (!(args.c > 0.0)) {
        throw UsageError("--c must be positive");
    }
    const auto kernel = parse_kernel(args.kernel, args.gamma);
    const auto ds = load_labelled(args.csv, args.selection);
    std::vector<std::string> si_features;
    const auto schema = infer_schema(ds.names, si_features);
    const auto enc = encode_labels(ds.labels);

    CvOptions cv;
    cv.folds = args.folds;
    cv.seed = args.seed;
    cv.svm.kernel = kernel;
    cv.svm.c = args.c;
    const auto report = kfold_cv(ds.x, enc.indices, static_cast<int>(enc.classes.size()), cv);
    std::cout << "samples " << ds.x.rows() << "  features " << ds.names.size() << "  schema " << schema << '\n';
    std::cout << report_text(report, enc.classes);

    if (!args.out.empty()) {
        auto model = fit_model(ds.x, enc.indices, enc.classes, ds.names, cv.svm);
        model.schema_id = schema;
        model.si_features = si_features;
        save_model(model, args.out);
    }
    return kExitOk;
}

struct SelectArgs {
    std::string csv;
    std::size_t n = 4;
    std::size_t pop = 200;
    int stagnation = 5;
    int max_generations = 100;
    int folds = 10;
    std::string kernel = "linear";
    double c = 1.0;
    double gamma = 0.0;
    std::uint64_t seed = 42;
    std::string out;
};

int cmd_select(const SelectArgs& args) {
    GaConfig config;
    config.population = args.pop;
    config.target_count = args.n;
    config.stagnation_limit = args.stagnation;
    config.max_generations = args.max_generations;
    config.folds = args.folds;
    config.seed = args.seed;
    if (args.folds < 2) {
        throw UsageError("--folds must be at least 2");
    }
    SvmOptions svm;
    svm.kernel = parse_kernel(args.kernel, args.gamma);
    svm.c = args.c;

    const auto ds = load_labelled(args.csv, "");
    try {
        validate(config, ds.names.size());
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    std::vector<std::string> si_features;
    const auto schema = infer_schema(ds.names, si_features);
    const auto enc = encode_labels(ds.labels);
    std::cout << "pop=" << config.population << " stagnation=" << config.stagnation_limit
              << " n=" << config.target_count << " folds=" << config.folds << " seed=" << config.seed << '\n';
    const auto sel = ga_select(ds.x, enc.indices, static_cast<int>(enc.classes.size()), ds.names, config, svm);
    char buf[64];
    for (std::size_t g = 0; g < sel.result.trace.size(); ++g) {
        std::snprintf(buf, sizeof buf, "%.6f", sel.result.trace[g]);
        std::cout << "generation " << g << " best " << buf << '\n';
    }
    std::cout << (sel.result.stagnated ? "stopped: stagnation" : "stopped: generation limit") << '\n';
    std::cout << "selected";
    for (const auto& n : sel.names) std::cout << ' ' << n;
    std::cout << '\n';

    if (!args.out.empty()) {
        Selection s{schema, sel.names, sel.result.trace, sel.result.best_fitness, args.seed};
        save_selection(s, args.out);
    }
    return kExitOk;
}

int cmd_classify(const std::string& model_path, const std::vector<std::string>& files) {
    const auto model = load_model(model_path);
    ExtractOptions options;
    options.schema = schema_from_string(model.schema_id);
    options.policy = channel_policy_from_string(model.channel_policy);
    options.si_features = model.si_features;

    std::vector<std::vector<std::uint8_t>> blobs;
    std::vector<std::string> read_errors;
    for (const auto& file : files) {
        try {
            blobs.push_back(read_bytes(file));
            read_errors.emplace_back();
        } catch (const Error& e) {
            blobs.emplace_back();
            read_errors.emplace_back(e.what());
        }
    }
    const auto results = extract_batch(blobs, options);
    int status = kExitOk;
    char buf[64];
    for (std::size_t i = 0; i < results.size(); ++i) {
        try {
            if (!read_errors[i].empty()) throw Error(ErrorCode::kIo, read_errors[i]);
            if (!results[i].features) throw Error(ErrorCode::kTooFewFrames, results[i].error);
            const auto fv = select_features(*results[i].features, model.feature_names, options.schema);
            const auto p = predict(model, fv.values, fv.names);
            std::snprintf(buf, sizeof buf, "%.9g", p.score);
            std::cout << files[i] << '\t' << p.class_name << '\t' << buf << '\n';
        } catch (const Error& e) {
            std::cout << files[i] << "\terror\t" << e.what() << '\n';
            status = kExitData;
        }
    }
    return status;
}

struct SynthArgs {
    std::size_t frames = 2048;
    double rate = 1.0;
    std::uint64_t seed = 42;
    double cutoff = 0.05;
    double base = 140.0;
    double amplitude = 30.0;
    std::string out = ".";
};

std::string gain_csv(const GainSeries& s) {
    std::ostringstream o;
    o << "index,gain\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        o << i << ',' << format_number(s.values[i]) << '\n';
    }
    return o.str();
}

void write_binary(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()))) {
        throw Error(ErrorCode::kIo, "cannot write " + path.string());
    }
}

int cmd_synth(const SynthArgs& args) {
    CoverSpec cover;
    const std::size_t granules = 2 * args.frames;
    cover.length = std::max<std::size_t>(granules, 8);
    cover.cutoff = args.cutoff;
    cover.base = args.base;
    cover.amplitude = args.amplitude;
    cover.seed = Rng::derive(args.seed, 0);
    StegoSpec stego;
    stego.rate = args.rate;
    stego.seed = Rng::derive(args.seed, 1);

    if (args.frames == 0) {
        throw UsageError("--frames must be positive");
    }
    auto x = gen_cover_series(cover);
    // Short streams keep a prefix of the shortest generated series.
    x.values.resize(granules);
    const auto y = embed_noise(x, stego);

    const fs::path dir(args.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::kIo, "cannot create " + dir.string());
    }
    write_binary(dir / "cover.mp3", gain_series_stream(x.values));
    write_binary(dir / "stego.mp3", gain_series_stream(y.series.values));
    write_text((dir / "cover_gain.csv").string(), gain_csv(x));
    write_text((dir / "stego_gain.csv").string(), gain_csv(y.series));

    ordered_json manifest = {
        {"seed", args.seed},
        {"frames", args.frames},
        {"granules", granules},
        {"cover", {{"cutoff", cover.cutoff}, {"base", cover.base}, {"amplitude", cover.amplitude}, {"seed", cover.seed}}},
        {"stego",
         {{"rate", stego.rate}, {"noise_values", {-2, -1, 0, 1, 2}}, {"noise_probabilities", stego.probabilities},
          {"seed", stego.seed}}},
        {"perturbed", y.perturbed},
        {"changed", y.changed},
        {"clamped", y.clamped},
        {"files", {"cover.mp3", "stego.mp3", "cover_gain.csv", "stego_gain.csv"}}};
    write_text((dir / "manifest.json").string(), manifest.dump(2) + "\n");
    std::cout << "wrote " << dir.string() << ": " << granules << " granules, " << y.changed << " changed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MP3 side-information steganalysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mp3sa 1.0");

    std::vector<std::string> parse_files;
    bool parse_json = true;
    bool parse_signatures = false;
    auto* parse = app.add_subcommand("parse", "Dump headers and side info as JSON lines");
    parse->add_option("files", parse_files, "Input files or globs")->required();
    parse->add_flag("--json", parse_json, "JSON-lines output (the only format)");
    parse->add_flag("--signatures", parse_signatures, "Also print first-frame encoder hints");

    FeaturesArgs fa;
    auto* features = app.add_subcommand("features", "Extract a feature table");
    features->add_option("files", fa.files, "Input files or globs")->required();
    features->add_option("--set", fa.set, "si, mdct, stego or proposed7")->capture_default_str();
    features->add_option("--si-features", fa.si_features, "Four SI feature names for proposed7");
    features->add_option("--selection", fa.selection, "Selection file providing the SI features");
    features->add_option("--channel-policy", fa.policy, "pooled or channel0")->capture_default_str();
    features->add_option("--label", fa.label, "Label written for every row");
    features->add_option("--out", fa.out, "Output CSV (default stdout)");

    TrainArgs ta;
    auto* train = app.add_subcommand("train", "Cross-validate and train a one-vs-one SVM");
    train->add_option("csv", ta.csv, "Labelled feature CSV")->required();
    train->add_option("--kernel", ta.kernel, "linear or rbf")->capture_default_str();
    train->add_option("--c", ta.c, "Box constraint")->capture_default_str();
    train->add_option("--gamma", ta.gamma, "rbf width (0: 1/features)")->capture_default_str();
    train->add_option("--folds", ta.folds, "Cross-validation folds")->capture_default_str();
    train->add_option("--seed", ta.seed, "Fold assignment seed")->capture_default_str();
    train->add_option("--selection", ta.selection, "Train on the columns of a selection file");
    train->add_option("--out", ta.out, "Model file to write");

    SelectArgs sa;
    auto* select = app.add_subcommand("select", "Genetic feature-subset selection");
    select->add_option("csv", sa.csv, "Labelled feature CSV")->required();
    select->add_option("--n", sa.n, "Subset size")->capture_default_str();
    select->add_option("--pop", sa.pop, "Population size")->capture_default_str();
    select->add_option("--stagnation", sa.stagnation, "Generations without improvement before stopping")
        ->capture_default_str();
    select->add_option("--max-generations", sa.max_generations, "Generation limit")->capture_default_str();
    select->add_option("--folds", sa.folds, "Cross-validation folds per fitness")->capture_default_str();
    select->add_option("--kernel", sa.kernel, "linear or rbf")->capture_default_str();
    select->add_option("--c", sa.c, "Box constraint")->capture_default_str();
    select->add_option("--gamma", sa.gamma, "rbf width (0: 1/features)")->capture_default_str();
    select->add_option("--seed", sa.seed, "Search seed")->capture_default_str();
    select->add_option("--out", sa.out, "Selection file to write");

    std::string model_path;
    std::vector<std::string> classify_files;
    auto* classify = app.add_subcommand("classify", "Label files with a trained model");
    classify->add_option("--model", model_path, "Model file")->required();
    classify->add_option("files", classify_files, "Input files or globs")->required();

    SynthArgs ya;
    auto* synth = app.add_subcommand("synth", "Write a synthetic cover/stego pair");
    synth->add_option("--frames", ya.frames, "Frames per file (two granules each)")->capture_default_str();
    synth->add_option("--rate", ya.rate, "Fraction of granules perturbed")->capture_default_str();
    synth->add_option("--seed", ya.seed, "Seed")->capture_default_str();
    synth->add_option("--cutoff", ya.cutoff, "Cover band limit, cycles per granule")->capture_default_str();
    synth->add_option("--base", ya.base, "Cover mean gain")->capture_default_str();
    synth->add_option("--amplitude", ya.amplitude, "Cover peak deviation")->capture_default_str();
    synth->add_option("--out", ya.out, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*parse) return cmd_parse(expand_inputs(parse_files), parse_signatures);
        if (*features) {
            fa.files = expand_inputs(fa.files);
            return cmd_features(fa);
        }
        if (*train) return cmd_train(ta);
        if (*select) return cmd_select(sa);
        if (*classify) return cmd_classify(model_path, expand_inputs(classify_files));
        if (*synth) return cmd_synth(ya);
    } catch (const UsageError& e) {
        std::cerr << "mp3sa: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "mp3sa: " << e.what() << '\n';
        return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitData;
    } catch (const std::exception& e) {
        std::cerr << "mp3sa: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
