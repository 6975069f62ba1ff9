#include "mp3sa/model.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mp3sa/cv.hpp"
#include "mp3sa/error.hpp"

namespace mp3sa {

using nlohmann::json;

namespace {

constexpr const char* kModelFormat = "mp3sa-model";
constexpr const char* kSelectionFormat = "mp3sa-selection";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::kIo, "cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error(ErrorCode::kIo, "write failed for " + path);
    }
}

json parse_document(std::string_view text, const char* format, int version) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::kFormat, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != format) {
        throw Error(ErrorCode::kFormat, std::string("not an ") + format + " document");
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != version) {
        throw Error(ErrorCode::kFormat, std::string("unsupported ") + format + " version");
    }
    return doc;
}

}  // namespace

Model fit_model(const Matrix& x, std::span<const int> labels, std::vector<std::string> classes,
                std::vector<std::string> names, const SvmOptions& options) {
    if (names.size() != x.cols()) {
        throw Error(ErrorCode::kSchemaMismatch, "feature name count differs from column count");
    }
    Model m;
    m.feature_names = names;
    m.classes = std::move(classes);
    SvmOptions opts = options;
    opts.kernel = resolve_kernel(opts.kernel, x.cols());
    m.kernel = opts.kernel;
    m.c = opts.c;

    std::vector<std::vector<double>> rows;
    rows.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const auto r = x.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    m.norm = fit_norm(rows, std::move(names));
    for (auto& r : rows) {
        r = apply_norm(m.norm, r);
    }
    m.ovo = ovo_train(Matrix::from_rows(rows), labels, static_cast<int>(m.classes.size()), opts);
    return m;
}

ModelPrediction predict(const Model& model, std::span<const double> values, std::span<const std::string> names) {
    const auto normalized = apply_norm(model.norm, values, names);
    const auto p = ovo_predict(model.ovo, normalized);
    return {p.label, model.classes.at(static_cast<std::size_t>(p.label)), p.score};
}

std::string model_to_json(const Model& m) {
    json pairs = json::array();
    for (const auto& pw : m.ovo.machines) {
        json sv = json::array();
        for (std::size_t i = 0; i < pw.svm.support_vectors.rows(); ++i) {
            const auto r = pw.svm.support_vectors.row(i);
            sv.push_back(std::vector<double>(r.begin(), r.end()));
        }
        pairs.push_back({{"first", pw.first},
                         {"second", pw.second},
                         {"bias", pw.svm.bias},
                         {"support_vectors", sv},
                         {"coef", pw.svm.coef}});
    }
    json doc = {
        {"format", kModelFormat},
        {"version", kModelVersion},
        {"schema_id", m.schema_id},
        {"channel_policy", m.channel_policy},
        {"feature_names", m.feature_names},
        {"si_features", m.si_features},
        {"kernel", {{"type", std::string(to_string(m.kernel.type))}, {"gamma", m.kernel.gamma}}},
        {"C", m.c},
        {"classes", m.classes},
        {"norm", {{"mean", m.norm.mean}, {"std", m.norm.std}}},
        {"pairs", pairs},
    };
    return doc.dump(1) + "\n";
}

Model model_from_json(std::string_view text) {
    const json doc = parse_document(text, kModelFormat, kModelVersion);
    Model m;
    try {
        m.schema_id = doc.at("schema_id").get<std::string>();
        m.channel_policy = doc.at("channel_policy").get<std::string>();
        m.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
        m.si_features = doc.at("si_features").get<std::vector<std::string>>();
        m.kernel.type = kernel_type_from_string(doc.at("kernel").at("type").get<std::string>());
        m.kernel.gamma = doc.at("kernel").at("gamma").get<double>();
        m.c = doc.at("C").get<double>();
        m.classes = doc.at("classes").get<std::vector<std::string>>();
        m.norm.names = m.feature_names;
        m.norm.mean = doc.at("norm").at("mean").get<std::vector<double>>();
        m.norm.std = doc.at("norm").at("std").get<std::vector<double>>();
        m.ovo.class_count = static_cast<int>(m.classes.size());
        for (const auto& p : doc.at("pairs")) {
            PairwiseSvm pw;
            pw.first = p.at("first").get<int>();
            pw.second = p.at("second").get<int>();
            pw.svm.kernel = m.kernel;
            pw.svm.c = m.c;
            pw.svm.bias = p.at("bias").get<double>();
            pw.svm.coef = p.at("coef").get<std::vector<double>>();
            const auto sv = p.at("support_vectors").get<std::vector<std::vector<double>>>();
            pw.svm.support_vectors = sv.empty() ? Matrix(0, m.feature_names.size()) : Matrix::from_rows(sv);
            m.ovo.machines.push_back(std::move(pw));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::kFormat, std::string("malformed model: ") + e.what());
    }

    const std::size_t width = m.feature_names.size();
    const std::size_t k = m.classes.size();
    bool ok = m.norm.mean.size() == width && m.norm.std.size() == width && k >= 2 &&
              m.ovo.machines.size() == k * (k - 1) / 2 && m.c > 0.0;
    for (const auto& pw : m.ovo.machines) {
        ok = ok && pw.first >= 0 && pw.first < pw.second && static_cast<std::size_t>(pw.second) < k &&
             pw.svm.coef.size() == pw.svm.support_vectors.rows() &&
             (pw.svm.support_vectors.rows() == 0 || pw.svm.support_vectors.cols() == width);
    }
    if (!ok) {
        throw Error(ErrorCode::kFormat, "inconsistent model dimensions");
    }
    return m;
}

void save_model(const Model& model, const std::string& path) { write_file(path, model_to_json(model)); }

Model load_model(const std::string& path) { return model_from_json(read_file(path)); }

std::string selection_to_json(const Selection& s) {
    json doc = {{"format", kSelectionFormat}, {"version", kSelectionVersion}, {"schema_id", s.schema_id},
                {"selected", s.selected},     {"fitness", s.fitness},          {"seed", s.seed},
                {"trace", s.trace}};
    return doc.dump(1) + "\n";
}

Selection selection_from_json(std::string_view text) {
    const json doc = parse_document(text, kSelectionFormat, kSelectionVersion);
    Selection s;
    try {
        s.schema_id = doc.at("schema_id").get<std::string>();
        s.selected = doc.at("selected").get<std::vector<std::string>>();
        s.fitness = doc.at("fitness").get<double>();
        s.seed = doc.at("seed").get<std::uint64_t>();
        s.trace = doc.at("trace").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::kFormat, std::string("malformed selection: ") + e.what());
    }
    return s;
}

void save_selection(const Selection& s, const std::string& path) { write_file(path, selection_to_json(s)); }

Selection load_selection(const std::string& path) { return selection_from_json(read_file(path)); }

}  // namespace mp3sa
