#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "mp3sa/dataset.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/model.hpp"
#include "mp3sa/rng.hpp"

using namespace mp3sa;

TEST(Csv, NumbersRoundTrip) {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const double v = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<double>(rng.below(40)) - 20.0);
        const auto text = format_number(v);
        EXPECT_EQ(std::stod(text), v) << text;
    }
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(3.0), "3");
}

TEST(Csv, WriteReadRoundTrip) {
    const std::vector<std::string> names = {"si.gg.mean", "stego.g.std"};
    const std::vector<CsvRow> rows = {{"a.mp3", {1.5, -2.25}, std::string("cover")},
                                      {"dir,with \"comma\".mp3", {0.1, 1e-300}, std::string("stego")}};
    std::ostringstream out;
    write_feature_csv(out, names, rows);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "file,si.gg.mean,stego.g.std,label");
    std::istringstream in(out.str());
    const auto ds = read_feature_csv(in);
    EXPECT_EQ(ds.names, names);
    EXPECT_EQ(ds.files, (std::vector<std::string>{"a.mp3", "dir,with \"comma\".mp3"}));
    EXPECT_EQ(ds.labels, (std::vector<std::string>{"cover", "stego"}));
    EXPECT_EQ(ds.x(1, 1), 1e-300);
    EXPECT_EQ(ds.x(0, 1), -2.25);
}

TEST(Csv, UnlabelledAndErrors) {
    std::istringstream plain("file,a,b\nx,1,2\ny,3,4\n");
    const auto ds = read_feature_csv(plain);
    EXPECT_FALSE(ds.labelled());
    EXPECT_EQ(ds.x.rows(), 2u);
    std::istringstream ragged("file,a,b\nx,1\n");
    EXPECT_THROW(read_feature_csv(ragged), Error);
    std::istringstream nonnum("file,a\nx,abc\n");
    EXPECT_THROW(read_feature_csv(nonnum), Error);
    std::istringstream noheader("a,b\n1,2\n");
    EXPECT_THROW(read_feature_csv(noheader), Error);
    std::istringstream crlf("file,a,label\r\nx,1,stego\r\n");
    const auto d2 = read_feature_csv(crlf);
    EXPECT_EQ(d2.labels, std::vector<std::string>{"stego"});
}

TEST(Csv, LabelEncodingIsSorted) {
    const std::vector<std::string> labels = {"stego", "cover", "stego", "cover", "stego"};
    const auto enc = encode_labels(labels);
    EXPECT_EQ(enc.classes, (std::vector<std::string>{"cover", "stego"}));
    EXPECT_EQ(enc.indices, (std::vector<int>{1, 0, 1, 0, 1}));
}

namespace {

Model toy_model(KernelType type) {
    Rng rng(3);
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    for (int i = 0; i < 60; ++i) {
        const int c = i % 3;
        rows.push_back({10.0 * c + rng.normal(), 100.0 + rng.normal(), -5.0 * c + rng.normal()});
        labels.push_back(c);
    }
    SvmOptions opt;
    opt.kernel.type = type;
    auto m = fit_model(Matrix::from_rows(rows), labels, {"a", "b", "c"}, {"x1", "x2", "x3"}, opt);
    m.schema_id = "si";
    return m;
}

}  // namespace

TEST(Model, SerializationRoundTripPredictsIdentically) {
    for (auto type : {KernelType::kLinear, KernelType::kRbf}) {
        const auto m = toy_model(type);
        if (type == KernelType::kRbf) {
            EXPECT_DOUBLE_EQ(m.kernel.gamma, 1.0 / 3.0);
        }
        const auto back = model_from_json(model_to_json(m));
        EXPECT_EQ(model_to_json(back), model_to_json(m));
        Rng rng(4);
        const std::vector<std::string> names = {"x1", "x2", "x3"};
        for (int i = 0; i < 200; ++i) {
            const std::vector<double> x = {30.0 * rng.uniform() - 5.0, 100.0 + rng.normal(), -15.0 * rng.uniform()};
            const auto a = predict(m, x, names);
            const auto b = predict(back, x, names);
            ASSERT_EQ(a.label, b.label);
            ASSERT_EQ(a.score, b.score);
            ASSERT_EQ(a.class_name, b.class_name);
        }
    }
}

TEST(Model, AlphaWithinBox) {
    const auto m = toy_model(KernelType::kLinear);
    for (const auto& pw : m.ovo.machines) {
        for (double c : pw.svm.coef) {
            EXPECT_LE(std::abs(c), m.c + 1e-12);
            EXPECT_GT(std::abs(c), 0.0);
        }
    }
}

TEST(Model, RejectsUnknownVersionAndMismatch) {
    const auto m = toy_model(KernelType::kLinear);
    auto text = model_to_json(m);
    const auto pos = text.find("\"version\": 1");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 12, "\"version\": 2");
    try {
        model_from_json(text);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kFormat);
    }
    EXPECT_THROW(model_from_json("{not json"), Error);
    EXPECT_THROW(model_from_json("{\"format\": \"other\", \"version\": 1}"), Error);
    const std::vector<std::string> wrong = {"x1", "x2", "zz"};
    EXPECT_THROW(predict(m, std::vector<double>{1, 2, 3}, wrong), Error);
}

TEST(Selection, RoundTrip) {
    Selection s{"si", {"si.gg.std", "si.bv.mean"}, {0.5, 0.75, 0.75}, 0.75, 42};
    const auto back = selection_from_json(selection_to_json(s));
    EXPECT_EQ(back.selected, s.selected);
    EXPECT_EQ(back.trace, s.trace);
    EXPECT_EQ(back.seed, 42u);
    EXPECT_EQ(back.schema_id, "si");
}
