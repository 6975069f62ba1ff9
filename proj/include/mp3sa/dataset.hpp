#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mp3sa/matrix.hpp"

namespace mp3sa {

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

struct CsvRow {
    std::string file;
    std::vector<double> values;
    std::optional<std::string> label;
};

/// Header `file,<names...>[,label]`; the label column is written when any
/// row has a label. Fields are quoted when they contain a comma, quote or
/// line break.
void write_feature_csv(std::ostream& out, std::span<const std::string> names, std::span<const CsvRow> rows);

/// Feature table read back from CSV.
struct Dataset {
    std::vector<std::string> files;
    std::vector<std::string> names;
    Matrix x;
    std::vector<std::string> labels;  // empty when the file has no label column

    bool labelled() const { return !labels.empty(); }
};

/// Throws kFormat for ragged rows, a missing `file` column or non-numeric
/// feature values.
Dataset read_feature_csv(std::istream& in);
Dataset read_feature_csv_file(const std::string& path);

/// Class names sorted lexicographically and each label's index into them.
struct LabelEncoding {
    std::vector<std::string> classes;
    std::vector<int> indices;
};

LabelEncoding encode_labels(std::span<const std::string> labels);

}  // namespace mp3sa
