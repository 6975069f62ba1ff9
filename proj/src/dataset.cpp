#include "mp3sa/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "mp3sa/error.hpp"

namespace mp3sa {

namespace {

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

// One CSV record; quoted fields may span lines. Returns false at EOF.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    if (in.peek() == std::char_traits<char>::eof()) {
        return false;
    }
    std::string field;
    bool quoted = false;
    bool field_started = false;
    for (;;) {
        const int c = in.get();
        if (c == std::char_traits<char>::eof()) {
            if (quoted) {
                throw Error(ErrorCode::kFormat, "unterminated quoted CSV field");
            }
            break;
        }
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        if (ch == '"' && !field_started) {
            quoted = true;
            field_started = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
            field_started = false;
        } else if (ch == '\n') {
            break;
        } else if (ch == '\r') {
            if (in.peek() == '\n') {
                in.get();
            }
            break;
        } else {
            field += ch;
            field_started = true;
        }
    }
    fields.push_back(std::move(field));
    return true;
}

double parse_number(const std::string& text, std::size_t line) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw Error(ErrorCode::kFormat, "line " + std::to_string(line) + ": not a number: '" + text + "'");
    }
    return value;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_feature_csv(std::ostream& out, std::span<const std::string> names, std::span<const CsvRow> rows) {
    const bool with_label = std::any_of(rows.begin(), rows.end(), [](const CsvRow& r) { return r.label.has_value(); });
    out << "file";
    for (const auto& n : names) {
        out << ',' << quote(n);
    }
    if (with_label) {
        out << ",label";
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.values.size() != names.size()) {
            throw Error(ErrorCode::kSchemaMismatch, "row for " + row.file + " has " + std::to_string(row.values.size()) +
                                                        " values, expected " + std::to_string(names.size()));
        }
        out << quote(row.file);
        for (double v : row.values) {
            out << ',' << format_number(v);
        }
        if (with_label) {
            out << ',' << quote(row.label.value_or(""));
        }
        out << '\n';
    }
}

Dataset read_feature_csv(std::istream& in) {
    std::vector<std::string> header;
    if (!read_record(in, header) || header.empty() || header[0] != "file") {
        throw Error(ErrorCode::kFormat, "CSV header must start with a 'file' column");
    }
    Dataset ds;
    const bool has_label = header.size() >= 2 && header.back() == "label";
    ds.names.assign(header.begin() + 1, header.end() - (has_label ? 1 : 0));
    if (ds.names.empty()) {
        throw Error(ErrorCode::kFormat, "CSV has no feature columns");
    }

    std::vector<std::vector<double>> rows;
    std::vector<std::string> fields;
    std::size_t line = 1;
    while (read_record(in, fields)) {
        ++line;
        if (fields.size() == 1 && fields[0].empty()) {
            continue;
        }
        if (fields.size() != header.size()) {
            throw Error(ErrorCode::kFormat, "line " + std::to_string(line) + ": expected " +
                                                std::to_string(header.size()) + " fields, found " +
                                                std::to_string(fields.size()));
        }
        ds.files.push_back(fields[0]);
        std::vector<double> values;
        values.reserve(ds.names.size());
        for (std::size_t j = 1; j <= ds.names.size(); ++j) {
            values.push_back(parse_number(fields[j], line));
        }
        rows.push_back(std::move(values));
        if (has_label) {
            ds.labels.push_back(fields.back());
        }
    }
    if (rows.empty()) {
        ds.x = Matrix(0, ds.names.size());
    } else {
        ds.x = Matrix::from_rows(rows);
    }
    return ds;
}

Dataset read_feature_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open " + path);
    }
    return read_feature_csv(in);
}

LabelEncoding encode_labels(std::span<const std::string> labels) {
    const std::set<std::string> unique(labels.begin(), labels.end());
    LabelEncoding enc;
    enc.classes.assign(unique.begin(), unique.end());
    enc.indices.reserve(labels.size());
    for (const auto& l : labels) {
        enc.indices.push_back(static_cast<int>(
            std::lower_bound(enc.classes.begin(), enc.classes.end(), l) - enc.classes.begin()));
    }
    return enc;
}

}  // namespace mp3sa
