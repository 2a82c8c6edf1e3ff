#include "idc/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "idc/error.hpp"
#include "idc/idc.hpp"

namespace idc {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, const std::string& path) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorCode::IoFailure, path + ": cannot parse '" + s + "' as a number");
    }
}

int parse_int(const std::string& s, const std::string& path) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorCode::IoFailure, path + ": cannot parse '" + s + "' as an integer");
    }
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoFailure, "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

bool has_alpha(const std::string& s) {
    for (char c : s) {
        if (std::isalpha(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_dataset(const std::string& path, const LabeledDataset& data) {
    std::ostringstream out;
    for (std::size_t j = 0; j < data.dim; ++j) out << "f" << j << ",";
    out << "label\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t j = 0; j < data.dim; ++j)
            out << format_double(data.features.at(i, j)) << ",";
        out << data.labels[i] << "\n";
    }
    write_text_file(path, out.str());
}

LabeledDataset read_dataset(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) fail(ErrorCode::IoFailure, path + ": empty dataset file");

    std::vector<std::string> header = split_csv_line(lines[0]);
    if (header.size() < 2 || header.back() != "label")
        fail(ErrorCode::IoFailure, path + ": expected header f0..f{D-1},label");
    const std::size_t d = header.size() - 1;
    const std::size_t m = lines.size() - 1;

    LabeledDataset data;
    data.features = Matrix(m, d);
    data.labels.resize(m);
    data.dim = d;
    int max_label = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::string> fields = split_csv_line(lines[i + 1]);
        if (fields.size() != d + 1)
            fail(ErrorCode::IoFailure,
                 path + ": row " + std::to_string(i + 1) + " has " +
                     std::to_string(fields.size()) + " fields, expected " + std::to_string(d + 1));
        for (std::size_t j = 0; j < d; ++j) {
            double v = parse_double(fields[j], path);
            if (!std::isfinite(v))
                fail(ErrorCode::IoFailure, path + ": non-finite feature in row " + std::to_string(i + 1));
            data.features.at(i, j) = v;
        }
        data.labels[i] = parse_int(fields[d], path);
        if (data.labels[i] < 0)
            fail(ErrorCode::IoFailure, path + ": negative label in row " + std::to_string(i + 1));
        max_label = std::max(max_label, data.labels[i]);
    }
    data.n_inlier_clusters = max_label;
    return data;
}

void write_affinity(const std::string& path, const AffinityMatrix& w) {
    std::ostringstream out;
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j > 0) out << ",";
            out << format_double(w.at(i, j));
        }
        out << "\n";
    }
    write_text_file(path, out.str());
}

AffinityMatrix read_affinity(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) fail(ErrorCode::IoFailure, path + ": empty affinity file");
    const std::size_t m = lines.size();
    Matrix raw(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::string> fields = split_csv_line(lines[i]);
        if (fields.size() != m)
            fail(ErrorCode::IoFailure, path + ": row " + std::to_string(i) + " has " +
                                           std::to_string(fields.size()) +
                                           " fields, expected " + std::to_string(m));
        for (std::size_t j = 0; j < m; ++j) raw.at(i, j) = parse_double(fields[j], path);
    }
    return validate_affinity(raw);
}

LabelFile read_labels(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) fail(ErrorCode::IoFailure, path + ": empty label file");

    LabelFile out;
    if (has_alpha(lines[0])) {
        std::vector<std::string> header = split_csv_line(lines[0]);
        std::size_t label_col = header.size();
        std::size_t outlier_col = header.size();
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == "label") label_col = c;
            if (header[c] == "outlier") outlier_col = c;
        }
        if (label_col == header.size())
            fail(ErrorCode::IoFailure, path + ": header has no label column");
        bool explicit_outlier = outlier_col != header.size();
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::vector<std::string> fields = split_csv_line(lines[i]);
            if (fields.size() != header.size())
                fail(ErrorCode::IoFailure, path + ": row " + std::to_string(i) + " has " +
                                               std::to_string(fields.size()) + " fields");
            int label = parse_int(fields[label_col], path);
            out.labels.push_back(label);
            out.outlier.push_back(explicit_outlier ? parse_int(fields[outlier_col], path) != 0
                                                   : label == 0);
        }
        out.has_outlier_info = true;
    } else {
        for (const std::string& line : lines) {
            std::vector<std::string> fields = split_csv_line(line);
            int label = parse_int(fields[0], path);
            out.labels.push_back(label);
            out.outlier.push_back(label == 0);
        }
        bool any_zero = false;
        for (int l : out.labels) any_zero |= l == 0;
        out.has_outlier_info = any_zero;
    }
    return out;
}

nlohmann::json idc_result_to_json(const IdcResult& result) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [k, f] : result.trace) {
        nlohmann::json entry;
        entry["k"] = k;
        if (std::isinf(f) && f < 0.0)
            entry["f"] = nullptr;
        else
            entry["f"] = f;
        trace.push_back(entry);
    }

    nlohmann::json between = nlohmann::json::array();
    for (std::size_t i = 0; i < result.stats.between.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < result.stats.between.cols; ++j)
            row.push_back(result.stats.between.at(i, j));
        between.push_back(row);
    }

    std::vector<bool> flags = outlier_labels(result);
    nlohmann::json j;
    j["chosen_k"] = result.chosen_k;
    j["estimated_n_in"] = result.chosen_k - 1;
    j["labels"] = result.partition.labels;
    j["outlier"] = flags;
    j["trace"] = trace;
    j["stats"] = {{"within", result.stats.within},
                  {"between", between},
                  {"delta_raw", result.stats.delta_raw},
                  {"delta_norm", result.stats.delta_norm},
                  {"outlier_index", result.stats.outlier_index},
                  {"degenerate", result.stats.degenerate}};
    return j;
}

nlohmann::json partition_to_json(const Partition& p) {
    nlohmann::json j;
    j["k"] = p.k;
    j["labels"] = p.labels;
    return j;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoFailure, "cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::InvalidArgument, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << content;
    if (!out) fail(ErrorCode::IoFailure, "failed writing " + path);
}

} // namespace idc
