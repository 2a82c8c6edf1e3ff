#pragma once

#include <string>
#include <vector>

#include "idc/core.hpp"

#include <json.hpp>

namespace idc {

/// Shortest exact decimal for a double (%.17g round-trips bit-exactly);
/// used everywhere a file must be byte-stable across reruns.
std::string format_double(double v);

/// Dataset CSV: header f0..f{D-1},label; one row per sample.
void write_dataset(const std::string& path, const LabeledDataset& data);
LabeledDataset read_dataset(const std::string& path);

/// Affinity CSV: headerless M x M matrix.
void write_affinity(const std::string& path, const AffinityMatrix& w);
AffinityMatrix read_affinity(const std::string& path);

/// Label file: headerless single integer column, a dataset CSV (its label
/// column is taken), or a headered CSV with `label` and optionally
/// `outlier` columns.  Outlier flags come from the explicit column when
/// present, else from label == 0; `has_outlier_info` records whether the
/// file distinguished outliers at all.
struct LabelFile {
    std::vector<int> labels;
    std::vector<bool> outlier;
    bool has_outlier_info = false;
};
LabelFile read_labels(const std::string& path);

nlohmann::json idc_result_to_json(const IdcResult& result);
nlohmann::json partition_to_json(const Partition& p);

/// Parse a JSON file; parse errors raise InvalidArgument (config problem),
/// unreadable files raise IoFailure.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace idc
