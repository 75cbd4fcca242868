#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace bitw {

// In-memory form of the feature CSV: one row per image, header
// path,label,f000..fNNN. A sidecar file (<csv>.names) documents the
// stable descriptor name behind each fNNN column.
struct FeatureTable {
    std::vector<std::string> paths;
    std::vector<std::string> labels;
    std::vector<std::string> feature_names;
    Eigen::MatrixXd values;

    std::vector<std::string> classes() const;   // sorted distinct labels
    std::vector<int> label_ids() const;         // indices into classes()
};

void write_feature_csv(const std::filesystem::path& csv_path,
                       const FeatureTable& table);

FeatureTable read_feature_csv(const std::filesystem::path& csv_path);

}  // namespace bitw
