#include "bitw/feature_csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "bitw/errors.hpp"

namespace bitw {

std::vector<std::string> FeatureTable::classes() const {
    std::vector<std::string> out(labels);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> FeatureTable::label_ids() const {
    const auto cls = classes();
    std::map<std::string, int> index;
    for (size_t i = 0; i < cls.size(); ++i) index[cls[i]] = static_cast<int>(i);
    std::vector<int> ids(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) ids[i] = index.at(labels[i]);
    return ids;
}

void write_feature_csv(const std::filesystem::path& csv_path,
                       const FeatureTable& table) {
    std::ofstream out(csv_path);
    if (!out) {
        throw Error("cannot open " + csv_path.string() + " for writing");
    }

    const Eigen::Index dim = table.values.cols();
    out << "path,label";
    char buf[40];
    for (Eigen::Index f = 0; f < dim; ++f) {
        std::snprintf(buf, sizeof(buf), ",f%03d", static_cast<int>(f));
        out << buf;
    }
    out << "\n";
    for (size_t row = 0; row < table.paths.size(); ++row) {
        out << table.paths[row] << ',' << table.labels[row];
        for (Eigen::Index f = 0; f < dim; ++f) {
            std::snprintf(buf, sizeof(buf), ",%.17g",
                          table.values(static_cast<Eigen::Index>(row), f));
            out << buf;
        }
        out << "\n";
    }

    // Sidecar mapping column ids to descriptor feature names.
    std::ofstream names(csv_path.string() + ".names");
    for (Eigen::Index f = 0; f < dim; ++f) {
        std::snprintf(buf, sizeof(buf), "f%03d,", static_cast<int>(f));
        names << buf
              << (f < static_cast<Eigen::Index>(table.feature_names.size())
                      ? table.feature_names[f]
                      : "")
              << "\n";
    }
}

FeatureTable read_feature_csv(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) {
        throw Error("cannot open " + csv_path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("empty feature CSV: " + csv_path.string());
    }
    size_t dim = std::count(line.begin(), line.end(), ',');
    if (dim < 3) {
        throw Error("malformed feature CSV header");
    }
    dim -= 1;  // path,label then dim feature columns

    FeatureTable table;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        table.paths.push_back(cell);
        std::getline(ss, cell, ',');
        table.labels.push_back(cell);
        std::vector<double> row;
        row.reserve(dim);
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        if (row.size() != dim) {
            throw Error("feature CSV row width mismatch");
        }
        rows.push_back(std::move(row));
    }
    table.values.resize(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(dim));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < dim; ++c) {
            table.values(static_cast<Eigen::Index>(r),
                         static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }

    std::ifstream names(csv_path.string() + ".names");
    if (names) {
        while (std::getline(names, line)) {
            const auto comma = line.find(',');
            if (comma != std::string::npos) {
                table.feature_names.push_back(line.substr(comma + 1));
            }
        }
    }
    return table;
}

}  // namespace bitw
