#include "bitw/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bitw/errors.hpp"

namespace fs = std::filesystem;

namespace bitw {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool extension_matches(const fs::path& p, const std::string& filter) {
    std::string ext = lower(p.extension().string());
    if (!ext.empty() && ext.front() == '.') ext.erase(ext.begin());
    if (filter.empty()) {
        static const std::set<std::string> kDefault = {"png", "jpg", "jpeg",
                                                       "tif", "tiff"};
        return kDefault.count(ext) > 0;
    }
    return ext == lower(filter);
}

}  // namespace

DatasetManifest scan_dataset(const fs::path& root_dir,
                             const std::string& extension_filter) {
    std::error_code ec;
    if (!fs::is_directory(root_dir, ec) || ec) {
        throw UnreadableDirectoryError("not a readable directory: " +
                                       root_dir.string());
    }

    DatasetManifest manifest;
    std::vector<std::string> class_dirs;
    for (const auto& entry : fs::directory_iterator(root_dir, ec)) {
        if (entry.is_directory()) {
            class_dirs.push_back(entry.path().filename().string());
        }
    }
    if (ec) {
        throw UnreadableDirectoryError("failed to enumerate " + root_dir.string());
    }
    std::sort(class_dirs.begin(), class_dirs.end());

    for (const auto& cls : class_dirs) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::recursive_directory_iterator(root_dir / cls, ec)) {
            if (entry.is_regular_file() && extension_matches(entry.path(), extension_filter)) {
                files.push_back(entry.path());
            }
        }
        if (ec) {
            throw UnreadableDirectoryError("failed to enumerate " +
                                           (root_dir / cls).string());
        }
        // Bytewise order on the relative path, so repeated scans agree
        // across platforms and directory-iteration orders.
        std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
            return a.lexically_relative(root_dir).string() <
                   b.lexically_relative(root_dir).string();
        });
        if (files.empty()) continue;
        manifest.classes.push_back(cls);
        for (auto& f : files) {
            manifest.samples.push_back({std::move(f), cls});
        }
    }

    if (manifest.samples.empty()) {
        throw EmptyDatasetError("no images found under " + root_dir.string());
    }
    return manifest;
}

}  // namespace bitw
