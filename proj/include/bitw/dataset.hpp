#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bitw {

// Labeled sample list for a directory-per-class dataset tree.
struct DatasetManifest {
    struct Entry {
        std::filesystem::path path;
        std::string label;
    };
    std::vector<Entry> samples;
    std::vector<std::string> classes;  // ordered distinct labels
};

// Scans root/<class_name>/<image_file>. Labels are the subdirectory names.
// extension_filter is matched case-insensitively against the file suffix
// (without the dot); empty means accept png/jpg/jpeg/tif/tiff.
// Output ordering is bytewise-lexicographic on relative path, so repeated
// scans of the same tree are identical.
DatasetManifest scan_dataset(const std::filesystem::path& root_dir,
                             const std::string& extension_filter = {});

}  // namespace bitw
