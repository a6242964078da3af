#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mel/core/split.hpp"

namespace mel {

// One row of the dataset manifest CSV. Header is fixed:
//   wsi_id,patch_path,mask_path,class_id,condition,split
// Paths are stored as written (usually relative to the manifest directory).
struct ManifestRow {
    std::string wsi_id;
    std::string patch_path;
    std::string mask_path;
    int class_id = 0;
    Condition condition = Condition::normal;
    std::string split;  // train | val | test
};

extern const char* const kManifestHeader;

std::vector<ManifestRow> read_manifest(const std::filesystem::path& csv_path);
void write_manifest(const std::filesystem::path& csv_path, const std::vector<ManifestRow>& rows);

// Resolves a manifest-relative path against the manifest's directory.
std::filesystem::path resolve_manifest_path(const std::filesystem::path& manifest_csv,
                                            const std::string& stored_path);

}  // namespace mel
