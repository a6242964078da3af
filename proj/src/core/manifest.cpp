#include "mel/core/manifest.hpp"

#include <fstream>
#include <sstream>

#include "mel/core/errors.hpp"

namespace mel {

const char* const kManifestHeader = "wsi_id,patch_path,mask_path,class_id,condition,split";

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

std::vector<ManifestRow> read_manifest(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open manifest: " + csv_path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty manifest: " + csv_path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kManifestHeader)
        throw IoError("manifest header mismatch in " + csv_path.string() + ": " + line);

    std::vector<ManifestRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() != 6)
            throw IoError("manifest " + csv_path.string() + " line " + std::to_string(lineno) +
                          ": expected 6 fields, got " + std::to_string(f.size()));
        ManifestRow r;
        r.wsi_id = f[0];
        r.patch_path = f[1];
        r.mask_path = f[2];
        try {
            r.class_id = std::stoi(f[3]);
        } catch (const std::exception&) {
            throw IoError("manifest line " + std::to_string(lineno) + ": bad class_id: " + f[3]);
        }
        r.condition = condition_from_name(f[4]);
        r.split = f[5];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_manifest(const std::filesystem::path& csv_path, const std::vector<ManifestRow>& rows) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot write manifest: " + csv_path.string());
    out << kManifestHeader << "\n";
    for (const auto& r : rows) {
        out << r.wsi_id << ',' << r.patch_path << ',' << r.mask_path << ',' << r.class_id << ','
            << condition_name(r.condition) << ',' << r.split << "\n";
    }
    if (!out) throw IoError("write failed: " + csv_path.string());
}

std::filesystem::path resolve_manifest_path(const std::filesystem::path& manifest_csv,
                                            const std::string& stored_path) {
    std::filesystem::path p(stored_path);
    if (p.is_absolute()) return p;
    return manifest_csv.parent_path() / p;
}

}  // namespace mel
