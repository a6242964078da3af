#include "mel/io/transform_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mel/core/errors.hpp"

namespace mel::io {

using nlohmann::json;

std::string transform_to_json(const AffineTransform2D& t) {
    json j;
    j["m"] = {{t.m[0][0], t.m[0][1], t.m[0][2]}, {t.m[1][0], t.m[1][1], t.m[1][2]}};
    return j.dump();
}

AffineTransform2D transform_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("bad transform JSON: ") + e.what());
    }
    if (!j.contains("m") || !j["m"].is_array() || j["m"].size() != 2)
        throw IoError("transform JSON must contain a 2x3 'm' array");
    AffineTransform2D t;
    for (int i = 0; i < 2; ++i) {
        if (!j["m"][i].is_array() || j["m"][i].size() != 3)
            throw IoError("transform JSON must contain a 2x3 'm' array");
        for (int k = 0; k < 3; ++k) t.m[i][k] = j["m"][i][k].get<double>();
    }
    return t;
}

void save_transform(const std::filesystem::path& path, const AffineTransform2D& t) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write transform: " + path.string());
    out << transform_to_json(t) << "\n";
}

AffineTransform2D load_transform(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open transform: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return transform_from_json(ss.str());
}

}  // namespace mel::io
