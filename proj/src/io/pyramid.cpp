#include "mel/io/pyramid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "mel/core/errors.hpp"
#include "mel/io/png_io.hpp"

namespace mel::io {

using nlohmann::json;

const ImagePlane& ImagePyramid::level_nearest_mpp(double mpp) const {
    if (levels.empty()) throw MelError("pyramid has no levels");
    size_t best = 0;
    double best_d = std::abs(levels[0].mpp - mpp);
    for (size_t i = 1; i < levels.size(); ++i) {
        const double d = std::abs(levels[i].mpp - mpp);
        if (d < best_d) {
            best = i;
            best_d = d;
        }
    }
    return levels[best];
}

ImagePyramid load_pyramid(const std::filesystem::path& dir) {
    const auto sidecar = dir / "pyramid.json";
    std::ifstream in(sidecar);
    if (!in) throw IoError("cannot open pyramid sidecar: " + sidecar.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("bad pyramid sidecar " + sidecar.string() + ": " + e.what());
    }

    ImagePyramid pyr;
    pyr.modality = modality_from_name(j.at("modality").get<std::string>());
    for (const auto& lv : j.at("levels")) {
        const auto file = lv.at("file").get<std::string>();
        const double mpp = lv.at("mpp").get<double>();
        if (!(mpp > 0.0)) throw IoError("pyramid level mpp must be positive: " + sidecar.string());
        pyr.levels.push_back(load_image_png(dir / file, mpp, pyr.modality));
    }
    if (pyr.levels.empty()) throw IoError("pyramid has no levels: " + sidecar.string());
    std::sort(pyr.levels.begin(), pyr.levels.end(),
              [](const ImagePlane& a, const ImagePlane& b) { return a.mpp < b.mpp; });
    return pyr;
}

void save_pyramid(const std::filesystem::path& dir, const ImagePyramid& pyr) {
    if (pyr.levels.empty()) throw MelError("save_pyramid: no levels");
    std::filesystem::create_directories(dir);
    json j;
    j["modality"] = modality_name(pyr.modality);
    j["levels"] = json::array();
    for (size_t i = 0; i < pyr.levels.size(); ++i) {
        const std::string file = "level_" + std::to_string(i) + ".png";
        save_image_png(dir / file, pyr.levels[i]);
        j["levels"].push_back({{"file", file}, {"mpp", pyr.levels[i].mpp}});
    }
    std::ofstream out(dir / "pyramid.json");
    if (!out) throw IoError("cannot write pyramid sidecar in " + dir.string());
    out << j.dump(2) << "\n";
}

ImagePlane downsample2x(const ImagePlane& img) {
    const int oh = std::max(1, (img.h + 1) / 2);
    const int ow = std::max(1, (img.w + 1) / 2);
    ImagePlane out(oh, ow, img.c, img.mpp * 2.0, img.modality);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            const int y0 = 2 * y, x0 = 2 * x;
            const int y1 = std::min(y0 + 1, img.h - 1);
            const int x1 = std::min(x0 + 1, img.w - 1);
            for (int ch = 0; ch < img.c; ++ch) {
                const double s = static_cast<double>(img.at(y0, x0, ch)) + img.at(y0, x1, ch) +
                                 img.at(y1, x0, ch) + img.at(y1, x1, ch);
                out.at(y, x, ch) = static_cast<float>(s * 0.25);
            }
        }
    }
    return out;
}

ImagePyramid build_pyramid(const ImagePlane& base, int n_levels) {
    if (n_levels < 1) throw MelError("build_pyramid: n_levels must be >= 1");
    ImagePyramid pyr;
    pyr.modality = base.modality;
    pyr.levels.push_back(base);
    for (int i = 1; i < n_levels; ++i) pyr.levels.push_back(downsample2x(pyr.levels.back()));
    return pyr;
}

}  // namespace mel::io
