#pragma once

#include <filesystem>
#include <vector>

#include "mel/core/image.hpp"

namespace mel::io {

// Multi-resolution slide stand-in: a directory of PNG levels plus a
// pyramid.json sidecar:
//   { "modality": "PAS",
//     "levels": [ { "file": "level_0.png", "mpp": 0.5 }, ... ] }
// Levels are kept sorted by mpp ascending (finest first).
struct ImagePyramid {
    Modality modality = Modality::PAS;
    std::vector<ImagePlane> levels;

    // Level whose mpp is closest to the requested one.
    const ImagePlane& level_nearest_mpp(double mpp) const;
};

ImagePyramid load_pyramid(const std::filesystem::path& dir);
void save_pyramid(const std::filesystem::path& dir, const ImagePyramid& pyr);

// 2x box-filter downsample (odd trailing row/col averaged over the
// remaining taps). mpp doubles.
ImagePlane downsample2x(const ImagePlane& img);

// Builds an n-level pyramid from a base plane by repeated downsample2x.
ImagePyramid build_pyramid(const ImagePlane& base, int n_levels);

}  // namespace mel::io
