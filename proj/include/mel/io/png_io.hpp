#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "mel/core/image.hpp"

namespace mel::io {

// Raw 8-bit raster as decoded (gray, RGB or RGBA).
struct Png8 {
    int h = 0;
    int w = 0;
    int c = 0;
    std::vector<uint8_t> data;  // row-major, channel-interleaved
};

Png8 read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Png8& img);

// ImagePlane bridges: floats in [0,1] <-> 8-bit with round-to-nearest.
void save_image_png(const std::filesystem::path& path, const ImagePlane& img);
ImagePlane load_image_png(const std::filesystem::path& path, double mpp, Modality modality);

// Masks persist as single-channel 8-bit PNG with values {0, 255}.
void save_mask_png(const std::filesystem::path& path, const Mask& mask);
Mask load_mask_png(const std::filesystem::path& path);  // rejects values outside {0, 255}

}  // namespace mel::io
