#include "mel/io/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

#include "mel/core/errors.hpp"

namespace mel::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

Png8 read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) throw IoError("cannot open PNG for reading: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png_create_info_struct failed");
    }

    Png8 out;
    std::vector<png_bytep> row_ptrs;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("PNG decode failed: " + path.string());
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    // Normalize everything to 8-bit gray / RGB / RGBA.
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3 && channels != 4) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("unsupported PNG channel count in " + path.string());
    }

    out.h = static_cast<int>(h);
    out.w = static_cast<int>(w);
    out.c = channels;
    out.data.resize(static_cast<size_t>(h) * w * channels);
    row_ptrs.resize(h);
    for (png_uint_32 y = 0; y < h; ++y)
        row_ptrs[y] = out.data.data() + static_cast<size_t>(y) * w * channels;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

void write_png(const std::filesystem::path& path, const Png8& img) {
    if (img.h < 1 || img.w < 1 || (img.c != 1 && img.c != 3 && img.c != 4))
        throw IoError("write_png: bad raster shape");
    if (img.data.size() != static_cast<size_t>(img.h) * img.w * img.c)
        throw IoError("write_png: data size mismatch");

    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw IoError("cannot open PNG for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG encode failed: " + path.string());
    }

    png_init_io(png, fp.get());
    const int color_type = img.c == 1   ? PNG_COLOR_TYPE_GRAY
                           : img.c == 3 ? PNG_COLOR_TYPE_RGB
                                        : PNG_COLOR_TYPE_RGBA;
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.w), static_cast<png_uint_32>(img.h), 8,
                 color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> row_ptrs(img.h);
    for (int y = 0; y < img.h; ++y)
        row_ptrs[y] =
            const_cast<png_bytep>(img.data.data() + static_cast<size_t>(y) * img.w * img.c);
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void save_image_png(const std::filesystem::path& path, const ImagePlane& img) {
    Png8 raw;
    raw.h = img.h;
    raw.w = img.w;
    raw.c = img.c;
    raw.data.resize(img.data.size());
    for (size_t i = 0; i < img.data.size(); ++i) {
        const float v = std::min(1.0f, std::max(0.0f, img.data[i]));
        raw.data[i] = static_cast<uint8_t>(std::lround(v * 255.0f));
    }
    write_png(path, raw);
}

ImagePlane load_image_png(const std::filesystem::path& path, double mpp, Modality modality) {
    const Png8 raw = read_png(path);
    ImagePlane img(raw.h, raw.w, raw.c, mpp, modality);
    for (size_t i = 0; i < raw.data.size(); ++i)
        img.data[i] = static_cast<float>(raw.data[i]) / 255.0f;
    return img;
}

void save_mask_png(const std::filesystem::path& path, const Mask& mask) {
    mask.check_binary();
    Png8 raw;
    raw.h = mask.h;
    raw.w = mask.w;
    raw.c = 1;
    raw.data.resize(mask.v.size());
    for (size_t i = 0; i < mask.v.size(); ++i) raw.data[i] = mask.v[i] ? 255 : 0;
    write_png(path, raw);
}

Mask load_mask_png(const std::filesystem::path& path) {
    const Png8 raw = read_png(path);
    if (raw.c != 1) throw IoError("mask PNG must be single-channel: " + path.string());
    Mask mask(raw.h, raw.w);
    for (size_t i = 0; i < raw.data.size(); ++i) {
        if (raw.data[i] == 0)
            mask.v[i] = 0;
        else if (raw.data[i] == 255)
            mask.v[i] = 1;
        else
            throw IoError("mask PNG has values outside {0,255}: " + path.string());
    }
    return mask;
}

}  // namespace mel::io
