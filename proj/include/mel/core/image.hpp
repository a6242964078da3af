#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mel/core/errors.hpp"

namespace mel {

enum class Modality { PAS, IF };

const char* modality_name(Modality m);
Modality modality_from_name(const std::string& name);

// H x W x C raster of unit-interval floats with microns-per-pixel metadata.
// Row-major, channel-interleaved: index = (y * w + x) * c + ch.
struct ImagePlane {
    int h = 0;
    int w = 0;
    int c = 0;
    double mpp = 1.0;
    Modality modality = Modality::PAS;
    std::vector<float> data;

    ImagePlane() = default;
    ImagePlane(int h_, int w_, int c_, double mpp_, Modality modality_, float fill = 0.0f)
        : h(h_), w(w_), c(c_), mpp(mpp_), modality(modality_),
          data(static_cast<size_t>(h_) * static_cast<size_t>(w_) * static_cast<size_t>(c_), fill) {}

    size_t idx(int y, int x, int ch) const {
        return (static_cast<size_t>(y) * static_cast<size_t>(w) + static_cast<size_t>(x)) *
                   static_cast<size_t>(c) +
               static_cast<size_t>(ch);
    }
    float& at(int y, int x, int ch) { return data[idx(y, x, ch)]; }
    float at(int y, int x, int ch) const { return data[idx(y, x, ch)]; }

    size_t pixel_count() const { return static_cast<size_t>(h) * static_cast<size_t>(w); }
    bool same_shape(const ImagePlane& o) const { return h == o.h && w == o.w && c == o.c; }

    // Throws MelError when a type invariant is violated (dims, channel
    // count, mpp, value range).
    void check_valid() const;
};

// Binary mask over an H x W grid, values in {0, 1}.
struct Mask {
    int h = 0;
    int w = 0;
    std::vector<uint8_t> v;

    Mask() = default;
    Mask(int h_, int w_, uint8_t fill = 0)
        : h(h_), w(w_), v(static_cast<size_t>(h_) * static_cast<size_t>(w_), fill) {}

    size_t idx(int y, int x) const {
        return static_cast<size_t>(y) * static_cast<size_t>(w) + static_cast<size_t>(x);
    }
    uint8_t& at(int y, int x) { return v[idx(y, x)]; }
    uint8_t at(int y, int x) const { return v[idx(y, x)]; }

    bool same_shape(const Mask& o) const { return h == o.h && w == o.w; }
    size_t count() const;  // number of set pixels
    bool empty_mask() const { return count() == 0; }
    void check_binary() const;  // throws MelError on values outside {0,1}
};

}  // namespace mel
