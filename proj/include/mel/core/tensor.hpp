#pragma once

#include <cstddef>
#include <vector>

#include "mel/core/image.hpp"

namespace mel {

// Dense H x W x C grid of doubles, row-major channel-interleaved. The
// numeric workhorse for the network and the loss; image rasters are float,
// everything differentiated is double.
struct Tensor {
    int h = 0;
    int w = 0;
    int c = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int h_, int w_, int c_, double fill = 0.0)
        : h(h_), w(w_), c(c_),
          v(static_cast<size_t>(h_) * static_cast<size_t>(w_) * static_cast<size_t>(c_), fill) {}

    size_t idx(int y, int x, int ch) const {
        return (static_cast<size_t>(y) * static_cast<size_t>(w) + static_cast<size_t>(x)) *
                   static_cast<size_t>(c) +
               static_cast<size_t>(ch);
    }
    double& at(int y, int x, int ch) { return v[idx(y, x, ch)]; }
    double at(int y, int x, int ch) const { return v[idx(y, x, ch)]; }

    size_t size() const { return v.size(); }
    size_t pixel_count() const { return static_cast<size_t>(h) * static_cast<size_t>(w); }
    bool same_shape(const Tensor& o) const { return h == o.h && w == o.w && c == o.c; }

    static Tensor from_image(const ImagePlane& img) {
        Tensor t(img.h, img.w, img.c);
        for (size_t i = 0; i < t.v.size(); ++i) t.v[i] = static_cast<double>(img.data[i]);
        return t;
    }
};

}  // namespace mel
