#include <algorithm>
#include <cmath>
#include <vector>

#include "mel/reg/registration.hpp"

namespace mel::reg {

namespace {

constexpr float kLowContrastEps = 1e-6f;

// 1st/99th percentile stretch to [0,1] in place; returns false when the
// dynamic range is degenerate.
bool percentile_stretch(std::vector<float>& v) {
    std::vector<float> sorted(v);
    const size_t n = sorted.size();
    const size_t i1 = static_cast<size_t>(0.01 * static_cast<double>(n - 1));
    const size_t i99 = static_cast<size_t>(0.99 * static_cast<double>(n - 1));
    std::nth_element(sorted.begin(), sorted.begin() + i1, sorted.end());
    const float p1 = sorted[i1];
    std::nth_element(sorted.begin(), sorted.begin() + i99, sorted.end());
    const float p99 = sorted[i99];
    if (p99 - p1 < kLowContrastEps) return false;
    const float scale = 1.0f / (p99 - p1);
    for (float& x : v) x = std::clamp((x - p1) * scale, 0.0f, 1.0f);
    return true;
}

}  // namespace

ImagePlane preprocess_modality(const ImagePlane& img, bool* low_contrast) {
    img.check_valid();
    if (low_contrast) *low_contrast = false;

    std::vector<float> gray(img.pixel_count());
    if (img.modality == Modality::IF) {
        // Channel-max projection, then invert so bright signal becomes dark
        // (PAS tissue polarity).
        for (int y = 0; y < img.h; ++y)
            for (int x = 0; x < img.w; ++x) {
                float m = 0.0f;
                for (int ch = 0; ch < img.c; ++ch) m = std::max(m, img.at(y, x, ch));
                gray[static_cast<size_t>(y) * img.w + x] = 1.0f - m;
            }
    } else if (img.c == 1) {
        gray.assign(img.data.begin(), img.data.end());
    } else {
        // Rec.601 luminance; alpha (if present) ignored.
        for (int y = 0; y < img.h; ++y)
            for (int x = 0; x < img.w; ++x)
                gray[static_cast<size_t>(y) * img.w + x] =
                    0.299f * img.at(y, x, 0) + 0.587f * img.at(y, x, 1) + 0.114f * img.at(y, x, 2);
    }

    ImagePlane out(img.h, img.w, 1, img.mpp, img.modality);
    if (!percentile_stretch(gray)) {
        std::fill(out.data.begin(), out.data.end(), 0.5f);
        if (low_contrast) *low_contrast = true;
        return out;
    }
    out.data = std::move(gray);
    return out;
}

}  // namespace mel::reg
