#include "mel/core/image.hpp"

#include <algorithm>
#include <numeric>

namespace mel {

const char* modality_name(Modality m) { return m == Modality::PAS ? "PAS" : "IF"; }

Modality modality_from_name(const std::string& name) {
    if (name == "PAS" || name == "pas") return Modality::PAS;
    if (name == "IF" || name == "if") return Modality::IF;
    throw MelError("unknown modality: " + name);
}

void ImagePlane::check_valid() const {
    if (h < 1 || w < 1) throw MelError("ImagePlane: dims must be >= 1");
    if (c != 1 && c != 3 && c != 4) throw MelError("ImagePlane: channel count must be 1, 3 or 4");
    if (!(mpp > 0.0)) throw MelError("ImagePlane: mpp must be positive");
    if (data.size() != static_cast<size_t>(h) * static_cast<size_t>(w) * static_cast<size_t>(c))
        throw MelError("ImagePlane: data size does not match dims");
    for (float v : data) {
        if (!(v >= 0.0f && v <= 1.0f)) throw MelError("ImagePlane: values must lie in [0,1]");
    }
}

size_t Mask::count() const {
    size_t n = 0;
    for (uint8_t x : v) n += (x != 0);
    return n;
}

void Mask::check_binary() const {
    if (h < 1 || w < 1) throw MelError("Mask: dims must be >= 1");
    if (v.size() != static_cast<size_t>(h) * static_cast<size_t>(w))
        throw MelError("Mask: data size does not match dims");
    for (uint8_t x : v) {
        if (x > 1) throw MelError("Mask: values must be 0 or 1");
    }
}

}  // namespace mel
