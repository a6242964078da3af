#include "mel/core/tiling.hpp"

#include <algorithm>

#include "mel/core/errors.hpp"

namespace mel {

namespace {

std::vector<int> axis_origins(int dim, int tile, int stride) {
    if (dim <= tile) return {0};
    std::vector<int> origins;
    for (int p = 0;; p += stride) {
        if (p + tile >= dim) {
            origins.push_back(dim - tile);  // clamp: last tile ends at the boundary
            break;
        }
        origins.push_back(p);
    }
    return origins;
}

}  // namespace

TilePlan plan_tiles(int h, int w, int tile, int overlap) {
    if (h < 1 || w < 1) throw InvalidTiling("plan_tiles: image dims must be >= 1");
    if (tile < 1) throw InvalidTiling("plan_tiles: tile size must be >= 1");
    if (overlap < 0 || overlap >= tile)
        throw InvalidTiling("plan_tiles: overlap must satisfy 0 <= overlap < tile");
    if (tile > std::max(h, w))
        throw InvalidTiling("plan_tiles: tile exceeds both image dimensions");

    const int stride = tile - overlap;
    const auto rows = axis_origins(h, tile, stride);
    const auto cols = axis_origins(w, tile, stride);

    TilePlan plan;
    plan.tile_size = tile;
    plan.overlap = overlap;
    plan.origins.reserve(rows.size() * cols.size());
    for (int r : rows)
        for (int c : cols) plan.origins.emplace_back(r, c);
    return plan;
}

}  // namespace mel
