#pragma once

#include <utility>
#include <vector>

namespace mel {

// Overlapping tile grid over an H x W image. Origins are (row, col)
// top-left coordinates; the stride between origins is tile_size - overlap
// and the last tile in each axis is shifted inward so it ends exactly at
// the image boundary (never padded).
struct TilePlan {
    int tile_size = 0;
    int overlap = 0;
    std::vector<std::pair<int, int>> origins;  // (row, col), row-major order
};

// Throws InvalidTiling unless 0 <= overlap < tile <= max(h, w) and
// h, w >= 1. An axis shorter than `tile` gets a single origin clamped to 0.
TilePlan plan_tiles(int h, int w, int tile, int overlap);

}  // namespace mel
