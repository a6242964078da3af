#pragma once

#include <array>

#include "mel/core/image.hpp"

namespace mel {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// 2x3 row-major affine transform on pixel coordinates, mapping moving ->
// fixed: (x', y') = (m00*x + m01*y + m02, m10*x + m11*y + m12). The
// coordinate convention is (row = y, col = x) with origin at the top-left
// pixel center.
struct AffineTransform2D {
    std::array<std::array<double, 3>, 2> m{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};

    static AffineTransform2D identity() { return AffineTransform2D{}; }
    static AffineTransform2D translation(double tx, double ty);
    static AffineTransform2D scaling(double sx, double sy);
    // Rotation by `deg` degrees (counter-clockwise in (x right, y down)
    // pixel axes) about the point (cx, cy).
    static AffineTransform2D rotation_deg(double deg, double cx = 0.0, double cy = 0.0);

    Vec2 apply(Vec2 p) const {
        return {m[0][0] * p.x + m[0][1] * p.y + m[0][2],
                m[1][0] * p.x + m[1][1] * p.y + m[1][2]};
    }

    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool invertible(double tol = 1e-12) const;

    // Throws SingularTransform when the linear part is not invertible.
    AffineTransform2D inverse() const;

    double max_abs_diff(const AffineTransform2D& o) const;
};

// Matrix composition such that applying the result equals applying `first`
// then `second`: result(p) == second(first(p)).
AffineTransform2D compose_affine(const AffineTransform2D& first, const AffineTransform2D& second);

// Inverse-warp resampling with bilinear interpolation and zero fill for
// out-of-bounds samples. `t` maps moving -> fixed; the output is the moving
// image resampled on the fixed grid of size out_h x out_w. Metadata (mpp,
// modality) is preserved. Throws SingularTransform when t is singular.
ImagePlane apply_affine(const ImagePlane& img, const AffineTransform2D& t, int out_h, int out_w);

}  // namespace mel
