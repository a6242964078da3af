#include "mel/core/affine.hpp"

#include <cmath>

namespace mel {

AffineTransform2D AffineTransform2D::translation(double tx, double ty) {
    AffineTransform2D t;
    t.m[0][2] = tx;
    t.m[1][2] = ty;
    return t;
}

AffineTransform2D AffineTransform2D::scaling(double sx, double sy) {
    AffineTransform2D t;
    t.m[0][0] = sx;
    t.m[1][1] = sy;
    return t;
}

AffineTransform2D AffineTransform2D::rotation_deg(double deg, double cx, double cy) {
    const double a = deg * (3.14159265358979323846 / 180.0);
    const double c = std::cos(a), s = std::sin(a);
    AffineTransform2D t;
    t.m[0][0] = c;
    t.m[0][1] = -s;
    t.m[1][0] = s;
    t.m[1][1] = c;
    // rotate about (cx, cy): T(c) * R * T(-c)
    t.m[0][2] = cx - c * cx + s * cy;
    t.m[1][2] = cy - s * cx - c * cy;
    return t;
}

bool AffineTransform2D::invertible(double tol) const { return std::abs(det()) > tol; }

AffineTransform2D AffineTransform2D::inverse() const {
    const double d = det();
    if (std::abs(d) <= 1e-12)
        throw SingularTransform("affine linear part is singular (det = " + std::to_string(d) + ")");
    const double inv = 1.0 / d;
    AffineTransform2D r;
    r.m[0][0] = m[1][1] * inv;
    r.m[0][1] = -m[0][1] * inv;
    r.m[1][0] = -m[1][0] * inv;
    r.m[1][1] = m[0][0] * inv;
    r.m[0][2] = -(r.m[0][0] * m[0][2] + r.m[0][1] * m[1][2]);
    r.m[1][2] = -(r.m[1][0] * m[0][2] + r.m[1][1] * m[1][2]);
    return r;
}

double AffineTransform2D::max_abs_diff(const AffineTransform2D& o) const {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(m[i][j] - o.m[i][j]));
    return d;
}

AffineTransform2D compose_affine(const AffineTransform2D& first, const AffineTransform2D& second) {
    if (!first.invertible() || !second.invertible())
        throw SingularTransform("compose_affine: operand is singular");
    const auto& a = second.m;  // applied last
    const auto& b = first.m;   // applied first
    AffineTransform2D r;
    r.m[0][0] = a[0][0] * b[0][0] + a[0][1] * b[1][0];
    r.m[0][1] = a[0][0] * b[0][1] + a[0][1] * b[1][1];
    r.m[0][2] = a[0][0] * b[0][2] + a[0][1] * b[1][2] + a[0][2];
    r.m[1][0] = a[1][0] * b[0][0] + a[1][1] * b[1][0];
    r.m[1][1] = a[1][0] * b[0][1] + a[1][1] * b[1][1];
    r.m[1][2] = a[1][0] * b[0][2] + a[1][1] * b[1][2] + a[1][2];
    return r;
}

ImagePlane apply_affine(const ImagePlane& img, const AffineTransform2D& t, int out_h, int out_w) {
    if (out_h < 1 || out_w < 1) throw MelError("apply_affine: output dims must be >= 1");
    const AffineTransform2D inv = t.inverse();  // fixed -> moving sampling transform

    ImagePlane out(out_h, out_w, img.c, img.mpp, img.modality, 0.0f);
    const int h = img.h, w = img.w, c = img.c;
    for (int y = 0; y < out_h; ++y) {
        for (int x = 0; x < out_w; ++x) {
            const double sx = inv.m[0][0] * x + inv.m[0][1] * y + inv.m[0][2];
            const double sy = inv.m[1][0] * x + inv.m[1][1] * y + inv.m[1][2];
            const double fx0 = std::floor(sx);
            const double fy0 = std::floor(sy);
            const int x0 = static_cast<int>(fx0);
            const int y0 = static_cast<int>(fy0);
            const double ax = sx - fx0;
            const double ay = sy - fy0;
            if (ax == 0.0 && ay == 0.0) {
                // exact grid hit: copy, bit-identical for identity/integer shifts
                if (x0 >= 0 && x0 < w && y0 >= 0 && y0 < h) {
                    for (int ch = 0; ch < c; ++ch) out.at(y, x, ch) = img.at(y0, x0, ch);
                }
                continue;
            }
            const bool in00 = x0 >= 0 && x0 < w && y0 >= 0 && y0 < h;
            const bool in01 = x0 + 1 >= 0 && x0 + 1 < w && y0 >= 0 && y0 < h;
            const bool in10 = x0 >= 0 && x0 < w && y0 + 1 >= 0 && y0 + 1 < h;
            const bool in11 = x0 + 1 >= 0 && x0 + 1 < w && y0 + 1 >= 0 && y0 + 1 < h;
            if (!(in00 || in01 || in10 || in11)) continue;  // fully outside: keep fill 0
            const double w00 = (1.0 - ax) * (1.0 - ay);
            const double w01 = ax * (1.0 - ay);
            const double w10 = (1.0 - ax) * ay;
            const double w11 = ax * ay;
            for (int ch = 0; ch < c; ++ch) {
                double v = 0.0;
                if (in00) v += w00 * img.at(y0, x0, ch);
                if (in01) v += w01 * img.at(y0, x0 + 1, ch);
                if (in10) v += w10 * img.at(y0 + 1, x0, ch);
                if (in11) v += w11 * img.at(y0 + 1, x0 + 1, ch);
                out.at(y, x, ch) = static_cast<float>(v);
            }
        }
    }
    return out;
}

}  // namespace mel
