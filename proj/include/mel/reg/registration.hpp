#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mel/core/affine.hpp"
#include "mel/core/image.hpp"
#include "mel/core/tiling.hpp"
#include "mel/io/pyramid.hpp"

namespace mel::reg {

enum class CoarseMetric { NCC, PhaseCorrelation };
enum class FineMetric { MSE, NCC };

CoarseMetric coarse_metric_from_name(const std::string& name);
FineMetric fine_metric_from_name(const std::string& name);

struct RegistrationConfig {
    double coarse_level_mpp = 2.0;  // 5x magnification
    double fine_level_mpp = 0.5;    // 20x magnification
    CoarseMetric coarse_metric = CoarseMetric::NCC;
    FineMetric fine_metric = FineMetric::MSE;
    int max_iters = 120;
    double step_size = 0.25;
    int pyramid_levels = 3;
    double convergence_tol = 1e-7;

    // Translation search: window half-extent as a fraction of each
    // dimension; candidate shifts with less than min_overlap_frac of the
    // moving area overlapping the fixed image are rejected.
    double search_window_frac = 0.25;
    double min_overlap_frac = 0.10;

    // Region tiling at the fine level.
    int tile_size = 4096;
    int tile_overlap = 1024;

    int workers = 1;

    void check_valid() const;  // throws ConfigError
};

// Cross-modality intensity normalization: single-channel output, IF
// channel-max-projected and inverted to PAS polarity, both modalities
// stretched to [0,1] by their 1st/99th percentiles. A (near-)constant
// input yields an all-0.5 plane and sets *low_contrast.
ImagePlane preprocess_modality(const ImagePlane& img, bool* low_contrast = nullptr);

// Pure integer translation (moving -> fixed) maximizing the coarse metric
// over an exhaustive integer-shift window (+-search_window_frac of each
// dimension). NCC sums are computed exactly for every shift via FFT
// cross-correlation plus integral images. Deterministic; ties broken by
// lexicographically smaller (dy, dx). Throws InvalidWindow when no
// candidate shift is admissible.
AffineTransform2D estimate_global_translation(const ImagePlane& fixed, const ImagePlane& moving,
                                              const RegistrationConfig& cfg);

struct RefineResult {
    AffineTransform2D transform;  // moving -> fixed
    double final_loss = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Refinement diverged (non-finite metric); carries the best transform seen.
class DivergedRefinement : public MelError {
public:
    DivergedRefinement(const std::string& msg, const AffineTransform2D& best, double loss)
        : MelError(msg), best_transform(best), best_loss(loss) {}
    AffineTransform2D best_transform;
    double best_loss = 0.0;
};

// Gradient descent over the 6 affine parameters (internally the inverse
// sampling transform in center-normalized coordinates, so all parameters
// share a scale) with backtracking line search and a coarse-to-fine
// pyramid. Monotone in the fine-level loss: the result never scores worse
// than `init`.
RefineResult refine_affine(const ImagePlane& fixed, const ImagePlane& moving,
                           const AffineTransform2D& init, const RegistrationConfig& cfg);

// Loss evaluated by refine_affine (exposed for tests): metric between
// apply_affine(moving, t) on the fixed grid and fixed.
double registration_loss(const ImagePlane& fixed, const ImagePlane& moving,
                         const AffineTransform2D& t, FineMetric metric);

struct TileResult {
    AffineTransform2D refined;   // residual correction, fixed-frame
    AffineTransform2D composed;  // full moving -> fixed transform for this tile
    double final_loss = 0.0;
    bool diverged = false;
};

struct RegistrationResult {
    AffineTransform2D global_t;  // moving -> fixed at the fine level
    TilePlan plan;
    std::map<std::pair<int, int>, TileResult> tiles;  // keyed by tile origin (row, col)
};

// Two-stage pipeline: global translation at the coarse level, rescaled to
// fine-level pixels, then per-tile affine refinement; composed transforms
// satisfy composed == compose_affine(global_t, refined). Tile-level
// divergence is recorded per tile, never a global failure.
RegistrationResult register_pair(const io::ImagePyramid& pas, const io::ImagePyramid& if_img,
                                 const RegistrationConfig& cfg);

// Output layout: <dir>/global.json, <dir>/tiles/<row>_<col>.json (composed
// transforms) and <dir>/report.csv with per-tile final losses.
void save_registration(const std::filesystem::path& dir, const RegistrationResult& result);

}  // namespace mel::reg
