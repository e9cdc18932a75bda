#include "mask.hpp"

#include <cmath>
#include <vector>

#include "error.hpp"
#include "rng.hpp"

namespace sg {

void MaskConfig::validate() const {
    if (!(target_coverage > 0.0 && target_coverage < 1.0))
        throw Error(ErrorKind::Usage, "target_coverage must be in (0,1)");
    if (coverage_tolerance < 0.0)
        throw Error(ErrorKind::Usage, "coverage_tolerance must be >= 0");
    if (width_min < 1 || width_max < width_min)
        throw Error(ErrorKind::Usage, "width_range must satisfy 1 <= min <= max");
    if (stroke_count_min < 1 || stroke_count_max < stroke_count_min)
        throw Error(ErrorKind::Usage, "stroke_count_range must satisfy 1 <= min <= max");
}

namespace {

constexpr int kStampBudget = 10000;

// One stamped disk plus the pixels it newly flipped, so overshooting
// strokes can be rolled back stamp by stamp.
struct Stamp {
    std::vector<int> flipped;
};

} // namespace

MaskMap generate_brush_mask(int height, int width, const MaskConfig& config) {
    if (height < 8 || width < 8)
        throw Error(ErrorKind::Usage, "mask dimensions must be at least 8x8");
    config.validate();

    Rng rng(config.seed);
    MaskMap mask(height, width);

    const long total = static_cast<long>(height) * width;
    const double lo = config.target_coverage - config.coverage_tolerance;
    const double hi = config.target_coverage + config.coverage_tolerance;
    long missing = 0;
    int stamps = 0;

    auto cov = [&] { return static_cast<double>(missing) / static_cast<double>(total); };

    auto stamp_disk = [&](int cy, int cx, int r, Stamp& stamp) {
        for (int y = cy - r; y <= cy + r; ++y) {
            if (y < 0 || y >= height) continue;
            for (int x = cx - r; x <= cx + r; ++x) {
                if (x < 0 || x >= width) continue;
                int dy = y - cy, dx = x - cx;
                if (dy * dy + dx * dx > r * r) continue;
                if (!mask.missing(y, x)) {
                    mask.set(y, x, true);
                    stamp.flipped.push_back(y * width + x);
                    ++missing;
                }
            }
        }
    };

    auto pop_stamp = [&](const Stamp& stamp) {
        for (int idx : stamp.flipped) {
            mask.set(idx / width, idx % width, false);
            --missing;
        }
    };

    bool done = false;
    while (!done) {
        // one stroke: a random walk stamped disk by disk
        std::vector<Stamp> stroke;
        double px = rng.uniform(0.0, static_cast<double>(width));
        double py = rng.uniform(0.0, static_cast<double>(height));
        int segments = rng.uniform_int(config.stroke_count_min, config.stroke_count_max);

        for (int s = 0; s < segments && !done; ++s) {
            double angle = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
            double length = rng.uniform(width / 8.0, width / 3.0);
            int radius = rng.uniform_int(config.width_min, config.width_max);
            double ux = std::cos(angle), uy = std::sin(angle);

            int steps = static_cast<int>(std::ceil(length));
            for (int k = 0; k <= steps && !done; ++k) {
                double t = length * k / steps;
                int cx = static_cast<int>(std::lround(px + ux * t));
                int cy = static_cast<int>(std::lround(py + uy * t));

                if (++stamps > kStampBudget)
                    throw Error(ErrorKind::Generation,
                                "coverage band unreachable within stamp budget");
                stroke.emplace_back();
                stamp_disk(cy, cx, radius, stroke.back());

                if (cov() >= config.target_coverage) {
                    // overshot the band: erode this stroke's latest disks
                    while (cov() > hi && !stroke.empty()) {
                        pop_stamp(stroke.back());
                        stroke.pop_back();
                    }
                    if (cov() >= lo && cov() <= hi) done = true;
                    // eroded below the band: abandon this stroke, draw another
                    if (!done) s = segments;
                }
            }
            px += ux * length;
            py += uy * length;
        }
    }

    if (missing == 0 || missing == total)
        throw Error(ErrorKind::Generation, "mask must contain known and missing pixels");
    return mask;
}

double coverage(const MaskMap& mask) {
    return static_cast<double>(mask.missing_count()) /
           (static_cast<double>(mask.height()) * static_cast<double>(mask.width()));
}

ImageTensor apply_mask(const ImageTensor& image, const MaskMap& mask) {
    if (image.height() != mask.height() || image.width() != mask.width())
        throw Error(ErrorKind::Dimension, "image and mask shapes differ");
    ImageTensor out = image;
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask.missing(y, x)) continue;
            for (int c = 0; c < out.channels(); ++c) out.at(c, y, x) = 0.0f;
        }
    }
    return out;
}

} // namespace sg
