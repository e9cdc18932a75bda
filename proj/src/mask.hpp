#pragma once

#include <cstdint>

#include "tensor.hpp"

namespace sg {

struct MaskConfig {
    double target_coverage = 0.20;
    double coverage_tolerance = 0.05;
    // segments per brush stroke
    int stroke_count_min = 4;
    int stroke_count_max = 12;
    // disk radius in pixels
    int width_min = 1;
    int width_max = 3;
    uint64_t seed = 0;

    void validate() const;
};

// Random brush strokes, stamped disk by disk until coverage reaches the
// target; a stroke that overshoots target+tolerance has its most recent
// disks eroded until coverage is back inside the band. Pure function of
// (height, width, config). Throws ErrorKind::Generation when the band is
// unreachable within a 10,000-stamp budget.
MaskMap generate_brush_mask(int height, int width, const MaskConfig& config);

/// Fraction of pixels marked missing.
double coverage(const MaskMap& mask);

// Known pixels preserved, missing pixels zeroed across all channels.
ImageTensor apply_mask(const ImageTensor& image, const MaskMap& mask);

} // namespace sg
