#pragma once

#include "tensor.hpp"

namespace sg {

/// Per-pixel horizontal/vertical filter responses.
struct GradientField {
    FieldMap gx; // responds to horizontal intensity change
    FieldMap gy;
    int height = 0;
    int width = 0;
};

// 3x3 Sobel on a single-channel image with replicate-edge padding,
// correlation convention:
//   Sx = [-1 0 1; -2 0 2; -1 0 1],  Sy = Sx^T.
GradientField sobel_gradients(const ImageTensor& gray);

/// sqrt(gx^2 + gy^2), elementwise.
FieldMap edge_magnitude(const GradientField& grad);

// Grayscale + Sobel + magnitude in one step; the usual guidance path
// feeds this the incomplete image.
FieldMap edge_map(const ImageTensor& image);

} // namespace sg
