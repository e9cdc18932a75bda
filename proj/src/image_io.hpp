#pragma once

#include <string>
#include <utility>

#include "tensor.hpp"

namespace sg {

// NetPBM, binary, maxval 255. P5 loads as 1 channel, P6 as 3.
// Pixel byte v maps to v/255; saving quantizes with round-half-up and
// clamps to [0,255].
ImageTensor load_ppm(const std::string& path);
void save_ppm(const ImageTensor& image, const std::string& path);

uint8_t quantize_u8(float v);

// CIFAR-10 binary batch: 3073-byte records, 1 label byte then 3072 pixel
// bytes in channel-planar R,G,B order, each plane 32x32 row-major.
std::pair<ImageTensor, int> load_cifar10_batch(const std::string& path, int index);
int cifar10_record_count(const std::string& path);

// FieldMap file: magic "SPLT", then little-endian u32 version=1, role,
// height, width, then height*width little-endian float32, row-major.
void save_field(const FieldMap& field, const std::string& path);
FieldMap load_field(const std::string& path);

// Masks travel as FieldRole::Mask fields (values exactly 0/1).
FieldMap mask_to_field(const MaskMap& mask);
MaskMap field_to_mask(const FieldMap& field);

// P5 previews: mask uses byte 255 = missing, 0 = known; fields are
// min-max scaled to 8 bits (constant field saves as all zeros).
void save_mask_pgm(const MaskMap& mask, const std::string& path);
void save_field_pgm(const FieldMap& field, const std::string& path);

} // namespace sg
