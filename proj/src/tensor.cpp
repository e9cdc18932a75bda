#include "tensor.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace sg {

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    if (shape_.empty() || shape_.size() > 4)
        throw Error(ErrorKind::Dimension, "tensor rank must be 1..4");
    size_t total = 1;
    for (int d : shape_) {
        if (d <= 0) throw Error(ErrorKind::Dimension, "tensor extent must be positive");
        total *= static_cast<size_t>(d);
    }
    data_.assign(total, 0.0f);
}

void Tensor::fill(float v) { std::fill(data_.begin(), data_.end(), v); }

void Tensor::require_finite(const std::string& what) const {
    for (float v : data_) {
        if (!std::isfinite(v))
            throw Error(ErrorKind::Numeric, "non-finite value in " + what);
    }
}

ImageTensor::ImageTensor(int height, int width, int channels)
    : height_(height), width_(width), channels_(channels),
      data_({channels, height, width}) {
    if (channels != 1 && channels != 3)
        throw Error(ErrorKind::Dimension, "image channels must be 1 or 3");
}

ImageTensor::ImageTensor(int height, int width, int channels, Tensor data)
    : height_(height), width_(width), channels_(channels), data_(std::move(data)) {
    if (channels != 1 && channels != 3)
        throw Error(ErrorKind::Dimension, "image channels must be 1 or 3");
    if (data_.rank() != 3 || data_.dim(0) != channels || data_.dim(1) != height ||
        data_.dim(2) != width)
        throw Error(ErrorKind::Dimension, "image tensor shape mismatch");
}

void ImageTensor::validate() const {
    if (channels_ != 1 && channels_ != 3)
        throw Error(ErrorKind::Dimension, "image channels must be 1 or 3");
    for (float v : data_.raw()) {
        if (!(v >= 0.0f && v <= 1.0f))
            throw Error(ErrorKind::Numeric, "image value outside [0,1]");
    }
}

MaskMap::MaskMap(int height, int width)
    : height_(height), width_(width),
      data_(static_cast<size_t>(height) * static_cast<size_t>(width), 0) {
    if (height <= 0 || width <= 0)
        throw Error(ErrorKind::Dimension, "mask extents must be positive");
}

int MaskMap::missing_count() const {
    int n = 0;
    for (uint8_t v : data_) n += v != 0;
    return n;
}

const char* field_role_name(FieldRole role) {
    switch (role) {
    case FieldRole::Edge: return "edge";
    case FieldRole::Distance: return "distance";
    case FieldRole::Amplitude: return "amplitude";
    case FieldRole::Splat: return "splat";
    case FieldRole::Attention: return "attention";
    case FieldRole::Mask: return "mask";
    }
    return "unknown";
}

FieldMap::FieldMap(FieldRole role, int height, int width)
    : role_(role), height_(height), width_(width),
      data_(static_cast<size_t>(height) * static_cast<size_t>(width), 0.0f) {
    if (height <= 0 || width <= 0)
        throw Error(ErrorKind::Dimension, "field extents must be positive");
}

void FieldMap::require_finite(const std::string& what) const {
    for (float v : data_) {
        if (!std::isfinite(v))
            throw Error(ErrorKind::Numeric, "non-finite value in " + what);
    }
}

ImageTensor to_grayscale(const ImageTensor& image) {
    if (image.channels() == 1) return image;
    ImageTensor out(image.height(), image.width(), 1);
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            float v = 0.299f * image.at(0, y, x) + 0.587f * image.at(1, y, x) +
                      0.114f * image.at(2, y, x);
            out.at(0, y, x) = std::min(1.0f, std::max(0.0f, v));
        }
    }
    return out;
}

} // namespace sg
