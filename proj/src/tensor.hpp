#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sg {

/// Dense row-major float32 array with up to 4 axes (width fastest).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape);

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

    const std::vector<int>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(data_.size()); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    std::vector<float>& raw() { return data_; }
    const std::vector<float>& raw() const { return data_; }

    float& operator[](int i) { return data_[static_cast<size_t>(i)]; }
    float operator[](int i) const { return data_[static_cast<size_t>(i)]; }

    // rank-3 [C,H,W] access
    float& at(int c, int h, int w) {
        return data_[static_cast<size_t>((c * shape_[1] + h) * shape_[2] + w)];
    }
    float at(int c, int h, int w) const {
        return data_[static_cast<size_t>((c * shape_[1] + h) * shape_[2] + w)];
    }

    // rank-4 [B,C,H,W] access
    float& at(int b, int c, int h, int w) {
        return data_[static_cast<size_t>(((b * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }
    float at(int b, int c, int h, int w) const {
        return data_[static_cast<size_t>(((b * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }

    void fill(float v);
    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    /// Throws ErrorKind::Numeric naming `what` if any element is NaN/Inf.
    void require_finite(const std::string& what) const;

private:
    std::vector<int> shape_;
    std::vector<float> data_;
};

/// H×W×C image, values in [0,1], stored as a [C,H,W] tensor. Channels 1 or 3.
class ImageTensor {
public:
    ImageTensor() = default;
    ImageTensor(int height, int width, int channels);
    ImageTensor(int height, int width, int channels, Tensor data);

    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }

    float& at(int c, int y, int x) { return data_.at(c, y, x); }
    float at(int c, int y, int x) const { return data_.at(c, y, x); }

    Tensor& tensor() { return data_; }
    const Tensor& tensor() const { return data_; }

    /// Throws on NaN, out-of-range values, or bad channel count.
    void validate() const;

private:
    int height_ = 0;
    int width_ = 0;
    int channels_ = 0;
    Tensor data_;
};

/// Binary per-pixel mask; 1 = missing, 0 = known.
class MaskMap {
public:
    MaskMap() = default;
    MaskMap(int height, int width);

    int height() const { return height_; }
    int width() const { return width_; }

    bool missing(int y, int x) const {
        return data_[static_cast<size_t>(y * width_ + x)] != 0;
    }
    void set(int y, int x, bool miss) {
        data_[static_cast<size_t>(y * width_ + x)] = miss ? 1 : 0;
    }

    int missing_count() const;
    const std::vector<uint8_t>& raw() const { return data_; }
    std::vector<uint8_t>& raw() { return data_; }

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<uint8_t> data_;
};

enum class FieldRole : uint32_t {
    Edge = 0,
    Distance = 1,
    Amplitude = 2,
    Splat = 3,
    Attention = 4,
    Mask = 5,
};

const char* field_role_name(FieldRole role);

/// H×W scalar field with a role tag. Values unbounded except where the
/// role contract says otherwise (edge/distance >= 0, splat in [0,1] when
/// normalized).
class FieldMap {
public:
    FieldMap() = default;
    FieldMap(FieldRole role, int height, int width);

    FieldRole role() const { return role_; }
    void set_role(FieldRole r) { role_ = r; }
    int height() const { return height_; }
    int width() const { return width_; }

    float& at(int y, int x) { return data_[static_cast<size_t>(y * width_ + x)]; }
    float at(int y, int x) const { return data_[static_cast<size_t>(y * width_ + x)]; }

    std::vector<float>& raw() { return data_; }
    const std::vector<float>& raw() const { return data_; }

    void require_finite(const std::string& what) const;

private:
    FieldRole role_ = FieldRole::Edge;
    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

/// 1-channel pass-through; RGB collapses with Rec.601 luma
/// 0.299 R + 0.587 G + 0.114 B.
ImageTensor to_grayscale(const ImageTensor& image);

} // namespace sg
