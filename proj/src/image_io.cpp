#include "image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "error.hpp"

namespace sg {

namespace {

void write_u32le(std::ostream& os, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t read_u32le(std::istream& is, const std::string& path) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4))
        throw Error(ErrorKind::Io, "truncated read in " + path);
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

void write_f32le(std::ostream& os, float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    write_u32le(os, bits);
}

float read_f32le(std::istream& is, const std::string& path) {
    uint32_t bits = read_u32le(is, path);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

// One header token, skipping whitespace and '#' comment lines.
std::string pnm_token(std::istream& is) {
    std::string tok;
    int c;
    while ((c = is.get()) != EOF) {
        if (c == '#') {
            while ((c = is.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) continue;
        break;
    }
    if (c == EOF) return tok;
    tok.push_back(static_cast<char>(c));
    while ((c = is.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
    return tok;
}

int pnm_int(std::istream& is, const std::string& path) {
    std::string tok = pnm_token(is);
    if (tok.empty()) throw Error(ErrorKind::Format, "truncated PNM header in " + path);
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error(ErrorKind::Format, "malformed PNM header in " + path);
    long v = std::strtol(tok.c_str(), nullptr, 10);
    if (v <= 0 || v > 1 << 20)
        throw Error(ErrorKind::Format, "PNM dimension out of range in " + path);
    return static_cast<int>(v);
}

} // namespace

uint8_t quantize_u8(float v) {
    float scaled = std::floor(v * 255.0f + 0.5f);
    if (scaled < 0.0f) scaled = 0.0f;
    if (scaled > 255.0f) scaled = 255.0f;
    return static_cast<uint8_t>(scaled);
}

ImageTensor load_ppm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::Io, "cannot open " + path);

    std::string magic = pnm_token(is);
    int channels;
    if (magic == "P5") channels = 1;
    else if (magic == "P6") channels = 3;
    else throw Error(ErrorKind::Format, "not a binary P5/P6 file: " + path);

    int width = pnm_int(is, path);
    int height = pnm_int(is, path);
    int maxval = pnm_int(is, path);
    if (maxval != 255)
        throw Error(ErrorKind::Format, "only maxval 255 supported: " + path);
    // single whitespace byte separates header from payload (already consumed
    // by the token reader)

    size_t n = static_cast<size_t>(width) * height * channels;
    std::vector<unsigned char> bytes(n);
    if (!is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(n)))
        throw Error(ErrorKind::Io, "truncated pixel payload in " + path);

    ImageTensor img(height, width, channels);
    size_t i = 0;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < channels; ++c)
                img.at(c, y, x) = static_cast<float>(bytes[i++]) / 255.0f;
    return img;
}

void save_ppm(const ImageTensor& image, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::Io, "cannot write " + path);

    os << (image.channels() == 1 ? "P5" : "P6") << "\n"
       << image.width() << " " << image.height() << "\n255\n";

    std::vector<unsigned char> bytes;
    bytes.reserve(static_cast<size_t>(image.width()) * image.height() * image.channels());
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            for (int c = 0; c < image.channels(); ++c)
                bytes.push_back(quantize_u8(image.at(c, y, x)));
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
    if (!os) throw Error(ErrorKind::Io, "write failed for " + path);
}

namespace {
constexpr long kCifarRecord = 3073;
constexpr int kCifarSide = 32;
} // namespace

int cifar10_record_count(const std::string& path) {
    std::ifstream is(path, std::ios::binary | std::ios::ate);
    if (!is) throw Error(ErrorKind::Io, "cannot open " + path);
    long size = static_cast<long>(is.tellg());
    if (size <= 0 || size % kCifarRecord != 0)
        throw Error(ErrorKind::Format,
                    "file length is not a multiple of 3073 bytes: " + path);
    return static_cast<int>(size / kCifarRecord);
}

std::pair<ImageTensor, int> load_cifar10_batch(const std::string& path, int index) {
    int count = cifar10_record_count(path);
    if (index < 0 || index >= count)
        throw Error(ErrorKind::Bounds, "record index out of range: " + path);

    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::Io, "cannot open " + path);
    is.seekg(static_cast<std::streamoff>(index) * kCifarRecord);

    unsigned char record[kCifarRecord];
    if (!is.read(reinterpret_cast<char*>(record), kCifarRecord))
        throw Error(ErrorKind::Io, "truncated record in " + path);

    int label = record[0];
    ImageTensor img(kCifarSide, kCifarSide, 3);
    const unsigned char* planes = record + 1;
    for (int c = 0; c < 3; ++c)
        for (int y = 0; y < kCifarSide; ++y)
            for (int x = 0; x < kCifarSide; ++x)
                img.at(c, y, x) =
                    static_cast<float>(planes[(c * kCifarSide + y) * kCifarSide + x]) / 255.0f;
    return {std::move(img), label};
}

namespace {
constexpr char kFieldMagic[4] = {'S', 'P', 'L', 'T'};
constexpr uint32_t kFieldVersion = 1;
} // namespace

void save_field(const FieldMap& field, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::Io, "cannot write " + path);
    os.write(kFieldMagic, 4);
    write_u32le(os, kFieldVersion);
    write_u32le(os, static_cast<uint32_t>(field.role()));
    write_u32le(os, static_cast<uint32_t>(field.height()));
    write_u32le(os, static_cast<uint32_t>(field.width()));
    for (float v : field.raw()) write_f32le(os, v);
    if (!os) throw Error(ErrorKind::Io, "write failed for " + path);
}

FieldMap load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::Io, "cannot open " + path);

    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kFieldMagic, 4) != 0)
        throw Error(ErrorKind::Format, "bad field magic in " + path);
    uint32_t version = read_u32le(is, path);
    if (version != kFieldVersion)
        throw Error(ErrorKind::Format, "unsupported field version in " + path);
    uint32_t role = read_u32le(is, path);
    if (role > static_cast<uint32_t>(FieldRole::Mask))
        throw Error(ErrorKind::Format, "unknown field role in " + path);
    uint32_t height = read_u32le(is, path);
    uint32_t width = read_u32le(is, path);
    if (height == 0 || width == 0 || height > (1u << 20) || width > (1u << 20))
        throw Error(ErrorKind::Format, "bad field dimensions in " + path);

    FieldMap field(static_cast<FieldRole>(role), static_cast<int>(height),
                   static_cast<int>(width));
    for (float& v : field.raw()) v = read_f32le(is, path);
    // header dims must account for the whole payload
    char extra;
    if (is.read(&extra, 1))
        throw Error(ErrorKind::Format, "payload longer than header dims in " + path);
    return field;
}

FieldMap mask_to_field(const MaskMap& mask) {
    FieldMap field(FieldRole::Mask, mask.height(), mask.width());
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            field.at(y, x) = mask.missing(y, x) ? 1.0f : 0.0f;
    return field;
}

MaskMap field_to_mask(const FieldMap& field) {
    if (field.role() != FieldRole::Mask)
        throw Error(ErrorKind::Format, "field role is not mask");
    MaskMap mask(field.height(), field.width());
    for (int y = 0; y < field.height(); ++y) {
        for (int x = 0; x < field.width(); ++x) {
            float v = field.at(y, x);
            if (v != 0.0f && v != 1.0f)
                throw Error(ErrorKind::Format, "mask field values must be exactly 0 or 1");
            mask.set(y, x, v == 1.0f);
        }
    }
    return mask;
}

void save_mask_pgm(const MaskMap& mask, const std::string& path) {
    ImageTensor img(mask.height(), mask.width(), 1);
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            img.at(0, y, x) = mask.missing(y, x) ? 1.0f : 0.0f;
    save_ppm(img, path);
}

void save_field_pgm(const FieldMap& field, const std::string& path) {
    float lo = std::numeric_limits<float>::max();
    float hi = std::numeric_limits<float>::lowest();
    for (float v : field.raw()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    ImageTensor img(field.height(), field.width(), 1);
    if (hi > lo) {
        for (int y = 0; y < field.height(); ++y)
            for (int x = 0; x < field.width(); ++x)
                img.at(0, y, x) = (field.at(y, x) - lo) / (hi - lo);
    }
    save_ppm(img, path);
}

} // namespace sg
