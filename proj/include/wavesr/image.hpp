#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavesr/wavelet.hpp"

namespace wavesr {

/// Channel-planar floating-point raster, nominal range [0, 255].
/// data[c * width*height + y * width + x]; channels is 1 (gray) or 3 (RGB).
/// Values stay floating point end to end; quantization happens only in save().
struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<double> data;

    Image() = default;
    Image(int w, int h, int c, double fill = 0.0)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {}

    double& at(int c, int y, int x) {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    double at(int c, int y, int x) const {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }

    const double* plane_data(int c) const {
        return data.data() + static_cast<std::size_t>(c) * width * height;
    }
    double* plane_data(int c) {
        return data.data() + static_cast<std::size_t>(c) * width * height;
    }

    /// Copies channel c out as a Plane.
    Plane plane(int c) const;
    /// Overwrites channel c. Dimensions must match.
    void set_plane(int c, const Plane& p);
};

/// Builds a 1-channel Image from a Plane (no clamping).
Image image_from_plane(const Plane& p);

/// How patches are drawn from a source image.
struct PatchSpec {
    int patch_size = 64;
    int count = 0;         // grid mode: 0 means every full tile
    std::uint64_t seed = 0;
    enum class Mode { Grid, UniformRandom } mode = Mode::UniformRandom;
};

/// Loads an 8-bit binary PGM (P5) or 8-bit PNG (grayscale or RGB). The file
/// type is detected from its magic bytes, not the extension. Sample values
/// are returned as exact floating point integers in [0, 255].
Image load_image(const std::string& path);

/// Writes PGM for 1-channel paths ending in .pgm, PNG otherwise. Values are
/// clamped to [0, 255] then rounded half-away-from-zero, so integer-valued
/// images round-trip bit-exactly.
void save_image(const Image& img, const std::string& path);

/// BT.601 luminance: Y = 0.299 R + 0.587 G + 0.114 B. Grayscale input is
/// returned unchanged.
Image to_luminance(const Image& img);

/// Deterministic patch extraction. Grid mode tiles top-left to bottom-right
/// with stride = patch_size; uniform-random mode draws top-left corners
/// i.i.d. from an Rng seeded with spec.seed.
std::vector<Image> extract_patches(const Image& img, const PatchSpec& spec);

/// Quantizes one sample the way save_image does.
inline std::uint8_t quantize_sample(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 255.0) v = 255.0;
    return static_cast<std::uint8_t>(v + 0.5); // half away from zero; v >= 0 here
}

} // namespace wavesr
