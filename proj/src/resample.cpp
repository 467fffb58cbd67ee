#include "wavesr/resample.hpp"

#include <algorithm>
#include <cmath>

#include "wavesr/error.hpp"

namespace wavesr {

double bicubic_kernel(double t, double a) {
    const double at = std::fabs(t);
    if (at <= 1.0)
        return ((a + 2.0) * at - (a + 3.0)) * at * at + 1.0;
    if (at < 2.0)
        return ((a * at - 5.0 * a) * at + 8.0 * a) * at - 4.0 * a;
    return 0.0;
}

namespace {

struct TapRow {
    int idx[4];
    double w[4];
};

// One output coordinate -> four clamped source indices and kernel weights.
std::vector<TapRow> make_taps(int in_size, int out_size, double a) {
    std::vector<TapRow> taps(out_size);
    const double ratio = static_cast<double>(in_size) / out_size;
    for (int d = 0; d < out_size; ++d) {
        const double src = (d + 0.5) * ratio - 0.5;
        const int base = static_cast<int>(std::floor(src));
        TapRow& t = taps[d];
        for (int k = 0; k < 4; ++k) {
            const int pos = base - 1 + k;
            t.idx[k] = std::clamp(pos, 0, in_size - 1);
            t.w[k] = bicubic_kernel(src - pos, a);
        }
    }
    return taps;
}

} // namespace

Plane bicubic_resize(const Plane& plane, const ResizeSpec& spec) {
    if (plane.height < 2 || plane.width < 2)
        throw UsageError("bicubic_resize: input must be at least 2x2, got " +
                         std::to_string(plane.height) + "x" + std::to_string(plane.width));
    if (spec.out_height < 2 || spec.out_width < 2)
        throw UsageError("bicubic_resize: output must be at least 2x2, got " +
                         std::to_string(spec.out_height) + "x" +
                         std::to_string(spec.out_width));

    // Horizontal pass, then vertical pass.
    const auto xt = make_taps(plane.width, spec.out_width, spec.kernel_a);
    Plane mid(plane.height, spec.out_width);
    for (int y = 0; y < plane.height; ++y) {
        const double* row = plane.v.data() + static_cast<std::size_t>(y) * plane.width;
        double* out = mid.v.data() + static_cast<std::size_t>(y) * mid.width;
        for (int x = 0; x < spec.out_width; ++x) {
            const TapRow& t = xt[x];
            out[x] = t.w[0] * row[t.idx[0]] + t.w[1] * row[t.idx[1]] +
                     t.w[2] * row[t.idx[2]] + t.w[3] * row[t.idx[3]];
        }
    }
    const auto yt = make_taps(plane.height, spec.out_height, spec.kernel_a);
    Plane out(spec.out_height, spec.out_width);
    for (int y = 0; y < spec.out_height; ++y) {
        const TapRow& t = yt[y];
        const double* r0 = mid.v.data() + static_cast<std::size_t>(t.idx[0]) * mid.width;
        const double* r1 = mid.v.data() + static_cast<std::size_t>(t.idx[1]) * mid.width;
        const double* r2 = mid.v.data() + static_cast<std::size_t>(t.idx[2]) * mid.width;
        const double* r3 = mid.v.data() + static_cast<std::size_t>(t.idx[3]) * mid.width;
        double* o = out.v.data() + static_cast<std::size_t>(y) * out.width;
        for (int x = 0; x < spec.out_width; ++x)
            o[x] = t.w[0] * r0[x] + t.w[1] * r1[x] + t.w[2] * r2[x] + t.w[3] * r3[x];
    }
    return out;
}

Image bicubic_resize_image(const Image& img, int out_height, int out_width) {
    Image out(out_width, out_height, img.channels);
    for (int c = 0; c < img.channels; ++c) {
        Plane p = bicubic_resize(img.plane(c), {out_height, out_width});
        out.set_plane(c, p);
    }
    return out;
}

Image degrade(const Image& hr, int scale) {
    if (scale < 2 || scale > 4)
        throw UsageError("degrade: scale must be 2, 3 or 4, got " + std::to_string(scale));
    const int div = 2 * scale;
    if (hr.width % div != 0 || hr.height % div != 0)
        throw UsageError("degrade: image " + std::to_string(hr.width) + "x" +
                         std::to_string(hr.height) + " not divisible by 2*scale = " +
                         std::to_string(div));
    return bicubic_resize_image(hr, hr.height / scale, hr.width / scale);
}

} // namespace wavesr
