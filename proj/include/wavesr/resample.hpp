#pragma once

#include "wavesr/image.hpp"
#include "wavesr/wavelet.hpp"

namespace wavesr {

/// Target geometry for bicubic_resize. kernel_a is the cubic-convolution
/// sharpness parameter; -0.5 is Catmull-Rom.
struct ResizeSpec {
    int out_height = 0;
    int out_width = 0;
    double kernel_a = -0.5;
};

/// Cubic convolution kernel k(t) with parameter a. Support is |t| < 2 and the
/// four taps covering any sampling phase sum to exactly 1.
double bicubic_kernel(double t, double a);

/// Separable bicubic resize with half-pixel-center coordinate mapping
/// src = (dst + 0.5) * (in/out) - 0.5 and clamp-to-edge boundaries.
/// Identity sizes reproduce the input exactly; constants stay constant.
Plane bicubic_resize(const Plane& plane, const ResizeSpec& spec);

/// Per-channel bicubic resize of a whole image.
Image bicubic_resize_image(const Image& img, int out_height, int out_width);

/// Bicubic down-sampling degradation: HR -> LR at 1/s per side, s in {2,3,4}.
/// HR dimensions must be divisible by 2s so the downstream DWT sizes stay
/// integral.
Image degrade(const Image& hr, int scale);

} // namespace wavesr
