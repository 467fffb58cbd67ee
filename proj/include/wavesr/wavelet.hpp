#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace wavesr {

/// Row-major 2D matrix of doubles. One image channel, one wavelet subband.
struct Plane {
    int height = 0;
    int width = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(int h, int w, double fill = 0.0)
        : height(h), width(w), v(static_cast<std::size_t>(h) * w, fill) {}

    double& at(int y, int x) { return v[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return v[static_cast<std::size_t>(y) * width + x]; }
    std::size_t size() const { return v.size(); }
};

/// The four subbands of a single-level 2D DWT. For an H x W source each is
/// (H/2) x (W/2). ll is the column-low of the row-low intermediate, lh the
/// column-low of the row-high one, hl the column-high of the row-low one,
/// hh the column-high of the row-high one.
struct SubbandSet {
    Plane ll, lh, hl, hh;
};

// Orthonormal Haar: one low/high pair per two input samples, scaled by
// 1/sqrt(2) so the transform conserves energy and is its own inverse
// transpose. Templated so the float tensor path in nn can reuse the kernels.
namespace haar {

inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

template <class T>
void forward_pair(T a, T b, T& lo, T& hi) {
    lo = static_cast<T>((a + b) * static_cast<T>(kInvSqrt2));
    hi = static_cast<T>((a - b) * static_cast<T>(kInvSqrt2));
}

template <class T>
void inverse_pair(T lo, T hi, T& a, T& b) {
    a = static_cast<T>((lo + hi) * static_cast<T>(kInvSqrt2));
    b = static_cast<T>((lo - hi) * static_cast<T>(kInvSqrt2));
}

/// Single-level 2D forward transform on a contiguous row-major H x W plane.
/// Output pointers are (H/2) x (W/2) row-major planes.
template <class T>
void dwt2d_raw(const T* src, int height, int width, T* ll, T* lh, T* hl, T* hh) {
    const int hh2 = height / 2, wh2 = width / 2;
    std::vector<T> row_lo(static_cast<std::size_t>(height) * wh2);
    std::vector<T> row_hi(static_cast<std::size_t>(height) * wh2);
    for (int y = 0; y < height; ++y) {
        const T* r = src + static_cast<std::size_t>(y) * width;
        T* lo = row_lo.data() + static_cast<std::size_t>(y) * wh2;
        T* hi = row_hi.data() + static_cast<std::size_t>(y) * wh2;
        for (int i = 0; i < wh2; ++i)
            forward_pair(r[2 * i], r[2 * i + 1], lo[i], hi[i]);
    }
    for (int i = 0; i < hh2; ++i) {
        const T* lo0 = row_lo.data() + static_cast<std::size_t>(2 * i) * wh2;
        const T* lo1 = lo0 + wh2;
        const T* hi0 = row_hi.data() + static_cast<std::size_t>(2 * i) * wh2;
        const T* hi1 = hi0 + wh2;
        T* pll = ll + static_cast<std::size_t>(i) * wh2;
        T* plh = lh + static_cast<std::size_t>(i) * wh2;
        T* phl = hl + static_cast<std::size_t>(i) * wh2;
        T* phh = hh + static_cast<std::size_t>(i) * wh2;
        for (int x = 0; x < wh2; ++x) {
            forward_pair(lo0[x], lo1[x], pll[x], phl[x]);
            forward_pair(hi0[x], hi1[x], plh[x], phh[x]);
        }
    }
}

/// Exact inverse of dwt2d_raw. Subbands are (H/2) x (W/2); dst is H x W.
template <class T>
void idwt2d_raw(const T* ll, const T* lh, const T* hl, const T* hh, int height,
                int width, T* dst) {
    const int hh2 = height / 2, wh2 = width / 2;
    std::vector<T> row_lo(static_cast<std::size_t>(height) * wh2);
    std::vector<T> row_hi(static_cast<std::size_t>(height) * wh2);
    for (int i = 0; i < hh2; ++i) {
        const T* pll = ll + static_cast<std::size_t>(i) * wh2;
        const T* plh = lh + static_cast<std::size_t>(i) * wh2;
        const T* phl = hl + static_cast<std::size_t>(i) * wh2;
        const T* phh = hh + static_cast<std::size_t>(i) * wh2;
        T* lo0 = row_lo.data() + static_cast<std::size_t>(2 * i) * wh2;
        T* lo1 = lo0 + wh2;
        T* hi0 = row_hi.data() + static_cast<std::size_t>(2 * i) * wh2;
        T* hi1 = hi0 + wh2;
        for (int x = 0; x < wh2; ++x) {
            inverse_pair(pll[x], phl[x], lo0[x], lo1[x]);
            inverse_pair(plh[x], phh[x], hi0[x], hi1[x]);
        }
    }
    for (int y = 0; y < height; ++y) {
        const T* lo = row_lo.data() + static_cast<std::size_t>(y) * wh2;
        const T* hi = row_hi.data() + static_cast<std::size_t>(y) * wh2;
        T* r = dst + static_cast<std::size_t>(y) * width;
        for (int i = 0; i < wh2; ++i)
            inverse_pair(lo[i], hi[i], r[2 * i], r[2 * i + 1]);
    }
}

} // namespace haar

/// Single-level 1D Haar DWT of an even-length signal.
/// approx[i] = (x[2i] + x[2i+1])/sqrt(2), detail[i] = (x[2i] - x[2i+1])/sqrt(2).
std::pair<std::vector<double>, std::vector<double>> dwt1d(std::span<const double> signal);

/// Exact inverse of dwt1d.
std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail);

/// Single-level 2D Haar DWT, row pass then column pass. H and W must be even.
SubbandSet dwt2d(const Plane& plane);

/// Exact inverse of dwt2d.
Plane idwt2d(const SubbandSet& bands);

} // namespace wavesr
