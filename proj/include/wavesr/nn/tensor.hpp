#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wavesr/error.hpp"

namespace wavesr::nn {

/// Rank-4 (batch, channels, height, width) array, row-major innermost width.
/// Gradients are carried by separate Tensors rather than an attached buffer;
/// layers return the input gradient from backward().
template <class T>
struct Tensor {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<T> v;

    Tensor() = default;
    Tensor(int n_, int c_, int h_, int w_, T fill = T(0))
        : n(n_), c(c_), h(h_), w(w_),
          v(static_cast<std::size_t>(n_) * c_ * h_ * w_, fill) {}

    std::size_t size() const { return v.size(); }
    std::size_t plane_size() const { return static_cast<std::size_t>(h) * w; }

    T* plane(int in, int ic) {
        return v.data() + (static_cast<std::size_t>(in) * c + ic) * plane_size();
    }
    const T* plane(int in, int ic) const {
        return v.data() + (static_cast<std::size_t>(in) * c + ic) * plane_size();
    }

    T& at(int in, int ic, int iy, int ix) {
        return v[((static_cast<std::size_t>(in) * c + ic) * h + iy) * w + ix];
    }
    T at(int in, int ic, int iy, int ix) const {
        return v[((static_cast<std::size_t>(in) * c + ic) * h + iy) * w + ix];
    }

    bool same_shape(const Tensor& o) const {
        return n == o.n && c == o.c && h == o.h && w == o.w;
    }
    std::string shape_str() const {
        return "(" + std::to_string(n) + "," + std::to_string(c) + "," +
               std::to_string(h) + "," + std::to_string(w) + ")";
    }
};

/// Concatenates tensors along the channel axis.
template <class T>
Tensor<T> concat_channels(const std::vector<const Tensor<T>*>& parts) {
    int channels = 0;
    for (const Tensor<T>* p : parts) channels += p->c;
    const Tensor<T>& first = *parts.front();
    Tensor<T> out(first.n, channels, first.h, first.w);
    for (int in = 0; in < first.n; ++in) {
        int oc = 0;
        for (const Tensor<T>* p : parts) {
            for (int ic = 0; ic < p->c; ++ic, ++oc) {
                const T* src = p->plane(in, ic);
                T* dst = out.plane(in, oc);
                for (std::size_t i = 0; i < out.plane_size(); ++i) dst[i] = src[i];
            }
        }
    }
    return out;
}

/// Splits grad along channels into chunks of the given widths, accumulating
/// into the targets (+=). Targets must already have matching shapes.
template <class T>
void split_accumulate_channels(const Tensor<T>& grad, std::vector<Tensor<T>*> targets) {
    int oc = 0;
    for (Tensor<T>* t : targets) {
        for (int in = 0; in < grad.n; ++in) {
            for (int ic = 0; ic < t->c; ++ic) {
                const T* src = grad.plane(in, oc + ic);
                T* dst = t->plane(in, ic);
                for (std::size_t i = 0; i < grad.plane_size(); ++i) dst[i] += src[i];
            }
        }
        oc += t->c;
    }
}

} // namespace wavesr::nn
