#include "wavesr/wavelet.hpp"

#include "wavesr/error.hpp"

namespace wavesr {

std::pair<std::vector<double>, std::vector<double>> dwt1d(std::span<const double> signal) {
    if (signal.size() < 2 || signal.size() % 2 != 0)
        throw UsageError("dwt1d: signal length must be even and >= 2, got " +
                         std::to_string(signal.size()));
    const std::size_t half = signal.size() / 2;
    std::vector<double> approx(half), detail(half);
    for (std::size_t i = 0; i < half; ++i)
        haar::forward_pair(signal[2 * i], signal[2 * i + 1], approx[i], detail[i]);
    return {std::move(approx), std::move(detail)};
}

std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail) {
    if (approx.size() != detail.size())
        throw UsageError("idwt1d: approx length " + std::to_string(approx.size()) +
                         " != detail length " + std::to_string(detail.size()));
    std::vector<double> signal(approx.size() * 2);
    for (std::size_t i = 0; i < approx.size(); ++i)
        haar::inverse_pair(approx[i], detail[i], signal[2 * i], signal[2 * i + 1]);
    return signal;
}

SubbandSet dwt2d(const Plane& plane) {
    if (plane.height < 2 || plane.width < 2 || plane.height % 2 != 0 || plane.width % 2 != 0)
        throw UsageError("dwt2d: dimensions must be even and >= 2, got " +
                         std::to_string(plane.height) + "x" + std::to_string(plane.width));
    const int h2 = plane.height / 2, w2 = plane.width / 2;
    SubbandSet out{Plane(h2, w2), Plane(h2, w2), Plane(h2, w2), Plane(h2, w2)};
    haar::dwt2d_raw(plane.v.data(), plane.height, plane.width, out.ll.v.data(),
                    out.lh.v.data(), out.hl.v.data(), out.hh.v.data());
    return out;
}

Plane idwt2d(const SubbandSet& bands) {
    const Plane& ll = bands.ll;
    auto same = [&](const Plane& p) {
        return p.height == ll.height && p.width == ll.width;
    };
    if (!same(bands.lh) || !same(bands.hl) || !same(bands.hh))
        throw UsageError("idwt2d: subband dimensions differ");
    if (ll.height < 1 || ll.width < 1)
        throw UsageError("idwt2d: empty subbands");
    Plane out(ll.height * 2, ll.width * 2);
    haar::idwt2d_raw(bands.ll.v.data(), bands.lh.v.data(), bands.hl.v.data(),
                     bands.hh.v.data(), out.height, out.width, out.v.data());
    return out;
}

} // namespace wavesr
