#pragma once

#include <string>
#include <vector>

#include "wavesr/image.hpp"

namespace wavesr {

/// Mean squared error, averaged over all pixels and channels.
double mse(const Image& x, const Image& h);

/// 10 * log10(255^2 / MSE), +infinity when the images are identical.
double psnr(const Image& x, const Image& h);

/// Whole-image structural similarity: the product of luminance, contrast and
/// structure terms with global statistics (no sliding window; the common
/// 11x11 Gaussian variant is deliberately not used). Constants use L = 255:
/// C1 = (0.01 L)^2, C2 = (0.03 L)^2, C3 = C2 / 2. Single-channel inputs only.
double ssim(const Image& x, const Image& h);

/// Universal image quality index with global statistics,
/// Q = 4 sigma_xh mu_x mu_h / ((sigma_x^2 + sigma_h^2)(mu_x^2 + mu_h^2)).
/// Two constant images compare as 1 when means are equal, else 0.
/// Single-channel inputs only.
double uiq(const Image& x, const Image& h);

/// One evaluated image pair. When `error` is non-empty the metric fields are
/// meaningless and the pair did not contribute to aggregates.
struct PairRecord {
    std::string name;
    int scale = 0;
    double mse = 0.0;
    double psnr = 0.0;
    double ssim = 0.0;
    double uiq = 0.0;
    std::string error;
};

struct ScaleAggregate {
    int scale = 0;
    int count = 0;
    double mean_mse = 0.0;
    double mean_psnr = 0.0;
    double mean_ssim = 0.0;
    double mean_uiq = 0.0;
};

/// Per-image rows plus per-scale means for an evaluation run.
struct MetricReport {
    std::vector<PairRecord> records;
    bool on_luminance = true;

    std::vector<ScaleAggregate> aggregates() const;
    bool has_errors() const;
    /// JSON object: {"on_luminance":..., "images":[...], "aggregate":[...]}.
    /// Infinite PSNR serializes as the string "inf".
    std::string to_json() const;
    /// CSV: name,scale,mse,psnr_db,ssim,uiq with per-scale "mean" rows last.
    std::string to_csv() const;
};

/// All four metrics on one pair. RGB inputs are converted with to_luminance
/// when on_luminance is set; otherwise MSE/PSNR run over all channels and
/// SSIM/UIQ are the means of the per-channel values.
PairRecord evaluate_pair(const Image& x, const Image& h, bool on_luminance,
                         const std::string& name = "", int scale = 0);

} // namespace wavesr
