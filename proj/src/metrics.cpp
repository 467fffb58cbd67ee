#include "wavesr/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include <json.hpp>

#include "wavesr/error.hpp"

namespace wavesr {

namespace {

void require_same_shape(const Image& x, const Image& h, const char* op) {
    if (x.width != h.width || x.height != h.height || x.channels != h.channels)
        throw UsageError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(x.width) + "x" + std::to_string(x.height) + "x" +
                         std::to_string(x.channels) + " vs " + std::to_string(h.width) +
                         "x" + std::to_string(h.height) + "x" +
                         std::to_string(h.channels) + ")");
}

struct Stats {
    double mean_x = 0, mean_h = 0;
    double var_x = 0, var_h = 0; // population variance
    double cov = 0;
};

Stats global_stats(const Image& x, const Image& h) {
    const std::size_t n = x.data.size();
    Stats s;
    for (std::size_t i = 0; i < n; ++i) {
        s.mean_x += x.data[i];
        s.mean_h += h.data[i];
    }
    s.mean_x /= static_cast<double>(n);
    s.mean_h /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x.data[i] - s.mean_x;
        const double dh = h.data[i] - s.mean_h;
        s.var_x += dx * dx;
        s.var_h += dh * dh;
        s.cov += dx * dh;
    }
    s.var_x /= static_cast<double>(n);
    s.var_h /= static_cast<double>(n);
    s.cov /= static_cast<double>(n);
    return s;
}

constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
constexpr double kC3 = kC2 / 2.0;

} // namespace

double mse(const Image& x, const Image& h) {
    require_same_shape(x, h, "mse");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.data.size(); ++i) {
        const double d = x.data[i] - h.data[i];
        acc += d * d;
    }
    return acc / static_cast<double>(x.data.size());
}

double psnr(const Image& x, const Image& h) {
    const double m = mse(x, h);
    if (m == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

double ssim(const Image& x, const Image& h) {
    require_same_shape(x, h, "ssim");
    if (x.channels != 1)
        throw UsageError("ssim: single-channel input required (pass luminance)");
    const Stats s = global_stats(x, h);
    const double sd_x = std::sqrt(s.var_x);
    const double sd_h = std::sqrt(s.var_h);
    const double l = (2.0 * s.mean_x * s.mean_h + kC1) /
                     (s.mean_x * s.mean_x + s.mean_h * s.mean_h + kC1);
    const double c = (2.0 * sd_x * sd_h + kC2) / (s.var_x + s.var_h + kC2);
    const double st = (s.cov + kC3) / (sd_x * sd_h + kC3);
    return l * c * st;
}

double uiq(const Image& x, const Image& h) {
    require_same_shape(x, h, "uiq");
    if (x.channels != 1)
        throw UsageError("uiq: single-channel input required (pass luminance)");
    const Stats s = global_stats(x, h);
    const double d_var = s.var_x + s.var_h;
    const double d_mean = s.mean_x * s.mean_x + s.mean_h * s.mean_h;
    if (d_var == 0.0) // both images constant
        return s.mean_x == s.mean_h ? 1.0 : 0.0;
    if (d_mean == 0.0)
        return 0.0;
    return 4.0 * s.cov * s.mean_x * s.mean_h / (d_var * d_mean);
}

PairRecord evaluate_pair(const Image& x, const Image& h, bool on_luminance,
                         const std::string& name, int scale) {
    require_same_shape(x, h, "evaluate_pair");
    PairRecord rec;
    rec.name = name;
    rec.scale = scale;
    if (x.channels == 1 || on_luminance) {
        const Image xl = to_luminance(x);
        const Image hl = to_luminance(h);
        rec.mse = mse(xl, hl);
        rec.psnr = psnr(xl, hl);
        rec.ssim = ssim(xl, hl);
        rec.uiq = uiq(xl, hl);
    } else {
        rec.mse = mse(x, h);
        rec.psnr = psnr(x, h);
        double ssim_acc = 0.0, uiq_acc = 0.0;
        for (int c = 0; c < x.channels; ++c) {
            const Image xc = image_from_plane(x.plane(c));
            const Image hc = image_from_plane(h.plane(c));
            ssim_acc += ssim(xc, hc);
            uiq_acc += uiq(xc, hc);
        }
        rec.ssim = ssim_acc / x.channels;
        rec.uiq = uiq_acc / x.channels;
    }
    return rec;
}

std::vector<ScaleAggregate> MetricReport::aggregates() const {
    std::map<int, ScaleAggregate> by_scale;
    for (const PairRecord& r : records) {
        if (!r.error.empty())
            continue;
        ScaleAggregate& a = by_scale[r.scale];
        a.scale = r.scale;
        a.count += 1;
        a.mean_mse += r.mse;
        a.mean_psnr += r.psnr; // stays inf if any pair is identical
        a.mean_ssim += r.ssim;
        a.mean_uiq += r.uiq;
    }
    std::vector<ScaleAggregate> out;
    for (auto& [scale, a] : by_scale) {
        a.mean_mse /= a.count;
        a.mean_psnr /= a.count;
        a.mean_ssim /= a.count;
        a.mean_uiq /= a.count;
        out.push_back(a);
    }
    return out;
}

bool MetricReport::has_errors() const {
    for (const PairRecord& r : records)
        if (!r.error.empty())
            return true;
    return false;
}

namespace {

nlohmann::json json_psnr(double v) {
    if (std::isinf(v))
        return "inf";
    return v;
}

std::string csv_num(double v) {
    if (std::isinf(v))
        return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

std::string MetricReport::to_json() const {
    nlohmann::json images = nlohmann::json::array();
    for (const PairRecord& r : records) {
        nlohmann::json row;
        row["name"] = r.name;
        row["scale"] = r.scale;
        if (!r.error.empty()) {
            row["error"] = r.error;
        } else {
            row["mse"] = r.mse;
            row["psnr_db"] = json_psnr(r.psnr);
            row["ssim"] = r.ssim;
            row["uiq"] = r.uiq;
        }
        images.push_back(row);
    }
    nlohmann::json agg = nlohmann::json::array();
    for (const ScaleAggregate& a : aggregates()) {
        agg.push_back({{"scale", a.scale},
                       {"count", a.count},
                       {"mean_mse", a.mean_mse},
                       {"mean_psnr_db", json_psnr(a.mean_psnr)},
                       {"mean_ssim", a.mean_ssim},
                       {"mean_uiq", a.mean_uiq}});
    }
    nlohmann::json doc;
    doc["on_luminance"] = on_luminance;
    doc["images"] = images;
    doc["aggregate"] = agg;
    return doc.dump(2) + "\n";
}

std::string MetricReport::to_csv() const {
    std::string out = "name,scale,mse,psnr_db,ssim,uiq\n";
    for (const PairRecord& r : records) {
        if (!r.error.empty()) {
            out += r.name + "," + std::to_string(r.scale) + ",error,error,error,error\n";
            continue;
        }
        out += r.name + "," + std::to_string(r.scale) + "," + csv_num(r.mse) + "," +
               csv_num(r.psnr) + "," + csv_num(r.ssim) + "," + csv_num(r.uiq) + "\n";
    }
    for (const ScaleAggregate& a : aggregates()) {
        out += "mean," + std::to_string(a.scale) + "," + csv_num(a.mean_mse) + "," +
               csv_num(a.mean_psnr) + "," + csv_num(a.mean_ssim) + "," +
               csv_num(a.mean_uiq) + "\n";
    }
    return out;
}

} // namespace wavesr
