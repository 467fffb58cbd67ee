#include "wavesr/image.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "wavesr/error.hpp"
#include "wavesr/rng.hpp"

namespace wavesr {

Plane Image::plane(int c) const {
    Plane p(height, width);
    std::memcpy(p.v.data(), plane_data(c), sizeof(double) * p.size());
    return p;
}

void Image::set_plane(int c, const Plane& p) {
    if (p.height != height || p.width != width)
        throw UsageError("set_plane: dimensions mismatch");
    std::memcpy(plane_data(c), p.v.data(), sizeof(double) * p.size());
}

Image image_from_plane(const Plane& p) {
    Image img(p.width, p.height, 1);
    img.data = p.v;
    return img;
}

namespace {

// --- PGM (binary P5, maxval <= 255) ---------------------------------------

int pgm_next_int(std::istream& in, const std::string& path) {
    // Skips whitespace and '#' comments between header tokens.
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = in.get();
    }
    if (ch == EOF || !std::isdigit(ch))
        throw DataError(path + ": malformed PGM header");
    int value = 0;
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + (ch - '0');
        ch = in.get();
    }
    return value;
}

Image load_pgm(std::ifstream& in, const std::string& path) {
    char magic[2];
    in.read(magic, 2);
    const int w = pgm_next_int(in, path);
    const int h = pgm_next_int(in, path);
    const int maxval = pgm_next_int(in, path);
    if (maxval > 255)
        throw DataError(path + ": unsupported bit depth 16 (PGM maxval " +
                        std::to_string(maxval) + ")");
    if (w < 2 || h < 2)
        throw DataError(path + ": image too small (" + std::to_string(w) + "x" +
                        std::to_string(h) + ", need at least 2x2)");
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw DataError(path + ": truncated PGM pixel data");
    Image img(w, h, 1);
    for (std::size_t i = 0; i < raw.size(); ++i)
        img.data[i] = static_cast<double>(raw[i]);
    return img;
}

void save_pgm(const Image& img, const std::string& path) {
    if (img.channels != 1)
        throw UsageError(path + ": PGM supports 1 channel, image has " +
                         std::to_string(img.channels));
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw DataError(path + ": cannot open for writing");
        out << "P5\n" << img.width << " " << img.height << "\n255\n";
        std::vector<std::uint8_t> raw(static_cast<std::size_t>(img.width) * img.height);
        for (std::size_t i = 0; i < raw.size(); ++i)
            raw[i] = quantize_sample(img.data[i]);
        out.write(reinterpret_cast<const char*>(raw.data()),
                  static_cast<std::streamsize>(raw.size()));
        if (!out)
            throw DataError(path + ": write failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DataError(path + ": rename failed");
}

// --- PNG (8-bit gray or RGB, via the libpng simplified API) ----------------

Image load_png(const std::string& path) {
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.c_str()))
        throw DataError(path + ": " + png.message);
    if (png.format & PNG_FORMAT_FLAG_LINEAR) { // simplified API reports 16-bit as linear
        png_image_free(&png);
        throw DataError(path + ": unsupported bit depth 16");
    }
    if (png.format & PNG_FORMAT_FLAG_ALPHA) {
        png_image_free(&png);
        throw DataError(path + ": unsupported color type: alpha channel");
    }
    if (png.format & PNG_FORMAT_FLAG_COLORMAP) {
        png_image_free(&png);
        throw DataError(path + ": unsupported color type: palette");
    }
    const bool color = png.format & PNG_FORMAT_FLAG_COLOR;
    png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    const int w = static_cast<int>(png.width);
    const int h = static_cast<int>(png.height);
    if (w < 2 || h < 2) {
        png_image_free(&png);
        throw DataError(path + ": image too small, need at least 2x2");
    }
    const int nch = color ? 3 : 1;
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(w) * h * nch);
    if (!png_image_finish_read(&png, nullptr, raw.data(), 0, nullptr)) {
        std::string msg = png.message;
        png_image_free(&png);
        throw DataError(path + ": " + msg);
    }
    // Interleaved bytes -> planar doubles.
    Image img(w, h, nch);
    const std::size_t pixels = static_cast<std::size_t>(w) * h;
    for (std::size_t p = 0; p < pixels; ++p)
        for (int c = 0; c < nch; ++c)
            img.data[static_cast<std::size_t>(c) * pixels + p] =
                static_cast<double>(raw[p * nch + c]);
    return img;
}

void save_png(const Image& img, const std::string& path) {
    const std::size_t pixels = static_cast<std::size_t>(img.width) * img.height;
    std::vector<std::uint8_t> raw(pixels * img.channels);
    for (std::size_t p = 0; p < pixels; ++p)
        for (int c = 0; c < img.channels; ++c)
            raw[p * img.channels + c] =
                quantize_sample(img.data[static_cast<std::size_t>(c) * pixels + p]);
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(img.width);
    png.height = static_cast<png_uint_32>(img.height);
    png.format = img.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::string tmp = path + ".tmp";
    if (!png_image_write_to_file(&png, tmp.c_str(), 0, raw.data(), 0, nullptr)) {
        std::string msg = png.message;
        png_image_free(&png);
        std::remove(tmp.c_str());
        throw DataError(path + ": " + msg);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DataError(path + ": rename failed");
}

} // namespace

Image load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError(path + ": cannot open file");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    in.seekg(0);
    if (magic[0] == 'P' && magic[1] == '5')
        return load_pgm(in, path);
    if (magic[0] == '\x89' && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    throw DataError(path + ": unsupported file format (want binary PGM or PNG)");
}

void save_image(const Image& img, const std::string& path) {
    if (img.width < 2 || img.height < 2 || (img.channels != 1 && img.channels != 3))
        throw UsageError(path + ": invalid image to save (" + std::to_string(img.width) +
                         "x" + std::to_string(img.height) + "x" +
                         std::to_string(img.channels) + ")");
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".pgm") == 0)
        save_pgm(img, path);
    else
        save_png(img, path);
}

Image to_luminance(const Image& img) {
    if (img.channels == 1)
        return img;
    if (img.channels != 3)
        throw UsageError("to_luminance: unsupported channel count " +
                         std::to_string(img.channels));
    Image out(img.width, img.height, 1);
    const std::size_t pixels = static_cast<std::size_t>(img.width) * img.height;
    const double* r = img.plane_data(0);
    const double* g = img.plane_data(1);
    const double* b = img.plane_data(2);
    for (std::size_t i = 0; i < pixels; ++i)
        out.data[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
    return out;
}

std::vector<Image> extract_patches(const Image& img, const PatchSpec& spec) {
    if (spec.patch_size < 1 || spec.patch_size > img.width || spec.patch_size > img.height)
        throw UsageError("extract_patches: patch_size " + std::to_string(spec.patch_size) +
                         " exceeds image " + std::to_string(img.width) + "x" +
                         std::to_string(img.height));
    const int ps = spec.patch_size;
    auto crop = [&](int y0, int x0) {
        Image patch(ps, ps, img.channels);
        for (int c = 0; c < img.channels; ++c)
            for (int y = 0; y < ps; ++y)
                for (int x = 0; x < ps; ++x)
                    patch.at(c, y, x) = img.at(c, y0 + y, x0 + x);
        return patch;
    };

    std::vector<Image> patches;
    if (spec.mode == PatchSpec::Mode::Grid) {
        const int ny = img.height / ps, nx = img.width / ps;
        const int total = ny * nx;
        const int n = spec.count > 0 ? std::min(spec.count, total) : total;
        patches.reserve(n);
        for (int i = 0; i < n; ++i)
            patches.push_back(crop((i / nx) * ps, (i % nx) * ps));
    } else {
        Rng rng(spec.seed);
        patches.reserve(spec.count);
        for (int i = 0; i < spec.count; ++i) {
            const int y0 = static_cast<int>(rng.next_below(img.height - ps + 1));
            const int x0 = static_cast<int>(rng.next_below(img.width - ps + 1));
            patches.push_back(crop(y0, x0));
        }
    }
    return patches;
}

} // namespace wavesr
