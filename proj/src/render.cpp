#include "betatet/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace betatet {

namespace {

std::uint8_t channel(double x)
{
    return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(x, 0.0, 1.0)));
}

Rgb hsv(double h, double s, double v)
{
    const double sector = h * 6.0;
    const int i = static_cast<int>(std::floor(sector)) % 6;
    const double f = sector - std::floor(sector);
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    double r = v, g = t, b = p;
    switch (i) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
    }
    return {channel(r), channel(g), channel(b)};
}

PixelMap blank(const GridSpec& grid)
{
    grid.validate();
    PixelMap img;
    img.grid = grid;
    img.pixels.assign(static_cast<std::size_t>(grid.width) * static_cast<std::size_t>(grid.height),
                      kBlack);
    return img;
}

template <typename PixelFn>
void fill_row(PixelMap& img, int row, const PixelFn& pixel)
{
    const GridSpec& g = img.grid;
    Rgb* out = img.pixels.data() + static_cast<std::size_t>(row) * static_cast<std::size_t>(g.width);
    for (int col = 0; col < g.width; ++col)
        out[col] = pixel(g.point(col, row));
}

template <typename PixelFn>
PixelMap render_parallel(const GridSpec& grid, const PixelFn& pixel)
{
    PixelMap img = blank(grid);
    const int rows = grid.height;
#pragma omp parallel for schedule(dynamic, 1)
    for (int row = 0; row < rows; ++row)
        fill_row(img, row, pixel);
    return img;
}

template <typename PixelFn>
PixelMap render_serial(const GridSpec& grid, const PixelFn& pixel)
{
    PixelMap img = blank(grid);
    for (int row = 0; row < grid.height; ++row)
        fill_row(img, row, pixel);
    return img;
}

}  // namespace

void GridSpec::validate() const
{
    if (!(re_min < re_max) || !(im_min < im_max) || width < 1 || height < 1)
        throw std::invalid_argument("GridSpec needs re_min < re_max, im_min < im_max, positive size");
}

cplx GridSpec::point(int col, int row) const
{
    const double re = re_min + (re_max - re_min) * (col + 0.5) / width;
    const double im = im_max - (im_max - im_min) * (row + 0.5) / height;
    return {re, im};
}

Rgb phase_color(const Checked& f)
{
    if (!f)
        return kBlack;
    const double mod = std::abs(*f);
    if (!std::isfinite(mod))
        return kBlack;
    double hue = std::arg(*f) / (2.0 * kPi);
    if (hue < 0.0)
        hue += 1.0;
    const double value = 1.0 - 1.0 / (1.0 + std::log1p(mod));
    return hsv(hue, 1.0, value);
}

Rgb verdict_color(Verdict v)
{
    switch (v) {
    case Verdict::Julia: return kWhite;
    case Verdict::Fatou: return kBlack;
    case Verdict::Undecided: return kGray;
    }
    return kGray;
}

PixelMap phase_plot(const PlaneMap& f, const GridSpec& grid)
{
    return render_parallel(grid, [&f](cplx s) { return phase_color(f(s)); });
}

PixelMap phase_plot_serial(const PlaneMap& f, const GridSpec& grid)
{
    return render_serial(grid, [&f](cplx s) { return phase_color(f(s)); });
}

PixelMap julia_mask(const GSeries& gs, const GridSpec& grid, const ClassifyConfig& cfg)
{
    return render_parallel(
        grid, [&](cplx s) { return verdict_color(classify_point(s, gs, cfg).verdict); });
}

PixelMap julia_mask_serial(const GSeries& gs, const GridSpec& grid, const ClassifyConfig& cfg)
{
    return render_serial(
        grid, [&](cplx s) { return verdict_color(classify_point(s, gs, cfg).verdict); });
}

void write_ppm(std::ostream& os, const PixelMap& img)
{
    os << "P6\n" << img.grid.width << ' ' << img.grid.height << "\n255\n";
    for (const Rgb& px : img.pixels) {
        const char bytes[3] = {static_cast<char>(px.r), static_cast<char>(px.g),
                               static_cast<char>(px.b)};
        os.write(bytes, 3);
    }
}

void write_ppm(const std::string& path, const PixelMap& img)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_ppm(out, img);
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace betatet
