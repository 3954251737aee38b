#pragma once

#include "betatet/beta.hpp"
#include "betatet/core.hpp"
#include "betatet/dynamics.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace betatet {

/// A rectangular window of the s-plane sampled at cell centres.
/// Row 0 is the top edge (im_max); column 0 is the left edge (re_min).
struct GridSpec {
    double re_min = -1.0;
    double re_max = 1.0;
    double im_min = -1.0;
    double im_max = 1.0;
    int width = 64;
    int height = 64;

    /// Throws std::invalid_argument unless min < max and sizes are positive.
    void validate() const;
    cplx point(int col, int row) const;

    bool operator==(const GridSpec&) const = default;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

struct PixelMap {
    GridSpec grid;
    std::vector<Rgb> pixels;  // row-major

    const Rgb& at(int col, int row) const
    {
        return pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(grid.width) +
                      static_cast<std::size_t>(col)];
    }
    bool operator==(const PixelMap&) const = default;
};

inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kGray{128, 128, 128};

/// Domain colouring: hue = Arg(f) / 2 pi, saturation 1,
/// value = 1 - 1 / (1 + ln(1 + |f|)). Sentinels are black.
Rgb phase_color(const Checked& f);

/// Julia white, Fatou black, Undecided gray.
Rgb verdict_color(Verdict v);

using PlaneMap = std::function<Checked(cplx)>;

/// Row-parallel renderers (OpenMP). f must be safe to call concurrently.
PixelMap phase_plot(const PlaneMap& f, const GridSpec& grid);
PixelMap julia_mask(const GSeries& gs, const GridSpec& grid, const ClassifyConfig& cfg = {});

/// Single-threaded reference renderers; bit-identical output.
PixelMap phase_plot_serial(const PlaneMap& f, const GridSpec& grid);
PixelMap julia_mask_serial(const GSeries& gs, const GridSpec& grid, const ClassifyConfig& cfg = {});

/// Binary P6 pixmap: "P6\n<width> <height>\n255\n" then raw RGB bytes.
void write_ppm(std::ostream& os, const PixelMap& img);
void write_ppm(const std::string& path, const PixelMap& img);

}  // namespace betatet
