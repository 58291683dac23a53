#pragma once

#include <cstddef>
#include <vector>

namespace fvt {

/// Grayscale image, row-major, pixels in [0, 1].
struct Image {
    int h = 0;
    int w = 0;
    std::vector<double> pix;

    Image() = default;
    Image(int h_, int w_) : h(h_), w(w_), pix(static_cast<std::size_t>(h_) * w_, 0.0) {}

    double& at(int r, int c) { return pix[static_cast<std::size_t>(r) * w + c]; }
    double at(int r, int c) const { return pix[static_cast<std::size_t>(r) * w + c]; }
};

}  // namespace fvt
