#include "synth_images.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sealkit/keyed_random.hpp"

namespace sealkit::testsupport {

namespace {

double u01(KeyedStream& s) {
    return static_cast<double>(s.next()) / 18446744073709551616.0;  // 2^64
}

}  // namespace

GrayImage synth_image(std::uint64_t id, int size) {
    const int w = size, h = size;
    KeyedStream s((0x5EA1ull << 32) + id);
    std::vector<double> img(static_cast<std::size_t>(w) * h, 0.0);
    const auto px = [&](int x, int y) -> double& {
        return img[static_cast<std::size_t>(y) * w + x];
    };

    const double mu = 70.0 + 120.0 * u01(s);
    const double gx = -40.0 + 80.0 * u01(s);
    const double gy = -40.0 + 80.0 * u01(s);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            px(x, y) = mu + gx * (static_cast<double>(x) / w - 0.5) +
                       gy * (static_cast<double>(y) / h - 0.5);

    const auto nblobs = 4 + next_below(s, 5);
    for (std::uint64_t b = 0; b < nblobs; ++b) {
        const double cx = w * u01(s);
        const double cy = h * u01(s);
        const double r = 40.0 + 120.0 * u01(s);
        const double a = -85.0 + 170.0 * u01(s);
        const int x0 = std::max(0, static_cast<int>(cx - r) - 1);
        const int x1 = std::min(w - 1, static_cast<int>(cx + r) + 1);
        const int y0 = std::max(0, static_cast<int>(cy - r) - 1);
        const int y1 = std::min(h - 1, static_cast<int>(cy + r) + 1);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
                if (d2 < r * r) {
                    const double t = std::cos(M_PI * std::sqrt(d2) / (2.0 * r));
                    px(x, y) += a * t * t;
                }
            }
        }
    }

    const auto nshapes = 2 + next_below(s, 3);
    for (std::uint64_t k = 0; k < nshapes; ++k) {
        const double x0 = (w - 260) * u01(s);
        const double y0 = (h - 260) * u01(s);
        const double rw = 64.0 + 192.0 * u01(s);
        const double rh = 64.0 + 192.0 * u01(s);
        const double a = -70.0 + 140.0 * u01(s);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double fx = std::clamp(std::min(x - x0, x0 + rw - x) / 8.0, 0.0, 1.0);
                const double fy = std::clamp(std::min(y - y0, y0 + rh - y) / 8.0, 0.0, 1.0);
                px(x, y) += a * fx * fy;
            }
        }
    }

    // Coarse value noise: 16px lattice, bilinear interpolation.
    const int gw = w / 16 + 2;
    const int gh = h / 16 + 2;
    std::vector<double> lattice(static_cast<std::size_t>(gw) * gh);
    {
        KeyedStream lat(s.next());
        for (double& v : lattice) v = 24.0 * u01(lat) - 12.0;
    }
    for (int y = 0; y < h; ++y) {
        const int yi = y / 16;
        const double fy = y / 16.0 - yi;
        for (int x = 0; x < w; ++x) {
            const int xi = x / 16;
            const double fx = x / 16.0 - xi;
            const double v00 = lattice[static_cast<std::size_t>(yi) * gw + xi];
            const double v01 = lattice[static_cast<std::size_t>(yi) * gw + xi + 1];
            const double v10 = lattice[static_cast<std::size_t>(yi + 1) * gw + xi];
            const double v11 = lattice[static_cast<std::size_t>(yi + 1) * gw + xi + 1];
            px(x, y) += v00 * (1 - fx) * (1 - fy) + v01 * fx * (1 - fy) + v10 * (1 - fx) * fy +
                        v11 * fx * fy;
        }
    }

    // Fine noise, 3x3 box blurred with edge replication.
    std::vector<double> fine(static_cast<std::size_t>(w) * h);
    {
        KeyedStream fs(s.next());
        for (double& v : fine) v = 6.0 * u01(fs) - 3.0;
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double sum = 0.0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    sum += fine[static_cast<std::size_t>(std::clamp(y + dy, 0, h - 1)) * w +
                                std::clamp(x + dx, 0, w - 1)];
            px(x, y) += sum / 9.0;
        }
    }

    GrayImage out(w, h);
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double v = std::clamp(std::round(img[i]), 5.0, 250.0);
        out.samples[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

}  // namespace sealkit::testsupport
