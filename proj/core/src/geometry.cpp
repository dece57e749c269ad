#include "esum/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "esum/parallel.hpp"

namespace esum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

std::complex<double> boundary_point(std::uint64_t d, double t) {
    const double a = kTwoPi * t;
    const double b = kTwoPi * (1.0 - static_cast<double>(d)) * t;
    return {(d - 1.0) * std::cos(a) + std::cos(b),
            (d - 1.0) * std::sin(a) + std::sin(b)};
}

double segment_distance(std::complex<double> p, std::complex<double> a,
                        std::complex<double> b) {
    const std::complex<double> ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 == 0.0 ? 0.0
                           : ((p.real() - a.real()) * ab.real() +
                              (p.imag() - a.imag()) * ab.imag()) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

}  // namespace

HypocycloidRegion hypocycloid_region(std::uint64_t d,
                                     std::uint64_t resolution) {
    if (d < 2) throw Error("hypocycloid requires d >= 2");
    if (resolution < 64 * d)
        throw ResolutionTooLow("resolution must be at least 64 d");
    HypocycloidRegion region;
    region.d = d;
    region.resolution = resolution;
    region.boundary.reserve(resolution + 1);
    for (std::uint64_t k = 0; k < resolution; ++k)
        region.boundary.push_back(boundary_point(
            d, static_cast<double>(k) / static_cast<double>(resolution)));
    region.boundary.push_back(region.boundary.front());  // closed
    return region;
}

int winding_number(const HypocycloidRegion& region, std::complex<double> z) {
    // crossing rule over the closed polyline
    int wn = 0;
    const auto& b = region.boundary;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const double y1 = b[i].imag(), y2 = b[i + 1].imag();
        if (y1 <= z.imag()) {
            if (y2 > z.imag()) {
                const double cross =
                    (b[i + 1].real() - b[i].real()) * (z.imag() - y1) -
                    (z.real() - b[i].real()) * (y2 - y1);
                if (cross > 0) ++wn;
            }
        } else if (y2 <= z.imag()) {
            const double cross =
                (b[i + 1].real() - b[i].real()) * (z.imag() - y1) -
                (z.real() - b[i].real()) * (y2 - y1);
            if (cross < 0) --wn;
        }
    }
    return wn;
}

double boundary_distance(const HypocycloidRegion& region,
                         std::complex<double> z) {
    double best = std::numeric_limits<double>::infinity();
    const auto& b = region.boundary;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        best = std::min(best, segment_distance(z, b[i], b[i + 1]));
    return best;
}

bool in_region(const HypocycloidRegion& region, std::complex<double> z,
               double tol) {
    const double d = static_cast<double>(region.d);
    if (region.d == 2)
        return std::abs(z.imag()) <= tol && std::abs(z.real()) <= 2.0 + tol;
    const double r = std::abs(z);
    // the boundary lies in the annulus [d-2, d]
    if (r < d - 2.0 - std::abs(tol)) return true;
    if (r > d + tol) return false;
    if (tol >= 0.0)
        return winding_number(region, z) != 0 ||
               boundary_distance(region, z) <= tol;
    return winding_number(region, z) != 0 &&
           boundary_distance(region, z) >= -tol;
}

GridRegion::GridRegion(double cell_size, std::int64_t half_extent_x,
                       std::int64_t half_extent_y)
    : cell_(cell_size), hx_(half_extent_x), hy_(half_extent_y) {
    nx_ = static_cast<std::uint64_t>(2 * hx_ + 1);
    ny_ = static_cast<std::uint64_t>(2 * hy_ + 1);
    bits_.assign(ny_ * row_words(), 0);
}

std::size_t GridRegion::row_words() const { return (nx_ + 63) / 64; }

bool GridRegion::cell(std::int64_t i, std::int64_t j) const {
    if (i < -hx_ || i > hx_ || j < -hy_ || j > hy_) return false;
    const std::uint64_t col = static_cast<std::uint64_t>(i + hx_);
    const std::uint64_t row = static_cast<std::uint64_t>(j + hy_);
    return (bits_[row * row_words() + col / 64] >> (col % 64)) & 1;
}

void GridRegion::set_cell(std::int64_t i, std::int64_t j) {
    const std::uint64_t col = static_cast<std::uint64_t>(i + hx_);
    const std::uint64_t row = static_cast<std::uint64_t>(j + hy_);
    bits_[row * row_words() + col / 64] |= std::uint64_t{1} << (col % 64);
}

std::uint64_t GridRegion::occupied_count() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::vector<std::pair<std::int64_t, std::int64_t>> GridRegion::occupied()
    const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(occupied_count());
    for (std::int64_t j = -hy_; j <= hy_; ++j)
        for (std::int64_t i = -hx_; i <= hx_; ++i)
            if (cell(i, j)) out.emplace_back(i, j);
    return out;
}

GridRegion raster_region(const HypocycloidRegion& region, double cell_size,
                         double cover_tol, unsigned workers) {
    const double d = static_cast<double>(region.d);
    const std::int64_t h =
        static_cast<std::int64_t>(std::ceil((d + 2.0 * cover_tol) / cell_size)) + 1;
    GridRegion grid(cell_size, h, h);
    // rows are independent (cells of one row share bitmap words only with
    // each other), so the row partition is race-free and deterministic
    const std::uint64_t rows = static_cast<std::uint64_t>(2 * h + 1);
    parallel_chunks(rows, 8, workers,
                    [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t row = begin; row < end; ++row) {
                            const std::int64_t j =
                                static_cast<std::int64_t>(row) - h;
                            for (std::int64_t i = -h; i <= h; ++i)
                                if (in_region(
                                        region,
                                        {static_cast<double>(i) * cell_size,
                                         static_cast<double>(j) * cell_size},
                                        cover_tol))
                                    grid.set_cell(i, j);
                        }
                    });
    return grid;
}

GridRegion minkowski_sum(const GridRegion& a, const GridRegion& b) {
    if (a.cell_size() != b.cell_size())
        throw Error("minkowski_sum requires equal cell sizes");
    GridRegion out(a.cell_size(), a.half_extent_x() + b.half_extent_x(),
                   a.half_extent_y() + b.half_extent_y());
    const std::size_t aw = a.row_words(), ow = out.row_words();
    for (const auto& [bi, bj] : b.occupied()) {
        // OR the bitmap of a, shifted by (bi, bj), into out
        const std::int64_t col_off =
            bi + b.half_extent_x() +
            (out.half_extent_x() - a.half_extent_x() - b.half_extent_x());
        const std::uint64_t word_off = static_cast<std::uint64_t>(col_off) / 64;
        const unsigned bit_off = static_cast<unsigned>(col_off % 64);
        for (std::int64_t aj = -a.half_extent_y(); aj <= a.half_extent_y();
             ++aj) {
            const std::uint64_t arow =
                static_cast<std::uint64_t>(aj + a.half_extent_y());
            const std::uint64_t orow =
                static_cast<std::uint64_t>(aj + bj + out.half_extent_y());
            const std::uint64_t* src = &a.bits_[arow * aw];
            std::uint64_t* dst = &out.bits_[orow * ow + word_off];
            if (bit_off == 0) {
                for (std::size_t w = 0; w < aw; ++w) dst[w] |= src[w];
            } else {
                std::uint64_t carry = 0;
                for (std::size_t w = 0; w < aw; ++w) {
                    dst[w] |= (src[w] << bit_off) | carry;
                    carry = src[w] >> (64 - bit_off);
                }
                // a nonzero carry always lands inside the output row
                if (carry != 0) dst[aw] |= carry;
            }
        }
    }
    return out;
}

GridRegion minkowski_region(std::uint64_t r, std::uint64_t b,
                            double cell_size, unsigned workers) {
    const HypocycloidRegion h_r = hypocycloid_region(r, 64 * r * 4);
    // outer cover: half the cell diagonal, padded for rounding
    const double cover = 0.75 * cell_size;
    GridRegion base = raster_region(h_r, cell_size, cover, workers);
    std::uint64_t copies = 1;
    for (std::uint64_t i = 1; i < b; ++i) copies *= r;
    GridRegion acc = base;
    for (std::uint64_t c = 1; c < copies; ++c) acc = minkowski_sum(acc, base);
    return acc;
}

bool grid_contains(const GridRegion& region, std::complex<double> z) {
    const double c = region.cell_size();
    const std::int64_t i = static_cast<std::int64_t>(std::llround(z.real() / c));
    const std::int64_t j = static_cast<std::int64_t>(std::llround(z.imag() / c));
    if (i < -region.half_extent_x() - 1 || i > region.half_extent_x() + 1 ||
        j < -region.half_extent_y() - 1 || j > region.half_extent_y() + 1)
        return false;
    for (std::int64_t dj = -1; dj <= 1; ++dj)
        for (std::int64_t di = -1; di <= 1; ++di)
            if (region.cell(i + di, j + dj)) return true;
    return false;
}

void write_boundary_csv(const HypocycloidRegion& region, std::ostream& out) {
    out << "x,y\n";
    char buf[64];
    for (const auto& p : region.boundary) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.real(), p.imag());
        out << buf;
    }
}

void write_raster(const GridRegion& region, std::ostream& out) {
    out << "# raster cell=" << region.cell_size()
        << " half_extent_x=" << region.half_extent_x()
        << " half_extent_y=" << region.half_extent_y()
        << " (cell (i,j) center = (i*cell, j*cell))\n";
    for (std::int64_t j = region.half_extent_y(); j >= -region.half_extent_y();
         --j) {
        for (std::int64_t i = -region.half_extent_x();
             i <= region.half_extent_x(); ++i)
            out << (region.cell(i, j) ? '1' : '0');
        out << '\n';
    }
}

}  // namespace esum
