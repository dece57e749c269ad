#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "esum/common.hpp"

namespace esum {

/// The closed region bounded by the d-cusp hypocycloid
/// t -> (d-1) e(t) + e((1-d) t), sampled as a closed polyline on a uniform
/// parameter grid. The boundary lies in the annulus d-2 <= |z| <= d, with
/// the first vertex at the cusp z = d.
struct HypocycloidRegion {
    std::uint64_t d = 2;
    std::uint64_t resolution = 0;                  // M, number of segments
    std::vector<std::complex<double>> boundary;    // M + 1 points, closed
};

/// Membership oracle stored as a cell raster; cell (i, j) has center
/// (i * cell_size, j * cell_size), with |i| <= half_extent_x and
/// |j| <= half_extent_y. Centers on an integer lattice make Minkowski sums
/// exact index additions.
class GridRegion {
  public:
    GridRegion(double cell_size, std::int64_t half_extent_x,
               std::int64_t half_extent_y);

    double cell_size() const { return cell_; }
    std::int64_t half_extent_x() const { return hx_; }
    std::int64_t half_extent_y() const { return hy_; }
    std::uint64_t occupied_count() const;

    bool cell(std::int64_t i, std::int64_t j) const;
    void set_cell(std::int64_t i, std::int64_t j);

    /// All occupied cell indices, row-major.
    std::vector<std::pair<std::int64_t, std::int64_t>> occupied() const;

  private:
    friend GridRegion minkowski_sum(const GridRegion&, const GridRegion&);
    std::size_t row_words() const;

    double cell_;
    std::int64_t hx_, hy_;
    std::uint64_t nx_, ny_;
    std::vector<std::uint64_t> bits_;  // row-major bitset, ny_ rows
};

/// Closed polyline of the d-cusp hypocycloid with M segments. Requires
/// M >= 64 d (the resolution the membership tolerance is calibrated for).
HypocycloidRegion hypocycloid_region(std::uint64_t d, std::uint64_t resolution);

/// Winding number of the polyline around z (0 outside, +-1 inside).
int winding_number(const HypocycloidRegion& region, std::complex<double> z);

/// Distance from z to the boundary polyline.
double boundary_distance(const HypocycloidRegion& region,
                         std::complex<double> z);

/// Membership in the closed region with a signed tolerance: tol >= 0 counts
/// a band of width tol around the boundary as inside; tol < 0 demands the
/// point be interior by at least |tol|. For d = 2 the region degenerates to
/// the segment [-2, 2].
bool in_region(const HypocycloidRegion& region, std::complex<double> z,
               double tol);

/// Raster of the region: a cell is marked when its center is in the region
/// or within cover_tol of the boundary, making the raster an outer cover
/// of the true region for cover_tol >= half the cell diagonal.
/// Rasterization parallelizes by rows; the result does not depend on the
/// worker count.
GridRegion raster_region(const HypocycloidRegion& region, double cell_size,
                         double cover_tol, unsigned workers = 1);

/// Minkowski sum of two rasters with the same cell size (index addition).
GridRegion minkowski_sum(const GridRegion& a, const GridRegion& b);

/// The image region of g_{r^b}: the Minkowski sum of r^(b-1) copies of the
/// r-cusp hypocycloid region, rasterized at the given cell size.
GridRegion minkowski_region(std::uint64_t r, std::uint64_t b,
                            double cell_size, unsigned workers = 1);

/// Occupancy of the cell containing z, with one cell of dilation as
/// tolerance. Points outside the bounding box are outside.
bool grid_contains(const GridRegion& region, std::complex<double> z);

/// CSV rows "x,y" of the boundary polyline.
void write_boundary_csv(const HypocycloidRegion& region, std::ostream& out);

/// Plain text raster: a header line with the grid geometry, then one row of
/// 0/1 digits per grid row (top row = largest j).
void write_raster(const GridRegion& region, std::ostream& out);

}  // namespace esum
