#include "geolabel/grid.hpp"

#include <cmath>

namespace geolabel {

std::optional<CellIndex> world_to_cell(const GridSpec& spec, double x, double y) {
    double fc = std::floor((x - spec.origin_x) / spec.resolution);
    double fr = std::floor((spec.origin_y - y) / spec.resolution);
    if (fc < 0 || fr < 0 || fc >= spec.width || fr >= spec.height)
        return std::nullopt;
    return CellIndex{int(fc), int(fr)};
}

void cell_center(const GridSpec& spec, int col, int row, double& x, double& y) {
    x = spec.origin_x + (col + 0.5) * spec.resolution;
    y = spec.origin_y - (row + 0.5) * spec.resolution;
}

GridSpec align_to_nested_grid(const GridSpec& spec, double parent_resolution) {
    spec.validate();
    if (!(parent_resolution > 0.0))
        throw ValueError("align_to_nested_grid: parent resolution must be > 0");

    double ratio = parent_resolution / spec.resolution;
    long long k = std::llround(ratio);
    if (k < 1 || std::abs(ratio - double(k)) > 1e-9 * double(k))
        throw NonNestedResolution("align_to_nested_grid: parent resolution is not an integer multiple of child resolution");

    const double eps = 1e-9 * parent_resolution;
    double x0 = std::floor(spec.origin_x / parent_resolution + eps) * parent_resolution;
    double y0 = std::ceil(spec.origin_y / parent_resolution - eps) * parent_resolution;

    // Keep the old right/bottom edges covered from the snapped origin.
    double right = spec.origin_x + spec.width * spec.resolution;
    double bottom = spec.origin_y - spec.height * spec.resolution;
    int width = int(std::ceil((right - x0) / spec.resolution - 1e-9));
    int height = int(std::ceil((y0 - bottom) / spec.resolution - 1e-9));

    GridSpec out = spec;
    out.origin_x = x0;
    out.origin_y = y0;
    out.width = width;
    out.height = height;
    return out;
}

} // namespace geolabel
