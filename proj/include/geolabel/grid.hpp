#ifndef GEOLABEL_GRID_HPP
#define GEOLABEL_GRID_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "geolabel/errors.hpp"

namespace geolabel {

class NonNestedResolution : public ValueError {
public:
    using ValueError::ValueError;
};

class SpecMismatch : public ValueError {
public:
    using ValueError::ValueError;
};

struct CellIndex {
    int col = 0;
    int row = 0;
    bool operator==(const CellIndex&) const = default;
};

// Square-cell grid anchored at its top-left corner. Cells are row-major from
// the top-left; a point belongs to the cell whose left/top edges it touches
// (right and bottom edges are exclusive).
struct GridSpec {
    double origin_x = 0.0; // top-left corner, meters
    double origin_y = 0.0;
    double resolution = 0.3; // meters per cell
    int width = 0;           // cells
    int height = 0;
    double nodata = -9999.0; // file sentinel; in memory nodata cells hold NaN

    bool operator==(const GridSpec&) const = default;

    std::size_t cell_count() const { return std::size_t(width) * std::size_t(height); }
    double extent_x() const { return width * resolution; }
    double extent_y() const { return height * resolution; }

    void validate() const {
        if (!(resolution > 0.0))
            throw ValueError("GridSpec: resolution must be > 0");
        if (width < 1 || height < 1)
            throw ValueError("GridSpec: width and height must be >= 1");
    }
};

inline bool is_nodata(double v) { return std::isnan(v); }
inline double nodata_value() { return std::numeric_limits<double>::quiet_NaN(); }

// floor((x-x0)/res), floor((y0-y)/res); nullopt when outside the grid.
std::optional<CellIndex> world_to_cell(const GridSpec& spec, double x, double y);

// Center of a cell in world coordinates.
void cell_center(const GridSpec& spec, int col, int row, double& x, double& y);

// Snaps the origin onto the lattice of a coarser parent grid (expanding
// up/left) and grows width/height so the original coverage is preserved.
// parent_resolution must be an integer multiple of spec.resolution.
GridSpec align_to_nested_grid(const GridSpec& spec, double parent_resolution);

// Row-major floating point raster; NaN marks nodata.
class Raster {
public:
    Raster() = default;
    explicit Raster(const GridSpec& spec, double fill = nodata_value())
        : spec_(spec), values_(spec.cell_count(), fill) {
        spec_.validate();
    }

    const GridSpec& spec() const { return spec_; }
    int width() const { return spec_.width; }
    int height() const { return spec_.height; }

    double at(int col, int row) const { return values_[index(col, row)]; }
    double& at(int col, int row) { return values_[index(col, row)]; }
    bool is_valid(int col, int row) const { return !is_nodata(at(col, row)); }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    std::size_t index(int col, int row) const {
        return std::size_t(row) * spec_.width + col;
    }

private:
    GridSpec spec_;
    std::vector<double> values_;
};

// Per-class boolean raster. bits may be set only where valid is set.
class BinaryMask {
public:
    BinaryMask() = default;
    explicit BinaryMask(const GridSpec& spec, bool all_valid = true)
        : spec_(spec),
          bits_(spec.cell_count(), 0),
          valid_(spec.cell_count(), all_valid ? 1 : 0) {
        spec_.validate();
    }

    const GridSpec& spec() const { return spec_; }
    int width() const { return spec_.width; }
    int height() const { return spec_.height; }

    bool bit(int col, int row) const { return bits_[index(col, row)] != 0; }
    bool valid(int col, int row) const { return valid_[index(col, row)] != 0; }

    void set(int col, int row, bool value) {
        std::size_t i = index(col, row);
        if (value && !valid_[i])
            throw LogicError("BinaryMask: bit set on invalid cell");
        bits_[i] = value ? 1 : 0;
    }
    void set_valid(int col, int row, bool value) {
        std::size_t i = index(col, row);
        valid_[i] = value ? 1 : 0;
        if (!value)
            bits_[i] = 0;
    }

    std::size_t index(int col, int row) const {
        return std::size_t(row) * spec_.width + col;
    }

private:
    GridSpec spec_;
    std::vector<std::uint8_t> bits_;
    std::vector<std::uint8_t> valid_;
};

inline void require_same_spec(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b))
        throw SpecMismatch(std::string(what) + ": grid specs differ");
}

} // namespace geolabel

#endif
