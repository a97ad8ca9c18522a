#ifndef GEOLABEL_RULES_HPP
#define GEOLABEL_RULES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geolabel/grid.hpp"
#include "geolabel/image.hpp"
#include "geolabel/stats.hpp"

namespace geolabel {

class AllNodata : public ValueError {
public:
    using ValueError::ValueError;
};

class UnknownClass : public ValueError {
public:
    using ValueError::ValueError;
};

enum ClassId : int {
    kBareLand = 0,
    kBuildings = 1,
    kVegetation = 2,
    kRoads = 3,
    kWater = 4,
};

const char* class_name(ClassId id);
ClassId class_from_name(const std::string& name);

// Scene-relative thresholds: spatial means of the referenced layers over
// valid cells, plus the reflectance and elevation maxima the static road
// rule is anchored to.
struct RuleThresholds {
    GridSpec spec; // grid the thresholds were derived from
    double mean_e_min = 0.0;
    double mean_e_std = 0.0;
    double mean_e_max = 0.0;
    double mean_c_max = 0.0;
    double mean_c_std = 0.0;
    double r_max = 0.0;
    double e_max = 0.0;
    // Road rule coefficients: r_min > a*r_max, r_mean < b*r_max, e_min < c*e_max.
    double road_coeff_r_min = 0.1;
    double road_coeff_r_mean = 0.6;
    double road_coeff_e_min = 0.1;
};

// Means and maxima over valid cells only. Throws AllNodata (naming the
// layer) when a referenced layer has no valid cell.
RuleThresholds compute_thresholds(const StatsRaster& stats);

// False-color rendering whose channels are the class's rule layers,
// min-max normalized to [0,255] per channel; nodata renders black and a
// constant channel maps to 0.
Image pseudo_rgb(const StatsRaster& stats, ClassId cls);

// Rule masks. Strict inequalities; cells invalid in any referenced layer
// are invalid in the mask.
BinaryMask label_buildings(const StatsRaster& stats, const RuleThresholds& th);
BinaryMask label_vegetation(const StatsRaster& stats, const RuleThresholds& th);
BinaryMask label_roads(const StatsRaster& stats, const RuleThresholds& th);

// Water = zero returns anywhere in the cell's window.
BinaryMask label_water(const StatsRaster& stats);

// Composite class-code raster.
class LabelRaster {
public:
    LabelRaster() = default;
    explicit LabelRaster(const GridSpec& spec, std::uint8_t fill = kBareLand)
        : spec_(spec), codes_(spec.cell_count(), fill) {
        spec_.validate();
    }

    const GridSpec& spec() const { return spec_; }
    int width() const { return spec_.width; }
    int height() const { return spec_.height; }
    std::uint8_t at(int col, int row) const { return codes_[std::size_t(row) * spec_.width + col]; }
    std::uint8_t& at(int col, int row) { return codes_[std::size_t(row) * spec_.width + col]; }
    const std::vector<std::uint8_t>& codes() const { return codes_; }

private:
    GridSpec spec_;
    std::vector<std::uint8_t> codes_;
};

struct ClassMask {
    ClassId cls;
    const BinaryMask* mask;
};

// Each cell takes the first class in precedence order whose mask fires;
// the residual is bare land.
LabelRaster compose_label_map(const std::vector<ClassMask>& masks,
                              const std::vector<ClassId>& precedence);

// Map palette (bare land yellow, buildings dark green, vegetation dark
// purple, roads lime green, water blue).
Rgb class_color(ClassId id);
Image render_label_map(const LabelRaster& labels);

// Label raster <-> .asc of class codes.
Raster label_map_to_raster(const LabelRaster& labels);
LabelRaster label_map_from_raster(const Raster& raster);

// 0/1 raster for a mask (invalid cells are nodata).
Raster mask_to_raster(const BinaryMask& mask);

} // namespace geolabel

#endif
