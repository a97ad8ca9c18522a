#include "geolabel/rules.hpp"

#include <algorithm>
#include <cmath>

namespace geolabel {

const char* class_name(ClassId id) {
    switch (id) {
    case kBareLand: return "bare_land";
    case kBuildings: return "buildings";
    case kVegetation: return "vegetation";
    case kRoads: return "roads";
    case kWater: return "water";
    }
    throw UnknownClass("unknown class id " + std::to_string(int(id)));
}

ClassId class_from_name(const std::string& name) {
    for (ClassId id : {kBareLand, kBuildings, kVegetation, kRoads, kWater})
        if (name == class_name(id))
            return id;
    throw UnknownClass("unknown class name '" + name + "'");
}

namespace {

double valid_mean(const Raster& layer, StatsLayer which) {
    double sum = 0.0;
    std::size_t n = 0;
    for (double v : layer.values()) {
        if (!is_nodata(v)) {
            sum += v;
            ++n;
        }
    }
    if (n == 0)
        throw AllNodata(std::string("compute_thresholds: layer ") + layer_name(which) + " has no valid cell");
    return sum / double(n);
}

double valid_max(const Raster& layer, StatsLayer which) {
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (double v : layer.values()) {
        if (!is_nodata(v)) {
            best = std::max(best, v);
            any = true;
        }
    }
    if (!any)
        throw AllNodata(std::string("compute_thresholds: layer ") + layer_name(which) + " has no valid cell");
    return best;
}

// Evaluates a three-layer conjunction; the mask is invalid wherever any
// referenced layer is nodata.
template <typename Rule>
BinaryMask apply_rule(const StatsRaster& stats, StatsLayer a, StatsLayer b, StatsLayer c,
                      Rule&& rule) {
    BinaryMask mask(stats.spec, false);
    const Raster& la = stats.layer(a);
    const Raster& lb = stats.layer(b);
    const Raster& lc = stats.layer(c);
    for (int row = 0; row < stats.spec.height; ++row) {
        for (int col = 0; col < stats.spec.width; ++col) {
            double va = la.at(col, row), vb = lb.at(col, row), vc = lc.at(col, row);
            if (is_nodata(va) || is_nodata(vb) || is_nodata(vc))
                continue;
            mask.set_valid(col, row, true);
            mask.set(col, row, rule(va, vb, vc));
        }
    }
    return mask;
}

} // namespace

RuleThresholds compute_thresholds(const StatsRaster& stats) {
    RuleThresholds th;
    th.spec = stats.spec;
    th.mean_e_min = valid_mean(stats.layer(kEMin), kEMin);
    th.mean_e_std = valid_mean(stats.layer(kEStd), kEStd);
    th.mean_e_max = valid_mean(stats.layer(kEMax), kEMax);
    th.mean_c_max = valid_mean(stats.layer(kCMax), kCMax);
    th.mean_c_std = valid_mean(stats.layer(kCStd), kCStd);
    th.r_max = valid_max(stats.layer(kRMax), kRMax);
    th.e_max = valid_max(stats.layer(kEMax), kEMax);
    return th;
}

Image pseudo_rgb(const StatsRaster& stats, ClassId cls) {
    StatsLayer channels[3];
    switch (cls) {
    case kBuildings:  channels[0] = kEMin; channels[1] = kEStd; channels[2] = kEMax; break;
    case kVegetation: channels[0] = kCMax; channels[1] = kEStd; channels[2] = kCStd; break;
    case kRoads:      channels[0] = kRMin; channels[1] = kRMean; channels[2] = kEMin; break;
    default:
        throw UnknownClass(std::string("pseudo_rgb: no channel layout for class ") + class_name(cls));
    }

    double lo[3], hi[3];
    for (int ch = 0; ch < 3; ++ch) {
        lo[ch] = std::numeric_limits<double>::infinity();
        hi[ch] = -std::numeric_limits<double>::infinity();
        for (double v : stats.layer(channels[ch]).values()) {
            if (is_nodata(v))
                continue;
            lo[ch] = std::min(lo[ch], v);
            hi[ch] = std::max(hi[ch], v);
        }
    }

    Image img(stats.spec.width, stats.spec.height);
    for (int row = 0; row < stats.spec.height; ++row) {
        for (int col = 0; col < stats.spec.width; ++col) {
            std::uint8_t px[3] = {0, 0, 0};
            for (int ch = 0; ch < 3; ++ch) {
                double v = stats.layer(channels[ch]).at(col, row);
                if (is_nodata(v))
                    continue; // leaves the cell black
                double span = hi[ch] - lo[ch];
                double norm = span > 0 ? (v - lo[ch]) / span : 0.0;
                px[ch] = std::uint8_t(std::lround(norm * 255.0));
            }
            img.at(col, row) = Rgb{px[0], px[1], px[2]};
        }
    }
    return img;
}

BinaryMask label_buildings(const StatsRaster& stats, const RuleThresholds& th) {
    require_same_spec(stats.spec, th.spec, "label_buildings");
    return apply_rule(stats, kEMin, kEStd, kEMax, [&](double e_min, double e_std, double e_max) {
        return e_min > th.mean_e_min && e_std < th.mean_e_std && e_max > th.mean_e_max;
    });
}

BinaryMask label_vegetation(const StatsRaster& stats, const RuleThresholds& th) {
    require_same_spec(stats.spec, th.spec, "label_vegetation");
    return apply_rule(stats, kCMax, kEStd, kCStd, [&](double c_max, double e_std, double c_std) {
        return c_max > th.mean_c_max && e_std > th.mean_e_std && c_std > th.mean_c_std;
    });
}

BinaryMask label_roads(const StatsRaster& stats, const RuleThresholds& th) {
    require_same_spec(stats.spec, th.spec, "label_roads");
    // The rule assumes detrended elevation (ground near zero).
    double min_e = std::numeric_limits<double>::infinity();
    for (double v : stats.layer(kEMin).values())
        if (!is_nodata(v))
            min_e = std::min(min_e, v);
    if (std::isfinite(min_e) && th.e_max > 0 && min_e > 0.05 * th.e_max)
        log_warn("label_roads: minimum elevation " + std::to_string(min_e) +
                 " suggests the scene was not detrended");

    return apply_rule(stats, kRMin, kRMean, kEMin, [&](double r_min, double r_mean, double e_min) {
        return r_min > th.road_coeff_r_min * th.r_max &&
               r_mean < th.road_coeff_r_mean * th.r_max &&
               e_min < th.road_coeff_e_min * th.e_max;
    });
}

BinaryMask label_water(const StatsRaster& stats) {
    BinaryMask mask(stats.spec, true);
    const Raster& sum = stats.layer(kCSum);
    for (int row = 0; row < stats.spec.height; ++row)
        for (int col = 0; col < stats.spec.width; ++col)
            mask.set(col, row, sum.at(col, row) == 0.0);
    return mask;
}

LabelRaster compose_label_map(const std::vector<ClassMask>& masks,
                              const std::vector<ClassId>& precedence) {
    if (masks.empty())
        throw ValueError("compose_label_map: no masks");
    const GridSpec& spec = masks[0].mask->spec();
    for (const ClassMask& m : masks)
        require_same_spec(spec, m.mask->spec(), "compose_label_map");

    LabelRaster out(spec, kBareLand);
    for (int row = 0; row < spec.height; ++row) {
        for (int col = 0; col < spec.width; ++col) {
            for (ClassId cls : precedence) {
                const BinaryMask* mask = nullptr;
                for (const ClassMask& m : masks)
                    if (m.cls == cls)
                        mask = m.mask;
                if (mask && mask->valid(col, row) && mask->bit(col, row)) {
                    out.at(col, row) = std::uint8_t(cls);
                    break;
                }
            }
        }
    }
    return out;
}

Rgb class_color(ClassId id) {
    switch (id) {
    case kBareLand: return {230, 220, 80};   // yellow
    case kBuildings: return {0, 100, 0};     // dark green
    case kVegetation: return {110, 40, 110}; // dark madder purple
    case kRoads: return {50, 205, 50};       // lime green
    case kWater: return {40, 90, 220};       // blue
    }
    throw UnknownClass("unknown class id " + std::to_string(int(id)));
}

Image render_label_map(const LabelRaster& labels) {
    Image img(labels.width(), labels.height());
    for (int row = 0; row < labels.height(); ++row)
        for (int col = 0; col < labels.width(); ++col)
            img.at(col, row) = class_color(ClassId(labels.at(col, row)));
    return img;
}

Raster label_map_to_raster(const LabelRaster& labels) {
    Raster raster(labels.spec(), 0.0);
    for (int row = 0; row < labels.height(); ++row)
        for (int col = 0; col < labels.width(); ++col)
            raster.at(col, row) = double(labels.at(col, row));
    return raster;
}

LabelRaster label_map_from_raster(const Raster& raster) {
    LabelRaster labels(raster.spec());
    for (int row = 0; row < raster.height(); ++row) {
        for (int col = 0; col < raster.width(); ++col) {
            double v = raster.at(col, row);
            if (is_nodata(v) || v < 0 || v > 255 || v != std::floor(v))
                throw ParseError("label map: cell (" + std::to_string(col) + "," +
                                 std::to_string(row) + ") is not a class code");
            labels.at(col, row) = std::uint8_t(v);
        }
    }
    return labels;
}

Raster mask_to_raster(const BinaryMask& mask) {
    Raster raster(mask.spec());
    for (int row = 0; row < mask.height(); ++row)
        for (int col = 0; col < mask.width(); ++col)
            if (mask.valid(col, row))
                raster.at(col, row) = mask.bit(col, row) ? 1.0 : 0.0;
    return raster;
}

} // namespace geolabel
