#ifndef GEOLABEL_STATS_HPP
#define GEOLABEL_STATS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "geolabel/accumulator.hpp"
#include "geolabel/grid.hpp"
#include "geolabel/point.hpp"

namespace geolabel {

// The 13 statistics layers, indexed A-M: windowed min/max/mean/std of
// reflectance (intensity), count (returns per pulse, plus its sum) and
// elevation.
enum StatsLayer : int {
    kRMin = 0,  // A
    kRMax,      // B
    kRMean,     // C
    kRStd,      // D
    kCMin,      // E
    kCMax,      // F
    kCMean,     // G
    kCStd,      // H
    kCSum,      // I
    kEMin,      // J
    kEMax,      // K
    kEMean,     // L
    kEStd,      // M
    kLayerCount
};

const char* layer_name(StatsLayer layer);
char layer_letter(StatsLayer layer);

struct StatsRaster {
    GridSpec spec;
    std::array<Raster, kLayerCount> layers;

    const Raster& layer(StatsLayer l) const { return layers[l]; }
    Raster& layer(StatsLayer l) { return layers[l]; }
};

// Per-cell accumulators for a streaming ingest; finalize applies the sliding
// window. Memory is bounded by the grid, not the point count.
class CellAccumulatorGrid {
public:
    explicit CellAccumulatorGrid(const GridSpec& spec);

    void add(const PointRecord& point);

    std::uint64_t in_bounds() const { return in_bounds_; }

    const GridSpec& spec() const { return spec_; }

    // Statistics per cell over the window_cells x window_cells block of
    // cells centered on it (odd window, clipped at the grid edge). Empty
    // windows are nodata in every layer except the return-count sum, which
    // is zero.
    StatsRaster finalize(int window_cells) const;

private:
    GridSpec spec_;
    std::vector<StatAccumulator> r_, c_, e_;
    std::uint64_t in_bounds_ = 0;
};

// One-shot form of the ingest + finalize pair. An extent containing no
// points yields an all-nodata raster with a warning, not an error.
StatsRaster rasterize_statistics(std::span<const PointRecord> points,
                                 const GridSpec& spec, int window_cells);

// Subtracts the given percentile of valid minimum-elevation values from the
// three elevation level layers (min/max/mean), clamping at zero from below.
// The elevation spread layer is untouched. Returns the shift applied.
double detrend_elevation(StatsRaster& stats, double percentile = 1.0);

// Linear-interpolation percentile of the given values; pct in [0,100].
double percentile_of(std::vector<double> values, double pct);

// Directory layout: manifest.json plus stats_A.asc ... stats_M.asc.
struct StatsMeta {
    int window_cells = 5;
    bool detrended = false;
};

void write_stats_dir(const StatsRaster& stats, const std::string& dir, const StatsMeta& meta);
StatsRaster read_stats_dir(const std::string& dir, StatsMeta* meta = nullptr);

} // namespace geolabel

#endif
