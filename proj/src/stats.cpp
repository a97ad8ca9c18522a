#include "geolabel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "geolabel/ascii_grid.hpp"

namespace geolabel {

namespace {
constexpr const char* kLayerNames[kLayerCount] = {
    "r_min", "r_max", "r_mean", "r_std",
    "c_min", "c_max", "c_mean", "c_std", "c_sum",
    "e_min", "e_max", "e_mean", "e_std"};
}

const char* layer_name(StatsLayer layer) { return kLayerNames[layer]; }
char layer_letter(StatsLayer layer) { return char('A' + int(layer)); }

CellAccumulatorGrid::CellAccumulatorGrid(const GridSpec& spec) : spec_(spec) {
    spec_.validate();
    r_.resize(spec_.cell_count());
    c_.resize(spec_.cell_count());
    e_.resize(spec_.cell_count());
}

void CellAccumulatorGrid::add(const PointRecord& point) {
    auto cell = world_to_cell(spec_, point.x, point.y);
    if (!cell)
        return;
    std::size_t i = std::size_t(cell->row) * spec_.width + cell->col;
    r_[i].add(point.intensity);
    c_[i].add(double(point.number_of_returns));
    e_[i].add(point.z);
    ++in_bounds_;
}

StatsRaster CellAccumulatorGrid::finalize(int window_cells) const {
    if (window_cells < 1 || window_cells % 2 == 0)
        throw ValueError("rasterize_statistics: window_cells must be odd and >= 1");
    const int hw = window_cells / 2;

    StatsRaster out;
    out.spec = spec_;
    for (int l = 0; l < kLayerCount; ++l)
        out.layers[l] = Raster(spec_);

    for (int row = 0; row < spec_.height; ++row) {
        for (int col = 0; col < spec_.width; ++col) {
            StatAccumulator ar, ac, ae;
            int r0 = std::max(0, row - hw), r1 = std::min(spec_.height - 1, row + hw);
            int c0 = std::max(0, col - hw), c1 = std::min(spec_.width - 1, col + hw);
            for (int r = r0; r <= r1; ++r) {
                std::size_t base = std::size_t(r) * spec_.width;
                for (int c = c0; c <= c1; ++c) {
                    ar.merge(r_[base + c]);
                    ac.merge(c_[base + c]);
                    ae.merge(e_[base + c]);
                }
            }
            out.layers[kCSum].at(col, row) = ac.sum();
            if (ar.empty())
                continue; // nodata everywhere else
            out.layers[kRMin].at(col, row) = ar.min();
            out.layers[kRMax].at(col, row) = ar.max();
            out.layers[kRMean].at(col, row) = ar.mean();
            out.layers[kRStd].at(col, row) = ar.stddev();
            out.layers[kCMin].at(col, row) = ac.min();
            out.layers[kCMax].at(col, row) = ac.max();
            out.layers[kCMean].at(col, row) = ac.mean();
            out.layers[kCStd].at(col, row) = ac.stddev();
            out.layers[kEMin].at(col, row) = ae.min();
            out.layers[kEMax].at(col, row) = ae.max();
            out.layers[kEMean].at(col, row) = ae.mean();
            out.layers[kEStd].at(col, row) = ae.stddev();
        }
    }
    return out;
}

StatsRaster rasterize_statistics(std::span<const PointRecord> points,
                                 const GridSpec& spec, int window_cells) {
    CellAccumulatorGrid grid(spec);
    for (const PointRecord& p : points)
        grid.add(p);
    if (grid.in_bounds() == 0)
        log_warn("rasterize_statistics: no point falls inside the grid extent");
    return grid.finalize(window_cells);
}

double percentile_of(std::vector<double> values, double pct) {
    if (values.empty())
        throw ValueError("percentile_of: no values");
    if (pct < 0 || pct > 100)
        throw ValueError("percentile_of: pct outside [0,100]");
    std::sort(values.begin(), values.end());
    double rank = pct / 100.0 * double(values.size() - 1);
    std::size_t lo = std::size_t(rank);
    double frac = rank - double(lo);
    if (lo + 1 >= values.size())
        return values.back();
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double detrend_elevation(StatsRaster& stats, double percentile) {
    std::vector<double> valid;
    valid.reserve(stats.spec.cell_count());
    for (double v : stats.layers[kEMin].values())
        if (!is_nodata(v))
            valid.push_back(v);
    if (valid.empty()) {
        log_warn("detrend_elevation: no valid elevation cells, raster unchanged");
        return 0.0;
    }
    double shift = percentile_of(std::move(valid), percentile);
    for (StatsLayer l : {kEMin, kEMax, kEMean}) {
        for (double& v : stats.layers[l].values())
            if (!is_nodata(v))
                v = std::max(0.0, v - shift);
    }
    return shift;
}

void write_stats_dir(const StatsRaster& stats, const std::string& dir, const StatsMeta& meta) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    nlohmann::json manifest;
    manifest["grid"] = {
        {"origin_x", stats.spec.origin_x},  {"origin_y", stats.spec.origin_y},
        {"resolution", stats.spec.resolution}, {"width", stats.spec.width},
        {"height", stats.spec.height},      {"nodata", stats.spec.nodata}};
    manifest["window_cells"] = meta.window_cells;
    manifest["detrended"] = meta.detrended;
    nlohmann::json layers = nlohmann::json::array();
    for (int l = 0; l < kLayerCount; ++l) {
        std::string letter(1, layer_letter(StatsLayer(l)));
        std::string file = "stats_" + letter + ".asc";
        layers.push_back({{"index", letter}, {"name", kLayerNames[l]}, {"file", file}});
        write_ascii_grid_file(stats.layers[l], (fs::path(dir) / file).string());
    }
    manifest["layers"] = layers;

    std::ofstream out(fs::path(dir) / "manifest.json");
    if (!out)
        throw ParseError("cannot write manifest in " + dir);
    out << manifest.dump(2) << "\n";
}

StatsRaster read_stats_dir(const std::string& dir, StatsMeta* meta) {
    namespace fs = std::filesystem;
    std::ifstream in(fs::path(dir) / "manifest.json");
    if (!in)
        throw ParseError("cannot open manifest in " + dir);
    nlohmann::json manifest = nlohmann::json::parse(in, nullptr, true, true);

    StatsRaster stats;
    auto grid = manifest.at("grid");
    stats.spec.origin_x = grid.at("origin_x").get<double>();
    stats.spec.origin_y = grid.at("origin_y").get<double>();
    stats.spec.resolution = grid.at("resolution").get<double>();
    stats.spec.width = grid.at("width").get<int>();
    stats.spec.height = grid.at("height").get<int>();
    stats.spec.nodata = grid.at("nodata").get<double>();
    stats.spec.validate();

    if (meta) {
        meta->window_cells = manifest.at("window_cells").get<int>();
        meta->detrended = manifest.at("detrended").get<bool>();
    }

    auto layers = manifest.at("layers");
    if (layers.size() != kLayerCount)
        throw ParseError("stats manifest: expected 13 layers, got " + std::to_string(layers.size()));
    for (int l = 0; l < kLayerCount; ++l) {
        std::string file = layers[l].at("file").get<std::string>();
        Raster raster = read_ascii_grid_file((fs::path(dir) / file).string());
        if (!(raster.spec() == stats.spec))
            throw SpecMismatch("stats layer " + file + " disagrees with manifest grid");
        stats.layers[l] = std::move(raster);
    }
    return stats;
}

} // namespace geolabel
