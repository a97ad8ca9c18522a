#include "geolabel/ascii_grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace geolabel {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

double parse_double(const std::string& tok, const char* what) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw MalformedHeader(std::string("ascii grid: bad numeric value for ") + what + ": '" + tok + "'");
    return v;
}

} // namespace

void write_ascii_grid(const Raster& raster, std::ostream& out) {
    const GridSpec& spec = raster.spec();
    spec.validate();
    out << "ncols " << spec.width << "\n";
    out << "nrows " << spec.height << "\n";
    out << std::setprecision(12);
    out << "xllcorner " << spec.origin_x << "\n";
    out << "yllcorner " << (spec.origin_y - spec.height * spec.resolution) << "\n";
    out << "cellsize " << spec.resolution << "\n";
    out << "NODATA_value " << spec.nodata << "\n";
    for (int r = 0; r < spec.height; ++r) {
        for (int c = 0; c < spec.width; ++c) {
            if (c)
                out << ' ';
            double v = raster.at(c, r);
            out << (is_nodata(v) ? spec.nodata : v);
        }
        out << "\n";
    }
}

Raster read_ascii_grid(std::istream& in) {
    // Header: six "key value" lines in the canonical order.
    struct Key {
        const char* name;
        double value;
    };
    Key keys[6] = {{"ncols", 0}, {"nrows", 0}, {"xllcorner", 0},
                   {"yllcorner", 0}, {"cellsize", 0}, {"nodata_value", 0}};
    for (auto& key : keys) {
        std::string name, value;
        if (!(in >> name >> value))
            throw MalformedHeader("ascii grid: truncated header");
        if (lower(name) != key.name)
            throw MalformedHeader(std::string("ascii grid: expected header key '") + key.name + "', got '" + name + "'");
        key.value = parse_double(value, key.name);
    }

    GridSpec spec;
    spec.width = int(keys[0].value);
    spec.height = int(keys[1].value);
    spec.resolution = keys[4].value;
    spec.origin_x = keys[2].value;
    spec.origin_y = keys[3].value + keys[1].value * keys[4].value;
    spec.nodata = keys[5].value;
    if (spec.width < 1 || spec.height < 1 || !(spec.resolution > 0))
        throw MalformedHeader("ascii grid: non-positive dimensions or cellsize");

    Raster raster(spec);
    std::string line;
    std::getline(in, line); // consume end of header line
    int row = 0;
    while (row < spec.height) {
        if (!std::getline(in, line))
            throw RaggedRow("ascii grid: fewer data rows than nrows");
        std::istringstream ls(line);
        std::string tok;
        int col = 0;
        while (ls >> tok) {
            if (col >= spec.width)
                throw RaggedRow("ascii grid: row " + std::to_string(row) + " longer than ncols");
            double v = parse_double(tok, "cell");
            raster.at(col, row) = (v == spec.nodata) ? nodata_value() : v;
            ++col;
        }
        if (col == 0)
            continue; // blank line
        if (col != spec.width)
            throw RaggedRow("ascii grid: row " + std::to_string(row) + " has " + std::to_string(col) + " of " + std::to_string(spec.width) + " columns");
        ++row;
    }
    return raster;
}

void write_ascii_grid_file(const Raster& raster, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    write_ascii_grid(raster, out);
    if (!out)
        throw ParseError("write failed: " + path);
}

Raster read_ascii_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    return read_ascii_grid(in);
}

} // namespace geolabel
