#ifndef GEOLABEL_ASCII_GRID_HPP
#define GEOLABEL_ASCII_GRID_HPP

#include <iosfwd>
#include <string>

#include "geolabel/grid.hpp"

namespace geolabel {

class MalformedHeader : public ParseError {
public:
    using ParseError::ParseError;
};

class RaggedRow : public ParseError {
public:
    using ParseError::ParseError;
};

// ESRI ASCII grid: ncols, nrows, xllcorner, yllcorner, cellsize,
// NODATA_value, then rows top to bottom. Values are written with 12
// significant digits; NaN cells are written as the nodata sentinel.
void write_ascii_grid(const Raster& raster, std::ostream& out);
Raster read_ascii_grid(std::istream& in);

void write_ascii_grid_file(const Raster& raster, const std::string& path);
Raster read_ascii_grid_file(const std::string& path);

} // namespace geolabel

#endif
