#ifndef GEOLABEL_XYZ_HPP
#define GEOLABEL_XYZ_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "geolabel/errors.hpp"
#include "geolabel/point.hpp"

namespace geolabel {

class BadColumnCount : public ParseError {
public:
    using ParseError::ParseError;
};

class NonNumericField : public ParseError {
public:
    using ParseError::ParseError;
};

// Positional column layout for plain-text point tables. x, y and z are
// required; the rest default to intensity 0, return 1 of 1. "_" skips a
// column. Example: "x,y,z,_,intensity".
struct ColumnMap {
    int x = 0;
    int y = 1;
    int z = 2;
    int intensity = -1;
    int return_number = -1;
    int number_of_returns = -1;

    // Parses a comma-separated layout string of field names.
    static ColumnMap parse(const std::string& layout);

    int required_columns() const;
};

// Reads one record per non-comment line; '#' lines and blank lines are
// skipped. Fields split on commas and/or whitespace.
std::vector<PointRecord> read_xyz_text(std::istream& in, const ColumnMap& columns);
std::vector<PointRecord> read_xyz_file(const std::string& path, const ColumnMap& columns);

} // namespace geolabel

#endif
