#include "geolabel/xyz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace geolabel {

ColumnMap ColumnMap::parse(const std::string& layout) {
    ColumnMap map;
    map.x = map.y = map.z = -1;
    std::istringstream in(layout);
    std::string name;
    int index = 0;
    while (std::getline(in, name, ',')) {
        if (name == "x") map.x = index;
        else if (name == "y") map.y = index;
        else if (name == "z") map.z = index;
        else if (name == "intensity") map.intensity = index;
        else if (name == "return_number") map.return_number = index;
        else if (name == "number_of_returns") map.number_of_returns = index;
        else if (name == "_" || name.empty()) { /* skipped column */ }
        else throw ValueError("column map: unknown field '" + name + "'");
        ++index;
    }
    if (map.x < 0 || map.y < 0 || map.z < 0)
        throw ValueError("column map: x, y and z columns are required");
    return map;
}

int ColumnMap::required_columns() const {
    int n = std::max({x, y, z, intensity, return_number, number_of_returns});
    return n + 1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) {
                fields.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        fields.push_back(cur);
    return fields;
}

double field_as_double(const std::string& tok, std::size_t line_no) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw NonNumericField("line " + std::to_string(line_no) + ": non-numeric field '" + tok + "'");
    return v;
}

} // namespace

std::vector<PointRecord> read_xyz_text(std::istream& in, const ColumnMap& columns) {
    std::vector<PointRecord> points;
    std::string line;
    std::size_t line_no = 0;
    const int need = columns.required_columns();
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::vector<std::string> fields = split_fields(line);
        if (int(fields.size()) < need)
            throw BadColumnCount("line " + std::to_string(line_no) + ": expected at least " +
                                 std::to_string(need) + " columns, got " + std::to_string(fields.size()));
        PointRecord rec;
        rec.x = field_as_double(fields[columns.x], line_no);
        rec.y = field_as_double(fields[columns.y], line_no);
        rec.z = field_as_double(fields[columns.z], line_no);
        if (columns.intensity >= 0)
            rec.intensity = field_as_double(fields[columns.intensity], line_no);
        if (columns.return_number >= 0)
            rec.return_number = int(field_as_double(fields[columns.return_number], line_no));
        if (columns.number_of_returns >= 0)
            rec.number_of_returns = int(field_as_double(fields[columns.number_of_returns], line_no));
        if (!std::isfinite(rec.x) || !std::isfinite(rec.y) || !std::isfinite(rec.z))
            throw NonNumericField("line " + std::to_string(line_no) + ": non-finite coordinate");
        points.push_back(rec);
    }
    return points;
}

std::vector<PointRecord> read_xyz_file(const std::string& path, const ColumnMap& columns) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open: " + path);
    return read_xyz_text(in, columns);
}

} // namespace geolabel
