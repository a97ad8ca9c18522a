#ifndef GEOLABEL_POINT_HPP
#define GEOLABEL_POINT_HPP

#include <cstdint>

namespace geolabel {

// One LiDAR return in projected planar meters.
struct PointRecord {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double intensity = 0.0;       // dimensionless reflectance proxy, >= 0
    int return_number = 1;        // 1-based index of this return within its pulse
    int number_of_returns = 1;    // returns of the pulse this record belongs to
    int class_code = 0;           // provider classification, 0/1 = unclassified
};

struct BBox2 {
    double min_x = 0.0, min_y = 0.0;
    double max_x = 0.0, max_y = 0.0;

    bool contains(double x, double y) const {
        return x >= min_x && x <= max_x && y >= min_y && y <= max_y;
    }
};

} // namespace geolabel

#endif
