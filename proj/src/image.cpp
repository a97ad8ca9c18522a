#include "geolabel/image.hpp"

#include <fstream>
#include <ostream>

#include "geolabel/errors.hpp"

namespace geolabel {

void write_ppm(const Image& image, std::ostream& out) {
    out << "P6\n" << image.width() << " " << image.height() << "\n255\n";
    for (const Rgb& px : image.pixels()) {
        char bytes[3] = {char(px.r), char(px.g), char(px.b)};
        out.write(bytes, 3);
    }
}

void write_ppm_file(const Image& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    write_ppm(image, out);
    if (!out)
        throw ParseError("write failed: " + path);
}

} // namespace geolabel
