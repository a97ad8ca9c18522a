#ifndef GEOLABEL_IMAGE_HPP
#define GEOLABEL_IMAGE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace geolabel {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

class Image {
public:
    Image() = default;
    Image(int width, int height, Rgb fill = {})
        : width_(width), height_(height), pixels_(std::size_t(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    Rgb& at(int col, int row) { return pixels_[std::size_t(row) * width_ + col]; }
    const Rgb& at(int col, int row) const { return pixels_[std::size_t(row) * width_ + col]; }
    const std::vector<Rgb>& pixels() const { return pixels_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Rgb> pixels_;
};

// Binary PPM (P6), 8 bits per channel.
void write_ppm(const Image& image, std::ostream& out);
void write_ppm_file(const Image& image, const std::string& path);

} // namespace geolabel

#endif
