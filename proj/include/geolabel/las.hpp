#ifndef GEOLABEL_LAS_HPP
#define GEOLABEL_LAS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geolabel/errors.hpp"
#include "geolabel/point.hpp"

namespace geolabel {

class BadMagic : public ParseError {
public:
    using ParseError::ParseError;
};

class UnsupportedFormat : public ParseError {
public:
    using ParseError::ParseError;
};

class Truncated : public ParseError {
public:
    using ParseError::ParseError;
};

// Subset of the LAS public header needed for point formats 0-3.
struct LasHeader {
    std::uint8_t version_major = 1;
    std::uint8_t version_minor = 2;
    std::uint8_t point_format_id = 0;
    std::uint16_t record_length = 20;
    std::uint32_t point_data_offset = 227;
    std::uint64_t point_count = 0;
    double scale_x = 0.001, scale_y = 0.001, scale_z = 0.001;
    double offset_x = 0.0, offset_y = 0.0, offset_z = 0.0;
    double min_x = 0.0, max_x = 0.0;
    double min_y = 0.0, max_y = 0.0;
    double min_z = 0.0, max_z = 0.0;
};

// Decodes the little-endian header at the start of the stream. Throws
// BadMagic, UnsupportedFormat (format > 3 or LAZ compression) or Truncated.
LasHeader parse_las_header(std::istream& in);

// Streams point records with constant memory. Records whose return_number
// exceeds number_of_returns (or is zero) are skipped and tallied, not fatal.
class LasReader {
public:
    // Throws Truncated when the stream holds fewer bytes than the header
    // declares for its point block (requires a seekable stream).
    LasReader(std::istream& in, std::optional<BBox2> spatial_filter = std::nullopt);

    const LasHeader& header() const { return header_; }

    // Returns false at end of stream. Filtered points are skipped.
    bool next(PointRecord& out);

    std::uint64_t corrupt_skipped() const { return corrupt_skipped_; }
    std::uint64_t yielded() const { return yielded_; }

private:
    std::istream& in_;
    LasHeader header_;
    std::optional<BBox2> filter_;
    std::uint64_t read_ = 0;
    std::uint64_t corrupt_skipped_ = 0;
    std::uint64_t yielded_ = 0;
    std::vector<char> buffer_;
};

// Convenience wrappers over a file on disk.
LasHeader read_las_header_file(const std::string& path);
std::vector<PointRecord> read_las_file(const std::string& path,
                                       std::optional<BBox2> spatial_filter = std::nullopt,
                                       std::uint64_t* corrupt_skipped = nullptr);

// Writes LAS 1.2 point format 0 with the field subset this library reads.
// Coordinates are quantized to the given scale; intensities are clamped and
// rounded to uint16.
struct LasWriteOptions {
    double scale_x = 0.001, scale_y = 0.001, scale_z = 0.001;
};

void write_las(const std::vector<PointRecord>& points, std::ostream& out,
               const LasWriteOptions& options = {});
void write_las_file(const std::vector<PointRecord>& points, const std::string& path,
                    const LasWriteOptions& options = {});

} // namespace geolabel

#endif
