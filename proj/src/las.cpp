#include "geolabel/las.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace geolabel {

namespace {

constexpr std::size_t kHeaderSize12 = 227;
constexpr std::size_t kHeaderSize14 = 375;

// Minimum record lengths for point formats 0-3.
constexpr std::uint16_t kMinRecordLength[4] = {20, 28, 26, 34};

std::uint16_t get_u16(const unsigned char* p) {
    return std::uint16_t(p[0] | (std::uint16_t(p[1]) << 8));
}
std::uint32_t get_u32(const unsigned char* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
           (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}
std::uint64_t get_u64(const unsigned char* p) {
    return std::uint64_t(get_u32(p)) | (std::uint64_t(get_u32(p + 4)) << 32);
}
std::int32_t get_i32(const unsigned char* p) {
    return std::int32_t(get_u32(p));
}
double get_f64(const unsigned char* p) {
    std::uint64_t bits = get_u64(p);
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

void put_u16(std::string& buf, std::size_t at, std::uint16_t v) {
    buf[at] = char(v & 0xff);
    buf[at + 1] = char((v >> 8) & 0xff);
}
void put_u32(std::string& buf, std::size_t at, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        buf[at + i] = char((v >> (8 * i)) & 0xff);
}
void put_f64(std::string& buf, std::size_t at, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i)
        buf[at + i] = char((bits >> (8 * i)) & 0xff);
}

} // namespace

LasHeader parse_las_header(std::istream& in) {
    unsigned char buf[kHeaderSize14];
    in.read(reinterpret_cast<char*>(buf), kHeaderSize12);
    if (std::size_t(in.gcount()) != kHeaderSize12)
        throw Truncated("LAS header: fewer than 227 bytes");
    if (std::memcmp(buf, "LASF", 4) != 0)
        throw BadMagic("LAS header: file signature is not 'LASF'");

    LasHeader h;
    h.version_major = buf[24];
    h.version_minor = buf[25];
    if (h.version_major != 1)
        throw UnsupportedFormat("LAS version " + std::to_string(h.version_major) + "." +
                                std::to_string(h.version_minor) + " is not supported");

    std::uint16_t header_size = get_u16(buf + 94);
    h.point_data_offset = get_u32(buf + 96);
    std::uint8_t format = buf[104];
    if (format & 0x80)
        throw UnsupportedFormat("LAZ compressed input is not supported; decompress to LAS first");
    if (format > 3)
        throw UnsupportedFormat("LAS point format " + std::to_string(format) +
                                " is not supported (formats 0-3 only)");
    h.point_format_id = format;
    h.record_length = get_u16(buf + 105);
    if (h.record_length < kMinRecordLength[format])
        throw ParseError("LAS header: record length " + std::to_string(h.record_length) +
                         " below minimum for point format " + std::to_string(format));
    h.point_count = get_u32(buf + 107);

    h.scale_x = get_f64(buf + 131);
    h.scale_y = get_f64(buf + 139);
    h.scale_z = get_f64(buf + 147);
    if (!(h.scale_x > 0) || !(h.scale_y > 0) || !(h.scale_z > 0))
        throw ParseError("LAS header: non-positive coordinate scale");
    h.offset_x = get_f64(buf + 155);
    h.offset_y = get_f64(buf + 163);
    h.offset_z = get_f64(buf + 171);
    h.max_x = get_f64(buf + 179);
    h.min_x = get_f64(buf + 187);
    h.max_y = get_f64(buf + 195);
    h.min_y = get_f64(buf + 203);
    h.max_z = get_f64(buf + 211);
    h.min_z = get_f64(buf + 219);
    if (h.min_x > h.max_x || h.min_y > h.max_y || h.min_z > h.max_z)
        throw ParseError("LAS header: bounding box min exceeds max");

    // LAS 1.4 moves the authoritative point count to a 64-bit field.
    if (h.version_minor >= 4) {
        if (header_size < kHeaderSize14)
            throw Truncated("LAS 1.4 header: declared header size below 375 bytes");
        in.read(reinterpret_cast<char*>(buf + kHeaderSize12), kHeaderSize14 - kHeaderSize12);
        if (std::size_t(in.gcount()) != kHeaderSize14 - kHeaderSize12)
            throw Truncated("LAS 1.4 header: fewer bytes than header size declares");
        std::uint64_t count64 = get_u64(buf + 247);
        if (count64 != 0)
            h.point_count = count64;
    }
    if (h.point_data_offset < header_size)
        throw ParseError("LAS header: point data offset inside header block");
    return h;
}

LasReader::LasReader(std::istream& in, std::optional<BBox2> spatial_filter)
    : in_(in), filter_(spatial_filter) {
    header_ = parse_las_header(in_);

    in_.seekg(0, std::ios::end);
    std::uint64_t file_size = std::uint64_t(in_.tellg());
    std::uint64_t need = header_.point_data_offset +
                         header_.point_count * std::uint64_t(header_.record_length);
    if (file_size < need)
        throw Truncated("LAS point block truncated: file holds " +
                        std::to_string((file_size - std::min<std::uint64_t>(file_size, header_.point_data_offset)) / header_.record_length) +
                        " of " + std::to_string(header_.point_count) + " declared records");
    in_.seekg(header_.point_data_offset, std::ios::beg);
    buffer_.resize(header_.record_length);
}

bool LasReader::next(PointRecord& out) {
    while (read_ < header_.point_count) {
        in_.read(buffer_.data(), std::streamsize(buffer_.size()));
        if (std::size_t(in_.gcount()) != buffer_.size())
            throw Truncated("LAS record " + std::to_string(read_) + " truncated mid-record");
        ++read_;

        const unsigned char* p = reinterpret_cast<const unsigned char*>(buffer_.data());
        std::uint8_t flags = p[14];
        int rn = flags & 0x7;
        int nr = (flags >> 3) & 0x7;
        if (rn < 1 || nr < 1 || rn > nr) {
            ++corrupt_skipped_;
            continue;
        }

        double x = get_i32(p) * header_.scale_x + header_.offset_x;
        double y = get_i32(p + 4) * header_.scale_y + header_.offset_y;
        if (filter_ && !filter_->contains(x, y))
            continue;

        out.x = x;
        out.y = y;
        out.z = get_i32(p + 8) * header_.scale_z + header_.offset_z;
        out.intensity = double(get_u16(p + 12));
        out.return_number = rn;
        out.number_of_returns = nr;
        out.class_code = p[15];
        ++yielded_;
        return true;
    }
    return false;
}

LasHeader read_las_header_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open: " + path);
    return parse_las_header(in);
}

std::vector<PointRecord> read_las_file(const std::string& path,
                                       std::optional<BBox2> spatial_filter,
                                       std::uint64_t* corrupt_skipped) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open: " + path);
    LasReader reader(in, spatial_filter);
    std::vector<PointRecord> points;
    points.reserve(std::size_t(std::min<std::uint64_t>(reader.header().point_count, 1u << 24)));
    PointRecord rec;
    while (reader.next(rec))
        points.push_back(rec);
    if (reader.corrupt_skipped() > 0)
        log_warn(path + ": skipped " + std::to_string(reader.corrupt_skipped()) +
                 " corrupt point records");
    if (corrupt_skipped)
        *corrupt_skipped = reader.corrupt_skipped();
    return points;
}

void write_las(const std::vector<PointRecord>& points, std::ostream& out,
               const LasWriteOptions& options) {
    if (!(options.scale_x > 0) || !(options.scale_y > 0) || !(options.scale_z > 0))
        throw ValueError("write_las: scales must be > 0");

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0, min_z = 0, max_z = 0;
    if (!points.empty()) {
        min_x = max_x = points[0].x;
        min_y = max_y = points[0].y;
        min_z = max_z = points[0].z;
        for (const PointRecord& p : points) {
            min_x = std::min(min_x, p.x); max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y); max_y = std::max(max_y, p.y);
            min_z = std::min(min_z, p.z); max_z = std::max(max_z, p.z);
        }
    }

    std::string header(kHeaderSize12, '\0');
    header[0] = 'L'; header[1] = 'A'; header[2] = 'S'; header[3] = 'F';
    header[24] = 1; // version 1.2
    header[25] = 2;
    std::string software = "geolabel";
    std::memcpy(&header[58], software.data(), software.size());
    put_u16(header, 94, std::uint16_t(kHeaderSize12));
    put_u32(header, 96, std::uint32_t(kHeaderSize12));
    header[104] = 0; // point format 0
    put_u16(header, 105, 20);
    put_u32(header, 107, std::uint32_t(points.size()));
    put_u32(header, 111, std::uint32_t(points.size())); // points by return, first slot
    put_f64(header, 131, options.scale_x);
    put_f64(header, 139, options.scale_y);
    put_f64(header, 147, options.scale_z);
    // Offsets at the bbox minimum keep raw integers small.
    put_f64(header, 155, min_x);
    put_f64(header, 163, min_y);
    put_f64(header, 171, min_z);
    put_f64(header, 179, max_x);
    put_f64(header, 187, min_x);
    put_f64(header, 195, max_y);
    put_f64(header, 203, min_y);
    put_f64(header, 211, max_z);
    put_f64(header, 219, min_z);
    out.write(header.data(), std::streamsize(header.size()));

    std::string rec(20, '\0');
    for (const PointRecord& p : points) {
        put_u32(rec, 0, std::uint32_t(std::int32_t(std::llround((p.x - min_x) / options.scale_x))));
        put_u32(rec, 4, std::uint32_t(std::int32_t(std::llround((p.y - min_y) / options.scale_y))));
        put_u32(rec, 8, std::uint32_t(std::int32_t(std::llround((p.z - min_z) / options.scale_z))));
        double ix = std::clamp(std::round(p.intensity), 0.0, 65535.0);
        put_u16(rec, 12, std::uint16_t(ix));
        int nr = std::clamp(p.number_of_returns, 1, 7);
        int rn = std::clamp(p.return_number, 1, nr);
        rec[14] = char(rn | (nr << 3));
        rec[15] = char(std::clamp(p.class_code, 0, 255));
        out.write(rec.data(), std::streamsize(rec.size()));
    }
}

void write_las_file(const std::vector<PointRecord>& points, const std::string& path,
                    const LasWriteOptions& options) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open for writing: " + path);
    write_las(points, out, options);
    if (!out)
        throw ParseError("write failed: " + path);
}

} // namespace geolabel
