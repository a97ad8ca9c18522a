#ifndef GEOLABEL_ERRORS_HPP
#define GEOLABEL_ERRORS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>

namespace geolabel {

// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unreadable input data (bad magic, truncation, ragged rows, ...).
// The CLI maps these to exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

// A value outside its documented range, a mismatched grid, an unknown class.
// The CLI maps these to exit code 2 when they come from user input.
class ValueError : public Error {
public:
    using Error::Error;
};

// Violated internal invariant. Exit code 3.
class LogicError : public Error {
public:
    using Error::Error;
};

// Non-fatal conditions (skipped corrupt records, empty extents, exhausted
// sample classes) go to stderr so batch logs capture them.
inline void log_warn(const std::string& msg) {
    std::fprintf(stderr, "[warn] %s\n", msg.c_str());
}

inline void log_info(const std::string& msg) {
    std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

} // namespace geolabel

#endif
