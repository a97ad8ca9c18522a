#ifndef GEOLABEL_ACCUMULATOR_HPP
#define GEOLABEL_ACCUMULATOR_HPP

#include <cmath>
#include <cstdint>
#include <limits>

#include "geolabel/errors.hpp"

namespace geolabel {

// Single-pass accumulator for count/min/max/mean/std/sum. Mean and the sum
// of squared deviations use Welford's update; merge uses the pairwise
// combination so tile-parallel folds agree with a single stream.
// Standard deviation is the population form (divide by n).
class StatAccumulator {
public:
    void add(double value) {
        if (!std::isfinite(value))
            throw ValueError("StatAccumulator: non-finite value");
        ++n_;
        if (value < min_) min_ = value;
        if (value > max_) max_ = value;
        sum_ += value;
        double delta = value - mean_;
        mean_ += delta / double(n_);
        m2_ += delta * (value - mean_);
    }

    void merge(const StatAccumulator& other) {
        if (other.n_ == 0)
            return;
        if (n_ == 0) {
            *this = other;
            return;
        }
        std::int64_t n = n_ + other.n_;
        double delta = other.mean_ - mean_;
        mean_ += delta * double(other.n_) / double(n);
        m2_ += other.m2_ + delta * delta * double(n_) * double(other.n_) / double(n);
        if (other.min_ < min_) min_ = other.min_;
        if (other.max_ > max_) max_ = other.max_;
        sum_ += other.sum_;
        n_ = n;
    }

    std::int64_t count() const { return n_; }
    bool empty() const { return n_ == 0; }

    double sum() const { return sum_; } // 0 when empty
    double min() const { return n_ ? min_ : nan(); }
    double max() const { return n_ ? max_ : nan(); }
    double mean() const { return n_ ? mean_ : nan(); }
    double variance() const { return n_ ? (m2_ > 0 ? m2_ / double(n_) : 0.0) : nan(); }
    double stddev() const { return n_ ? std::sqrt(variance()) : nan(); }

private:
    static double nan() { return std::numeric_limits<double>::quiet_NaN(); }

    std::int64_t n_ = 0;
    double min_ = std::numeric_limits<double>::infinity();
    double max_ = -std::numeric_limits<double>::infinity();
    double mean_ = 0.0;
    double m2_ = 0.0;
    double sum_ = 0.0;
};

} // namespace geolabel

#endif
