#ifndef GEOLABEL_METRICS_HPP
#define GEOLABEL_METRICS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geolabel/image.hpp"
#include "geolabel/rules.hpp"

namespace geolabel {

struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }
};

// Derived scores; undefined ratios (zero denominators) stay unset rather
// than defaulting to zero.
struct ClassMetrics {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
    std::optional<double> accuracy;
    std::optional<double> iou;
};

// Tally over cells valid in both masks.
ConfusionCounts confusion_counts(const BinaryMask& pred, const BinaryMask& truth);

// Harmonic mean of precision and recall; unset when either is unset or both
// are zero.
std::optional<double> f1_score(std::optional<double> precision, std::optional<double> recall);

ClassMetrics metrics(const ConfusionCounts& counts);

// Nearest-neighbor resampling of a class-code raster onto another grid.
// Cells whose center falls outside the source become the fill code.
LabelRaster resample_nearest(const LabelRaster& src, const GridSpec& target,
                             std::uint8_t fill = kBareLand);

// One-vs-rest evaluation per prediction class. class_mapping maps truth
// codes onto prediction codes; unmapped truth codes are reported and treated
// as background. Inputs must share a grid (resample the truth first).
struct ClassReport {
    ClassId cls;
    ConfusionCounts counts;
    ClassMetrics scores;
};

std::vector<ClassReport> evaluate_label_map(const LabelRaster& pred, const LabelRaster& truth,
                                            const std::map<int, int>& class_mapping,
                                            const std::vector<ClassId>& classes);

// White = correct (TP and TN), blue = missed (FN), red = wrongly labeled
// (FP); cells invalid in either mask are black.
Image error_map(const BinaryMask& pred, const BinaryMask& truth);

// CSV: class,tp,fp,fn,tn,precision,recall,f1,accuracy,iou (undefined blank).
void write_metrics_csv(const std::vector<ClassReport>& reports, std::ostream& out);

// Fixed-width table of the same columns for terminal output.
void print_metrics_table(const std::vector<ClassReport>& reports, std::ostream& out);

} // namespace geolabel

#endif
