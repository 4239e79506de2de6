#pragma once

#include <span>
#include <vector>

namespace fgsat {

inline constexpr size_t kHistogramBins = 64;

// Binned probability estimate of one feature over one sample set.
// bin_edges has probs.size() + 1 entries and is strictly ascending, except
// for a constant feature, where a single degenerate bin holds mass 1.
struct FeatureHistogram {
    std::vector<double> bin_edges;
    std::vector<double> probs;

    bool same_support(const FeatureHistogram& o) const {
        return bin_edges == o.bin_edges;
    }
};

// Equal-width histogram of `values` over [lo, hi] with kHistogramBins bins.
// lo == hi (constant feature) yields the degenerate single-bin histogram.
// Values outside [lo, hi] are clamped into the boundary bins.
FeatureHistogram build_histogram(std::span<const double> values, double lo,
                                 double hi);

// Jensen-Shannon divergence with base-2 logarithms, so the range is [0, 1]:
// 0.5 * (KL(P||M) + KL(Q||M)) with M = (P+Q)/2 and 0*log(0/x) = 0.
// Throws std::invalid_argument if the histograms' bin edges differ.
double jsd(const FeatureHistogram& p, const FeatureHistogram& q);

}  // namespace fgsat
