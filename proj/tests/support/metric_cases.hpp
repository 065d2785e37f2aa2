#pragma once

#include <array>
#include <cstdint>

namespace ontoprep::testing {

struct MetricCase {
  std::uint64_t tp, fp, fn;
  double precision, recall, f1;
};

// Exact rational P/R/F1 (F1 as 2tp/(2tp+fp+fn)) rounded once to double.
inline constexpr std::array<MetricCase, 20> kMetricCases{{
    {2, 1, 2, 0.6666666666666666, 0.5, 0.5714285714285714},
    {5, 0, 0, 1.0, 1.0, 1.0},
    {0, 3, 4, 0.0, 0.0, 0.0},
    {0, 0, 0, 0.0, 0.0, 0.0},
    {0, 0, 5, 0.0, 0.0, 0.0},
    {0, 4, 0, 0.0, 0.0, 0.0},
    {1, 0, 0, 1.0, 1.0, 1.0},
    {7, 3, 0, 0.7, 1.0, 0.8235294117647058},
    {0, 1, 1, 0.0, 0.0, 0.0},
    {3, 0, 9, 1.0, 0.25, 0.4},
    {10, 10, 10, 0.5, 0.5, 0.5},
    {1, 99, 0, 0.01, 1.0, 0.019801980198019802},
    {99, 1, 1, 0.99, 0.99, 0.99},
    {4, 6, 2, 0.4, 0.6666666666666666, 0.5},
    {13, 7, 29, 0.65, 0.30952380952380953, 0.41935483870967744},
    {250, 17, 3, 0.9363295880149812, 0.9881422924901185, 0.9615384615384616},
    {1, 1, 1, 0.5, 0.5, 0.5},
    {6, 2, 10, 0.75, 0.375, 0.5},
    {17, 0, 4, 1.0, 0.8095238095238095, 0.8947368421052632},
    {1000, 333, 777, 0.7501875468867217, 0.5627462014631401, 0.6430868167202572},
}};

}  // namespace ontoprep::testing
