#pragma once

#include <string>
#include <vector>

namespace dol {
namespace svg {

struct Series {
  std::string label;
  std::vector<double> y;
};

/// Minimal self-contained line chart: fixed 800x600 viewBox, linear axes,
/// one polyline per series, legend in the top-right corner. x values are the
/// indices 0..n. Deterministic output for equal inputs.
std::string line_chart(const std::vector<Series>& series, const std::string& title,
                       const std::string& x_label);

}  // namespace svg
}  // namespace dol
