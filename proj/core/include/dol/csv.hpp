#pragma once

#include <string>
#include <vector>

namespace dol {
namespace csv {

/// Scientific notation with 12 significant digits; fixed format so that equal
/// inputs always serialize to identical bytes.
std::string format_sci(double v);

/// Header row plus data rows, comma separated, LF line endings.
std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows);

}  // namespace csv
}  // namespace dol
