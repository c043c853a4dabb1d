#include "grl/error.hpp"

#include <sstream>

namespace grl {

namespace {

std::string format_message(const std::string& kind,
                           const std::vector<std::size_t>& witness,
                           const std::string& detail) {
  std::ostringstream out;
  out << kind << '(';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    out << (i ? "," : "") << witness[i];
  }
  out << ')';
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::string kind,
                                 std::vector<std::size_t> witness,
                                 std::string detail)
    : Error(format_message(kind, witness, detail)),
      kind_(std::move(kind)),
      witness_(std::move(witness)),
      detail_(std::move(detail)) {}

}  // namespace grl
