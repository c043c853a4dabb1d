#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace grl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by every validator. `kind()` names the violated axiom
/// (e.g. "NotAssociative") and `witness()` carries the first violating tuple
/// found by an ascending scan.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, std::vector<std::size_t> witness,
                  std::string detail = {});

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::vector<std::size_t> witness_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace grl
