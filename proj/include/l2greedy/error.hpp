#pragma once

#include <stdexcept>
#include <string>

namespace l2g {

/// Raised when an argument lies outside an operation's domain
/// (zero denominator, dimension mismatch, coordinate outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when text input (a rational, a sequence file) cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the d-dimensional greedy search when the selected candidate
/// violates the averaging bound; the candidate grid is too coarse.
class SearchQualityError : public std::runtime_error {
 public:
  explicit SearchQualityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace l2g
