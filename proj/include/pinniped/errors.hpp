#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pinniped {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented invariant (geometry, zero-sum, ranges, config fields).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Planar tip target lies outside the constant-curvature workspace.
class UnreachableError : public Error {
 public:
  UnreachableError(double reach_ratio, double limit,
                   std::optional<std::size_t> sample = std::nullopt,
                   std::optional<std::string> limb = std::nullopt)
      : Error(describe(reach_ratio, limit, sample, limb)),
        reach_ratio_(reach_ratio),
        limit_(limit),
        sample_(sample),
        limb_(std::move(limb)) {}

  double reach_ratio() const noexcept { return reach_ratio_; }
  double limit() const noexcept { return limit_; }
  const std::optional<std::size_t>& sample() const noexcept { return sample_; }
  const std::optional<std::string>& limb() const noexcept { return limb_; }

  UnreachableError at_sample(std::size_t sample) const {
    return UnreachableError(reach_ratio_, limit_, sample, limb_);
  }
  UnreachableError for_limb(std::string limb) const {
    return UnreachableError(reach_ratio_, limit_, sample_, std::move(limb));
  }

 private:
  static std::string describe(double ratio, double limit,
                              const std::optional<std::size_t>& sample,
                              const std::optional<std::string>& limb) {
    std::string msg = "target unreachable: s/L = " + std::to_string(ratio) +
                      " exceeds " + std::to_string(limit);
    if (limb) msg += " (limb " + *limb + ")";
    if (sample) msg += " at sample " + std::to_string(*sample);
    return msg;
  }

  double reach_ratio_;
  double limit_;
  std::optional<std::size_t> sample_;
  std::optional<std::string> limb_;
};

class AllMassesZeroError : public Error {
 public:
  AllMassesZeroError() : Error("robot CoG undefined: total mass is zero") {}
};

class WrongGaitKindError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pinniped
