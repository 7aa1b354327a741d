#pragma once

#include <span>
#include <vector>

#include "graphdep/rational.hpp"

namespace graphdep {

/// Per-coordinate Lipschitz coefficients c_1..c_n, kept both exactly and as
/// doubles. Coordinates are 1-based.
class LipschitzProfile {
 public:
  LipschitzProfile() = default;
  explicit LipschitzProfile(std::vector<Rational> coefficients);

  static LipschitzProfile from_doubles(std::span<const double> coefficients);
  static LipschitzProfile uniform(int n, const Rational& value);

  int size() const { return static_cast<int>(exact_.size()); }
  double c(int vertex) const { return values_.at(vertex - 1); }
  const Rational& exact_c(int vertex) const { return exact_.at(vertex - 1); }

  const std::vector<Rational>& exact() const { return exact_; }
  const std::vector<double>& values() const { return values_; }

  Rational squared_norm() const;
  bool all_zero() const;
  LipschitzProfile scaled(const Rational& factor) const;

  bool operator==(const LipschitzProfile& other) const { return exact_ == other.exact_; }

 private:
  std::vector<Rational> exact_;
  std::vector<double> values_;
};

}  // namespace graphdep
