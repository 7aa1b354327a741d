#include "graphdep/profile.hpp"

#include <cmath>

#include "graphdep/errors.hpp"

namespace graphdep {

LipschitzProfile::LipschitzProfile(std::vector<Rational> coefficients) : exact_(std::move(coefficients)) {
  values_.reserve(exact_.size());
  for (std::size_t i = 0; i < exact_.size(); ++i) {
    exact_[i].canonicalize();
    if (sgn(exact_[i]) < 0) {
      throw InputError("Lipschitz coefficient c_" + std::to_string(i + 1) + " is negative");
    }
    values_.push_back(exact_[i].get_d());
  }
}

LipschitzProfile LipschitzProfile::from_doubles(std::span<const double> coefficients) {
  std::vector<Rational> exact;
  exact.reserve(coefficients.size());
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw InputError("Lipschitz coefficient is not finite");
    exact.emplace_back(c);
  }
  return LipschitzProfile(std::move(exact));
}

LipschitzProfile LipschitzProfile::uniform(int n, const Rational& value) {
  return LipschitzProfile(std::vector<Rational>(static_cast<std::size_t>(n), value));
}

Rational LipschitzProfile::squared_norm() const {
  Rational total = 0;
  for (const auto& c : exact_) total += c * c;
  return total;
}

bool LipschitzProfile::all_zero() const {
  for (const auto& c : exact_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

LipschitzProfile LipschitzProfile::scaled(const Rational& factor) const {
  std::vector<Rational> out = exact_;
  for (auto& c : out) c *= factor;
  return LipschitzProfile(std::move(out));
}

}  // namespace graphdep
