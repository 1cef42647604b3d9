#include "curvex/wps.hpp"

#include <algorithm>
#include <sstream>

#include "curvex/errors.hpp"

namespace curvex {

bool is_well_formed(const std::array<std::int64_t, kCoordinates>& a) {
  for (int i = 1; i < kCoordinates; ++i) {
    for (int j = i + 1; j < kCoordinates; ++j) {
      for (int k = j + 1; k < kCoordinates; ++k) {
        if (gcd(gcd(a[i], a[j]), a[k]) != 1) return false;
      }
    }
  }
  return true;
}

Weights::Weights(std::array<std::int64_t, kCoordinates> a, int family) : a_(a) {
  for (auto v : a_) {
    if (v < 1) throw ValidationError(family, "positive weights", "weight " + std::to_string(v));
  }
  if (a_[0] != 1) throw ValidationError(family, "a0 = 1", "a0 = " + std::to_string(a_[0]));
  if (!std::is_sorted(a_.begin(), a_.end())) {
    throw ValidationError(family, "ascending weights", str());
  }
  if (!is_well_formed(a_)) {
    throw ValidationError(family, "well-formedness (any three of a1..a4 coprime)", str());
  }
}

std::int64_t Weights::anticanonical_degree() const {
  std::int64_t s = 0;
  for (int i = 1; i < kCoordinates; ++i) s = checked_add(s, a_[i]);
  return s;
}

std::int64_t Weights::product() const {
  std::int64_t p = 1;
  for (int i = 1; i < kCoordinates; ++i) p = checked_mul(p, a_[i]);
  return p;
}

std::string Weights::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < kCoordinates; ++i) os << (i ? "," : "") << a_[i];
  os << ')';
  return os.str();
}

StratumCurve::StratumCurve(const Weights& w, std::array<int, 3> vanishing)
    : vanishing_(vanishing) {
  std::sort(vanishing_.begin(), vanishing_.end());
  for (int v : vanishing_) {
    if (v < 0 || v >= kCoordinates) {
      throw PreconditionError("stratum coordinate index out of range: " + std::to_string(v));
    }
  }
  if (std::adjacent_find(vanishing_.begin(), vanishing_.end()) != vanishing_.end()) {
    throw PreconditionError("stratum needs three distinct vanishing coordinates");
  }
  int n = 0;
  for (int i = 0; i < kCoordinates; ++i) {
    if (std::find(vanishing_.begin(), vanishing_.end(), i) == vanishing_.end()) {
      surviving_[n] = i;
      surviving_weights_[n] = w[i];
      ++n;
    }
  }
}

std::string StratumCurve::str() const {
  std::ostringstream os;
  os << '{' << vanishing_[0] << ',' << vanishing_[1] << ',' << vanishing_[2] << '}';
  return os.str();
}

Rational anticanonical_cube(std::int64_t d, const Weights& w) {
  if (d < 1) throw PreconditionError("hypersurface degree must be positive");
  return Rational(d, w.product());
}

Rational stratum_degree(const StratumCurve& c) {
  const auto& s = c.surviving_weights();
  return Rational(1, checked_mul(s[0], s[1]));
}

bool coordinate_point_on_x(std::int64_t d, const Weights& w, int i) {
  if (i < 0 || i >= kCoordinates) {
    throw PreconditionError("coordinate index out of range: " + std::to_string(i));
  }
  return d % w[i] != 0;
}

}  // namespace curvex
