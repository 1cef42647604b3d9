#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "curvex/rational.hpp"

// Elementary numerics of weighted projective 4-space P(1,a1,a2,a3,a4).
// Coordinates are indexed 0..4 in ascending-weight order.
namespace curvex {

inline constexpr int kCoordinates = 5;

class Weights {
 public:
  // Validates a0 == 1, ascending order, positivity and well-formedness.
  // `family` only labels the ValidationError.
  explicit Weights(std::array<std::int64_t, kCoordinates> a, int family = 0);

  std::int64_t operator[](int i) const { return a_.at(static_cast<std::size_t>(i)); }
  const std::array<std::int64_t, kCoordinates>& values() const { return a_; }

  // a1 + a2 + a3 + a4, the anticanonical degree of a quasismooth hypersurface.
  std::int64_t anticanonical_degree() const;
  // a1 * a2 * a3 * a4
  std::int64_t product() const;

  std::string str() const;  // "(1,1,3,4,5)"

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::array<std::int64_t, kCoordinates> a_;
};

// Every 3-subset of (a1,a2,a3,a4) has gcd 1.
bool is_well_formed(const std::array<std::int64_t, kCoordinates>& a);

// The curve cut out by three vanishing coordinates; isomorphic to P(w1,w2).
class StratumCurve {
 public:
  StratumCurve(const Weights& w, std::array<int, 3> vanishing);

  const std::array<int, 3>& vanishing() const { return vanishing_; }
  const std::array<int, 2>& surviving() const { return surviving_; }
  const std::array<std::int64_t, 2>& surviving_weights() const { return surviving_weights_; }

  bool passes_through(int coordinate) const {
    return surviving_[0] == coordinate || surviving_[1] == coordinate;
  }

  std::string str() const;  // "{0,2,3}"

 private:
  std::array<int, 3> vanishing_;
  std::array<int, 2> surviving_;
  std::array<std::int64_t, 2> surviving_weights_;
};

// A^3 = d / (a1 a2 a3 a4)
Rational anticanonical_cube(std::int64_t d, const Weights& w);

// 1 / (w1 w2)
Rational stratum_degree(const StratumCurve& c);

// True iff a_i does not divide d, i.e. the coordinate point P_i lies on a
// general X_d.
bool coordinate_point_on_x(std::int64_t d, const Weights& w, int i);

}  // namespace curvex
