// pwl.hpp -- exact-rational piecewise-linear membership functions.
#pragma once

#include <string>
#include <vector>

#include "latkit/rational.hpp"

namespace latkit {

/// Continuous piecewise-linear function into [0,1], constant beyond the first
/// and last breakpoints. Canonical form: strictly increasing x coordinates and
/// no breakpoint removable by collinearity, so structural equality is function
/// equality. A constant is stored as the single breakpoint (0, c).
class PiecewiseLinear {
public:
  struct Point {
    Rational x;
    Rational y;
  };

  /// Canonicalizes; throws OutOfRange when some y is outside [0,1] or the x
  /// coordinates are not strictly increasing.
  explicit PiecewiseLinear(std::vector<Point> breakpoints);

  static PiecewiseLinear constant(const Rational& value);

  const std::vector<Point>& breakpoints() const { return points_; }
  Rational eval(const Rational& x) const;

  friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    if (a.points_.size() != b.points_.size()) return false;
    for (std::size_t i = 0; i < a.points_.size(); ++i)
      if (a.points_[i].x != b.points_[i].x || a.points_[i].y != b.points_[i].y)
        return false;
    return true;
  }
  friend bool operator!=(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  std::vector<Point> points_;
};

enum class PwlOp { Min, Max, LukNeg };

/// Pointwise min/max with crossing points inserted as breakpoints, or the
/// Lukasiewicz negation 1 - f. Results are canonical.
PiecewiseLinear pwl_combine(PwlOp op, const PiecewiseLinear& f,
                            const PiecewiseLinear* g = nullptr);

inline PiecewiseLinear pwl_min(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return pwl_combine(PwlOp::Min, f, &g);
}
inline PiecewiseLinear pwl_max(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return pwl_combine(PwlOp::Max, f, &g);
}
inline PiecewiseLinear pwl_luk_neg(const PiecewiseLinear& f) {
  return pwl_combine(PwlOp::LukNeg, f);
}

/// Pointwise order f(x) <= g(x) for all x; decided on the merged breakpoint
/// refinement, which is sufficient for piecewise-linear functions.
bool pwl_leq(const PiecewiseLinear& f, const PiecewiseLinear& g);

}  // namespace latkit
