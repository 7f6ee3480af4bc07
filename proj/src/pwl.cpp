#include "latkit/pwl.hpp"

#include <algorithm>

namespace latkit {

namespace {

bool collinear(const PiecewiseLinear::Point& a, const PiecewiseLinear::Point& b,
               const PiecewiseLinear::Point& c) {
  // (b on the segment a-c): (b.y - a.y)*(c.x - a.x) == (c.y - a.y)*(b.x - a.x)
  return (b.y - a.y) * (c.x - a.x) == (c.y - a.y) * (b.x - a.x);
}

std::vector<PiecewiseLinear::Point> canonicalize(std::vector<PiecewiseLinear::Point> pts) {
  if (pts.empty()) throw OutOfRange("piecewise-linear function needs a breakpoint");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].y < Rational(0) || pts[i].y > Rational(1))
      throw OutOfRange("membership value outside [0,1]");
    if (i > 0 && !(pts[i - 1].x < pts[i].x))
      throw OutOfRange("breakpoint x coordinates must strictly increase");
  }
  // drop redundant flat endpoints (tails are constant anyway)
  while (pts.size() >= 2 && pts[0].y == pts[1].y) pts.erase(pts.begin());
  while (pts.size() >= 2 && pts[pts.size() - 1].y == pts[pts.size() - 2].y) pts.pop_back();
  // drop interior collinear points
  std::vector<PiecewiseLinear::Point> out;
  for (const auto& p : pts) {
    out.push_back(p);
    while (out.size() >= 3 &&
           collinear(out[out.size() - 3], out[out.size() - 2], out[out.size() - 1]))
      out.erase(out.end() - 2);
  }
  while (out.size() >= 2 && out[0].y == out[1].y) out.erase(out.begin());
  while (out.size() >= 2 && out[out.size() - 1].y == out[out.size() - 2].y) out.pop_back();
  if (out.size() == 1) out[0].x = Rational(0);  // canonical constant
  return out;
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Point> breakpoints)
    : points_(canonicalize(std::move(breakpoints))) {}

PiecewiseLinear PiecewiseLinear::constant(const Rational& value) {
  return PiecewiseLinear({{Rational(0), value}});
}

Rational PiecewiseLinear::eval(const Rational& x) const {
  if (x <= points_.front().x) return points_.front().y;
  if (x >= points_.back().x) return points_.back().y;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (x > points_[i].x) continue;
    const Point &a = points_[i - 1], &b = points_[i];
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  }
  return points_.back().y;  // unreachable
}

std::string PiecewiseLinear::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + points_[i].x.str() + ", " + points_[i].y.str() + ")";
  }
  return s + "]";
}

PiecewiseLinear pwl_combine(PwlOp op, const PiecewiseLinear& f, const PiecewiseLinear* g) {
  if (op == PwlOp::LukNeg) {
    std::vector<PiecewiseLinear::Point> pts;
    for (const auto& p : f.breakpoints()) pts.push_back({p.x, Rational(1) - p.y});
    return PiecewiseLinear(std::move(pts));
  }
  if (g == nullptr) throw OutOfRange("binary pwl operation needs two operands");

  // Merged x grid of both operands.
  std::vector<Rational> xs;
  for (const auto& p : f.breakpoints()) xs.push_back(p.x);
  for (const auto& p : g->breakpoints()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Insert crossing points: between consecutive grid points both operands are
  // linear, so f-g changes sign at most once per cell.
  std::vector<Rational> grid;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    grid.push_back(xs[i]);
    if (i + 1 == xs.size()) break;
    Rational x0 = xs[i], x1 = xs[i + 1];
    Rational d0 = f.eval(x0) - g->eval(x0), d1 = f.eval(x1) - g->eval(x1);
    if ((d0 < Rational(0) && d1 > Rational(0)) || (d0 > Rational(0) && d1 < Rational(0))) {
      // d is linear on [x0,x1]; root at x0 + (x1-x0) * d0/(d0-d1)
      Rational cross = x0 + (x1 - x0) * (d0 / (d0 - d1));
      grid.push_back(cross);
    }
  }

  std::vector<PiecewiseLinear::Point> pts;
  for (const auto& x : grid) {
    Rational fy = f.eval(x), gy = g->eval(x);
    pts.push_back({x, op == PwlOp::Min ? min(fy, gy) : max(fy, gy)});
  }
  return PiecewiseLinear(std::move(pts));
}

bool pwl_leq(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  std::vector<Rational> xs;
  for (const auto& p : f.breakpoints()) xs.push_back(p.x);
  for (const auto& p : g.breakpoints()) xs.push_back(p.x);
  for (const auto& x : xs)
    if (!(f.eval(x) <= g.eval(x))) return false;
  return true;
}

}  // namespace latkit
