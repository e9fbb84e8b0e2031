#include "kings/sampled_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kings/error.hpp"

namespace kings {

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

SampledSpace::SampledSpace(std::vector<Point> points, std::vector<double> parameters, std::vector<std::string> labels)
    : points_(std::move(points)), parameters_(std::move(parameters)), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!in_unit(points_[i].x) || !in_unit(points_[i].y)) {
      throw InputError("points[" + std::to_string(i) + "] lies outside the unit square");
    }
  }
  if (!parameters_.empty() && parameters_.size() != points_.size()) {
    throw InputError("parameters must be empty or one per point");
  }
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw InputError("labels must be empty or one per point");
  }

  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return points_[a].x != points_[b].x ? points_[a].x < points_[b].x : points_[a].y < points_[b].y;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k]] == points_[order[k - 1]]) {
      throw InputError("points[" + std::to_string(std::max(order[k], order[k - 1])) + "] duplicates points[" +
                       std::to_string(std::min(order[k], order[k - 1])) + "]");
    }
  }
}

double sine_curve_f(double t) {
  if (!in_unit(t)) throw InputError("sine curve is defined on [0, 1] only");
  if (t == 0.0) return 0.0;
  return std::fabs(std::sin(1.0 / t));
}

SampledSpace sample_graph(const std::function<double(double)>& f, std::span<const double> s_values) {
  std::vector<Point> points;
  points.reserve(s_values.size());
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double s = s_values[i];
    if (!in_unit(s)) throw InputError("s_values[" + std::to_string(i) + "] is outside [0, 1]");
    const double y = f(s);
    if (!in_unit(y)) throw InputError("f(s_values[" + std::to_string(i) + "]) is outside [0, 1]");
    points.push_back({s, y});
  }
  return SampledSpace(std::move(points), std::vector<double>(s_values.begin(), s_values.end()));
}

std::vector<double> uniform_grid(std::size_t n, bool include_right_endpoint) {
  if (n == 0) throw InputError("grid resolution must be at least 1");
  const std::size_t count = include_right_endpoint ? n + 1 : n;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(n);
  return grid;
}

SampledSpace interval_space(std::span<const double> xs) {
  std::vector<Point> points;
  points.reserve(xs.size());
  for (double x : xs) points.push_back({x, 0.0});
  return SampledSpace(std::move(points), std::vector<double>(xs.begin(), xs.end()));
}

}  // namespace kings
