#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kings {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

/// A finite sample of a subspace of the unit square with the Euclidean
/// metric. Subsets of [0, 1] sit on the x-axis.
///
/// Invariants: every coordinate lies in [0, 1] and points are pairwise
/// distinct. `parameters` (the s of a graph point (s, f(s))) and `labels`
/// are either empty or hold one entry per point.
class SampledSpace {
 public:
  SampledSpace() = default;
  explicit SampledSpace(std::vector<Point> points, std::vector<double> parameters = {},
                        std::vector<std::string> labels = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<double>& parameters() const { return parameters_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double distance(std::size_t a, std::size_t b) const { return kings::distance(points_[a], points_[b]); }

  friend bool operator==(const SampledSpace&, const SampledSpace&) = default;

 private:
  std::vector<Point> points_;
  std::vector<double> parameters_;
  std::vector<std::string> labels_;
};

/// 0 at t = 0 and |sin(1/t)| on (0, 1].
double sine_curve_f(double t);

/// Points (s, f(s)) for each s, tagged with s.
SampledSpace sample_graph(const std::function<double(double)>& f, std::span<const double> s_values);

/// {k/n : 0 <= k <= n}, or {k/n : 0 <= k < n} without the right endpoint.
std::vector<double> uniform_grid(std::size_t n, bool include_right_endpoint);

/// The points (x, 0), tagged with x.
SampledSpace interval_space(std::span<const double> xs);

}  // namespace kings
