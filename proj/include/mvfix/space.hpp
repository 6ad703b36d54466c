#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mvfix/point.hpp"

namespace mvfix {

struct Euclidean {
  std::size_t dimension;
};

/// Closed interval [lo, hi] with the absolute-value metric.
struct Interval {
  double lo;
  double hi;
};

/// Circle of the given circumference; points are arc-length parameters in
/// [0, circumference) and distance is the shorter arc.
struct Circle {
  double circumference;
};

/// A finite metric space given by its distance table. Points are row indices.
struct FiniteMatrix {
  std::vector<std::vector<double>> table;
};

/// A metric segment: an isometry phi from [a, b] onto a subset of the space
/// with phi(a) = start and phi(b) = end.
class Segment {
 public:
  Segment(double a, double b, std::function<Point(double)> phi)
      : a_(a), b_(b), phi_(std::move(phi)) {}

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  Point operator()(double t) const { return phi_(t); }

 private:
  double a_;
  double b_;
  std::function<Point(double)> phi_;
};

class Space {
 public:
  using Kind = std::variant<Euclidean, Interval, Circle, FiniteMatrix>;

  static Space euclidean(std::size_t dimension);
  static Space interval(double lo, double hi);
  static Space circle(double circumference);
  /// Checks squareness, symmetry, zero diagonal and positivity off the
  /// diagonal. The triangle inequality is left to checkMetricAxioms.
  static Space finiteMatrix(std::vector<std::vector<double>> table);

  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

  /// Number of coordinates a point of this space carries.
  std::size_t pointDimension() const;

  /// Throws DimensionMismatch / OutOfDomain / IndexOutOfRange.
  void checkPoint(const Point& p) const;
  bool contains(const Point& p) const;

  double distance(const Point& x, const Point& y) const;

  bool hasSegments() const noexcept;
  Segment segment(const Point& x1, const Point& x2) const;

  /// Number of points for FiniteMatrix, nullopt for continuum spaces.
  std::optional<std::size_t> cardinality() const;

 private:
  explicit Space(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

inline double distance(const Space& space, const Point& x, const Point& y) {
  return space.distance(x, y);
}

inline Segment segment(const Space& space, const Point& x1, const Point& x2) {
  return space.segment(x1, x2);
}

enum class AxiomKind { Nonnegativity, Identity, Symmetry, Triangle };

struct AxiomViolation {
  AxiomKind kind;
  // Sample indices. Triangle (i, j, k) means d(i,k) > d(i,j) + d(j,k) + tol.
  std::vector<std::size_t> indices;
  double excess;
};

/// Checks all four metric axioms over every pair and triple of the sample.
/// Points whose coordinates agree within 1e-12 are treated as coincident.
std::vector<AxiomViolation> checkMetricAxioms(const Space& space, std::span<const Point> sample,
                                              double tol);

}  // namespace mvfix
