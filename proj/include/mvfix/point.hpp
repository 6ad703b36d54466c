#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mvfix {

/// A point of a concrete space: a coordinate vector for Euclidean spaces, a
/// single parameter for interval/circle spaces, or a single row index for
/// finite distance-table spaces. Coordinates are always finite.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::vector<double> coords);

  static Point scalar(double value) { return Point{value}; }

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  /// The single coordinate of a 1-D point.
  double value() const { return coords_.front(); }

  // Exact, lexicographic; this is the canonical order used everywhere.
  friend bool operator==(const Point&, const Point&) = default;
  friend std::partial_ordering operator<=>(const Point& a, const Point& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  std::vector<double> coords_;
};

/// Formats a real with 17 significant digits (round-trip exact).
std::string formatReal(double value);

/// "x;y;z" with every coordinate in formatReal form.
std::string formatPoint(const Point& p);

/// Parses "x,y,z" (as given on the command line).
Point parsePoint(std::string_view text);

}  // namespace mvfix
