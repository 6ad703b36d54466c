#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mvfix/hausdorff.hpp"
#include "mvfix/point.hpp"
#include "mvfix/space.hpp"

namespace mvfix {

/// x -> A x + b with A stored row-major.
struct AffineMap {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t dimension() const noexcept { return b.size(); }
  Point apply(const Point& x) const;
};

/// A multivalued map F: X -> CB(X) with finite values. Evaluation must be
/// deterministic and pure; verification may call it from several threads.
class MultiMap {
 public:
  using Procedure = std::function<FiniteSet(const Point&)>;

  MultiMap(Space domain, Procedure procedure, std::string description = "custom");

  /// F(x) = {A_i x + b_i}. On Interval spaces the images must stay inside
  /// the interval; on Circle spaces they are reduced modulo the circumference.
  static MultiMap affineSelector(Space domain, std::vector<AffineMap> selectors);

  /// F(i) = {table[i][0], table[i][1], ...} on a FiniteMatrix space.
  static MultiMap tableMap(Space domain, std::vector<std::vector<std::size_t>> table);

  const Space& domain() const noexcept { return domain_; }
  const std::string& description() const noexcept { return description_; }

  /// Checks x against the domain and every image point against the space.
  FiniteSet operator()(const Point& x) const;

 private:
  Space domain_;
  Procedure procedure_;
  std::string description_;
};

}  // namespace mvfix
