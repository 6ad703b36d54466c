#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mvfix/point.hpp"
#include "mvfix/space.hpp"

namespace mvfix {

/// Nonempty finite point set, kept sorted in canonical order with exact
/// duplicates removed.
class FiniteSet {
 public:
  explicit FiniteSet(std::vector<Point> elements);
  FiniteSet(std::initializer_list<Point> elements)
      : FiniteSet(std::vector<Point>(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  const Point& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Point> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Point& p) const;
  FiniteSet with(const Point& p) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Point> elements_;
};

double distToSet(const Space& space, const Point& a, const FiniteSet& set);

/// sup over a in A of d(a, B).
double directedHausdorff(const Space& space, const FiniteSet& from, const FiniteSet& to);

double hausdorff(const Space& space, const FiniteSet& a, const FiniteSet& b);

/// Builds the whole |A| x |B| distance table before reducing it. Limited to
/// 10^6 entries.
double bruteForceHausdorff(const Space& space, const FiniteSet& a, const FiniteSet& b);

inline constexpr std::size_t kBruteForceTableLimit = 1'000'000;

}  // namespace mvfix
