#include "mvfix/hausdorff.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mvfix/error.hpp"

namespace mvfix {

FiniteSet::FiniteSet(std::vector<Point> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::EmptySet, "finite set must be nonempty");
  for (const auto& p : elements_)
    if (p.size() != elements_.front().size())
      throw Error(ErrorCode::DimensionMismatch, "finite set mixes point dimensions");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteSet::contains(const Point& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

FiniteSet FiniteSet::with(const Point& p) const {
  auto copy = elements_;
  copy.push_back(p);
  return FiniteSet(std::move(copy));
}

double distToSet(const Space& space, const Point& a, const FiniteSet& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : set) best = std::min(best, space.distance(a, b));
  return best;
}

double directedHausdorff(const Space& space, const FiniteSet& from, const FiniteSet& to) {
  double worst = 0.0;
  for (const auto& a : from) worst = std::max(worst, distToSet(space, a, to));
  return worst;
}

double hausdorff(const Space& space, const FiniteSet& a, const FiniteSet& b) {
  return std::max(directedHausdorff(space, a, b), directedHausdorff(space, b, a));
}

double bruteForceHausdorff(const Space& space, const FiniteSet& a, const FiniteSet& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.size();
  if (rows > kBruteForceTableLimit / cols)
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(rows) + "x" + std::to_string(cols) + " distance table too large");

  std::vector<double> table(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) table[i * cols + j] = space.distance(a[i], b[j]);

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> rowMin(rows, inf);
  std::vector<double> colMin(cols, inf);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      rowMin[i] = std::min(rowMin[i], table[i * cols + j]);
      colMin[j] = std::min(colMin[j], table[i * cols + j]);
    }
  const double ab = *std::max_element(rowMin.begin(), rowMin.end());
  const double ba = *std::max_element(colMin.begin(), colMin.end());
  return std::max(ab, ba);
}

}  // namespace mvfix
