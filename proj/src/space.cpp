#include "mvfix/space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mvfix/error.hpp"

namespace mvfix {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double wrapCircle(double s, double circumference) {
  double w = s - circumference * std::floor(s / circumference);
  if (w >= circumference) w -= circumference;
  if (w < 0.0) w = 0.0;
  return w;
}

std::size_t matrixIndex(const FiniteMatrix& m, const Point& p) {
  if (p.size() != 1)
    throw Error(ErrorCode::DimensionMismatch, "finite-space points carry a single index");
  double v = p.value();
  if (v < 0.0 || v != std::floor(v) || v >= static_cast<double>(m.table.size()))
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + formatReal(v) + " outside 0.." + std::to_string(m.table.size() - 1));
  return static_cast<std::size_t>(v);
}

}  // namespace

Space Space::euclidean(std::size_t dimension) {
  if (dimension == 0) throw Error(ErrorCode::ValidationError, "Euclidean dimension must be >= 1");
  return Space(Euclidean{dimension});
}

Space Space::interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw Error(ErrorCode::ValidationError, "interval requires finite lo < hi");
  return Space(Interval{lo, hi});
}

Space Space::circle(double circumference) {
  if (!std::isfinite(circumference) || !(circumference > 0.0))
    throw Error(ErrorCode::ValidationError, "circle circumference must be positive");
  return Space(Circle{circumference});
}

Space Space::finiteMatrix(std::vector<std::vector<double>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::ValidationError, "distance table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorCode::ValidationError, "distance table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      double d = table[i][j];
      if (!std::isfinite(d) || d < 0.0)
        throw Error(ErrorCode::ValidationError, "distance table entries must be finite and >= 0");
      if (i == j && d != 0.0)
        throw Error(ErrorCode::ValidationError, "distance table diagonal must be zero");
      if (i != j && d == 0.0)
        throw Error(ErrorCode::ValidationError, "distinct points at distance zero");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i])
        throw Error(ErrorCode::ValidationError, "distance table is not symmetric");
  return Space(FiniteMatrix{std::move(table)});
}

std::string Space::name() const {
  return std::visit(
      Overloaded{
          [](const Euclidean& e) { return "Euclidean(" + std::to_string(e.dimension) + ")"; },
          [](const Interval& i) {
            return "Interval(" + formatReal(i.lo) + ", " + formatReal(i.hi) + ")";
          },
          [](const Circle& c) { return "Circle(" + formatReal(c.circumference) + ")"; },
          [](const FiniteMatrix& m) {
            return "FiniteMatrix(" + std::to_string(m.table.size()) + ")";
          },
      },
      kind_);
}

std::size_t Space::pointDimension() const {
  if (const auto* e = std::get_if<Euclidean>(&kind_)) return e->dimension;
  return 1;
}

void Space::checkPoint(const Point& p) const {
  std::visit(
      Overloaded{
          [&](const Euclidean& e) {
            if (p.size() != e.dimension)
              throw Error(ErrorCode::DimensionMismatch,
                          "expected " + std::to_string(e.dimension) + " coordinates, got " +
                              std::to_string(p.size()));
          },
          [&](const Interval& i) {
            if (p.size() != 1)
              throw Error(ErrorCode::DimensionMismatch, "interval points are scalars");
            if (p.value() < i.lo || p.value() > i.hi)
              throw Error(ErrorCode::OutOfDomain, formatReal(p.value()) + " outside " + name());
          },
          [&](const Circle& c) {
            if (p.size() != 1)
              throw Error(ErrorCode::DimensionMismatch, "circle points are scalars");
            if (p.value() < 0.0 || p.value() >= c.circumference)
              throw Error(ErrorCode::OutOfDomain,
                          formatReal(p.value()) + " outside [0, circumference)");
          },
          [&](const FiniteMatrix& m) { matrixIndex(m, p); },
      },
      kind_);
}

bool Space::contains(const Point& p) const {
  try {
    checkPoint(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

double Space::distance(const Point& x, const Point& y) const {
  checkPoint(x);
  checkPoint(y);
  return std::visit(
      Overloaded{
          [&](const Euclidean& e) {
            if (e.dimension == 1) return std::fabs(x[0] - y[0]);
            double sum = 0.0;
            for (std::size_t i = 0; i < e.dimension; ++i) {
              double diff = x[i] - y[i];
              sum += diff * diff;
            }
            return std::sqrt(sum);
          },
          [&](const Interval&) { return std::fabs(x.value() - y.value()); },
          [&](const Circle& c) {
            double diff = std::fabs(x.value() - y.value());
            return std::min(diff, c.circumference - diff);
          },
          [&](const FiniteMatrix& m) { return m.table[matrixIndex(m, x)][matrixIndex(m, y)]; },
      },
      kind_);
}

bool Space::hasSegments() const noexcept { return !std::holds_alternative<FiniteMatrix>(kind_); }

Segment Space::segment(const Point& x1, const Point& x2) const {
  if (!hasSegments())
    throw Error(ErrorCode::NotMetricallyConvex, name() + " has no metric segments");
  const double d = distance(x1, x2);
  if (x1 == x2) throw Error(ErrorCode::DegeneratePair, "segment endpoints coincide");

  if (const auto* c = std::get_if<Circle>(&kind_)) {
    const double length = c->circumference;
    const double s1 = x1.value();
    double forward = x2.value() - s1;
    if (forward < 0.0) forward += length;
    // Antipodal ties go the way of increasing parameter.
    const double direction = forward <= length - forward ? 1.0 : -1.0;
    return Segment(0.0, d, [=](double t) {
      if (t == d) return x2;
      return Point::scalar(wrapCircle(s1 + direction * t, length));
    });
  }

  // Euclidean and Interval: straight line parameterised by arc length.
  return Segment(0.0, d, [x1, x2, d](double t) {
    if (t == d) return x2;
    std::vector<double> coords(x1.size());
    const double s = t / d;
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = x1[i] + s * (x2[i] - x1[i]);
    return Point(std::move(coords));
  });
}

std::optional<std::size_t> Space::cardinality() const {
  if (const auto* m = std::get_if<FiniteMatrix>(&kind_)) return m->table.size();
  return std::nullopt;
}

std::vector<AxiomViolation> checkMetricAxioms(const Space& space, std::span<const Point> sample,
                                              double tol) {
  constexpr double kCoincidence = 1e-12;
  const std::size_t n = sample.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = space.distance(sample[i], sample[j]);

  auto coincident = [&](const Point& a, const Point& b) {
    for (std::size_t c = 0; c < a.size(); ++c)
      if (std::fabs(a[c] - b[c]) > kCoincidence) return false;
    return true;
  };

  std::vector<AxiomViolation> report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = d[i * n + j];
      if (dij < -tol) report.push_back({AxiomKind::Nonnegativity, {i, j}, -dij});
      if (i > j) continue;
      if (coincident(sample[i], sample[j])) {
        if (dij > tol) report.push_back({AxiomKind::Identity, {i, j}, dij});
      } else if (dij == 0.0) {
        report.push_back({AxiomKind::Identity, {i, j}, 0.0});
      }
      const double asym = std::fabs(dij - d[j * n + i]);
      if (asym > tol) report.push_back({AxiomKind::Symmetry, {i, j}, asym});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k || i == k) continue;
        const double excess = d[i * n + k] - (d[i * n + j] + d[j * n + k]);
        if (excess > tol) report.push_back({AxiomKind::Triangle, {i, j, k}, excess});
      }
  return report;
}

}  // namespace mvfix
