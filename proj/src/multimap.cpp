#include "mvfix/multimap.hpp"

#include <cmath>
#include <string>

#include "mvfix/error.hpp"

namespace mvfix {

Point AffineMap::apply(const Point& x) const {
  const std::size_t n = dimension();
  if (x.size() != n || a.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "affine selector dimension does not match point");
  std::vector<double> y(b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += a[i * n + j] * x[j];
  return Point(std::move(y));
}

MultiMap::MultiMap(Space domain, Procedure procedure, std::string description)
    : domain_(std::move(domain)), procedure_(std::move(procedure)),
      description_(std::move(description)) {}

MultiMap MultiMap::affineSelector(Space domain, std::vector<AffineMap> selectors) {
  if (selectors.empty())
    throw Error(ErrorCode::ValidationError, "affine selector needs at least one map");
  if (!domain.hasSegments())
    throw Error(ErrorCode::ValidationError, "affine selectors need a continuum space");
  const std::size_t n = domain.pointDimension();
  for (const auto& s : selectors)
    if (s.dimension() != n || s.a.size() != n * n)
      throw Error(ErrorCode::DimensionMismatch,
                  "dimension mismatch: selector of dimension " + std::to_string(s.dimension()) +
                      " on " + domain.name());

  std::optional<double> wrap;
  if (const auto* c = std::get_if<Circle>(&domain.kind())) wrap = c->circumference;

  auto procedure = [selectors = std::move(selectors), wrap](const Point& x) {
    std::vector<Point> images;
    images.reserve(selectors.size());
    for (const auto& s : selectors) {
      Point y = s.apply(x);
      if (wrap) {
        double v = y.value() - *wrap * std::floor(y.value() / *wrap);
        if (v >= *wrap) v -= *wrap;
        y = Point::scalar(v);
      }
      images.push_back(std::move(y));
    }
    return FiniteSet(std::move(images));
  };
  return MultiMap(std::move(domain), std::move(procedure), "AffineSelector");
}

MultiMap MultiMap::tableMap(Space domain, std::vector<std::vector<std::size_t>> table) {
  const auto size = domain.cardinality();
  if (!size) throw Error(ErrorCode::ValidationError, "table maps need a finite space");
  if (table.size() != *size)
    throw Error(ErrorCode::ValidationError, "table map needs one row per point (" +
                                                std::to_string(*size) + "), got " +
                                                std::to_string(table.size()));
  std::vector<FiniteSet> rows;
  rows.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].empty())
      throw Error(ErrorCode::ValidationError, "table row " + std::to_string(i) + " is empty");
    std::vector<Point> images;
    for (std::size_t j : table[i]) {
      if (j >= *size)
        throw Error(ErrorCode::IndexOutOfRange, "table row " + std::to_string(i) +
                                                    " references point " + std::to_string(j));
      images.push_back(Point::scalar(static_cast<double>(j)));
    }
    rows.emplace_back(std::move(images));
  }
  auto procedure = [rows = std::move(rows)](const Point& x) {
    return rows[static_cast<std::size_t>(x.value())];
  };
  return MultiMap(std::move(domain), std::move(procedure), "TableMap");
}

FiniteSet MultiMap::operator()(const Point& x) const {
  domain_.checkPoint(x);
  FiniteSet image = procedure_(x);
  for (const auto& y : image) domain_.checkPoint(y);
  return image;
}

}  // namespace mvfix
