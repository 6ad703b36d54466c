#include "mvfix/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "mvfix/error.hpp"
#include "mvfix/hausdorff.hpp"

namespace mvfix {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::size_t indexOf(std::span<const Point> points, const Point& p) {
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end())
    throw Error(ErrorCode::PointNotInSample, "point " + formatPoint(p) + " is not in the sample");
  return static_cast<std::size_t>(it - points.begin());
}

template <class StepCheck>
IterationLog iterate(const Space& space, const MultiMap& f, const Point& x0, double k,
                     std::size_t maxIter, double tol, StepCheck&& checkStep) {
  if (!(k >= 0.0 && k < 1.0))
    throw Error(ErrorCode::InvalidParameter, "contraction factor must lie in [0,1)");
  IterationLog log;
  log.contraction = k;
  Point x = x0;
  for (;;) {
    const FiniteSet image = f(x);
    const double residual = distToSet(space, x, image);
    log.iterates.push_back(x);
    log.residuals.push_back(residual);
    if (residual <= tol) {
      log.converged = true;
      break;
    }
    if (log.iterations == maxIter) break;
    Point next = nearestImage(space, f, x);
    const double step = space.distance(x, next);
    checkStep(log.iterations, step);
    log.stepDistances.push_back(step);
    x = std::move(next);
    ++log.iterations;
  }
  return log;
}

}  // namespace

Chainability isEpsilonChainable(std::span<const Point> points, const Space& space,
                                double epsilon) {
  const std::size_t n = points.size();
  DisjointSets sets(n);
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (space.distance(points[i], points[j]) < epsilon && sets.unite(i, j)) --components;
  return {components <= 1, components};
}

ChainPath epsilonChain(std::span<const Point> points, const Space& space, double epsilon,
                       const Point& a, const Point& b) {
  const std::size_t source = indexOf(points, a);
  const std::size_t target = indexOf(points, b);
  if (source == target) return {{a}, 0.0};

  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });

  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, unseen);
  parent[source] = source;
  std::queue<std::size_t> frontier;
  frontier.push(source);
  while (!frontier.empty() && parent[target] == unseen) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : order) {
      if (parent[v] != unseen || space.distance(points[u], points[v]) >= epsilon) continue;
      parent[v] = u;
      frontier.push(v);
    }
  }
  if (parent[target] == unseen)
    throw Error(ErrorCode::NotChainable, formatPoint(a) + " and " + formatPoint(b) +
                                             " lie in different epsilon-components");

  ChainPath path;
  for (std::size_t v = target;; v = parent[v]) {
    path.nodes.push_back(points[v]);
    if (v == source) break;
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i)
    path.maxStep = std::max(path.maxStep, space.distance(path.nodes[i], path.nodes[i + 1]));
  return path;
}

Point nearestImage(const Space& space, const MultiMap& f, const Point& x) {
  const FiniteSet image = f(x);
  std::size_t best = 0;
  double bestDistance = space.distance(x, image[0]);
  for (std::size_t i = 1; i < image.size(); ++i) {
    const double d = space.distance(x, image[i]);
    if (d < bestDistance) {
      best = i;
      bestDistance = d;
    }
  }
  return image[best];
}

IterationLog nadlerIterate(const Space& space, const MultiMap& f, const Point& x0, double k,
                           std::size_t maxIter, double tol) {
  return iterate(space, f, x0, k, maxIter, tol, [](std::size_t, double) {});
}

IterationLog localIterate(const Space& space, const MultiMap& f, const Certificate& cert,
                          std::span<const Point> samplePoints, const Point& x0,
                          std::size_t maxIter, double tol) {
  std::optional<Chainability> chainability;
  if (!samplePoints.empty()) {
    std::vector<Point> sample(samplePoints.begin(), samplePoints.end());
    sample.push_back(x0);
    chainability = isEpsilonChainable(sample, space, cert.epsilon);
  }
  auto log = iterate(space, f, x0, cert.k, maxIter, tol, [&](std::size_t n, double step) {
    if (step >= cert.epsilon)
      throw Error(ErrorCode::StepEscapedLocality,
                  "step " + std::to_string(n) + " has length " + formatReal(step) +
                      " >= epsilon = " + formatReal(cert.epsilon));
  });
  log.sampleChainability = chainability;
  return log;
}

FixedPointCheck isFixedPoint(const Space& space, const MultiMap& f, const Point& x, double tol) {
  const double residual = distToSet(space, x, f(x));
  return {residual <= tol, residual};
}

}  // namespace mvfix
