#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mvfix/multimap.hpp"
#include "mvfix/reduction.hpp"
#include "mvfix/space.hpp"

namespace mvfix {

struct Chainability {
  bool chainable;
  std::size_t components;
};

/// Connectivity of the graph on `points` with an edge wherever d < epsilon.
/// A positive answer witnesses chainability of the sample only.
Chainability isEpsilonChainable(std::span<const Point> points, const Space& space,
                                double epsilon);

struct ChainPath {
  std::vector<Point> nodes;
  double maxStep = 0.0;
};

/// Minimum-hop epsilon-chain from a to b through the sample. Neighbours are
/// visited in canonical point order, so ties resolve deterministically.
ChainPath epsilonChain(std::span<const Point> points, const Space& space, double epsilon,
                       const Point& a, const Point& b);

struct IterationLog {
  std::vector<Point> iterates;
  std::vector<double> residuals;      // d(x_n, F(x_n)), one per iterate
  std::vector<double> stepDistances;  // d(x_n, x_{n+1})
  bool converged = false;
  std::size_t iterations = 0;
  double contraction = 0.0;
  // localIterate only: chainability of the supplied sample plus x0.
  std::optional<Chainability> sampleChainability;
};

/// The nearest point of F(x), first in canonical order on ties.
Point nearestImage(const Space& space, const MultiMap& f, const Point& x);

/// x_{n+1} = nearest point of F(x_n) to x_n, until d(x_n, F(x_n)) <= tol.
/// Running out of iterations is reported through converged = false.
IterationLog nadlerIterate(const Space& space, const MultiMap& f, const Point& x0, double k,
                           std::size_t maxIter, double tol);

/// As nadlerIterate, but the contraction is only certified below cert.epsilon:
/// throws StepEscapedLocality as soon as a step reaches epsilon.
IterationLog localIterate(const Space& space, const MultiMap& f, const Certificate& cert,
                          std::span<const Point> samplePoints, const Point& x0,
                          std::size_t maxIter, double tol);

struct FixedPointCheck {
  bool fixed;
  double residual;
};

FixedPointCheck isFixedPoint(const Space& space, const MultiMap& f, const Point& x, double tol);

}  // namespace mvfix
